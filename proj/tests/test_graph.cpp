#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "simpchrom/graph.hpp"

using namespace simpchrom;

namespace {

// Independent oracle: brute-force count of edge colorings of g with <= t
// colors having no monochromatic clique on k vertices. Shares no code with
// the polynomial route.
long brute_clique_colorings(const Graph& g, int k, long t) {
    int ne = static_cast<int>(g.edges.size());
    // collect the cliques directly
    std::vector<std::vector<int>> clique_edge_sets;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(chosen.size()) == k) {
            std::vector<int> es;
            for (size_t i = 0; i < chosen.size(); ++i)
                for (size_t j = i + 1; j < chosen.size(); ++j)
                    es.push_back(g.edge_index(chosen[i], chosen[j]));
            clique_edge_sets.push_back(std::move(es));
            return;
        }
        for (int v = from; v < g.n; ++v) {
            bool ok = true;
            for (int u : chosen)
                if (!g.has_edge(u, v)) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(v);
            rec(v + 1);
            chosen.pop_back();
        }
    };
    rec(0);

    long count = 0;
    std::vector<long> color(static_cast<size_t>(ne), 0);
    for (;;) {
        bool ok = true;
        for (const auto& es : clique_edge_sets) {
            bool mono = true;
            for (size_t i = 1; i < es.size(); ++i)
                if (color[static_cast<size_t>(es[i])] != color[static_cast<size_t>(es[0])]) {
                    mono = false;
                    break;
                }
            if (mono) { ok = false; break; }
        }
        if (ok) ++count;
        int pos = 0;
        while (pos < ne && ++color[static_cast<size_t>(pos)] == t) {
            color[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == ne) break;
    }
    return count;
}

}  // namespace

TEST_CASE("graph construction validates and normalizes") {
    auto g = Graph::make(3, {{2, 1}, {0, 1}});
    REQUIRE(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    REQUIRE(g.edge_index(2, 1) == 1);
    REQUIRE_THROWS_AS(Graph::make(3, {{0, 0}}), InvalidArgument);
    REQUIRE_THROWS_AS(Graph::make(3, {{0, 3}}), InvalidVertex);
    REQUIRE_THROWS_AS(Graph::make(3, {{0, 1}, {1, 0}}), InvalidArgument);
    REQUIRE(Graph::complete(4).edges.size() == 6);
    REQUIRE(Graph::complete(4).min_degree() == 3);
}

TEST_CASE("copy enumeration matches hand counts") {
    auto k4 = Graph::complete(4);
    REQUIRE(forbidden_copies(k4, {{Pattern::clique(3)}}).size() == 4);
    REQUIRE(forbidden_copies(k4, {{Pattern::cycle(4)}}).size() == 3);
    auto c5 = Graph::cycle(5);
    REQUIRE(forbidden_copies(c5, {{Pattern::path(2)}}).size() == 5);
    // 2-edge paths of K_4: 4 middles x C(3,2) ends
    REQUIRE(forbidden_copies(k4, {{Pattern::path(2)}}).size() == 12);
}

TEST_CASE("explicit subgraph patterns agree with the built-in ones") {
    auto k4 = Graph::complete(4);
    auto via_builtin = forbidden_copies(k4, {{Pattern::path(2)}});
    auto via_subgraph = forbidden_copies(k4, {{Pattern::subgraph(Graph::path(3))}});
    REQUIRE(via_builtin == via_subgraph);

    auto tri_builtin = forbidden_copies(k4, {{Pattern::clique(3)}});
    auto tri_subgraph = forbidden_copies(k4, {{Pattern::subgraph(Graph::complete(3))}});
    REQUIRE(tri_builtin == tri_subgraph);
}

TEST_CASE("enumeration budget aborts") {
    auto k6 = Graph::complete(6);
    REQUIRE_THROWS_AS(forbidden_copies(k6, {{Pattern::clique(3)}}, 5), BudgetExceeded);
}

TEST_CASE("edge complexes of the worked examples") {
    auto s3 = edge_complex(Graph::complete(3), {{Pattern::clique(3)}});
    REQUIRE(s3.n() == 3);
    REQUIRE(s3.nonface_sets() == std::vector<std::vector<int>>{{0, 1, 2}});

    auto s4 = edge_complex(Graph::complete(4), {{Pattern::clique(3)}});
    REQUIRE(s4.n() == 6);
    REQUIRE(s4.minimal_nonfaces().size() == 4);

    auto c4 = edge_complex(Graph::cycle(4), {{Pattern::clique(3)}});
    REQUIRE(c4.minimal_nonfaces().empty());  // no triangles: full simplex

    // forbidding the whole clique leaves a single all-edges nonface
    for (int n = 3; n <= 5; ++n) {
        auto s = edge_complex(Graph::complete(n), {{Pattern::clique(n)}});
        REQUIRE(s.minimal_nonfaces().size() == 1);
        REQUIRE(popcount(s.minimal_nonfaces()[0]) == n * (n - 1) / 2);
    }
}

TEST_CASE("mixed families keep only inclusion-minimal copies") {
    // triangles (3 edges) sit inside K_4's copies of the 4-clique (6 edges)
    auto s = edge_complex(Graph::complete(4), {{Pattern::clique(3), Pattern::clique(4)}});
    REQUIRE(s.minimal_nonfaces().size() == 4);
    for (Mask nf : s.minimal_nonfaces()) REQUIRE(popcount(nf) == 3);
}

TEST_CASE("anti-Ramsey counts: polynomial route equals brute force") {
    REQUIRE(anti_ramsey_count(Graph::complete(5), {{Pattern::clique(3)}}, 2) == 12);
    REQUIRE(anti_ramsey_count(Graph::complete(6), {{Pattern::clique(3)}}, 2) == 0);
    REQUIRE(anti_ramsey_count(Graph::complete(3), {{Pattern::clique(3)}}, 3) == 24);

    REQUIRE(brute_clique_colorings(Graph::complete(5), 3, 2) == 12);
    REQUIRE(brute_clique_colorings(Graph::complete(6), 3, 2) == 0);

    std::mt19937_64 rng(1212);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + static_cast<int>(rng() % 2);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3) edges.emplace_back(u, v);
        auto g = Graph::make(n, edges);
        for (long t = 1; t <= 3; ++t)
            REQUIRE(anti_ramsey_count(g, {{Pattern::clique(3)}}, t) ==
                    brute_clique_colorings(g, 3, t));
    }
}

TEST_CASE("valid colorings only disappear as edges are added") {
    // restriction maps valid colorings of G+e into valid colorings of G,
    // at most t extensions apiece
    std::mt19937_64 rng(818);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 5;
        std::vector<std::pair<int, int>> edges;
        std::vector<std::pair<int, int>> missing;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                (rng() % 2 ? edges : missing).emplace_back(u, v);
        if (missing.empty() || edges.empty()) continue;
        auto g = Graph::make(n, edges);
        auto bigger_edges = edges;
        bigger_edges.push_back(missing.front());
        auto g2 = Graph::make(n, bigger_edges);
        for (long t = 1; t <= 2; ++t) {
            Integer before = anti_ramsey_count(g, {{Pattern::clique(3)}}, t);
            Integer after = anti_ramsey_count(g2, {{Pattern::clique(3)}}, t);
            REQUIRE(after <= before * t);
            if (before == 0) REQUIRE(after == 0);
        }
    }
}

TEST_CASE("Ramsey probes") {
    REQUIRE(ramsey_probe(Pattern::clique(3), 2, 8) == 6);
    REQUIRE_FALSE(ramsey_probe(Pattern::clique(3), 2, 5).has_value());
    REQUIRE(ramsey_probe(Pattern::clique(2), 1, 4) == 2);
}

TEST_CASE("class Ramsey probes") {
    auto rep = class_ramsey_probe({Graph::complete(6), Graph::complete(7)}, 3, 2);
    REQUIRE(rep.all_zero);
    REQUIRE(rep.admits_coloring == std::vector<bool>{false, false});

    auto rep5 = class_ramsey_probe({Graph::complete(5)}, 3, 2);
    REQUIRE_FALSE(rep5.all_zero);

    auto repc = class_ramsey_probe({Graph::cycle(5)}, 3, 2);
    REQUIRE(repc.admits_coloring == std::vector<bool>{true});
}

TEST_CASE("sufficient-condition arithmetic and cross-checks") {
    SufficientParams p5;
    p5.t = 2;
    p5.cross_check = true;
    auto rep5 = sufficient_condition_checks(Graph::complete(5), p5);
    REQUIRE(rep5.threshold_applicable);
    REQUIRE(rep5.path_threshold == 2);
    REQUIRE(rep5.path_admits_coloring == false);
    REQUIRE_FALSE(rep5.dense_applicable);

    SufficientParams p4;
    p4.t = 1;
    p4.cross_check = true;
    auto rep4 = sufficient_condition_checks(Graph::complete(4), p4);
    REQUIRE(rep4.threshold_applicable);
    REQUIRE(rep4.path_threshold == 3);
    REQUIRE(rep4.cycle_threshold == 4);
    REQUIRE(rep4.cycle_admits_coloring == false);

    SufficientParams p32;  // arithmetic only
    auto rep32 = sufficient_condition_checks(Graph::complete(32), p32);
    REQUIRE(rep32.dense_applicable);
    REQUIRE(rep32.min_degree == 31);
    REQUIRE(rep32.dense_rows == std::vector<std::pair<int, bool>>{{4, true}});
    REQUIRE(rep32.threshold_applicable);
    REQUIRE(rep32.path_threshold == 16);
    REQUIRE(rep32.cycle_threshold == 16);
    REQUIRE_FALSE(rep32.path_admits_coloring.has_value());
}
