#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "simpchrom/chromatic.hpp"
#include "simpchrom/complex.hpp"
#include "simpchrom/errors.hpp"

namespace simpchrom {

// Simple labeled graph, vertices 0..n-1, edges normalized u < v and sorted
// lexicographically. The edge order doubles as the vertex numbering of the
// derived edge complexes, so it must be stable.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint64_t> adj;  // adjacency bitmask per vertex

    static Graph make(int n, std::vector<std::pair<int, int>> raw) {
        if (n < 0 || n > 64) throw InvalidArgument("graphs are capped at 64 vertices");
        Graph g;
        g.n = n;
        for (auto& [u, v] : raw) {
            if (u == v) throw InvalidArgument("loops are not allowed");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InvalidVertex("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(raw.begin(), raw.end());
        for (size_t i = 0; i + 1 < raw.size(); ++i)
            if (raw[i] == raw[i + 1]) throw InvalidArgument("repeated edge");
        g.edges = std::move(raw);
        g.adj.assign(static_cast<size_t>(n), 0);
        for (auto [u, v] : g.edges) {
            g.adj[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
            g.adj[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
        }
        return g;
    }

    static Graph complete(int n) {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
        return make(n, std::move(e));
    }

    static Graph cycle(int n) {
        if (n < 3) throw InvalidArgument("cycle graphs need at least 3 vertices");
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        return make(n, std::move(e));
    }

    static Graph path(int vertices) {
        if (vertices < 1) throw InvalidArgument("path graphs need at least 1 vertex");
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < vertices; ++i) e.emplace_back(i, i + 1);
        return make(vertices, std::move(e));
    }

    bool has_edge(int u, int v) const {
        return (adj[static_cast<size_t>(u)] >> v) & 1;
    }

    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v))
            throw InvalidArgument("no such edge");
        return static_cast<int>(it - edges.begin());
    }

    int min_degree() const {
        int md = n == 0 ? 0 : 64;
        for (int v = 0; v < n; ++v)
            md = std::min(md, std::popcount(adj[static_cast<size_t>(v)]));
        return md;
    }
};

// A forbidden-subgraph pattern: complete graph on i vertices, cycle with ell
// edges, path with ell edges, or an arbitrary graph given explicitly.
struct Pattern {
    enum class Kind { clique, cycle, path, subgraph };
    Kind kind = Kind::clique;
    int size = 0;  // clique i / cycle ell / path edge count
    Graph sub;

    static Pattern clique(int i) {
        if (i < 2) throw InvalidArgument("clique patterns need i >= 2");
        return {Kind::clique, i, {}};
    }
    static Pattern cycle(int ell) {
        if (ell < 3) throw InvalidArgument("cycle patterns need length >= 3");
        return {Kind::cycle, ell, {}};
    }
    static Pattern path(int ell) {
        if (ell < 1) throw InvalidArgument("path patterns need at least 1 edge");
        return {Kind::path, ell, {}};
    }
    static Pattern subgraph(Graph h) {
        if (h.edges.empty()) throw InvalidArgument("pattern graphs need at least one edge");
        return {Kind::subgraph, 0, std::move(h)};
    }
};

struct ForbiddenFamily {
    std::vector<Pattern> patterns;
};

namespace detail {

class CopyEnumerator {
public:
    CopyEnumerator(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    std::set<std::vector<int>> run(const Pattern& p) {
        out_.clear();
        switch (p.kind) {
            case Pattern::Kind::clique: cliques(p.size); break;
            case Pattern::Kind::cycle: cycles(p.size); break;
            case Pattern::Kind::path: paths(p.size); break;
            case Pattern::Kind::subgraph: embeddings(p.sub); break;
        }
        return std::move(out_);
    }

private:
    void tick() {
        if (++nodes_ > budget_) throw BudgetExceeded("pattern enumeration exceeded its node budget");
    }

    void emit_pairs(const std::vector<int>& vs) {
        std::vector<int> es;
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                es.push_back(g_.edge_index(vs[i], vs[j]));
        std::sort(es.begin(), es.end());
        out_.insert(std::move(es));
    }

    void emit_walk(const std::vector<int>& walk, bool closed) {
        std::vector<int> es;
        for (size_t i = 0; i + 1 < walk.size(); ++i)
            es.push_back(g_.edge_index(walk[i], walk[i + 1]));
        if (closed) es.push_back(g_.edge_index(walk.back(), walk.front()));
        std::sort(es.begin(), es.end());
        out_.insert(std::move(es));
    }

    void cliques(int k) {
        std::vector<int> chosen;
        std::function<void(int)> rec = [&](int from) {
            tick();
            if (static_cast<int>(chosen.size()) == k) {
                emit_pairs(chosen);
                return;
            }
            for (int v = from; v < g_.n; ++v) {
                bool ok = true;
                for (int u : chosen)
                    if (!g_.has_edge(u, v)) { ok = false; break; }
                if (!ok) continue;
                chosen.push_back(v);
                rec(v + 1);
                chosen.pop_back();
            }
        };
        rec(0);
    }

    // Each cycle enumerated once: smallest vertex first, direction fixed by
    // second vertex < last vertex.
    void cycles(int ell) {
        std::vector<int> walk;
        std::uint64_t used = 0;
        std::function<void()> rec = [&] {
            tick();
            int s = walk.front();
            if (static_cast<int>(walk.size()) == ell) {
                if (g_.has_edge(walk.back(), s) && walk[1] < walk.back()) emit_walk(walk, true);
                return;
            }
            int last = walk.back();
            for (int v = s + 1; v < g_.n; ++v) {
                if (used & (std::uint64_t{1} << v)) continue;
                if (!g_.has_edge(last, v)) continue;
                walk.push_back(v);
                used |= std::uint64_t{1} << v;
                rec();
                used &= ~(std::uint64_t{1} << v);
                walk.pop_back();
            }
        };
        for (int s = 0; s < g_.n; ++s) {
            walk = {s};
            used = std::uint64_t{1} << s;
            rec();
        }
    }

    void paths(int ell) {
        std::vector<int> walk;
        std::uint64_t used = 0;
        std::function<void()> rec = [&] {
            tick();
            if (static_cast<int>(walk.size()) == ell + 1) {
                if (walk.front() < walk.back()) emit_walk(walk, false);
                return;
            }
            int last = walk.back();
            for (int v = 0; v < g_.n; ++v) {
                if (used & (std::uint64_t{1} << v)) continue;
                if (!g_.has_edge(last, v)) continue;
                walk.push_back(v);
                used |= std::uint64_t{1} << v;
                rec();
                used &= ~(std::uint64_t{1} << v);
                walk.pop_back();
            }
        };
        for (int s = 0; s < g_.n; ++s) {
            walk = {s};
            used = std::uint64_t{1} << s;
            rec();
        }
    }

    void embeddings(const Graph& h) {
        std::vector<int> image(static_cast<size_t>(h.n), -1);
        std::uint64_t used = 0;
        std::function<void(int)> rec = [&](int hv) {
            tick();
            if (hv == h.n) {
                std::vector<int> es;
                for (auto [a, b] : h.edges)
                    es.push_back(g_.edge_index(image[static_cast<size_t>(a)],
                                               image[static_cast<size_t>(b)]));
                std::sort(es.begin(), es.end());
                out_.insert(std::move(es));
                return;
            }
            for (int v = 0; v < g_.n; ++v) {
                if (used & (std::uint64_t{1} << v)) continue;
                bool ok = true;
                for (int hu = 0; hu < hv; ++hu)
                    if (h.has_edge(hu, hv) &&
                        !g_.has_edge(image[static_cast<size_t>(hu)], v)) { ok = false; break; }
                if (!ok) continue;
                image[static_cast<size_t>(hv)] = v;
                used |= std::uint64_t{1} << v;
                rec(hv + 1);
                used &= ~(std::uint64_t{1} << v);
                image[static_cast<size_t>(hv)] = -1;
            }
        };
        rec(0);
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::set<std::vector<int>> out_;
};

}  // namespace detail

// Every copy of every family pattern in G, as deduplicated sorted sets of
// edge indices (two embeddings with the same edge image count once).
inline std::vector<std::vector<int>> forbidden_copies(const Graph& g, const ForbiddenFamily& fam,
                                                      std::uint64_t node_budget = 20000000) {
    detail::CopyEnumerator en(g, node_budget);
    std::set<std::vector<int>> all;
    for (const auto& p : fam.patterns) {
        auto found = en.run(p);
        all.insert(found.begin(), found.end());
    }
    return {all.begin(), all.end()};
}

// Complex on the edge set of G (vertex i = i-th edge in lex order) whose
// minimal nonfaces are the inclusion-minimal forbidden edge sets.
inline SimplicialComplex edge_complex(const Graph& g, const ForbiddenFamily& fam,
                                      std::uint64_t node_budget = 20000000) {
    auto copies = forbidden_copies(g, fam, node_budget);
    int ne = static_cast<int>(g.edges.size());
    std::vector<std::vector<int>> minimal;
    for (size_t i = 0; i < copies.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < copies.size() && keep; ++j) {
            if (i == j) continue;
            if (copies[j].size() < copies[i].size() &&
                std::includes(copies[i].begin(), copies[i].end(), copies[j].begin(),
                              copies[j].end()))
                keep = false;
        }
        if (keep) minimal.push_back(copies[i]);
    }
    return SimplicialComplex::from_minimal_nonfaces(ne, minimal);
}

// chi of the edge complex, evaluated: the number of edge colorings of G with
// at most t colors leaving no forbidden copy monochromatic.
inline Integer anti_ramsey_count(const Graph& g, const ForbiddenFamily& fam, const Integer& t) {
    auto s = edge_complex(g, fam);
    return chi_polynomial(s).polynomial.eval(t);
}

// Smallest n <= n_max such that K_n admits no valid coloring with t colors.
inline std::optional<int> ramsey_probe(const Pattern& p, const Integer& t, int n_max,
                                       std::optional<std::uint64_t> search_budget = std::nullopt) {
    for (int n = 1; n <= n_max; ++n) {
        auto s = edge_complex(Graph::complete(n), ForbiddenFamily{{p}});
        if (!exists_coloring(s, t, search_budget)) return n;
    }
    return std::nullopt;
}

struct ClassRamseyReport {
    bool all_zero = false;                // no member admits a valid coloring
    std::vector<bool> admits_coloring;    // per input graph
};

inline ClassRamseyReport class_ramsey_probe(const std::vector<Graph>& graphs, int clique_size,
                                            const Integer& t,
                                            std::optional<std::uint64_t> search_budget = std::nullopt) {
    ClassRamseyReport rep;
    rep.all_zero = true;
    for (const auto& g : graphs) {
        auto s = edge_complex(g, ForbiddenFamily{{Pattern::clique(clique_size)}});
        bool admits = exists_coloring(s, t, search_budget);
        rep.admits_coloring.push_back(admits);
        if (admits) rep.all_zero = false;
    }
    return rep;
}

struct SufficientParams {
    Integer t = 2;
    bool cross_check = false;
    std::optional<std::uint64_t> budget;
};

struct SufficientReport {
    // dense-graph cycle condition: window 4 <= ell <= n/8, min degree >= 3n/4,
    // two colors; prediction: no valid coloring with cycle-ell nonfaces
    bool dense_applicable = false;
    int min_degree = 0;
    std::vector<std::pair<int, bool>> dense_rows;  // (ell, min-degree hypothesis holds)

    // edge-count thresholds: M >= tN required
    bool threshold_applicable = false;
    long path_threshold = 0;   // ceil(2M / (tN))
    long cycle_threshold = 0;  // ceil(2M / (t(N-1)))
    std::optional<bool> path_admits_coloring;   // cross-check result (expected false)
    std::optional<bool> cycle_admits_coloring;  // cross-check result (expected false)
    std::vector<std::string> notes;
};

// Arithmetic hypotheses of the two zero-count sufficient conditions, with an
// optional exhaustive cross-check of the predicted non-existence.
inline SufficientReport sufficient_condition_checks(const Graph& g, const SufficientParams& params) {
    SufficientReport rep;
    int n = g.n;
    long m = static_cast<long>(g.edges.size());
    rep.min_degree = g.min_degree();

    rep.dense_applicable = n >= 32;
    if (rep.dense_applicable) {
        for (int ell = 4; ell <= n / 8; ++ell)
            rep.dense_rows.emplace_back(ell, 4 * rep.min_degree >= 3 * n);
    } else {
        rep.notes.push_back("dense cycle condition needs n >= 32 for a nonempty length window");
    }

    if (params.t <= 0) throw InvalidArgument("color count must be positive");
    Integer tn = params.t * n;
    rep.threshold_applicable = m >= n && Integer(m) >= tn;
    if (rep.threshold_applicable) {
        long t = static_cast<long>(params.t);
        rep.path_threshold = (2 * m + t * n - 1) / (t * n);
        if (n >= 2) rep.cycle_threshold = (2 * m + t * (n - 1) - 1) / (t * (n - 1));
        if (params.cross_check) {
            std::uint64_t budget = params.budget.value_or(20000000);
            // minimal forbidden edge sets for "paths of length >= L" are
            // exactly the L-edge paths (longer paths contain them)
            auto ps = edge_complex(g, ForbiddenFamily{{Pattern::path(
                                          static_cast<int>(rep.path_threshold))}},
                                   budget);
            rep.path_admits_coloring = exists_coloring(ps, params.t, budget);
            if (rep.cycle_threshold >= 3) {
                ForbiddenFamily cycles;
                for (long ell = rep.cycle_threshold; ell <= n; ++ell)
                    cycles.patterns.push_back(Pattern::cycle(static_cast<int>(ell)));
                auto cs = edge_complex(g, cycles, budget);
                rep.cycle_admits_coloring = exists_coloring(cs, params.t, budget);
            } else {
                rep.notes.push_back("cycle threshold below 3: no cycle pattern to check");
            }
        }
    } else {
        rep.notes.push_back("edge-count thresholds need M >= t*N");
    }
    return rep;
}

}  // namespace simpchrom
