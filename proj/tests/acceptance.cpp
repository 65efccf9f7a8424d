// Acceptance gate: one line per criterion, plain main. Exit 0 only if every
// criterion passes. Run with the fixture directory as argv[1].

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "simpchrom/chromatic.hpp"
#include "simpchrom/complex.hpp"
#include "simpchrom/graph.hpp"
#include "simpchrom/hodge.hpp"
#include "simpchrom/json_io.hpp"
#include "simpchrom/poly.hpp"
#include "simpchrom/polytope.hpp"

using namespace simpchrom;
namespace fs = std::filesystem;

namespace {

fs::path g_fixtures;

SimplicialComplex load_complex(const char* name) {
    return io::complex_from_json(io::load_json_file(g_fixtures / name), name);
}
LatticePolytope load_polytope(const char* name) {
    return io::polytope_from_json(io::load_json_file(g_fixtures / name), name);
}
Triangulation load_tri(const char* name) {
    return io::triangulation_from_json(io::load_json_file(g_fixtures / name), name);
}

struct Outcome {
    bool ok = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n, bool allow_empty) {
    if (allow_empty && rng() % 10 == 0)
        return SimplicialComplex::from_minimal_nonfaces(n, {});
    auto sets = testgen::random_antichain(rng, n, 6, std::min(4, n));
    return SimplicialComplex::from_minimal_nonfaces(n, sets);
}

// 1. chi evaluated at t in 0..4 equals the brute-force coloring count on at
//    least 200 random complexes with n <= 8 and at most 6 minimal nonfaces.
Outcome criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xACCE5501);
    int done = 0;
    for (int trial = 0; done < 200; ++trial) {
        if (trial > 2000) return {false, "generator stalled"};
        int n = 1 + static_cast<int>(rng() % 8);
        if (n < 2) n = 2;
        auto s = random_complex(rng, n, true);
        if (s.minimal_nonfaces().size() > 6) continue;
        for (int t = 0; t <= 4; ++t) {
            Integer via_poly = chi_polynomial(s).polynomial.eval(Integer(t));
            Integer direct = count_colorings(s, Integer(t));
            if (via_poly != direct)
                return {false, "mismatch at n=" + std::to_string(n) +
                                   " t=" + std::to_string(t)};
        }
        ++done;
    }
    double el = seconds_since(t0);
    if (el >= 30.0) return {false, "took " + std::to_string(el) + "s (budget 30s)"};
    return {true, std::to_string(done) + " complexes x 5 evaluations, " +
                      std::to_string(el).substr(0, 4) + "s"};
}

// 2. The reciprocal identity passes exactly on both derived fixtures, with
//    the frozen differences chi - t^n, and on random complexes whose nonface
//    intersection pattern is uniformly connected (c(I) = 1).
Outcome criterion2() {
    auto tri = load_complex("tri-boundary.json");
    auto chi1 = chi_polynomial(tri).polynomial;
    if (chi1 - IntPolynomial::monomial(3) != IntPolynomial({0, -1}))
        return {false, "triangle boundary: chi - t^3 != -t"};
    if (!verify_identity_part1(tri).pass) return {false, "triangle boundary fixture fails"};

    auto pair = load_complex("pair-nonfaces.json");
    auto chi2 = chi_polynomial(pair).polynomial;
    if (chi2 - IntPolynomial::monomial(4) != IntPolynomial({0, 1, -2}))
        return {false, "overlapping-pair fixture: chi - t^4 != -2t^2 + t"};
    if (!verify_identity_part1(pair).pass) return {false, "overlapping-pair fixture fails"};

    std::mt19937_64 rng(0xACCE5502);
    int exercised = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        auto s = random_complex(rng, n, false);
        if (!uniform_c_check(s, UniformCMode::all_one).holds) continue;
        ++exercised;
        if (!verify_identity_part1(s).pass)
            return {false, "random complex with c(I)=1 fails (n=" + std::to_string(n) + ")"};
    }
    if (exercised < 50) return {false, "too few c(I)=1 samples: " + std::to_string(exercised)};
    return {true, "both fixtures + " + std::to_string(exercised) + " random c(I)=1 complexes"};
}

// 3. The apex factorization passes on apex_augment(T) for >= 100 random T
//    with at most 7 vertices.
Outcome criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xACCE5503);
    int done = 0;
    while (done < 100) {
        int n = 2 + static_cast<int>(rng() % 6);
        auto t = random_complex(rng, n, true);
        auto aug = apex_augment(t);
        auto rep = verify_identity_part2(aug.s, aug.witness);
        if (!rep.pass)
            return {false, "apex factorization fails on a " + std::to_string(n) +
                               "-vertex instance"};
        ++done;
    }
    double el = seconds_since(t0);
    if (el >= 30.0) return {false, "took " + std::to_string(el) + "s (budget 30s)"};
    return {true, std::to_string(done) + " augmented complexes, " +
                      std::to_string(el).substr(0, 4) + "s"};
}

// 4. Triangle probes: smallest complete graph with no 2-coloring free of
//    monochromatic triangles is K6; the K5 count is 12 and the K6 count 0 by
//    both the polynomial and the brute-force enumeration.
Outcome criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    auto probe = ramsey_probe(Pattern::clique(3), Integer(2), 8);
    if (!probe || *probe != 6)
        return {false, probe ? "probe returned " + std::to_string(*probe) : "probe found none"};
    ForbiddenFamily tri{{Pattern::clique(3)}};
    for (auto [n, want] : {std::pair<int, int>{5, 12}, {6, 0}}) {
        auto g = Graph::complete(n);
        Integer via_poly = anti_ramsey_count(g, tri, Integer(2));
        Integer direct = count_colorings(edge_complex(g, tri), Integer(2));
        if (via_poly != want || direct != want)
            return {false, "K" + std::to_string(n) + ": polynomial " + via_poly.str() +
                               ", direct " + direct.str() + ", expected " +
                               std::to_string(want)};
    }
    double el = seconds_since(t0);
    if (el >= 5.0) return {false, "took " + std::to_string(el) + "s (budget 5s)"};
    return {true, "probe=6, K5=12, K6=0 both ways, " + std::to_string(el).substr(0, 4) + "s"};
}

// 5. Smallest dense-path instance: K5 with 2 colors admits no coloring free
//    of monochromatic 2-edge paths.
Outcome criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    auto s = edge_complex(Graph::complete(5), ForbiddenFamily{{Pattern::path(2)}});
    bool exists = exists_coloring(s, Integer(2));
    double el = seconds_since(t0);
    if (exists) return {false, "a coloring was found"};
    if (el >= 1.0) return {false, "took " + std::to_string(el) + "s (budget 1s)"};
    return {true, "no coloring, " + std::to_string(el).substr(0, 4) + "s"};
}

// 6. Frozen delta vectors; reciprocity for m <= 5; interpolants reproduce
//    direct counts at m = r+1 and r+2 on all four reference polytopes.
Outcome criterion6() {
    struct Want {
        const char* file;
        std::vector<Integer> delta;
    };
    std::vector<Want> wants = {{"sq01.json", {1, 1, 0}},
                               {"tri2.json", {1, 3, 0}},
                               {"sq2.json", {1, 6, 1}}};
    for (const auto& w : wants) {
        auto p = load_polytope(w.file);
        if (delta_vector(p) != w.delta)
            return {false, std::string(w.file) + ": unexpected delta vector"};
    }
    for (const char* file : {"seg02.json", "sq01.json", "tri2.json", "sq2.json"}) {
        auto p = load_polytope(file);
        if (!verify_reciprocity(p, 5).pass)
            return {false, std::string(file) + ": reciprocity fails"};
        auto e = ehrhart_polynomial(p);
        for (int m = p.dim() + 1; m <= p.dim() + 2; ++m) {
            if (e.eval_integer(Integer(m)) != count_points(p, Integer(m)))
                return {false, std::string(file) + ": interpolant wrong at m=" +
                                   std::to_string(m)};
        }
    }
    return {true, "3 frozen deltas, reciprocity m<=5 and interpolants on 4 polytopes"};
}

// 7. h* = h on the three shipped unimodular triangulations.
Outcome criterion7() {
    struct Case {
        const char* poly;
        const char* tri;
    };
    for (auto [pf, tf] : {Case{"seg02.json", "seg02-units.json"},
                          Case{"sq01.json", "sq01-diag.json"},
                          Case{"cube01.json", "cube01-6simplex.json"}}) {
        auto rep = verify_hstar_eq_h(load_polytope(pf), load_tri(tf));
        if (!rep.pass) return {false, std::string(pf) + ": h* != h"};
    }
    return {true, "segment, square, cube"};
}

// 8. Compressed boundary triangulations: the 8-point cycle on the side-2
//    square passes the definition check with h = delta = (1,6,1); the
//    4-corner cycle fails it with delta >= h = (1,2,1).
Outcome criterion8() {
    auto p = load_polytope("sq2.json");
    auto full = is_compressed(p, load_tri("sq2-boundary8.json"));
    std::vector<Integer> d161 = {1, 6, 1};
    if (!full.definition_check || !full.h_equals_delta || full.h != d161 || full.delta != d161)
        return {false, "8-point boundary cycle does not come out compressed"};
    auto corners = is_compressed(p, load_tri("sq2-corners4.json"));
    std::vector<Integer> h121 = {1, 2, 1};
    if (corners.definition_check) return {false, "4-corner cycle passes the definition check"};
    if (!corners.delta_geq_h || corners.h != h121)
        return {false, "4-corner cycle: expected delta >= h = (1,2,1)"};
    return {true, "8-point compressed, 4-corner rejected"};
}

// 9. The corrected identity chain passes on [-1,1] and on the side-2 square;
//    the printed form of the final identity keeps failing on [-1,1].
Outcome criterion9() {
    struct Case {
        const char* poly;
        const char* tri;
    };
    ChainReport seg;
    for (auto [pf, tf] : {Case{"segpm1.json", "segpm1-ends.json"},
                          Case{"sq2.json", "sq2-boundary8.json"}}) {
        auto p = load_polytope(pf);
        auto t = load_tri(tf);
        auto aug = apex_augment(triangulation_complex(t));
        auto rep = verify_compressed_chain(aug.s, aug.witness, p, t);
        if (!rep.pass) return {false, std::string(pf) + ": corrected chain fails"};
        if (std::string(pf) == "segpm1.json") seg = rep;
    }
    if (seg.displayed_form.pass)
        return {false, "printed final identity unexpectedly passes on [-1,1]"};
    return {true, "corrected chain on both fixtures; printed form still fails on [-1,1]"};
}

// 10. Counting-series identity on P = [0,2] with the apex of the 3-point
//     path: chi/(t(t-1)^3) = t(t+1)/(t-1)^2, plus an order-8 series match.
Outcome criterion10() {
    auto p = load_polytope("seg02.json");
    auto t = load_tri("seg02-units.json");
    auto aug = apex_augment(triangulation_complex(t));
    auto rep = verify_lattice_coh(aug.s, aug.witness, p, t);
    if (!rep.exact.pass) return {false, "exact identity fails"};
    RationalFunction want(IntPolynomial({0, 1, 1}), IntPolynomial({1, -2, 1}));
    if (!(rep.exact.lhs == want)) return {false, "left side is not t(t+1)/(t-1)^2"};
    if (!rep.series_ok) return {false, "series mismatch within order 8"};
    if (!rep.pass) return {false, "combined report fails"};
    return {true, "chi/(t(t-1)^3) = t(t+1)/(t-1)^2, series to order 8"};
}

// 11. Filtration dimensions from (1,3,0) and the primitive-sum rule on every
//     shipped polytope.
Outcome criterion11() {
    auto dims = hodge_dims_from_delta({Integer(1), Integer(3), Integer(0)}, 2);
    if (dims.primitive != std::vector<Integer>{0, 3})
        return {false, "primitive dimensions from (1,3,0) are not [0,3]"};
    if (dims.full != std::vector<Integer>{0, 5})
        return {false, "full dimensions from (1,3,0) are not [0,5]"};
    for (const char* file : {"seg01.json", "seg02.json", "segpm1.json", "sq01.json",
                             "sq2.json", "tri2.json", "cube01.json"}) {
        auto p = load_polytope(file);
        auto delta = delta_vector(p);
        auto d = hodge_dims_from_delta(delta, p.dim());
        Integer lhs = 0, rhs = 0;
        for (const auto& v : d.primitive) lhs += v;
        for (size_t j = 1; j < delta.size(); ++j) rhs += delta[j];
        if (lhs != rhs) return {false, std::string(file) + ": primitive sum rule fails"};
    }
    return {true, "frozen dims + sum rule on 7 polytopes"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <fixtures-dir>\n");
        return 2;
    }
    g_fixtures = argv[1];

    struct Entry {
        const char* label;
        Outcome (*run)();
    };
    std::vector<Entry> entries = {
        {"oracle equivalence of chi and direct counting", criterion1},
        {"reciprocal identity on fixtures and random c(I)=1 complexes", criterion2},
        {"apex factorization on random complexes", criterion3},
        {"triangle probe and anti-Ramsey counts", criterion4},
        {"dense-path threshold on K5", criterion5},
        {"delta vectors, reciprocity, interpolants", criterion6},
        {"h* = h on unimodular triangulations", criterion7},
        {"compressed boundary characterization", criterion8},
        {"corrected identity chain with regression lock", criterion9},
        {"counting-series identity on [0,2]", criterion10},
        {"filtration dimensions and sum rule", criterion11},
    };

    int passed = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
        Outcome o;
        try {
            o = entries[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (o.ok) ++passed;
        std::printf("criterion %2zu: %s  %s (%s)\n", i + 1, o.ok ? "PASS" : "FAIL",
                    entries[i].label, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/%zu\n", passed, entries.size());
    return passed == static_cast<int>(entries.size()) ? 0 : 1;
}
