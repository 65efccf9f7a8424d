#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simpchrom/bigint.hpp"
#include "simpchrom/complex.hpp"
#include "simpchrom/errors.hpp"
#include "simpchrom/poly.hpp"
#include "simpchrom/report.hpp"

namespace simpchrom {

struct ChromaticResult {
    IntPolynomial polynomial;
    int n = 0;
    int r = 0;
};

// chi(t) = sum over subsets A of the minimal nonfaces of (-1)^|A| t^{k(A)},
// k(A) = n - |union of A| + (components of the hypergraph with edges A).
// Evaluations at nonnegative integers count the vertex colorings in which no
// minimal nonface is monochromatic.
inline ChromaticResult chi_polynomial(const SimplicialComplex& s) {
    const auto& nf = s.minimal_nonfaces();
    int r = static_cast<int>(nf.size());
    int n = s.n();
    if (r > 24) throw EnumerationTooLarge("inclusion-exclusion is capped at 24 minimal nonfaces");

    // adjacency between nonfaces (shared vertex), as bitmasks over [r]
    std::vector<std::uint32_t> inter(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j && (nf[static_cast<size_t>(i)] & nf[static_cast<size_t>(j)]))
                inter[static_cast<size_t>(i)] |= std::uint32_t{1} << j;

    std::vector<Integer> coef(static_cast<size_t>(n) + 1);
    std::uint32_t total = std::uint32_t{1} << r;
    for (std::uint32_t a = 0; a != total; ++a) {
        Mask vertex_union = 0;
        std::uint32_t it = a;
        while (it) {
            int i = std::countr_zero(it);
            it &= it - 1;
            vertex_union |= nf[static_cast<size_t>(i)];
        }
        // bitmask flood fill for components of the induced intersection graph
        int comps = 0;
        std::uint32_t rem = a;
        while (rem) {
            ++comps;
            std::uint32_t comp = rem & (~rem + 1);
            for (;;) {
                std::uint32_t grow = comp;
                std::uint32_t members = comp;
                while (members) {
                    int i = std::countr_zero(members);
                    members &= members - 1;
                    grow |= inter[static_cast<size_t>(i)];
                }
                grow &= a;
                if (grow == comp) break;
                comp = grow;
            }
            rem &= ~comp;
        }
        int k = n - popcount(vertex_union) + comps;
        if (std::popcount(a) % 2 == 0)
            ++coef[static_cast<size_t>(k)];
        else
            --coef[static_cast<size_t>(k)];
        if (a == total - 1) break;  // guard r = 32 wrap, unreachable under the cap
    }
    return {IntPolynomial(std::move(coef)), n, r};
}

// Independent brute-force count over all t^n vertex colorings.
inline Integer count_colorings(const SimplicialComplex& s, const Integer& t) {
    if (t < 0) throw InvalidArgument("color count must be nonnegative");
    int n = s.n();
    Integer space = int_pow(t, static_cast<unsigned long>(n));
    if (space > 100000000) throw EnumerationTooLarge("coloring enumeration exceeds 10^8");
    if (n == 0) return 1;
    if (t == 0) return 0;
    const auto& nf = s.minimal_nonfaces();
    long tl = static_cast<long>(t);
    std::vector<long> color(static_cast<size_t>(n), 0);
    Integer count = 0;
    for (;;) {
        bool ok = true;
        for (Mask sigma : nf) {
            Mask rest = sigma & (sigma - 1);
            long first = color[static_cast<size_t>(std::countr_zero(sigma))];
            bool mono = true;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (color[static_cast<size_t>(v)] != first) { mono = false; break; }
            }
            if (mono) { ok = false; break; }
        }
        if (ok) ++count;
        // odometer increment
        int pos = 0;
        while (pos < n && ++color[static_cast<size_t>(pos)] == tl) {
            color[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return count;
}

// Backtracking existence check. Vertices are assigned most-constrained first
// (descending count of nonfaces through them); a branch dies as soon as some
// nonface becomes fully assigned and monochromatic. Color classes are
// interchangeable, so vertex k may only open one fresh color.
inline bool exists_coloring(const SimplicialComplex& s, const Integer& t,
                            std::optional<std::uint64_t> node_budget = std::nullopt) {
    if (t <= 0) {
        if (s.n() == 0) return true;
        return t > 0;
    }
    const auto& nf = s.minimal_nonfaces();
    int n = s.n();
    if (n == 0) return true;
    // singleton nonfaces are monochromatic under any assignment
    for (Mask sigma : nf)
        if (popcount(sigma) == 1) return false;

    std::vector<int> order(static_cast<size_t>(n));
    std::vector<int> load(static_cast<size_t>(n), 0);
    for (Mask sigma : nf)
        for (int v : mask_to_set(sigma)) ++load[static_cast<size_t>(v)];
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return load[static_cast<size_t>(a)] > load[static_cast<size_t>(b)]; });
    std::vector<int> position(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

    // nonfaces indexed by the step at which their last vertex is assigned
    std::vector<std::vector<Mask>> completes_at(static_cast<size_t>(n));
    for (Mask sigma : nf) {
        int last = -1;
        for (int v : mask_to_set(sigma)) last = std::max(last, position[static_cast<size_t>(v)]);
        completes_at[static_cast<size_t>(last)].push_back(sigma);
    }

    long tl = t > n ? static_cast<long>(n) + 1 : static_cast<long>(t);  // > n colors never needed beyond n
    std::vector<long> color(static_cast<size_t>(n), -1);
    std::uint64_t nodes = 0;

    std::function<bool(int, long)> rec = [&](int step, long used) -> bool {
        if (step == n) return true;
        int v = order[static_cast<size_t>(step)];
        long cap = std::min(tl - 1, used);  // colors 0..used (one fresh class)
        for (long c = 0; c <= cap; ++c) {
            if (node_budget && ++nodes > *node_budget)
                throw BudgetExceeded("coloring search exceeded its node budget");
            color[static_cast<size_t>(v)] = c;
            bool ok = true;
            for (Mask sigma : completes_at[static_cast<size_t>(step)]) {
                Mask rest = sigma & (sigma - 1);
                long first = color[static_cast<size_t>(std::countr_zero(sigma))];
                bool mono = true;
                while (rest) {
                    int u = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (color[static_cast<size_t>(u)] != first) { mono = false; break; }
                }
                if (mono) { ok = false; break; }
            }
            if (ok && rec(step + 1, std::max(used, c + 1))) return true;
        }
        color[static_cast<size_t>(v)] = -1;
        return false;
    };
    return rec(0, 0);
}

// chi(t) - t^n = t^{n+1}((1 - 1/t)^{n-d} h_S(1/t) - 1) with d the Krull
// dimension of S; requires every induced intersection graph of nonfaces to be
// connected. Both sides are polynomials: the right side clears to
// t * reverse(h_S, d) * (t-1)^{n-d} - t^{n+1}.
inline VerificationReport verify_identity_part1(const SimplicialComplex& s) {
    VerificationReport rep;
    rep.identity = "chi(t) - t^n = t^{n+1}((1 - 1/t)^{n-d} h(1/t) - 1), d = Krull";
    auto hyp = uniform_c_check(s, UniformCMode::all_one);
    rep.hypotheses_ok = hyp.holds;
    if (!hyp.holds) rep.notes.push_back("connectivity hypothesis failed: " + hyp.note);

    auto chi = chi_polynomial(s);
    int n = s.n();
    int d = s.krull_dimension();
    IntPolynomial lhs = chi.polynomial - IntPolynomial::monomial(n);
    IntPolynomial tm1 = IntPolynomial::t() - IntPolynomial::one();
    IntPolynomial rhs = IntPolynomial::t() * reverse(s.h_polynomial(), d) *
                            tm1.pow(static_cast<unsigned>(n - d)) -
                        IntPolynomial::monomial(n + 1);
    rep.lhs = RationalFunction(lhs);
    rep.rhs = RationalFunction(rhs);
    bool equal = lhs == rhs;
    if (!equal) rep.notes.push_back("polynomial equality failed");
    rep.pass = rep.hypotheses_ok && equal;
    return rep;
}

// chi(S)(t) = t^d (t-1)^{n-d} h_{T(S)}(1/t), checked as the rational-function
// equality chi / (t^d (t-1)^{n-d}) = reverse(h_T, m) / t^m with m the Krull
// dimension of T(S). The exponent d is m plus one for the apex family (the
// apex contributes one vertex on top of T's grading) and m itself in the
// degenerate no-nonfaces case; the calibration fixtures pin this convention.
inline VerificationReport verify_identity_part2(const SimplicialComplex& s,
                                                const PropertyIWitness& w) {
    if (!check_property_I(s, w)) throw NotPropertyI("witness fails the compatibility conditions");
    SimplicialComplex t_aux = auxiliary_complex(s, w);

    VerificationReport rep;
    rep.identity = "chi(t) = t^d (t-1)^{n-d} h_T(1/t), d = Krull(T) + [apex]";
    auto chi = chi_polynomial(s);
    int n = s.n();
    int m = t_aux.krull_dimension();
    int d = m + (w.apex ? 1 : 0);
    if (d > n) throw InvalidWitness("derived exponent exceeds the vertex count");

    IntPolynomial tm1 = IntPolynomial::t() - IntPolynomial::one();
    rep.lhs = RationalFunction(chi.polynomial,
                               IntPolynomial::monomial(d) * tm1.pow(static_cast<unsigned>(n - d)));
    rep.rhs = RationalFunction(reverse(t_aux.h_polynomial(), m), IntPolynomial::monomial(m));
    rep.pass = rep.lhs == rep.rhs;
    if (!rep.pass) rep.notes.push_back("rational-function equality failed");
    if (!w.apex) rep.notes.push_back("degenerate witness: T(S) = S, exponent d = Krull(S)");
    return rep;
}

struct Cor18Report {
    bool c_uniform = false;       // c(I) constant over |I| >= 2
    std::optional<int> a;         // the constant, when defined
    bool a_defaulted = false;     // r <= 1 (or no constant): a = 1 used for the candidate
    std::vector<std::pair<std::string, bool>> h_conditions;
    bool h_conditions_ok = false;
    IntPolynomial numerator;      // candidate numerator in u; candidate = numerator / u^D
    int denominator_power = 0;    // D
    bool is_polynomial = false;
    std::optional<IntPolynomial> candidate;  // P(u) when the division is exact
    std::vector<std::string> notes;
};

// Literal extraction of the Hilbert-polynomial candidate from
//   1/t^n - chi(1/t) + (t^{n+1} - t^{n+a}) sum_i t^{-|sigma_i|} = P(1/t)/t^n.
// Multiply by t^n, substitute u = 1/t, clear to a u-numerator over u^D with
// D = 2n + max(a,1), and report whether u^D divides it. The hypothesis
// checks on the h-vector (h_{a+r} >= 1; h_{a+1}, h_{a+2} >= 3; h_i >= 1 for
// i >= a) are reported individually; nothing is asserted.
inline Cor18Report cor18_extract(const SimplicialComplex& s) {
    Cor18Report rep;
    auto chi = chi_polynomial(s);
    int n = s.n();
    int r = chi.r;

    auto uc = uniform_c_check(s, UniformCMode::all_equal_a);
    rep.c_uniform = uc.holds;
    if (uc.holds && uc.a) {
        rep.a = *uc.a;
    } else {
        rep.a = 1;
        rep.a_defaulted = true;
        rep.notes.push_back(uc.holds ? "fewer than two nonfaces: a defaults to 1"
                                     : "c(I) is not constant: candidate uses a = 1");
    }
    int a = *rep.a;

    auto h = s.h_vector();
    int d = s.krull_dimension();
    auto hval = [&](int i) -> Integer {
        return (i >= 0 && i < static_cast<int>(h.size())) ? h[static_cast<size_t>(i)] : Integer(0);
    };
    auto add_cond = [&](const std::string& label, bool ok) {
        rep.h_conditions.emplace_back(label, ok);
    };
    add_cond("h_{a+r} >= 1", hval(a + r) >= 1);
    add_cond("h_{a+1} >= 3", hval(a + 1) >= 3);
    add_cond("h_{a+2} >= 3", hval(a + 2) >= 3);
    for (int i = a; i <= d; ++i)
        add_cond("h_" + std::to_string(i) + " >= 1", hval(i) >= 1);
    rep.h_conditions_ok = std::all_of(rep.h_conditions.begin(), rep.h_conditions.end(),
                                      [](const auto& c) { return c.second; });

    int D = 2 * n + std::max(a, 1);
    rep.denominator_power = D;
    IntPolynomial num = IntPolynomial::monomial(D) -
                        IntPolynomial::monomial(D - n) * chi.polynomial;
    for (Mask sigma : s.minimal_nonfaces()) {
        int sz = popcount(sigma);
        num += IntPolynomial::monomial(D - 2 * n - 1 + sz);
        num -= IntPolynomial::monomial(D - 2 * n - a + sz);
    }
    rep.numerator = num;
    bool divisible = true;
    for (int i = 0; i < D && divisible; ++i)
        if (num.coeff(i) != 0) divisible = false;
    rep.is_polynomial = divisible;
    if (divisible) {
        std::vector<Integer> lowered;
        for (int i = D; i <= num.degree(); ++i) lowered.push_back(num.coeff(i));
        rep.candidate = IntPolynomial(std::move(lowered));
    }
    return rep;
}

}  // namespace simpchrom
