#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "simpchrom/bigint.hpp"
#include "simpchrom/errors.hpp"
#include "simpchrom/poly.hpp"

namespace simpchrom {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<int> mask_to_set(Mask m) {
    std::vector<int> out;
    while (m) {
        int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

inline Mask set_to_mask(const std::vector<int>& s, int n, const char* what) {
    Mask m = 0;
    for (int v : s) {
        if (v < 0 || v >= n) throw InvalidVertex(std::string(what) + ": vertex label out of range");
        Mask bit = Mask{1} << v;
        if (m & bit) throw InvalidVertex(std::string(what) + ": repeated vertex label");
        m |= bit;
    }
    return m;
}

// Abstract simplicial complex on vertex set {0..n-1}. Internally an antichain
// of maximal faces (facets) and/or the antichain of minimal nonfaces; each
// representation is derived from the other on first use and cached. Faces are
// exactly the subsets of facets, so a vertex belonging to no facet is *not* a
// face (it is then itself a minimal nonface). Instances are immutable values;
// the lazy caches are not synchronized, so materialize them before sharing
// one instance across threads.
class SimplicialComplex {
public:
    static constexpr int kMaxVertices = 31;       // mask width
    static constexpr int kNonfaceSearchCap = 25;  // subset scan budget

    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets) {
        check_n(n);
        std::vector<Mask> masks;
        masks.reserve(facets.size());
        for (const auto& f : facets) masks.push_back(set_to_mask(f, n, "facet"));
        if (masks.empty()) masks.push_back(0);  // the complex {∅}
        prune_to_maximal(masks);
        SimplicialComplex s(n);
        s.facets_ = std::move(masks);
        return s;
    }

    // Vertex count inferred as max label + 1.
    static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets) {
        int n = 0;
        for (const auto& f : facets)
            for (int v : f) n = std::max(n, v + 1);
        return from_facets(n, facets);
    }

    static SimplicialComplex from_minimal_nonfaces(int n,
                                                   const std::vector<std::vector<int>>& nonfaces) {
        check_n(n);
        std::vector<Mask> masks;
        masks.reserve(nonfaces.size());
        for (const auto& s : nonfaces) {
            Mask m = set_to_mask(s, n, "minimal nonface");
            if (m == 0) throw InvalidNonfaces("the empty set is always a face");
            masks.push_back(m);
        }
        std::sort(masks.begin(), masks.end());
        for (size_t i = 0; i + 1 < masks.size(); ++i)
            if (masks[i] == masks[i + 1]) throw InvalidNonfaces("repeated minimal nonface");
        for (size_t i = 0; i < masks.size(); ++i)
            for (size_t j = 0; j < masks.size(); ++j)
                if (i != j && (masks[i] & masks[j]) == masks[i])
                    throw InvalidNonfaces("minimal nonfaces must form an antichain");
        SimplicialComplex s(n);
        s.nonfaces_ = std::move(masks);
        return s;
    }

    int n() const { return n_; }

    const std::vector<Mask>& facets() const {
        if (!facets_) facets_ = facets_from_nonfaces();
        return *facets_;
    }

    const std::vector<Mask>& minimal_nonfaces() const {
        if (!nonfaces_) nonfaces_ = nonfaces_from_facets();
        return *nonfaces_;
    }

    bool nonfaces_known() const { return nonfaces_.has_value(); }
    bool facets_known() const { return facets_.has_value(); }

    std::vector<std::vector<int>> facet_sets() const {
        std::vector<std::vector<int>> out;
        for (Mask m : facets()) out.push_back(mask_to_set(m));
        return out;
    }
    std::vector<std::vector<int>> nonface_sets() const {
        std::vector<std::vector<int>> out;
        for (Mask m : minimal_nonfaces()) out.push_back(mask_to_set(m));
        return out;
    }

    // -1 for the complex {∅} with no vertices in any facet.
    int dim() const {
        int d = -1;
        for (Mask f : facets()) d = std::max(d, popcount(f) - 1);
        return d;
    }

    // Krull dimension of the face ring: dim + 1. This is the grading used by
    // every h-vector identity in the toolkit.
    int krull_dimension() const { return dim() + 1; }

    bool is_face(Mask m) const {
        if (facets_) {
            for (Mask f : *facets_)
                if ((m & f) == m) return true;
            return false;
        }
        // Without facets: a face is a set containing no minimal nonface.
        for (Mask nf : *nonfaces_)
            if ((m & nf) == nf) return false;
        return true;
    }

    bool is_face(const std::vector<int>& s) const { return is_face(set_to_mask(s, n_, "face query")); }

    // (f_{-1}, f_0, ..., f_{dim}); f_{-1} = 1 for the empty face.
    std::vector<Integer> f_vector() const {
        const auto& fs = facets();
        int d = dim();
        std::vector<Integer> f(static_cast<size_t>(d + 2));
        // Prefer submask enumeration of facets with dedup; fall back to a
        // full 2^n sweep when the facets are individually huge.
        std::uint64_t budget = 0;
        for (Mask fm : fs) budget += std::uint64_t{1} << popcount(fm);
        if (budget <= (std::uint64_t{1} << 22)) {
            std::unordered_set<Mask> seen;
            seen.reserve(1024);
            for (Mask fm : fs) {
                Mask sub = fm;
                for (;;) {
                    if (seen.insert(sub).second) ++f[static_cast<size_t>(popcount(sub))];
                    if (sub == 0) break;
                    sub = (sub - 1) & fm;
                }
            }
        } else if (n_ <= 22) {
            for (Mask m = 0; m < (Mask{1} << n_); ++m)
                if (is_face(m)) ++f[static_cast<size_t>(popcount(m))];
        } else {
            throw EnumerationTooLarge("face enumeration exceeds the desk-scale budget");
        }
        return f;
    }

    // h(t) = sum_i f_{i-1} t^i (1-t)^{d-i} with d the Krull dimension.
    IntPolynomial h_polynomial() const {
        auto f = f_vector();
        int d = krull_dimension();
        IntPolynomial one_minus_t = IntPolynomial::one() - IntPolynomial::t();
        IntPolynomial h;
        for (int i = 0; i <= d; ++i) {
            Integer fi = i < static_cast<int>(f.size()) ? f[static_cast<size_t>(i)] : Integer(0);
            if (fi == 0) continue;
            h += fi * (IntPolynomial::monomial(i) * one_minus_t.pow(static_cast<unsigned>(d - i)));
        }
        return h;
    }

    // Coefficients h_0..h_d, zero-padded to the full Krull length.
    std::vector<Integer> h_vector() const {
        IntPolynomial h = h_polynomial();
        std::vector<Integer> out(static_cast<size_t>(krull_dimension()) + 1);
        for (size_t i = 0; i < out.size(); ++i) out[i] = h.coeff(static_cast<int>(i));
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets() == b.facets();
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
        return !(a == b);
    }

private:
    explicit SimplicialComplex(int n) : n_(n) {}

    static void check_n(int n) {
        if (n < 0) throw InvalidArgument("vertex count must be >= 0");
        if (n > kMaxVertices) throw EnumerationTooLarge("complexes are capped at 31 vertices");
    }

    static void prune_to_maximal(std::vector<Mask>& masks) {
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
        std::vector<Mask> out;
        for (Mask m : masks) {
            bool dominated = false;
            for (Mask other : masks)
                if (other != m && (m & other) == m) { dominated = true; break; }
            if (!dominated) out.push_back(m);
        }
        masks = std::move(out);
    }

    // Maximal faces are complements of minimal transversals of the nonface
    // family (F avoids every σ iff its complement meets every σ). Classic
    // incremental transversal construction with minimality pruning per step.
    std::vector<Mask> facets_from_nonfaces() const {
        std::vector<Mask> hitting{0};
        for (Mask sigma : *nonfaces_) {
            std::vector<Mask> next;
            for (Mask h : hitting) {
                if (h & sigma) {
                    next.push_back(h);
                } else {
                    Mask rem = sigma;
                    while (rem) {
                        int v = std::countr_zero(rem);
                        rem &= rem - 1;
                        next.push_back(h | (Mask{1} << v));
                    }
                }
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            std::vector<Mask> minimal;
            for (Mask m : next) {
                bool dominated = false;
                for (Mask other : next)
                    if (other != m && (m & other) == other) { dominated = true; break; }
                if (!dominated) minimal.push_back(m);
            }
            hitting = std::move(minimal);
        }
        Mask full = n_ == 0 ? 0 : ((Mask{1} << n_) - 1);
        std::vector<Mask> out;
        out.reserve(hitting.size());
        for (Mask h : hitting) out.push_back(full & ~h);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Increasing-cardinality subset scan with superset pruning. A candidate
    // whose proper subsets are all faces is minimal by construction, because
    // smaller nonfaces were found in earlier rounds.
    std::vector<Mask> nonfaces_from_facets() const {
        if (n_ > kNonfaceSearchCap)
            throw EnumerationTooLarge("minimal-nonface search is capped at 25 vertices");
        std::vector<Mask> found;
        // |σ| <= dim + 2 for any minimal nonface σ: σ minus a point is a face.
        int kmax = std::min(n_, dim() + 2);
        for (int k = 1; k <= kmax; ++k) {
            if (k > n_) break;
            // Gosper's hack over all k-subsets of [n].
            Mask m = (Mask{1} << k) - 1;
            Mask limit = Mask{1} << n_;
            while (m < limit) {
                bool pruned = false;
                for (Mask nf : found)
                    if ((m & nf) == nf) { pruned = true; break; }
                if (!pruned && !is_face(m)) found.push_back(m);
                Mask c = m & (~m + 1);
                Mask r = m + c;
                if (r == 0) break;
                m = (((r ^ m) >> 2) / c) | r;
            }
        }
        std::sort(found.begin(), found.end());
        return found;
    }

    int n_;
    mutable std::optional<std::vector<Mask>> facets_;
    mutable std::optional<std::vector<Mask>> nonfaces_;
};

// Number of connected components of the intersection graph on the selected
// minimal nonfaces (edges join index pairs whose nonfaces share a vertex).
inline int component_count(const SimplicialComplex& s, const std::vector<int>& indices) {
    if (indices.empty()) throw EmptyInput("component_count needs a nonempty index set");
    const auto& nf = s.minimal_nonfaces();
    int r = static_cast<int>(nf.size());
    std::vector<int> parent(indices.size());
    for (size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0 || indices[i] >= r)
            throw InvalidArgument("nonface index out of range");
        parent[i] = static_cast<int>(i);
    }
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (size_t i = 0; i < indices.size(); ++i)
        for (size_t j = i + 1; j < indices.size(); ++j)
            if (nf[static_cast<size_t>(indices[i])] & nf[static_cast<size_t>(indices[j])]) {
                int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
                if (a != b) parent[static_cast<size_t>(a)] = b;
            }
    int comps = 0;
    for (size_t i = 0; i < indices.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++comps;
    return comps;
}

enum class UniformCMode { all_one, all_equal_a };

struct UniformCResult {
    bool holds = false;
    std::optional<int> a;  // the uniform value over |I| >= 2, when it exists
    bool trivial = false;  // r <= 1: nothing to quantify over
    std::string note;
};

// c(I) = 1 for every nonempty I is equivalent to all pairs of nonfaces
// intersecting: a disjoint pair already gives c = 2, and pairwise
// intersection makes every induced intersection graph complete.
inline UniformCResult uniform_c_check(const SimplicialComplex& s, UniformCMode mode) {
    const auto& nf = s.minimal_nonfaces();
    int r = static_cast<int>(nf.size());
    UniformCResult res;
    if (mode == UniformCMode::all_one) {
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if ((nf[static_cast<size_t>(i)] & nf[static_cast<size_t>(j)]) == 0) {
                    res.holds = false;
                    res.a = std::nullopt;
                    res.note = "c({" + std::to_string(i) + "," + std::to_string(j) + "}) = 2";
                    return res;
                }
        res.holds = true;
        res.a = 1;
        res.trivial = r <= 1;
        return res;
    }

    if (r <= 1) {
        res.holds = true;
        res.trivial = true;
        res.note = "fewer than two minimal nonfaces: a is undefined";
        return res;
    }
    if (r > 20) throw EnumerationTooLarge("uniform c(I) sweep is capped at 20 nonfaces");
    std::optional<int> a;
    for (Mask subset = 1; subset < (Mask{1} << r); ++subset) {
        if (popcount(subset) < 2) continue;
        auto idx = mask_to_set(subset);
        int c = component_count(s, idx);
        if (!a) {
            a = c;
        } else if (*a != c) {
            res.holds = false;
            res.note = "c(I) is not constant over |I| >= 2";
            return res;
        }
    }
    res.holds = true;
    res.a = a;
    return res;
}

// Companion data for the auxiliary-complex construction: one set α_i per
// minimal nonface σ_i (listed in the complex's canonical nonface order) and
// the apex vertex used by the augmentation, when one exists.
struct PropertyIWitness {
    std::vector<std::vector<int>> alphas;
    std::optional<int> apex;
};

namespace detail {
inline std::uint64_t set_to_mask64(const std::vector<int>& s, const char* what) {
    std::uint64_t m = 0;
    for (int v : s) {
        if (v < 0 || v >= 64) throw InvalidWitness(std::string(what) + ": label out of range");
        std::uint64_t bit = std::uint64_t{1} << v;
        if (m & bit) throw InvalidWitness(std::string(what) + ": repeated label");
        m |= bit;
    }
    return m;
}
}  // namespace detail

// The compatibility conditions between the nonfaces σ_i and the witness sets
// α_i: sizes drop by one, empty intersections propagate (for every nonempty
// I and p outside it), and nonempty intersections drop in size by exactly
// one once |I| >= 2. Quantification is over all nonempty I ⊆ [r], p ∉ I.
inline bool check_property_I(const SimplicialComplex& s, const PropertyIWitness& w) {
    const auto& nf = s.minimal_nonfaces();
    size_t r = nf.size();
    if (w.alphas.size() != r)
        throw InvalidWitness("witness must carry one alpha per minimal nonface");
    if (r == 0) return true;
    if (r > 20) throw EnumerationTooLarge("property check is capped at 20 nonfaces");

    std::vector<std::uint64_t> alpha(r), sigma(r);
    for (size_t i = 0; i < r; ++i) {
        alpha[i] = detail::set_to_mask64(w.alphas[i], "alpha");
        sigma[i] = nf[i];
        if (std::popcount(alpha[i]) != popcount(nf[i]) - 1) return false;
    }

    size_t total = size_t{1} << r;
    std::vector<std::uint64_t> sig_inter(total), alp_inter(total);
    sig_inter[0] = ~std::uint64_t{0};
    alp_inter[0] = ~std::uint64_t{0};
    for (size_t m = 1; m < total; ++m) {
        size_t low = m & (~m + 1);
        int idx = std::countr_zero(low);
        sig_inter[m] = sig_inter[m ^ low] & sigma[static_cast<size_t>(idx)];
        alp_inter[m] = alp_inter[m ^ low] & alpha[static_cast<size_t>(idx)];
    }

    for (size_t I = 1; I < total; ++I) {
        int sz = std::popcount(I);
        for (size_t p = 0; p < r; ++p) {
            if (I & (size_t{1} << p)) continue;
            std::uint64_t ss = sig_inter[I] & sigma[p];
            std::uint64_t aa = alp_inter[I] & alpha[p];
            if (ss == 0) {
                if (aa != 0) return false;
            } else if (sz >= 2) {
                if (std::popcount(aa) != std::popcount(ss) - 1) return false;
            }
        }
    }
    return true;
}

struct ApexAugmentation {
    SimplicialComplex s;
    PropertyIWitness witness;
    bool degenerate = false;  // T had no nonfaces; s == T and no apex exists
};

// Add one shared fresh apex vertex w to every minimal nonface of T. The
// result's minimal nonfaces are exactly ν_i ∪ {w}, and α_i = ν_i with apex w
// satisfies the compatibility conditions above.
inline ApexAugmentation apex_augment(const SimplicialComplex& t) {
    auto nu = t.nonface_sets();
    if (nu.empty()) return {t, PropertyIWitness{}, true};
    if (t.n() + 1 > SimplicialComplex::kMaxVertices)
        throw EnumerationTooLarge("apex augmentation exceeds the vertex cap");
    int w = t.n();
    std::vector<std::vector<int>> sigma = nu;
    for (auto& s : sigma) s.push_back(w);
    SimplicialComplex s = SimplicialComplex::from_minimal_nonfaces(t.n() + 1, sigma);
    // Appending the same top bit to every ν preserves the canonical mask
    // order, so the alphas are already aligned with s.minimal_nonfaces().
    return {std::move(s), PropertyIWitness{std::move(nu), w}, false};
}

// Recover the complex on V(S) \ {apex} whose minimal nonfaces are the α_i.
// Only the apex-augmented family is supported: every σ_i must contain the
// apex and satisfy α_i = σ_i \ {apex}; labels above the apex shift down.
inline SimplicialComplex auxiliary_complex(const SimplicialComplex& s,
                                           const PropertyIWitness& w) {
    if (!check_property_I(s, w)) throw NotPropertyI("witness fails the compatibility conditions");
    const auto& nf = s.minimal_nonfaces();
    if (nf.empty()) return s;  // degenerate: S is the full simplex, T(S) = S
    if (!w.apex) throw UnsupportedWitness("witness has no apex vertex");
    int apex = *w.apex;
    if (apex < 0 || apex >= s.n()) throw InvalidWitness("apex label out of range");
    Mask apex_bit = Mask{1} << apex;
    std::vector<std::vector<int>> relabeled;
    relabeled.reserve(nf.size());
    for (size_t i = 0; i < nf.size(); ++i) {
        if (!(nf[i] & apex_bit))
            throw UnsupportedWitness("a minimal nonface misses the apex");
        Mask expect = nf[i] & ~apex_bit;
        if (detail::set_to_mask64(w.alphas[i], "alpha") != std::uint64_t{expect})
            throw UnsupportedWitness("alphas are not the nonfaces minus the apex");
        std::vector<int> a;
        for (int v : mask_to_set(expect)) a.push_back(v > apex ? v - 1 : v);
        relabeled.push_back(std::move(a));
    }
    return SimplicialComplex::from_minimal_nonfaces(s.n() - 1, relabeled);
}

namespace detail {

// Multiset of facet sizes through each vertex — an isomorphism invariant
// used to cut the backtracking fan-out.
inline std::vector<std::vector<int>> vertex_signatures(const SimplicialComplex& s) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(s.n()));
    for (Mask f : s.facets())
        for (int v : mask_to_set(f)) sig[static_cast<size_t>(v)].push_back(popcount(f));
    for (auto& sv : sig) std::sort(sv.begin(), sv.end());
    return sig;
}

}  // namespace detail

// Vertex-bijection isomorphism test. Intended for desk-scale complexes; the
// search is signature-pruned backtracking with a 1-skeleton consistency
// check, complete but exponential in the worst case.
inline bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.n() != b.n()) return false;
    if (a == b) return true;
    const auto& fa = a.facets();
    const auto& fb = b.facets();
    if (fa.size() != fb.size()) return false;
    auto sizes = [](const std::vector<Mask>& fs) {
        std::vector<int> out;
        for (Mask f : fs) out.push_back(popcount(f));
        std::sort(out.begin(), out.end());
        return out;
    };
    if (sizes(fa) != sizes(fb)) return false;
    if (a.n() > 16) throw EnumerationTooLarge("isomorphism search is capped at 16 vertices");

    int n = a.n();
    auto sig_a = detail::vertex_signatures(a);
    auto sig_b = detail::vertex_signatures(b);
    // adjacency in the 1-skeleton (shared facet membership)
    auto skeleton = [n](const std::vector<Mask>& fs) {
        std::vector<Mask> adj(static_cast<size_t>(n));
        for (Mask f : fs)
            for (int v : mask_to_set(f)) adj[static_cast<size_t>(v)] |= f & ~(Mask{1} << v);
        return adj;
    };
    auto adj_a = skeleton(fa);
    auto adj_b = skeleton(fb);

    std::unordered_set<Mask> b_facets(fb.begin(), fb.end());
    std::vector<int> image(static_cast<size_t>(n), -1);
    Mask used = 0;

    auto consistent = [&](int v, int w) {
        if (sig_a[static_cast<size_t>(v)] != sig_b[static_cast<size_t>(w)]) return false;
        for (int u = 0; u < v; ++u) {
            bool adj_in_a = (adj_a[static_cast<size_t>(v)] >> u) & 1;
            bool adj_in_b = (adj_b[static_cast<size_t>(w)] >> image[static_cast<size_t>(u)]) & 1;
            if (adj_in_a != adj_in_b) return false;
        }
        return true;
    };

    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) {
            for (Mask f : fa) {
                Mask g = 0;
                for (int u : mask_to_set(f)) g |= Mask{1} << image[static_cast<size_t>(u)];
                if (!b_facets.count(g)) return false;
            }
            return true;
        }
        for (int w = 0; w < n; ++w) {
            if (used & (Mask{1} << w)) continue;
            if (!consistent(v, w)) continue;
            image[static_cast<size_t>(v)] = w;
            used |= Mask{1} << w;
            if (rec(v + 1)) return true;
            used &= ~(Mask{1} << w);
            image[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    return rec(0);
}

}  // namespace simpchrom
