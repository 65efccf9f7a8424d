#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simpchrom/bigint.hpp"
#include "simpchrom/complex.hpp"
#include "simpchrom/errors.hpp"
#include "simpchrom/linalg.hpp"
#include "simpchrom/poly.hpp"
#include "simpchrom/report.hpp"

namespace simpchrom {

using linalg::QMatrix;
using linalg::QVector;
using linalg::ZMatrix;
using linalg::ZVector;

// Facet inequality normal·y <= offset, stated in the polytope's reduced
// (affine-lattice) coordinates. normal is a primitive integer vector.
struct Facet {
    ZVector normal;
    Integer offset;
    friend bool operator<(const Facet& a, const Facet& b) {
        return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
    }
    friend bool operator==(const Facet& a, const Facet& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

namespace detail {

// Affine-lattice reduction of a point set: picks the first point as origin
// and computes a basis of the saturated lattice (affine hull ∩ Z^N shifted
// to the origin), so every integer point of the affine hull gets integer
// reduced coordinates.
struct AffineReduction {
    int ambient_dim = 0;
    int rank = 0;
    ZVector origin;     // empty when full-dimensional (origin = 0)
    ZMatrix basis;      // rank rows, each of length ambient_dim; empty when full-dim
    bool identity = false;  // reduced coords == ambient coords

    std::optional<ZVector> reduce(const ZVector& p) const {
        if (identity) return p;
        if (rank == 0) {
            if (p == origin) return ZVector{};
            return std::nullopt;
        }
        const int n = ambient_dim;
        QMatrix m(n, QVector(rank, Rational(0)));
        QVector rhs(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < rank; ++j) m[i][j] = Rational(basis[j][i]);
            rhs[i] = Rational(p[i] - origin[i]);
        }
        auto sol = linalg::solve(m, rhs);
        if (sol.kind != linalg::SolveResult::Kind::unique) return std::nullopt;
        ZVector out(rank);
        for (int j = 0; j < rank; ++j) {
            if (!is_integral(sol.x[j])) return std::nullopt;
            out[j] = to_integer(sol.x[j]);
        }
        return out;
    }

    ZVector unreduce(const ZVector& y) const {
        if (identity) return y;
        ZVector p = origin;
        for (int j = 0; j < rank; ++j)
            for (int i = 0; i < ambient_dim; ++i) p[i] += y[j] * basis[j][i];
        return p;
    }
};

inline AffineReduction affine_reduce(const std::vector<ZVector>& pts) {
    AffineReduction red;
    red.ambient_dim = static_cast<int>(pts[0].size());
    const int n = red.ambient_dim;
    red.origin = pts[0];
    if (pts.size() == 1) {
        red.rank = 0;
        return red;
    }
    QMatrix diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        QVector row(n);
        for (int j = 0; j < n; ++j) row[j] = Rational(pts[i][j] - pts[0][j]);
        diffs.push_back(std::move(row));
    }
    red.rank = linalg::rank(diffs);
    if (red.rank == n) {
        // Full-dimensional: keep ambient coordinates untouched so the true
        // lattice origin stays where it is (polar duality depends on this).
        red.identity = true;
        red.origin.assign(n, Integer(0));
        return red;
    }
    if (red.rank == 0) return red;
    // Equations cutting out the affine hull: k·(p − v0) = 0.
    ZMatrix equations;
    for (const auto& v : linalg::nullspace(diffs))
        equations.push_back(linalg::primitive(v));
    red.basis = linalg::integer_kernel(equations, static_cast<size_t>(n));
    if (static_cast<int>(red.basis.size()) != red.rank)
        throw InternalCheckFailed("affine lattice basis has wrong rank");
    return red;
}

}  // namespace detail

// A lattice polytope given by integer points; stores the extreme points,
// an affine-lattice reduction, and the full facet description in reduced
// coordinates. Caps: ambient dimension <= 6, <= 32 distinct input points.
class LatticePolytope {
public:
    static constexpr int kMaxAmbientDim = 6;
    static constexpr int kMaxPoints = 32;

    int ambient_dim() const { return reduction_.ambient_dim; }
    int dim() const { return reduction_.rank; }
    const std::vector<ZVector>& vertices() const { return vertices_; }
    const std::vector<ZVector>& reduced_vertices() const { return reduced_vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    int pruned_input_points() const { return pruned_; }

    std::optional<ZVector> try_reduce(const ZVector& p) const {
        if (static_cast<int>(p.size()) != ambient_dim())
            throw DimensionMismatch("point has wrong ambient dimension");
        return reduction_.reduce(p);
    }
    ZVector reduce(const ZVector& p) const {
        auto y = try_reduce(p);
        if (!y) throw InvalidArgument("point is not in the affine lattice of the polytope");
        return *y;
    }
    ZVector unreduce(const ZVector& y) const { return reduction_.unreduce(y); }

    bool contains_reduced(const ZVector& y, bool strict = false) const {
        for (const auto& f : facets_) {
            Integer lhs = 0;
            for (int i = 0; i < dim(); ++i) lhs += f.normal[i] * y[i];
            if (strict ? lhs >= f.offset : lhs > f.offset) return false;
        }
        return true;
    }

    friend LatticePolytope build_polytope(const std::vector<ZVector>& points);

private:
    detail::AffineReduction reduction_;
    std::vector<ZVector> vertices_;
    std::vector<ZVector> reduced_vertices_;
    std::vector<Facet> facets_;
    int pruned_ = 0;
};

namespace detail {

inline std::vector<Facet> brute_force_facets(const std::vector<ZVector>& rpts, int r) {
    std::vector<Facet> out;
    if (r == 0) return out;
    if (r == 1) {
        Integer lo = rpts[0][0], hi = rpts[0][0];
        for (const auto& y : rpts) {
            lo = std::min(lo, y[0]);
            hi = std::max(hi, y[0]);
        }
        out.push_back(Facet{{Integer(1)}, hi});
        out.push_back(Facet{{Integer(-1)}, -lo});
        std::sort(out.begin(), out.end());
        return out;
    }
    const int npts = static_cast<int>(rpts.size());
    std::set<std::pair<ZVector, Integer>> seen;  // sign-canonical hyperplanes
    std::set<Facet> collected;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    auto advance = [&]() -> bool {
        int i = r - 1;
        while (i >= 0 && idx[i] == npts - r + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    if (npts < r) return out;
    do {
        QMatrix diffs(r - 1, QVector(r));
        for (int i = 1; i < r; ++i)
            for (int j = 0; j < r; ++j)
                diffs[i - 1][j] = Rational(rpts[idx[i]][j] - rpts[idx[0]][j]);
        auto ns = linalg::nullspace(diffs);
        if (ns.size() != 1) continue;  // subset does not span a hyperplane
        ZVector a = linalg::primitive(ns[0]);
        Integer c = 0;
        for (int j = 0; j < r; ++j) c += a[j] * rpts[idx[0]][j];
        // sign-canonical key to skip repeat hyperplanes cheaply
        ZVector ka = a;
        Integer kc = c;
        for (const auto& z : ka) {
            if (z == 0) continue;
            if (z < 0) {
                for (auto& w : ka) w = -w;
                kc = -kc;
            }
            break;
        }
        if (!seen.insert({ka, kc}).second) continue;
        bool all_le = true, all_ge = true;
        for (const auto& y : rpts) {
            Integer v = 0;
            for (int j = 0; j < r; ++j) v += a[j] * y[j];
            if (v > c) all_le = false;
            if (v < c) all_ge = false;
            if (!all_le && !all_ge) break;
        }
        if (all_le) collected.insert(Facet{a, c});
        if (all_ge) {
            ZVector na(a.size());
            for (size_t j = 0; j < a.size(); ++j) na[j] = -a[j];
            collected.insert(Facet{na, -c});
        }
    } while (advance());
    out.assign(collected.begin(), collected.end());
    return out;
}

}  // namespace detail

inline LatticePolytope build_polytope(const std::vector<ZVector>& points) {
    if (points.empty()) throw EmptyInput("a polytope needs at least one point");
    const size_t n = points[0].size();
    if (n == 0) throw InvalidArgument("points need at least one coordinate");
    if (n > LatticePolytope::kMaxAmbientDim)
        throw EnumerationTooLarge("ambient dimension exceeds the supported cap");
    for (const auto& p : points)
        if (p.size() != n) throw DimensionMismatch("points of mixed ambient dimension");
    std::set<ZVector> dedup(points.begin(), points.end());
    if (dedup.size() > LatticePolytope::kMaxPoints)
        throw EnumerationTooLarge("too many distinct points");
    std::vector<ZVector> pts(dedup.begin(), dedup.end());

    LatticePolytope p;
    p.reduction_ = detail::affine_reduce(pts);
    const int r = p.reduction_.rank;
    std::vector<ZVector> rpts;
    rpts.reserve(pts.size());
    for (const auto& q : pts) {
        auto y = p.reduction_.reduce(q);
        if (!y) throw InternalCheckFailed("input point failed its own lattice reduction");
        rpts.push_back(std::move(*y));
    }
    p.facets_ = detail::brute_force_facets(rpts, r);
    // keep only extreme points: a point is a vertex iff its tight facet
    // normals span the full reduced space
    for (size_t i = 0; i < pts.size(); ++i) {
        bool vertex = true;
        if (r >= 1) {
            QMatrix tight;
            for (const auto& f : p.facets_) {
                Integer v = 0;
                for (int j = 0; j < r; ++j) v += f.normal[j] * rpts[i][j];
                if (v == f.offset) {
                    QVector row(r);
                    for (int j = 0; j < r; ++j) row[j] = Rational(f.normal[j]);
                    tight.push_back(std::move(row));
                }
            }
            vertex = !tight.empty() && linalg::rank(tight) == r;
        }
        if (vertex) {
            p.vertices_.push_back(pts[i]);
            p.reduced_vertices_.push_back(rpts[i]);
        } else {
            ++p.pruned_;
        }
    }
    return p;
}

// -------------------------------------------------------------------------
// Lattice-point counting and the Ehrhart/δ package
// -------------------------------------------------------------------------

// Exact number of lattice points of m·P (closed) or of the relative
// interior of m·P (interior = true). The m = 0 interior count is 0 by
// convention; a 0-dimensional P counts 1 (its single point is its own
// relative interior for m >= 1).
inline Integer count_points(const LatticePolytope& p, const Integer& m, bool interior = false) {
    if (m < 0) throw InvalidArgument("dilation factor must be nonnegative");
    if (p.dim() == 0) return (!interior || m >= 1) ? Integer(1) : Integer(0);
    if (m == 0) return interior ? Integer(0) : Integer(1);
    const int r = p.dim();
    ZVector lo(r), hi(r);
    for (int j = 0; j < r; ++j) {
        lo[j] = m * p.reduced_vertices()[0][j];
        hi[j] = lo[j];
    }
    for (const auto& y : p.reduced_vertices())
        for (int j = 0; j < r; ++j) {
            Integer scaled = m * y[j];
            lo[j] = std::min(lo[j], scaled);
            hi[j] = std::max(hi[j], scaled);
        }
    Integer cells = 1;
    for (int j = 0; j < r; ++j) cells *= hi[j] - lo[j] + 1;
    if (cells > 100000000) throw EnumerationTooLarge("bounding box of the dilation is too large");

    Integer count = 0;
    ZVector cur = lo;
    for (;;) {
        bool ok = true;
        for (const auto& f : p.facets()) {
            Integer lhs = 0;
            for (int j = 0; j < r; ++j) lhs += f.normal[j] * cur[j];
            Integer rhs = m * f.offset;
            if (interior ? lhs >= rhs : lhs > rhs) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int j = r - 1;
        while (j >= 0 && cur[j] == hi[j]) {
            cur[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++cur[j];
    }
    return count;
}

// Degree-r interpolant through the counts at m = 0..r, cross-checked
// against direct counts at m = r+1 and r+2.
inline QPolynomial ehrhart_polynomial(const LatticePolytope& p) {
    const int r = p.dim();
    std::vector<std::pair<Integer, Integer>> samples;
    for (int m = 0; m <= r; ++m) samples.push_back({Integer(m), count_points(p, m)});
    QPolynomial e = QPolynomial::interpolate(samples);
    for (int m = r + 1; m <= r + 2; ++m) {
        if (e.eval(Integer(m)) != Rational(count_points(p, m)))
            throw InternalCheckFailed("interpolated point count disagrees with a direct count");
    }
    return e;
}

// h*-transform of the counting function: delta_i = sum_j (-1)^{i-j} C(r+1, i-j) E(P, j).
inline std::vector<Integer> delta_vector(const LatticePolytope& p) {
    const int r = p.dim();
    std::vector<Integer> counts(r + 1);
    for (int m = 0; m <= r; ++m) counts[m] = count_points(p, m);
    std::vector<Integer> delta(r + 1, Integer(0));
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= i; ++j) {
            Integer term = binomial(r + 1, i - j) * counts[j];
            if ((i - j) % 2 == 0)
                delta[i] += term;
            else
                delta[i] -= term;
        }
    if (delta[0] != 1) throw InternalCheckFailed("delta_0 must be 1");
    for (const auto& d : delta)
        if (d < 0) throw InternalCheckFailed("negative delta entry");
    return delta;
}

inline IntPolynomial delta_polynomial(const LatticePolytope& p) {
    return IntPolynomial(delta_vector(p));
}

// Generating function  sum_m E(P,m) t^m  =  delta(t) / (1-t)^{r+1}.
inline RationalFunction ehrhart_series(const LatticePolytope& p) {
    IntPolynomial one_minus_t({Integer(1), Integer(-1)});
    return RationalFunction(delta_polynomial(p), one_minus_t.pow(p.dim() + 1));
}

// Normalized volume r!·vol(P) by pyramid decomposition over the first
// vertex: each facet not containing it contributes lattice-height times the
// normalized volume of the facet, recursively.
inline Integer normalized_volume(const LatticePolytope& p) {
    const int r = p.dim();
    if (r == 0) return 1;
    const ZVector& apex = p.reduced_vertices()[0];
    Integer total = 0;
    for (const auto& f : p.facets()) {
        Integer at_apex = 0;
        for (int j = 0; j < r; ++j) at_apex += f.normal[j] * apex[j];
        Integer height = f.offset - at_apex;
        if (height == 0) continue;
        std::vector<ZVector> tight;
        for (const auto& y : p.reduced_vertices()) {
            Integer v = 0;
            for (int j = 0; j < r; ++j) v += f.normal[j] * y[j];
            if (v == f.offset) tight.push_back(y);
        }
        total += height * normalized_volume(build_polytope(tight));
    }
    return total;
}

// Checks (-1)^r E(P,-m) = interior count for m = 1..m_max, plus the
// series-level statement E_P(1/t) = (-1)^{r+1} · t·rev(delta)(t)/(1-t)^{r+1}.
inline VerificationReport verify_reciprocity(const LatticePolytope& p, int m_max = 5) {
    VerificationReport rep;
    rep.identity = "ehrhart-reciprocity";
    const int r = p.dim();
    QPolynomial e = ehrhart_polynomial(p);
    bool pointwise = true;
    for (int m = 1; m <= m_max; ++m) {
        Rational lhs = e.eval(Rational(-m));
        if (r % 2 == 1) lhs = -lhs;
        Rational rhs(count_points(p, m, /*interior=*/true));
        if (lhs != rhs) {
            pointwise = false;
            rep.notes.push_back("pointwise failure at m = " + std::to_string(m));
        }
    }
    if (pointwise)
        rep.notes.push_back("pointwise checks passed for m = 1.." + std::to_string(m_max));
    rep.lhs = substitute_reciprocal(ehrhart_series(p));
    IntPolynomial one_minus_t({Integer(1), Integer(-1)});
    IntPolynomial num = IntPolynomial::t() * reverse(delta_polynomial(p), r);
    if (r % 2 == 0) num = -num;  // (-1)^{r+1}
    rep.rhs = RationalFunction(num, one_minus_t.pow(r + 1));
    bool series_ok = rep.lhs == rep.rhs;
    if (!series_ok) rep.notes.push_back("series identity failed");
    rep.pass = pointwise && series_ok;
    return rep;
}

// -------------------------------------------------------------------------
// Polar duality
// -------------------------------------------------------------------------

struct PolarDualResult {
    bool standard_type = false;                 // origin strictly interior
    bool in_Cstar = false;                      // all dual vertices integral
    std::vector<QVector> dual_vertices;         // a/b per facet a·x <= b
    std::optional<LatticePolytope> dual;        // present iff in_Cstar
    std::optional<bool> roundtrip_ok;           // (P*)* = P, when dual exists
};

namespace detail {

// Facet list of a full-dimensional standard-type polytope, as the rational
// vertex set {a/b} of its polar; used for the round-trip check without
// recursing through polar_dual itself.
inline std::set<QVector> polar_vertex_set(const LatticePolytope& p) {
    std::set<QVector> out;
    for (const auto& f : p.facets()) {
        QVector v(f.normal.size());
        for (size_t j = 0; j < f.normal.size(); ++j)
            v[j] = Rational(f.normal[j]) / Rational(f.offset);
        out.insert(std::move(v));
    }
    return out;
}

}  // namespace detail

inline PolarDualResult polar_dual(const LatticePolytope& p) {
    if (p.dim() != p.ambient_dim())
        throw NotFullDimensional("polar duality needs a full-dimensional polytope");
    PolarDualResult res;
    for (const auto& f : p.facets())
        if (f.offset <= 0)
            throw NotStandardType("the origin is not strictly interior; the polar dual is undefined");
    res.standard_type = true;
    res.in_Cstar = true;
    for (const auto& f : p.facets()) {
        QVector v(f.normal.size());
        for (size_t j = 0; j < f.normal.size(); ++j)
            v[j] = Rational(f.normal[j]) / Rational(f.offset);
        res.dual_vertices.push_back(std::move(v));
        if (f.offset != 1) res.in_Cstar = false;  // normals are primitive
    }
    if (res.in_Cstar) {
        std::vector<ZVector> dual_pts;
        for (const auto& f : p.facets()) dual_pts.push_back(f.normal);
        res.dual = build_polytope(dual_pts);
        std::set<QVector> back = detail::polar_vertex_set(*res.dual);
        std::set<QVector> orig;
        for (const auto& v : p.vertices()) {
            QVector q(v.size());
            for (size_t j = 0; j < v.size(); ++j) q[j] = Rational(v[j]);
            orig.insert(std::move(q));
        }
        res.roundtrip_ok = (back == orig);
    }
    return res;
}

// -------------------------------------------------------------------------
// Triangulations
// -------------------------------------------------------------------------

struct Triangulation {
    std::vector<ZVector> points;
    std::vector<std::vector<int>> simplices;
};

inline SimplicialComplex triangulation_complex(const Triangulation& t) {
    return SimplicialComplex::from_facets(static_cast<int>(t.points.size()), t.simplices);
}

namespace detail {

inline void validate_triangulation_shape(const Triangulation& t) {
    if (t.points.empty()) throw EmptyInput("triangulation has no points");
    const size_t n = t.points[0].size();
    for (const auto& p : t.points)
        if (p.size() != n) throw DimensionMismatch("triangulation points of mixed dimension");
    for (const auto& s : t.simplices) {
        std::set<int> uniq(s.begin(), s.end());
        if (uniq.size() != s.size()) throw InvalidArgument("simplex repeats a point index");
        for (int i : s)
            if (i < 0 || i >= static_cast<int>(t.points.size()))
                throw InvalidArgument("simplex index out of range");
    }
}

inline Integer simplex_det(const std::vector<ZVector>& pts, const std::vector<int>& simplex) {
    const size_t k = simplex.size() - 1;
    ZMatrix m(k, ZVector(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            m[i][j] = pts[simplex[i + 1]][j] - pts[simplex[0]][j];
    return linalg::det_bareiss(m);
}

}  // namespace detail

// True iff every simplex spans the affine lattice of the triangulation's
// own point set with |determinant| 1.
inline bool is_unimodular(const Triangulation& t) {
    detail::validate_triangulation_shape(t);
    auto red = detail::affine_reduce(t.points);
    std::vector<ZVector> rpts;
    for (const auto& p : t.points) {
        auto y = red.reduce(p);
        if (!y) throw InternalCheckFailed("triangulation point failed its own reduction");
        rpts.push_back(std::move(*y));
    }
    const int k = red.rank;
    for (const auto& s : t.simplices) {
        if (static_cast<int>(s.size()) != k + 1)
            throw MixedDimensions("simplex is not full-dimensional in the point set's affine lattice");
        Integer d = detail::simplex_det(rpts, s);
        if (d != 1 && d != -1) return false;
    }
    return true;
}

struct TriangulationReport {
    bool valid = false;
    bool points_ok = false;
    bool simplices_ok = false;
    bool covering_ok = false;
    bool proper_ok = false;
    Integer covered{0};
    Integer target{0};
    std::vector<std::string> notes;
};

namespace detail {

// Exact proper-intersection test for two simplices with affinely
// independent vertex lists (reduced integer coordinates).
//
// Every vertex of conv(σ) ∩ conv(τ) lies in the relative interior of a
// unique face A of σ and B of τ, and at such a vertex aff(A) ∩ aff(B) is a
// single point (otherwise one could slide inside the intersection). So
// enumerating all face pairs whose affine hulls meet in exactly one point
// visits every vertex of the intersection; the intersection equals the
// shared face conv(F) iff all those vertices lie in conv(F).
inline bool simplices_intersect_properly(const std::vector<ZVector>& rpts,
                                         const std::vector<int>& sig,
                                         const std::vector<int>& tau) {
    const int dimension = static_cast<int>(rpts.empty() ? 0 : rpts[0].size());
    std::set<int> sig_set(sig.begin(), sig.end());
    std::vector<int> shared;
    for (int i : tau)
        if (sig_set.count(i)) shared.push_back(i);

    auto barycentric_ok = [](const QVector& lambda_tail) {
        Rational total(0);
        for (const auto& l : lambda_tail) {
            if (l < 0) return false;
            total += l;
        }
        return total <= 1;
    };

    const int na = static_cast<int>(sig.size()), nb = static_cast<int>(tau.size());
    for (uint32_t ma = 1; ma < (1u << na); ++ma) {
        std::vector<int> a;
        for (int i = 0; i < na; ++i)
            if (ma & (1u << i)) a.push_back(sig[i]);
        for (uint32_t mb = 1; mb < (1u << nb); ++mb) {
            std::vector<int> b;
            for (int i = 0; i < nb; ++i)
                if (mb & (1u << i)) b.push_back(tau[i]);

            const int va = static_cast<int>(a.size()) - 1, vb = static_cast<int>(b.size()) - 1;
            QMatrix m(dimension, QVector(va + vb, Rational(0)));
            QVector rhs(dimension);
            for (int row = 0; row < dimension; ++row) {
                for (int i = 0; i < va; ++i)
                    m[row][i] = Rational(rpts[a[i + 1]][row] - rpts[a[0]][row]);
                for (int j = 0; j < vb; ++j)
                    m[row][va + j] = -Rational(rpts[b[j + 1]][row] - rpts[b[0]][row]);
                rhs[row] = Rational(rpts[b[0]][row] - rpts[a[0]][row]);
            }
            auto sol = linalg::solve(m, rhs);
            if (sol.kind != linalg::SolveResult::Kind::unique) continue;
            QVector la(sol.x.begin(), sol.x.begin() + va);
            QVector mu(sol.x.begin() + va, sol.x.end());
            if (!barycentric_ok(la) || !barycentric_ok(mu)) continue;
            // the affine hulls meet in one point that lies in both simplices
            QVector point(dimension);
            for (int row = 0; row < dimension; ++row) {
                point[row] = Rational(rpts[a[0]][row]);
                for (int i = 0; i < va; ++i)
                    point[row] += la[i] * Rational(rpts[a[i + 1]][row] - rpts[a[0]][row]);
            }
            if (shared.empty()) return false;
            const int vf = static_cast<int>(shared.size()) - 1;
            QMatrix fm(dimension, QVector(vf, Rational(0)));
            QVector frhs(dimension);
            for (int row = 0; row < dimension; ++row) {
                for (int i = 0; i < vf; ++i)
                    fm[row][i] = Rational(rpts[shared[i + 1]][row] - rpts[shared[0]][row]);
                frhs[row] = point[row] - Rational(rpts[shared[0]][row]);
            }
            auto fsol = linalg::solve(fm, frhs);
            if (fsol.kind != linalg::SolveResult::Kind::unique || !barycentric_ok(fsol.x))
                return false;
        }
    }
    return true;
}

}  // namespace detail

// Checks that T is a genuine triangulation of P (boundary = false) or of
// the boundary complex of P (boundary = true): points in place, simplices
// affinely independent and of the right size, exact volume bookkeeping, and
// pairwise-proper intersections.
inline TriangulationReport check_triangulation(const LatticePolytope& p, const Triangulation& t,
                                               bool boundary = false) {
    detail::validate_triangulation_shape(t);
    if (static_cast<int>(t.points[0].size()) != p.ambient_dim())
        throw DimensionMismatch("triangulation and polytope live in different ambient spaces");
    const int r = p.dim();
    if (boundary && r == 0)
        throw InvalidArgument("a 0-dimensional polytope has no boundary to triangulate");

    TriangulationReport rep;
    {
        std::set<ZVector> uniq(t.points.begin(), t.points.end());
        if (uniq.size() != t.points.size()) {
            rep.notes.push_back("duplicate points");
            return rep;
        }
    }

    // 1. points must lie in P (and on its boundary, in boundary mode)
    std::vector<ZVector> rpts;
    rep.points_ok = true;
    for (const auto& q : t.points) {
        auto y = p.try_reduce(q);
        if (!y) {
            rep.points_ok = false;
            rep.notes.push_back("a point is outside the affine lattice of the polytope");
            break;
        }
        if (!p.contains_reduced(*y)) {
            rep.points_ok = false;
            rep.notes.push_back("a point lies outside the polytope");
            break;
        }
        if (boundary && p.contains_reduced(*y, /*strict=*/true)) {
            rep.points_ok = false;
            rep.notes.push_back("a point lies in the interior, not on the boundary");
            break;
        }
        rpts.push_back(std::move(*y));
    }
    if (rep.points_ok) {
        std::set<int> used;
        for (const auto& s : t.simplices)
            for (int i : s) used.insert(i);
        if (used.size() != t.points.size()) {
            rep.points_ok = false;
            rep.notes.push_back("some points are not used by any simplex");
        }
    }
    if (!rep.points_ok) return rep;

    // 2. simplex shape: full mode wants r+1 affinely independent points,
    //    boundary mode wants r points spanning a hyperplane
    const int want = boundary ? r : r + 1;
    rep.simplices_ok = !t.simplices.empty();
    if (t.simplices.empty()) rep.notes.push_back("no simplices");
    std::vector<int> facet_of(t.simplices.size(), -1);
    for (size_t s = 0; s < t.simplices.size() && rep.simplices_ok; ++s) {
        const auto& simplex = t.simplices[s];
        if (static_cast<int>(simplex.size()) != want) {
            rep.simplices_ok = false;
            rep.notes.push_back("a simplex has the wrong number of points");
            break;
        }
        QMatrix diffs(simplex.size() - 1, QVector(r));
        for (size_t i = 1; i < simplex.size(); ++i)
            for (int j = 0; j < r; ++j)
                diffs[i - 1][j] = Rational(rpts[simplex[i]][j] - rpts[simplex[0]][j]);
        if (linalg::rank(diffs) != static_cast<int>(simplex.size()) - 1) {
            rep.simplices_ok = false;
            rep.notes.push_back("a simplex is affinely degenerate");
            break;
        }
        if (boundary) {
            int home = -1;
            for (size_t fi = 0; fi < p.facets().size(); ++fi) {
                const auto& f = p.facets()[fi];
                bool all_tight = true;
                for (int idx : simplex) {
                    Integer v = 0;
                    for (int j = 0; j < r; ++j) v += f.normal[j] * rpts[idx][j];
                    if (v != f.offset) {
                        all_tight = false;
                        break;
                    }
                }
                if (all_tight) {
                    home = static_cast<int>(fi);
                    break;
                }
            }
            if (home < 0) {
                rep.simplices_ok = false;
                rep.notes.push_back("a simplex does not lie within a single facet");
                break;
            }
            facet_of[s] = home;
        }
    }
    if (!rep.simplices_ok) return rep;

    // 3. covering by exact volume bookkeeping
    if (!boundary) {
        rep.target = normalized_volume(p);
        for (const auto& simplex : t.simplices) {
            Integer d = detail::simplex_det(rpts, simplex);
            if (d < 0) d = -d;
            rep.covered += d;
        }
        rep.covering_ok = rep.covered == rep.target;
        if (!rep.covering_ok) rep.notes.push_back("covered volume does not match the polytope");
    } else {
        rep.covering_ok = true;
        for (size_t fi = 0; fi < p.facets().size(); ++fi) {
            const auto& f = p.facets()[fi];
            std::vector<ZVector> tight_vertices;
            for (const auto& y : p.reduced_vertices()) {
                Integer v = 0;
                for (int j = 0; j < r; ++j) v += f.normal[j] * y[j];
                if (v == f.offset) tight_vertices.push_back(y);
            }
            LatticePolytope fp = build_polytope(tight_vertices);
            Integer target_f = normalized_volume(fp);
            Integer covered_f = 0;
            for (size_t s = 0; s < t.simplices.size(); ++s) {
                if (facet_of[s] != static_cast<int>(fi)) continue;
                std::vector<ZVector> reduced_simplex;
                for (int idx : t.simplices[s]) {
                    auto y = fp.try_reduce(rpts[idx]);
                    if (!y) throw InternalCheckFailed("boundary simplex escaped its facet lattice");
                    reduced_simplex.push_back(std::move(*y));
                }
                std::vector<int> local(reduced_simplex.size());
                for (size_t i = 0; i < local.size(); ++i) local[i] = static_cast<int>(i);
                Integer d = detail::simplex_det(reduced_simplex, local);
                if (d < 0) d = -d;
                covered_f += d;
            }
            rep.covered += covered_f;
            rep.target += target_f;
            if (covered_f != target_f) {
                rep.covering_ok = false;
                rep.notes.push_back("facet " + std::to_string(fi) + " is not exactly covered");
            }
        }
    }

    // 4. pairwise-proper intersections
    rep.proper_ok = true;
    for (size_t i = 0; i < t.simplices.size() && rep.proper_ok; ++i)
        for (size_t j = i + 1; j < t.simplices.size() && rep.proper_ok; ++j)
            if (!detail::simplices_intersect_properly(rpts, t.simplices[i], t.simplices[j])) {
                rep.proper_ok = false;
                rep.notes.push_back("two simplices overlap improperly");
            }

    rep.valid = rep.points_ok && rep.simplices_ok && rep.covering_ok && rep.proper_ok;
    return rep;
}

// -------------------------------------------------------------------------
// Compressed boundary triangulations and h* = h
// -------------------------------------------------------------------------

struct CompressedReport {
    bool definition_check = false;  // T's points are exactly ∂P ∩ Z^N
    bool h_equals_delta = false;
    bool delta_geq_h = false;
    std::vector<Integer> h;
    std::vector<Integer> delta;
    std::vector<std::string> notes;
};

namespace detail {

inline std::vector<ZVector> boundary_lattice_points(const LatticePolytope& p) {
    const int r = p.dim();
    ZVector lo(r), hi(r);
    for (int j = 0; j < r; ++j) lo[j] = hi[j] = p.reduced_vertices()[0][j];
    for (const auto& y : p.reduced_vertices())
        for (int j = 0; j < r; ++j) {
            lo[j] = std::min(lo[j], y[j]);
            hi[j] = std::max(hi[j], y[j]);
        }
    std::vector<ZVector> out;
    ZVector cur = lo;
    for (;;) {
        if (p.contains_reduced(cur) && !p.contains_reduced(cur, /*strict=*/true))
            out.push_back(cur);
        int j = r - 1;
        while (j >= 0 && cur[j] == hi[j]) {
            cur[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++cur[j];
    }
    return out;
}

inline void pad_to(std::vector<Integer>& v, size_t len) {
    while (v.size() < len) v.push_back(Integer(0));
}

}  // namespace detail

// Compares a boundary triangulation against the compressed-vertex-set
// definition and the h-vs-δ dichotomy.
inline CompressedReport is_compressed(const LatticePolytope& p, const Triangulation& t) {
    if (p.dim() != p.ambient_dim())
        throw NotInCstar("the polytope is not full-dimensional");
    for (const auto& f : p.facets()) {
        if (f.offset <= 0) throw NotInCstar("the origin is not strictly interior");
        if (f.offset != 1) throw NotInCstar("the polar dual is not a lattice polytope");
    }
    auto tri = check_triangulation(p, t, /*boundary=*/true);
    if (!tri.valid) {
        std::string why = "not a boundary triangulation";
        for (const auto& n : tri.notes) why += "; " + n;
        throw NotBoundaryTriangulation(why);
    }

    CompressedReport rep;
    std::set<ZVector> boundary;
    for (const auto& y : detail::boundary_lattice_points(p)) boundary.insert(y);
    std::set<ZVector> tpoints;
    for (const auto& q : t.points) tpoints.insert(p.reduce(q));
    rep.definition_check = (boundary == tpoints);
    if (!rep.definition_check)
        rep.notes.push_back("triangulation points differ from the boundary lattice points");

    rep.h = triangulation_complex(t).h_vector();
    rep.delta = delta_vector(p);
    size_t len = std::max(rep.h.size(), rep.delta.size());
    detail::pad_to(rep.h, len);
    detail::pad_to(rep.delta, len);
    rep.h_equals_delta = (rep.h == rep.delta);
    rep.delta_geq_h = true;
    for (size_t i = 0; i < len; ++i)
        if (rep.delta[i] < rep.h[i]) rep.delta_geq_h = false;
    return rep;
}

struct HstarReport {
    bool pass = false;
    bool hstar_unimodal = false;
    std::vector<Integer> hstar;
    std::vector<Integer> h;
    std::vector<std::string> notes;
};

// For a unimodular full triangulation of P, the h-vector of the abstract
// simplicial complex must reproduce the δ-vector of P.
inline HstarReport verify_hstar_eq_h(const LatticePolytope& p, const Triangulation& t) {
    if (!is_unimodular(t)) throw NotUnimodular("the triangulation is not unimodular");
    auto tri = check_triangulation(p, t, /*boundary=*/false);
    if (!tri.valid) {
        std::string why = "the simplices do not properly cover the polytope";
        for (const auto& n : tri.notes) why += "; " + n;
        throw InvalidArgument(why);
    }
    HstarReport rep;
    rep.hstar = delta_vector(p);
    rep.h = triangulation_complex(t).h_vector();
    size_t len = std::max(rep.hstar.size(), rep.h.size());
    detail::pad_to(rep.hstar, len);
    detail::pad_to(rep.h, len);
    rep.pass = (rep.hstar == rep.h);
    rep.hstar_unimodal = true;
    {
        size_t peak = 0;
        for (size_t i = 1; i < rep.hstar.size(); ++i)
            if (rep.hstar[i] >= rep.hstar[peak]) peak = i;
        for (size_t i = 1; i <= peak; ++i)
            if (rep.hstar[i] < rep.hstar[i - 1]) rep.hstar_unimodal = false;
        for (size_t i = peak + 1; i < rep.hstar.size(); ++i)
            if (rep.hstar[i] > rep.hstar[i - 1]) rep.hstar_unimodal = false;
    }
    return rep;
}

}  // namespace simpchrom
