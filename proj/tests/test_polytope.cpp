#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "simpchrom/polytope.hpp"

using namespace simpchrom;

namespace {

std::vector<ZVector> zpts(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<ZVector> out;
    for (const auto& row : rows) {
        ZVector v;
        for (long x : row) v.push_back(Integer(x));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Integer> zvec(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.push_back(Integer(x));
    return out;
}

const std::vector<ZVector> kSeg02 = zpts({{0}, {2}});
const std::vector<ZVector> kSegPm1 = zpts({{-1}, {1}});
const std::vector<ZVector> kSq01 = zpts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
const std::vector<ZVector> kSq2 = zpts({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}});
const std::vector<ZVector> kTri2 = zpts({{0, 0}, {2, 0}, {0, 2}});
const std::vector<ZVector> kCube = zpts({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                         {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}});

// staircase triangulation of the unit cube: one simplex per coordinate order
Triangulation cube_staircase() {
    Triangulation t;
    t.points = kCube;  // index = 4x + 2y + z
    t.simplices = {{0, 4, 6, 7}, {0, 4, 5, 7}, {0, 2, 6, 7},
                   {0, 2, 3, 7}, {0, 1, 5, 7}, {0, 1, 3, 7}};
    return t;
}

Triangulation sq2_boundary8() {
    Triangulation t;
    t.points = zpts({{-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}});
    t.simplices = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}};
    return t;
}

Triangulation sq2_corners4() {
    Triangulation t;
    t.points = kSq2;  // (-1,-1),(1,-1),(-1,1),(1,1)
    t.simplices = {{0, 1}, {1, 3}, {3, 2}, {2, 0}};
    return t;
}

}  // namespace

TEST_CASE("build_polytope on the worked examples") {
    auto tri = build_polytope(kTri2);
    CHECK(tri.ambient_dim() == 2);
    CHECK(tri.dim() == 2);
    CHECK(tri.vertices().size() == 3);
    CHECK(tri.facets().size() == 3);

    auto sq = build_polytope(kSq2);
    CHECK(sq.dim() == 2);
    CHECK(sq.facets().size() == 4);
    std::set<Facet> fs(sq.facets().begin(), sq.facets().end());
    CHECK(fs.count(Facet{zvec({1, 0}), Integer(1)}) == 1);
    CHECK(fs.count(Facet{zvec({-1, 0}), Integer(1)}) == 1);
    CHECK(fs.count(Facet{zvec({0, 1}), Integer(1)}) == 1);
    CHECK(fs.count(Facet{zvec({0, -1}), Integer(1)}) == 1);

    auto seg = build_polytope(kSeg02);
    CHECK(seg.dim() == 1);
    CHECK(seg.facets().size() == 2);

    auto cube = build_polytope(kCube);
    CHECK(cube.dim() == 3);
    CHECK(cube.facets().size() == 6);
    CHECK(cube.vertices().size() == 8);
}

TEST_CASE("non-extreme input points are pruned and reported") {
    auto pts = kSq2;
    pts.push_back(zvec({0, 0}));   // interior
    pts.push_back(zvec({1, 0}));   // edge midpoint
    auto p = build_polytope(pts);
    CHECK(p.vertices().size() == 4);
    CHECK(p.pruned_input_points() == 2);
    CHECK(p.facets().size() == 4);
}

TEST_CASE("build_polytope input validation") {
    CHECK_THROWS_AS(build_polytope({}), EmptyInput);
    CHECK_THROWS_AS(build_polytope(zpts({{0, 0}, {1}})), DimensionMismatch);
    std::vector<ZVector> seven = {ZVector(7, Integer(0))};
    CHECK_THROWS_AS(build_polytope(seven), EnumerationTooLarge);
}

TEST_CASE("lattice point counts on worked examples") {
    auto seg = build_polytope(kSeg02);
    CHECK(count_points(seg, 3) == 7);
    CHECK(count_points(seg, 0) == 1);
    CHECK(count_points(seg, 0, true) == 0);

    auto sq01 = build_polytope(kSq01);
    CHECK(count_points(sq01, 2) == 9);

    auto sq2 = build_polytope(kSq2);
    CHECK(count_points(sq2, 1, true) == 1);  // origin only

    auto cube = build_polytope(kCube);
    for (int m = 0; m <= 4; ++m) {
        Integer closed = count_points(cube, m);
        CHECK(closed == Integer(m + 1) * (m + 1) * (m + 1));
        if (m >= 1) {
            Integer open = count_points(cube, m, true);
            CHECK(open == Integer(m - 1) * (m - 1) * (m - 1));
        }
    }

    auto point = build_polytope(zpts({{5, 5}}));
    CHECK(point.dim() == 0);
    CHECK(count_points(point, 7) == 1);
    CHECK(count_points(point, 7, true) == 1);
    CHECK(count_points(point, 0, true) == 0);

    CHECK_THROWS_AS(count_points(seg, Integer(1000000000)), EnumerationTooLarge);
}

TEST_CASE("counting respects the affine lattice, not the ambient box") {
    // segment from (1,2,3) to (3,4,5): direction (2,2,2), so the affine
    // lattice contains the midpoint (2,3,4) as well
    auto seg = build_polytope(zpts({{1, 2, 3}, {3, 4, 5}}));
    CHECK(seg.dim() == 1);
    CHECK(count_points(seg, 1) == 3);
    CHECK(count_points(seg, 2) == 5);

    // lattice triangle conv{2e1, 2e2, 2e3} inside x+y+z = 2
    auto tri = build_polytope(zpts({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    CHECK(tri.dim() == 2);
    CHECK(count_points(tri, 1) == 6);
    CHECK(delta_vector(tri) == zvec({1, 3, 0}));
}

TEST_CASE("Ehrhart interpolation matches the known polynomials") {
    auto seg = build_polytope(kSeg02);
    QPolynomial e = ehrhart_polynomial(seg);
    CHECK(e.degree() == 1);
    CHECK(e.coefficients()[0] == 1);
    CHECK(e.coefficients()[1] == 2);

    auto sq01 = build_polytope(kSq01);
    QPolynomial esq = ehrhart_polynomial(sq01);
    CHECK(esq.eval(Integer(3)) == 16);
    CHECK(esq.coefficients() == std::vector<Rational>{1, 2, 1});

    auto tri = build_polytope(kTri2);
    QPolynomial etri = ehrhart_polynomial(tri);
    CHECK(etri.coefficients() == std::vector<Rational>{1, 3, 2});
    CHECK(count_points(tri, 1) == 6);
    CHECK(count_points(tri, 2) == 15);
}

TEST_CASE("delta vectors of the standard fixtures") {
    CHECK(delta_vector(build_polytope(kSq01)) == zvec({1, 1, 0}));
    CHECK(delta_vector(build_polytope(kTri2)) == zvec({1, 3, 0}));
    CHECK(delta_vector(build_polytope(kSq2)) == zvec({1, 6, 1}));
    CHECK(delta_vector(build_polytope(kSeg02)) == zvec({1, 1}));
    CHECK(delta_vector(build_polytope(kSegPm1)) == zvec({1, 1}));
    CHECK(delta_vector(build_polytope(kCube)) == zvec({1, 4, 1, 0}));
}

TEST_CASE("delta_1 counts lattice points minus r+1") {
    for (const auto& pts : {kSeg02, kSq01, kSq2, kTri2, kCube}) {
        auto p = build_polytope(pts);
        auto d = delta_vector(p);
        CHECK(d[0] == 1);
        CHECK(d[1] == count_points(p, 1) - (p.dim() + 1));
    }
}

TEST_CASE("delta sum equals the normalized volume computed by pyramids") {
    for (const auto& pts : {kSeg02, kSq01, kSq2, kTri2, kCube}) {
        auto p = build_polytope(pts);
        auto d = delta_vector(p);
        Integer sum = 0;
        for (const auto& x : d) sum += x;
        CHECK(sum == normalized_volume(p));
    }
    CHECK(normalized_volume(build_polytope(kSeg02)) == 2);
    CHECK(normalized_volume(build_polytope(kSq01)) == 2);
    CHECK(normalized_volume(build_polytope(kSq2)) == 8);
    CHECK(normalized_volume(build_polytope(kCube)) == 6);
}

TEST_CASE("counts match the series expansion of delta/(1-t)^{r+1}") {
    for (const auto& pts : {kSeg02, kSq01, kSq2, kTri2, kCube}) {
        auto p = build_polytope(pts);
        auto coeffs = series_expand(ehrhart_series(p), 5);
        for (int m = 0; m <= 5; ++m) CHECK(Rational(count_points(p, m)) == coeffs[m]);
    }
}

TEST_CASE("Ehrhart reciprocity on the fixtures") {
    for (const auto& pts : {kSeg02, kSq01, kSq2, kTri2, kCube, kSegPm1}) {
        auto rep = verify_reciprocity(build_polytope(pts));
        INFO((rep.notes.empty() ? std::string() : rep.notes.front()));
        CHECK(rep.pass);
    }
    // spot values: -E([0,2], -m) = 2m - 1; 2Δ₂ has empty interior at m = 1
    auto seg = ehrhart_polynomial(build_polytope(kSeg02));
    CHECK(-seg.eval(Rational(-1)) == Rational(1));
    CHECK(-seg.eval(Rational(-3)) == Rational(5));
    auto tri = ehrhart_polynomial(build_polytope(kTri2));
    CHECK(tri.eval(Rational(-1)) == Rational(0));
    CHECK(count_points(build_polytope(kTri2), 1, true) == 0);
}

TEST_CASE("polar duality of the centered square and segment") {
    auto sq = build_polytope(kSq2);
    auto res = polar_dual(sq);
    CHECK(res.standard_type);
    CHECK(res.in_Cstar);
    REQUIRE(res.dual.has_value());
    std::vector<ZVector> expect = zpts({{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
    CHECK(res.dual->vertices() == expect);
    REQUIRE(res.roundtrip_ok.has_value());
    CHECK(*res.roundtrip_ok);

    auto seg = build_polytope(kSegPm1);
    auto sres = polar_dual(seg);
    CHECK(sres.in_Cstar);
    REQUIRE(sres.dual.has_value());
    CHECK(sres.dual->vertices() == seg.vertices());
    CHECK(*sres.roundtrip_ok);
}

TEST_CASE("polar duality error cases") {
    CHECK_THROWS_AS(polar_dual(build_polytope(kSq01)), NotStandardType);
    // a segment embedded in the plane is not full-dimensional
    CHECK_THROWS_AS(polar_dual(build_polytope(zpts({{-1, 0}, {1, 0}}))), NotFullDimensional);
}

TEST_CASE("cross-polytope dual returns the cube-like square") {
    auto cross = build_polytope(zpts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    auto res = polar_dual(cross);
    CHECK(res.in_Cstar);
    REQUIRE(res.dual.has_value());
    CHECK(res.dual->vertices() == build_polytope(kSq2).vertices());
    CHECK(*res.roundtrip_ok);
}

TEST_CASE("unimodularity of triangulations") {
    Triangulation diag;
    diag.points = kSq01;  // (0,0),(1,0),(0,1),(1,1)
    diag.simplices = {{0, 1, 3}, {0, 2, 3}};
    CHECK(is_unimodular(diag));

    Triangulation big;
    big.points = kTri2;
    big.simplices = {{0, 1, 2}};
    CHECK_FALSE(is_unimodular(big));  // determinant 4

    Triangulation units;
    units.points = zpts({{0}, {1}, {2}});
    units.simplices = {{0, 1}, {1, 2}};
    CHECK(is_unimodular(units));

    CHECK(is_unimodular(cube_staircase()));

    Triangulation wrong;
    wrong.points = kSq01;
    wrong.simplices = {{0, 1}};
    CHECK_THROWS_AS(is_unimodular(wrong), MixedDimensions);
}

TEST_CASE("full triangulation checks: covering and properness") {
    auto seg = build_polytope(kSeg02);
    Triangulation units;
    units.points = zpts({{0}, {1}, {2}});
    units.simplices = {{0, 1}, {1, 2}};
    auto rep = check_triangulation(seg, units);
    CHECK(rep.valid);
    CHECK(rep.covered == 2);

    auto cube = build_polytope(kCube);
    auto crep = check_triangulation(cube, cube_staircase());
    CHECK(crep.valid);
    CHECK(crep.covered == 6);

    // half of the square: volume bookkeeping must fail
    auto sq = build_polytope(kSq01);
    Triangulation half;
    half.points = zpts({{0, 0}, {1, 0}, {1, 1}});
    half.simplices = {{0, 1, 2}};
    auto hrep = check_triangulation(sq, half);
    CHECK_FALSE(hrep.valid);
    CHECK(hrep.points_ok);  // all listed points are used; only the volume fails
    CHECK_FALSE(hrep.covering_ok);
    CHECK(hrep.notes.size() >= 1);

    // overlapping simplices with correct total volume: properness must fail
    auto sq02 = build_polytope(zpts({{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
    Triangulation overlap;
    overlap.points = zpts({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    overlap.simplices = {{0, 1, 2}, {0, 3, 1}};
    auto orep = check_triangulation(sq02, overlap);
    CHECK(orep.covering_ok);
    CHECK_FALSE(orep.proper_ok);
    CHECK_FALSE(orep.valid);
}

TEST_CASE("unused points invalidate a triangulation") {
    auto sq = build_polytope(kSq01);
    Triangulation half;
    half.points = kSq01;
    half.simplices = {{0, 1, 3}};
    auto rep = check_triangulation(sq, half);
    CHECK_FALSE(rep.points_ok);
}

TEST_CASE("boundary triangulation checks") {
    auto sq2 = build_polytope(kSq2);
    auto rep8 = check_triangulation(sq2, sq2_boundary8(), /*boundary=*/true);
    CHECK(rep8.valid);

    auto rep4 = check_triangulation(sq2, sq2_corners4(), /*boundary=*/true);
    CHECK(rep4.valid);  // covers each facet with one lattice-length-2 segment

    // drop one edge: its facet is uncovered
    Triangulation missing = sq2_boundary8();
    missing.simplices.pop_back();
    auto mrep = check_triangulation(sq2, missing, true);
    CHECK_FALSE(mrep.valid);

    // an interior point cannot appear in a boundary triangulation
    Triangulation bad = sq2_corners4();
    bad.points.push_back(zvec({0, 0}));
    bad.simplices.push_back({0, 4});
    auto brep = check_triangulation(sq2, bad, true);
    CHECK_FALSE(brep.points_ok);

    auto segpm = build_polytope(kSegPm1);
    Triangulation ends;
    ends.points = kSegPm1;
    ends.simplices = {{0}, {1}};
    auto srep = check_triangulation(segpm, ends, true);
    CHECK(srep.valid);
}

TEST_CASE("compressed boundary triangulations") {
    auto sq2 = build_polytope(kSq2);
    auto rep = is_compressed(sq2, sq2_boundary8());
    CHECK(rep.definition_check);
    CHECK(rep.h_equals_delta);
    CHECK(rep.delta_geq_h);
    CHECK(rep.h == zvec({1, 6, 1}));
    CHECK(rep.delta == zvec({1, 6, 1}));

    auto corners = is_compressed(sq2, sq2_corners4());
    CHECK_FALSE(corners.definition_check);
    CHECK_FALSE(corners.h_equals_delta);
    CHECK(corners.delta_geq_h);
    CHECK(corners.h == zvec({1, 2, 1}));

    auto segpm = build_polytope(kSegPm1);
    Triangulation ends;
    ends.points = kSegPm1;
    ends.simplices = {{0}, {1}};
    auto srep = is_compressed(segpm, ends);
    CHECK(srep.definition_check);
    CHECK(srep.h_equals_delta);
    CHECK(srep.h == zvec({1, 1}));
}

TEST_CASE("is_compressed rejects unsuitable inputs") {
    auto sq01 = build_polytope(kSq01);
    Triangulation t;
    t.points = kSq01;
    t.simplices = {{0, 1}, {1, 3}, {3, 2}, {2, 0}};
    CHECK_THROWS_AS(is_compressed(sq01, t), NotInCstar);

    auto sq2 = build_polytope(kSq2);
    Triangulation broken = sq2_boundary8();
    broken.simplices.pop_back();
    CHECK_THROWS_AS(is_compressed(sq2, broken), NotBoundaryTriangulation);
}

TEST_CASE("h* equals h for unimodular covering triangulations") {
    auto seg = build_polytope(kSeg02);
    Triangulation units;
    units.points = zpts({{0}, {1}, {2}});
    units.simplices = {{0, 1}, {1, 2}};
    auto rep = verify_hstar_eq_h(seg, units);
    CHECK(rep.pass);
    CHECK(rep.hstar_unimodal);
    CHECK(rep.hstar == zvec({1, 1, 0}));  // padded to the h-vector's length

    auto sq01 = build_polytope(kSq01);
    Triangulation diag;
    diag.points = kSq01;
    diag.simplices = {{0, 1, 3}, {0, 2, 3}};
    auto drep = verify_hstar_eq_h(sq01, diag);
    CHECK(drep.pass);
    CHECK(drep.hstar == zvec({1, 1, 0, 0}));

    auto cube = build_polytope(kCube);
    auto crep = verify_hstar_eq_h(cube, cube_staircase());
    CHECK(crep.pass);
    CHECK(crep.hstar_unimodal);
    CHECK(crep.hstar == zvec({1, 4, 1, 0, 0}));

    auto tri2 = build_polytope(kTri2);
    Triangulation one;
    one.points = kTri2;
    one.simplices = {{0, 1, 2}};
    CHECK_THROWS_AS(verify_hstar_eq_h(tri2, one), NotUnimodular);
}

TEST_CASE("random planar point sets build consistent polytopes") {
    std::mt19937 rng(321321);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> npts(3, 6);
    int built = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::set<ZVector> pts;
        int want = npts(rng);
        while (static_cast<int>(pts.size()) < want)
            pts.insert(zvec({coord(rng), coord(rng)}));
        std::vector<ZVector> list(pts.begin(), pts.end());
        auto p = build_polytope(list);
        ++built;
        // every input point passes the closed facet tests
        for (const auto& q : list) CHECK(p.contains_reduced(p.reduce(q)));
        // vertices + pruned = inputs
        CHECK(static_cast<int>(p.vertices().size()) + p.pruned_input_points() ==
              static_cast<int>(list.size()));
        Integer s = 0;
        for (const auto& d : delta_vector(p)) s += d;
        CHECK(s == normalized_volume(p));
        CHECK(verify_reciprocity(p, 3).pass);
    }
    CHECK(built == 40);
}
