#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropws/classes.hpp"

using namespace trop;
using troptest::Rng;

namespace {

IVec v2(long a, long b) { return IVec{a, b}; }

LatticePolytope simplex(int n, long d) {
    std::vector<IVec> pts{IVec(n)};
    for (int i = 0; i < n; ++i) {
        IVec e(n);
        e[i] = d;
        pts.push_back(e);
    }
    return make_polytope(n, pts);
}

LatticePolytope random_polytope(Rng& rng, int n, int npts, long lo, long hi) {
    std::vector<IVec> pts;
    for (int i = 0; i < npts; ++i) pts.push_back(troptest::random_vec(rng, n, lo, hi));
    return make_polytope(n, pts);
}

TropicalClass line_class() { return hypersurface_class(simplex(2, 1), 2); }

bool class_equal(const TropicalClass& a, const TropicalClass& b) {
    if (a.n != b.n) return false;
    for (int j = 0; j <= a.n; ++j)
        if (!cycle_equal(a.piece(j), b.piece(j))) return false;
    return true;
}

TropicalCycle point_cycle(int n, const Int& w) {
    return make_cycle(n, 0, {{origin_cone(n), w}});
}

}  // namespace

TEST_CASE("hypersurface classes on the stated instances") {
    // n = 1, A = [0, d]: d points in the torus
    for (long d = 1; d <= 3; ++d) {
        TropicalClass cls = hypersurface_class(
            make_polytope(1, {IVec{Int(0)}, IVec{Int(d)}}), 1);
        CHECK(euler_characteristic(cls) == d);
        CHECK(cls.dim_U == 0);
    }
    // n = 2, A = d*Delta2: e = -d^2
    for (long d = 1; d <= 3; ++d)
        CHECK(euler_characteristic(hypersurface_class(simplex(2, d), 2)) == -d * d);
    // the line {x+y+1=0}: pieces (0, T, -T^2)
    TropicalClass cls = line_class();
    CHECK(cls.piece(0).is_zero());
    CHECK(cycle_equal(cls.piece(1), trop_of_polytope(simplex(2, 1))));
    CHECK(cycle_equal(cls.piece(2), point_cycle(2, -1)));
    CHECK(euler_characteristic(cls) == -1);
}

TEST_CASE("hypersurface euler characteristic equals signed volume") {
    Rng rng(41);
    for (int t = 0; t < 8; ++t) {
        int n = int(troptest::rnd(rng, 1, 3));
        LatticePolytope A = random_polytope(rng, n, int(troptest::rnd(rng, 3, 6)), -3, 3);
        if (lattice_volume(A) == 0) continue;
        TropicalClass cls = hypersurface_class(A, n);
        Int expect = lattice_volume(A);
        if (n % 2 == 0) expect = -expect;
        CHECK(euler_characteristic(cls) == expect);
    }
}

TEST_CASE("complete intersections in ambient k+1") {
    // e{g = 0} = -k (Trop A)^{k+1}
    Rng rng(42);
    for (int k = 1; k <= 3; ++k) {
        int n = k + 1;
        LatticePolytope A = simplex(n, int(troptest::rnd(rng, 1, 2)));
        TropicalClass cls = complete_intersection_class(A, k, n);
        TropicalCycle T = trop_of_polytope(A);
        TropicalCycle power = T;
        for (int j = 2; j <= n; ++j) power = stable_intersection(power, T);
        CHECK(euler_characteristic(cls) == -k * power.total_weight());
    }
}

TEST_CASE("class multiplication: unit, zero, and the two pipelines") {
    TropicalClass cls = line_class();
    CHECK(class_equal(class_mul(cls, torus_class(2)), cls));
    TropicalClass zero;
    zero.n = 2;
    CHECK(class_mul(cls, zero).is_zero());
    // product of two hypersurface classes = the codim-2 complete intersection
    TropicalClass prod = class_mul(hypersurface_class(simplex(2, 1), 2),
                                   hypersurface_class(simplex(2, 1), 2));
    TropicalClass ci = complete_intersection_class(simplex(2, 1), 2, 2);
    CHECK(cycle_equal(prod.piece(2), ci.piece(2)));
}

TEST_CASE("class multiplication ring laws on random classes") {
    Rng rng(43);
    for (int t = 0; t < 3; ++t) {
        int n = 2;
        TropicalClass a = hypersurface_class(random_polytope(rng, n, 4, -2, 2), n);
        TropicalClass b = hypersurface_class(random_polytope(rng, n, 4, -2, 2), n);
        CHECK(class_equal(class_mul(a, b), class_mul(b, a)));
        CHECK(class_equal(class_mul(a, torus_class(n)), a));
    }
}

TEST_CASE("class cross products") {
    CHECK(class_equal(class_cross(torus_class(2), torus_class(1)), torus_class(3)));
    TropicalClass cls = line_class();
    TropicalClass crossed = class_cross(cls, torus_class(1));
    CHECK(crossed.n == 3);
    CHECK(crossed.dim_U == 2);
    for (const auto& [j, piece] : crossed.pieces) {
        IMat lin = lineality_space(piece);
        bool has_e3 = false;
        for (int i = 0; i < lin.rows(); ++i)
            if (lin.row(i) == IVec{0, 0, 1}) has_e3 = true;
        CHECK(has_e3);
    }
    // a rank-0 torus class is the unit for the cross product
    TropicalClass unit0 = torus_class(0);
    CHECK(class_equal(class_cross(cls, unit0), cls));
}

TEST_CASE("class pushforward on the stated instances") {
    TropicalClass cls = line_class();
    ProjectionMap id = make_projection(IMat::identity(2));
    CHECK(class_equal(class_pushforward(id, cls), cls));

    ProjectionMap px = make_projection(IMat({{1, 0}}));
    TropicalClass img = class_pushforward(px, cls);
    CHECK(cycle_equal(img.piece(0), torus_cycle(1)));
    CHECK(cycle_equal(img.piece(1), point_cycle(1, -1)));

    // the full torus class dies under any strict projection
    CHECK(class_pushforward(px, torus_class(2)).is_zero());

    // composition law
    Rng rng(44);
    TropicalClass a = hypersurface_class(random_polytope(rng, 3, 4, -2, 2), 3);
    ProjectionMap q32 = make_projection(IMat({{1, 0, 0}, {0, 1, 0}}));
    ProjectionMap q21 = make_projection(IMat({{0, 1}}));
    ProjectionMap q31 = make_projection(q21.matrix.mul(q32.matrix));
    CHECK(class_equal(class_pushforward(q21, class_pushforward(q32, a)),
                      class_pushforward(q31, a)));
}

TEST_CASE("grading conversion is a sign involution") {
    TropicalClass cls = line_class();
    TropGrading g = grading_convert(cls);
    CHECK(cycle_equal(g.piece(1), cls.piece(1)));  // top piece unchanged
    CHECK(cycle_equal(g.piece(0), point_cycle(2, 1)));  // positive weight
    CHECK(class_equal(grading_convert_back(g), cls));

    Rng rng(45);
    for (int t = 0; t < 4; ++t) {
        int n = int(troptest::rnd(rng, 1, 3));
        LatticePolytope A = random_polytope(rng, n, 4, -2, 2);
        TropicalClass h = hypersurface_class(A, n);
        CHECK(class_equal(grading_convert_back(grading_convert(h)), h));
        // all graded pieces of a hypersurface have positive weights: T^{n-d}
        TropGrading gh = grading_convert(h);
        TropicalCycle T = trop_of_polytope(A);
        TropicalCycle power = torus_cycle(n);
        for (int d = n - 1; d >= 0; --d) {
            power = stable_intersection(power, T);
            CHECK(cycle_equal(gh.piece(d), power));
            for (const WCone& wc : gh.piece(d).cones) CHECK(wc.weight > 0);
        }
    }
}

TEST_CASE("euler discriminant fans") {
    TropicalClass cls = line_class();
    ProjectionMap id = make_projection(IMat::identity(2));
    CHECK(cycle_equal(euler_discriminant_fan(cls, id), cls.piece(1)));

    // U x C* under the coordinate projection: every fiber is C*, so the
    // Euler discriminant is empty and the pushforward collapses to zero
    TropicalClass crossed = class_cross(cls, torus_class(1));
    ProjectionMap drop_z = make_projection(IMat({{1, 0, 0}, {0, 1, 0}}));
    CHECK(euler_discriminant_fan(crossed, drop_z).is_zero());

    TropicalClass no_piece = torus_class(2);
    CHECK(euler_discriminant_fan(no_piece, make_projection(IMat({{1, 0}}))).is_zero());
}

TEST_CASE("singular combine") {
    // a smooth hypersurface, fed through the graph lift with f = 1
    Rng rng(46);
    for (int t = 0; t < 3; ++t) {
        int n = 2;
        LatticePolytope A = random_polytope(rng, n, 4, -2, 2);
        TropicalClass known = hypersurface_class(A, n);
        if (known.is_zero()) continue;
        TropGrading g = grading_convert(known);
        TropGrading lifted;
        lifted.n = n + 1;
        lifted.dim_U = g.dim_U;
        TropicalCycle origin1 = make_cycle(1, 0, {{origin_cone(1), 1}});
        for (const auto& [d, piece] : g.pieces)
            lifted.set_piece(d, cross_product(piece, origin1));
        TropicalClass s_zero;
        s_zero.n = n;
        TropicalClass out = singular_combine(s_zero, lifted, *known.dim_U);
        CHECK(class_equal(out, known));
    }
    // all-zero grading returns the singular part unchanged
    TropicalClass s = line_class();
    TropGrading zero_g;
    zero_g.n = 3;
    zero_g.dim_U = 1;
    CHECK(class_equal(singular_combine(s, zero_g, 1), s));
}

TEST_CASE("intersection classes") {
    TropicalClass u = line_class(), v = line_class();
    TropGrading g = intersection_class(u, v);
    CHECK(g.dim_U == 0);
    CHECK(g.piece(0).total_weight() == 1);  // two generic lines meet once

    Rng rng(47);
    for (int t = 0; t < 3; ++t) {
        long d = troptest::rnd(rng, 1, 3), e = troptest::rnd(rng, 1, 3);
        TropGrading gd = intersection_class(hypersurface_class(simplex(2, d), 2),
                                            hypersurface_class(simplex(2, e), 2));
        // e(U cap gV) = (-1)^dim * weight of Trop_0 = d*e for curves
        CHECK(gd.piece(0).total_weight() == d * e);
    }
    // the torus class is the unit
    TropGrading gu = intersection_class(u, torus_class(2));
    TropGrading direct = grading_convert(u);
    for (int dd = 0; dd <= 2; ++dd)
        CHECK(cycle_equal(gu.piece(dd), direct.piece(dd)));
}

TEST_CASE("invariance rank") {
    CHECK(invariance_rank(grading_convert(torus_class(3))) == 3);
    CHECK(invariance_rank(grading_convert(hypersurface_class(simplex(2, 1), 2))) == 0);
    TropicalClass crossed = class_cross(hypersurface_class(simplex(2, 1), 2),
                                        torus_class(1));
    CHECK(invariance_rank(grading_convert(crossed)) == 1);
}

TEST_CASE("admissibility on the stated instances") {
    TropGrading line_g = grading_convert(line_class());
    MonomialSupport bad{2, {v2(1, 0), v2(0, 1)}};
    AdmissibilityReport rep = admissibility_check(bad, line_g);
    CHECK(!rep.admissible);
    bool witness_found = false;
    for (const auto& viol : rep.violations)
        if (viol.witness_ray == v2(0, -1) || viol.witness_ray == v2(-1, 0))
            witness_found = true;
    CHECK(witness_found);

    MonomialSupport good{2, {v2(2, 1), v2(1, 2)}};
    CHECK(admissibility_check(good, line_g).admissible);

    MonomialSupport any{2, {v2(1, 0), v2(0, 1), v2(2, 2)}};
    CHECK(admissibility_check(any, grading_convert(torus_class(2))).admissible);
}

TEST_CASE("critical point counts") {
    // Kushnirenko: the torus class counts lattice volume
    Rng rng(48);
    for (int t = 0; t < 5; ++t) {
        int n = int(troptest::rnd(rng, 1, 3));
        LatticePolytope A = random_polytope(rng, n, int(troptest::rnd(rng, 3, 6)), -3, 3);
        if (lattice_volume(A) == 0) continue;
        MonomialSupport ms{n, A.vertices};
        CHECK(critical_count(ms, grading_convert(torus_class(n))) == lattice_volume(A));
    }
    // the hand-verified instance: U = {x+y+1=0}, A = {(2,1),(1,2)}
    TropGrading line_g = grading_convert(line_class());
    CHECK(critical_count(MonomialSupport{2, {v2(2, 1), v2(1, 2)}}, line_g) == 2);
    CHECK_THROWS_AS(critical_count(MonomialSupport{2, {v2(1, 0), v2(0, 1)}}, line_g),
                    inadmissible_error);
    // a single monomial reports the Trop_0 weight
    CHECK(critical_count(MonomialSupport{2, {v2(3, 5)}}, line_g) == 1);
}

TEST_CASE("csm fan representatives") {
    TropGrading line_g = grading_convert(line_class());
    CHECK(cycle_equal(csm_fan(line_g, 1), line_g.piece(1)));
    CHECK(cycle_equal(csm_fan(line_g, 0), point_cycle(2, -1)));
    TropGrading torus_g = grading_convert(torus_class(3));
    CHECK(csm_fan(torus_g, 1).is_zero());
}
