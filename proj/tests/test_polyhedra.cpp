#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "test_util.hpp"
#include "tropws/polytope.hpp"

using namespace trop;
using troptest::Rng;

namespace {

IVec v2(long a, long b) { return IVec{a, b}; }
IVec v3(long a, long b, long c) { return IVec{a, b, c}; }

LatticePolytope simplex(int n, long d) {
    std::vector<IVec> pts{IVec(n)};
    for (int i = 0; i < n; ++i) {
        IVec e(n);
        e[i] = d;
        pts.push_back(e);
    }
    return make_polytope(n, pts);
}

// independent planar area oracle: 2 * area by the shoelace formula over the
// hull boundary walked with exact orientation tests
Int shoelace_twice(const LatticePolytope& P) {
    std::vector<IVec> vs = P.vertices;
    if (vs.size() < 3) return 0;
    // sort counterclockwise around the first (lex-min) vertex
    IVec base = vs.front();
    std::sort(vs.begin() + 1, vs.end(), [&](const IVec& a, const IVec& b) {
        IVec da = sub(a, base), db = sub(b, base);
        return da[0] * db[1] - da[1] * db[0] > 0;
    });
    Int twice = 0;
    for (size_t i = 0; i < vs.size(); ++i) {
        const IVec& a = vs[i];
        const IVec& b = vs[(i + 1) % vs.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice);
}

std::set<std::string> cone_keys(const std::vector<Cone>& cs) {
    std::set<std::string> k;
    for (const Cone& c : cs) k.insert(c.key());
    return k;
}

LatticePolytope random_polytope(Rng& rng, int n, int npts, long lo, long hi) {
    std::vector<IVec> pts;
    for (int i = 0; i < npts; ++i) pts.push_back(troptest::random_vec(rng, n, lo, hi));
    return make_polytope(n, pts);
}

}  // namespace

TEST_CASE("cone canonical form and membership") {
    Cone c = make_cone(2, {v2(1, 0), v2(1, 1), v2(0, 1)}, {});
    CHECK(c.rays.size() == 2);  // (1,1) is redundant
    CHECK(c.dim == 2);
    CHECK(cone_contains(c, v2(3, 5)));
    CHECK(!cone_contains(c, v2(-1, 0)));
    CHECK(in_relative_interior(c, v2(1, 2)));
    CHECK(!in_relative_interior(c, v2(1, 0)));

    Cone half = make_cone(2, {v2(1, 0), v2(-1, 0), v2(0, 1)}, {});
    CHECK(half.lin.size() == 1);  // +-e1 fold into lineality
    CHECK(half.rays.size() == 1);

    CHECK(full_space(3).dim == 3);
    CHECK(origin_cone(3).dim == 0);
    CHECK(intersect_cones(make_cone(2, {v2(1, 0), v2(0, 1)}, {}),
                          make_cone(2, {v2(1, 1), v2(-1, 1)}, {}))
              .key() == make_cone(2, {v2(1, 1), v2(0, 1)}, {}).key());
}

TEST_CASE("cone faces and images") {
    Cone q = make_cone(3, {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}, {});
    auto faces = face_closure_of(q);
    CHECK(faces.size() == 8);  // 1 + 3 + 3 + 1
    CHECK(cone_facets(q).size() == 3);

    IMat drop_z({{1, 0, 0}, {0, 1, 0}});
    Cone img = cone_image(drop_z, q);
    CHECK(img.key() == make_cone(2, {v2(1, 0), v2(0, 1)}, {}).key());
    Cone pre = cone_preimage(drop_z, make_cone(2, {v2(1, 0)}, {}));
    CHECK(pre.dim == 2);
    CHECK(pre.lin.size() == 1);
    CHECK(cone_contains(pre, v3(1, 0, 7)));
}

TEST_CASE("common refinement on the stated instances") {
    // a fan with itself
    Fan f;
    f.n = 2;
    f.cones = {make_cone(2, {v2(1, 0), v2(0, 1)}, {}),
               make_cone(2, {v2(0, 1), v2(-1, -1)}, {}),
               make_cone(2, {v2(-1, -1), v2(1, 0)}, {})};
    Fan r = common_refinement(f, f);
    CHECK(cone_keys(face_closure(r)) == cone_keys(face_closure(f)));
    // idempotent as a subdivision
    Fan rr = common_refinement(r, r);
    CHECK(cone_keys(face_closure(rr)) == cone_keys(face_closure(r)));

    // complete 1-d fan with itself
    Fan line;
    line.n = 1;
    line.cones = {make_cone(1, {{Int(1)}}, {}), make_cone(1, {{Int(-1)}}, {})};
    Fan r1 = common_refinement(line, line);
    CHECK(is_fan(r1));
    CHECK(is_complete(r1));

    // triangle fan against the axes fan
    Fan axes;
    axes.n = 2;
    axes.cones = {make_cone(2, {v2(1, 0), v2(0, 1)}, {}),
                  make_cone(2, {v2(0, 1), v2(-1, 0)}, {}),
                  make_cone(2, {v2(-1, 0), v2(0, -1)}, {}),
                  make_cone(2, {v2(0, -1), v2(1, 0)}, {})};
    Fan ref = common_refinement(f, axes);
    CHECK(is_fan(ref));
    CHECK(is_complete(ref));
    CHECK(refines(ref, f));
    CHECK(refines(ref, axes));
    std::set<std::string> rays;
    for (const Cone& c : face_closure(ref))
        if (c.dim == 1) rays.insert(vec_str(c.rays[0]));
    CHECK(rays == std::set<std::string>{"1 0", "0 1", "-1 0", "0 -1", "-1 -1"});
    int full = 0;
    for (const Cone& c : ref.cones)
        if (c.dim == 2) ++full;
    CHECK(full == 5);
}

TEST_CASE("face normal data of the unit triangle") {
    LatticePolytope d2 = simplex(2, 1);
    auto faces = face_normal_data(d2);
    CHECK(faces.size() == 7);  // 3 vertices + 3 edges + the triangle
    bool edge_found = false, vertex_found = false, whole_found = false;
    for (const FaceData& fd : faces) {
        if (fd.face_dim == 1 && fd.face_vertices == std::vector<IVec>{v2(0, 1), v2(1, 0)}) {
            edge_found = true;
            CHECK(fd.normal_cone.key() == make_cone(2, {v2(1, 1)}, {}).key());
        }
        if (fd.face_dim == 0 && fd.face_vertices == std::vector<IVec>{v2(0, 0)}) {
            vertex_found = true;
            CHECK(fd.normal_cone.key() ==
                  make_cone(2, {v2(-1, 0), v2(0, -1)}, {}).key());
        }
        if (fd.face_dim == 2) {
            whole_found = true;
            CHECK(fd.normal_cone.dim == 0);
        }
    }
    CHECK(edge_found);
    CHECK(vertex_found);
    CHECK(whole_found);
}

TEST_CASE("low-dimensional polytopes carry lineality in the normal fan") {
    LatticePolytope seg = make_polytope(2, {v2(0, 0), v2(1, 0)});
    for (const FaceData& fd : face_normal_data(seg)) {
        if (fd.face_dim == 1) {
            CHECK(fd.normal_cone.dim == 1);
            CHECK(fd.normal_cone.lin.size() == 1);
        }
    }
}

TEST_CASE("vertex normal cones tile space") {
    Rng rng(21);
    for (int t = 0; t < 12; ++t) {
        int n = int(troptest::rnd(rng, 2, 3));
        LatticePolytope P = random_polytope(rng, n, int(troptest::rnd(rng, 4, 8)), -4, 4);
        if (affine_dim(P.vertices) < n) continue;
        std::map<std::string, int> facet_count;
        for (const FaceData& fd : face_normal_data(P)) {
            if (fd.face_dim != 0) continue;
            for (const Cone& g : cone_facets(fd.normal_cone)) ++facet_count[g.key()];
        }
        for (const auto& [k, c] : facet_count) CHECK(c == 2);
    }
}

TEST_CASE("lattice volume on the stated instances") {
    for (int n = 1; n <= 4; ++n) CHECK(lattice_volume(simplex(n, 1)) == 1);
    for (long d = 1; d <= 4; ++d) CHECK(lattice_volume(simplex(2, d)) == d * d);
    LatticePolytope square = make_polytope(2, {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
    CHECK(lattice_volume(square) == 2);
    // dimension-deficient
    CHECK(lattice_volume(make_polytope(2, {v2(0, 0), v2(3, 0)})) == 0);
}

TEST_CASE("lattice volume agrees with the shoelace oracle in the plane") {
    Rng rng(22);
    for (int t = 0; t < 40; ++t) {
        LatticePolytope P = random_polytope(rng, 2, int(troptest::rnd(rng, 3, 9)), -5, 5);
        CHECK(lattice_volume(P) == shoelace_twice(P));
    }
}

TEST_CASE("lattice volume is unimodular- and translation-invariant") {
    Rng rng(23);
    for (int t = 0; t < 15; ++t) {
        int n = int(troptest::rnd(rng, 2, 3));
        LatticePolytope P = random_polytope(rng, n, int(troptest::rnd(rng, 4, 7)), -3, 3);
        IMat u = troptest::random_unimodular(rng, n);
        IVec shift = troptest::random_vec(rng, n, -5, 5);
        std::vector<IVec> moved;
        for (const IVec& v : P.vertices) moved.push_back(add(u.apply(v), shift));
        CHECK(lattice_volume(make_polytope(n, moved)) == lattice_volume(P));
    }
}

TEST_CASE("tropical fan of a polytope on the stated instances") {
    // a segment in R^1: the origin with weight 1
    LatticePolytope seg = make_polytope(1, {IVec{Int(0)}, IVec{Int(1)}});
    TropicalCycle c = trop_of_polytope(seg);
    CHECK(c.k == 0);
    CHECK(c.cones.size() == 1);
    CHECK(c.cones[0].weight == 1);
    CHECK(c.cones[0].cone.dim == 0);

    // the tropical line
    TropicalCycle line = trop_of_polytope(simplex(2, 1));
    CHECK(line.k == 1);
    CHECK(line.cones.size() == 3);
    std::set<std::string> rays;
    for (const WCone& wc : line.cones) {
        CHECK(wc.weight == 1);
        rays.insert(vec_str(wc.cone.rays[0]));
    }
    CHECK(rays == std::set<std::string>{"-1 0", "0 -1", "1 1"});

    // a point gives the zero cycle
    CHECK(trop_of_polytope(make_polytope(2, {v2(3, 4)})).is_zero());
}

TEST_CASE("tropical fan of a polytope is balanced and translation-invariant") {
    Rng rng(24);
    for (int t = 0; t < 12; ++t) {
        int n = int(troptest::rnd(rng, 2, 4));
        LatticePolytope P = random_polytope(rng, n, int(troptest::rnd(rng, 3, 6)), -5, 5);
        TropicalCycle c = trop_of_polytope(P);
        CHECK(is_balanced(c).balanced);
        IVec shift = troptest::random_vec(rng, n, -4, 4);
        std::vector<IVec> moved;
        for (const IVec& v : P.vertices) moved.push_back(add(v, shift));
        CHECK(cycle_equal(c, trop_of_polytope(make_polytope(n, moved))));
    }
}

TEST_CASE("minkowski sum on the stated instances") {
    LatticePolytope d2 = simplex(2, 1);
    LatticePolytope pt = make_polytope(2, {v2(0, 0)});
    CHECK(minkowski_sum(d2, pt).vertices == d2.vertices);
    LatticePolytope sq = minkowski_sum(make_polytope(2, {v2(0, 0), v2(1, 0)}),
                                       make_polytope(2, {v2(0, 0), v2(0, 1)}));
    CHECK(sq.vertices ==
          make_polytope(2, {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)}).vertices);
    CHECK(minkowski_sum(d2, d2).vertices == simplex(2, 2).vertices);
}

TEST_CASE("polytope membership via homogenization") {
    LatticePolytope d2 = simplex(2, 2);
    CHECK(polytope_contains(d2.vertices, v2(1, 1)));
    CHECK(polytope_contains(d2.vertices, v2(0, 0)));
    CHECK(!polytope_contains(d2.vertices, v2(2, 2)));
}

TEST_CASE("fan validity and completeness checks") {
    Fan good;
    good.n = 2;
    good.cones = {make_cone(2, {v2(1, 0), v2(0, 1)}, {}),
                  make_cone(2, {v2(0, 1), v2(-1, 0)}, {}),
                  make_cone(2, {v2(-1, 0), v2(0, -1)}, {}),
                  make_cone(2, {v2(0, -1), v2(1, 0)}, {})};
    CHECK(is_fan(good));
    CHECK(is_complete(good));
    CHECK(is_smooth(good));

    Fan bad;
    bad.n = 2;
    bad.cones = {make_cone(2, {v2(1, 0), v2(0, 1)}, {}),
                 make_cone(2, {v2(1, 1), v2(-1, 0)}, {})};
    CHECK(!is_fan(bad));

    Fan halfmissing = good;
    halfmissing.cones.pop_back();
    CHECK(!is_complete(halfmissing));

    Fan notsmooth;
    notsmooth.n = 2;
    notsmooth.cones = {make_cone(2, {v2(1, 0), v2(1, 2)}, {})};
    CHECK(!is_smooth(notsmooth));
}
