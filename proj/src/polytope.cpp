#include "tropws/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropws/parallel.hpp"

namespace trop {

namespace {

// exterior normal cone of candidate point v within the point set
Cone normal_cone_at(int n, const std::vector<IVec>& pts, const IVec& v) {
    std::vector<IVec> ineqs;
    for (const IVec& w : pts) {
        IVec d = sub(v, w);
        if (!is_zero(d)) ineqs.push_back(d);
    }
    return cone_from_hrep(n, ineqs, {});
}

}  // namespace

int affine_dim(const std::vector<IVec>& pts) {
    if (pts.empty()) return -1;
    std::vector<IVec> dirs;
    for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
    if (dirs.empty()) return 0;
    return rank_of_rows(dirs, int(pts[0].size()));
}

LatticePolytope make_polytope(int n, const std::vector<IVec>& points) {
    std::set<std::string> seen;
    std::vector<IVec> pts;
    for (const IVec& p : points) {
        if (int(p.size()) != n) throw input_error("make_polytope: bad point length");
        if (seen.insert(vec_str(p)).second) pts.push_back(p);
    }
    std::vector<char> keep(pts.size(), 0);
    parallel_for(pts.size(), [&](size_t i) {
        keep[i] = normal_cone_at(n, pts, pts[i]).dim == n ? 1 : 0;
    });
    LatticePolytope P;
    P.n = n;
    for (size_t i = 0; i < pts.size(); ++i)
        if (keep[i]) P.vertices.push_back(pts[i]);
    std::sort(P.vertices.begin(), P.vertices.end(),
              [](const IVec& a, const IVec& b) { return lex_cmp(a, b) < 0; });
    return P;
}

std::vector<FaceData> face_normal_data(const LatticePolytope& P) {
    if (P.empty()) throw input_error("face_normal_data: empty polytope");
    int n = P.n;
    std::vector<Cone> vcones(P.vertices.size());
    parallel_for(P.vertices.size(), [&](size_t i) {
        vcones[i] = normal_cone_at(n, P.vertices, P.vertices[i]);
    });
    std::map<std::string, Cone> fan_cones;
    for (const Cone& c : vcones)
        for (Cone& f : face_closure_of(c)) fan_cones.emplace(f.key(), std::move(f));
    std::vector<FaceData> out;
    for (auto& [key, tau] : fan_cones) {
        FaceData fd;
        fd.normal_cone = tau;
        for (size_t i = 0; i < P.vertices.size(); ++i)
            if (cone_contains_cone(vcones[i], tau))
                fd.face_vertices.push_back(P.vertices[i]);
        fd.face_dim = affine_dim(fd.face_vertices);
        out.push_back(std::move(fd));
    }
    return out;
}

namespace {

// pulling triangulation from the lex-smallest vertex; returns simplices as
// vertex tuples of size (affine dim + 1)
std::vector<std::vector<IVec>> pulling_triangulation(int n, const std::vector<IVec>& verts) {
    if (verts.size() == 1) return {{verts[0]}};
    int d = affine_dim(verts);
    const IVec& apex = verts[0];  // vertex lists are lex-sorted
    LatticePolytope P;
    P.n = n;
    P.vertices = verts;
    std::vector<std::vector<IVec>> out;
    for (const FaceData& fd : face_normal_data(P)) {
        if (fd.face_dim != d - 1) continue;
        bool has_apex = std::find(fd.face_vertices.begin(), fd.face_vertices.end(),
                                  apex) != fd.face_vertices.end();
        if (has_apex) continue;
        for (auto& simplex : pulling_triangulation(n, fd.face_vertices)) {
            simplex.push_back(apex);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

}  // namespace

Int lattice_volume(const LatticePolytope& P) {
    if (P.empty()) throw input_error("lattice_volume: empty polytope");
    int n = P.n;
    if (affine_dim(P.vertices) < n) return 0;
    Int vol = 0;
    for (const auto& simplex : pulling_triangulation(n, P.vertices)) {
        IMat edges(0, n);
        for (size_t i = 1; i < simplex.size(); ++i)
            edges.append_row(sub(simplex[i], simplex[0]));
        vol += abs(det(edges));
    }
    return vol;
}

TropicalCycle trop_of_polytope(const LatticePolytope& P) {
    if (P.empty()) throw input_error("trop_of_polytope: empty polytope");
    int n = P.n;
    std::vector<WCone> cones;
    for (const FaceData& fd : face_normal_data(P)) {
        if (fd.face_dim != 1) continue;
        // an edge has exactly two vertices; weight is its lattice length
        if (fd.face_vertices.size() != 2)
            throw input_error("trop_of_polytope: edge with extra vertices");
        Int len = content(sub(fd.face_vertices[1], fd.face_vertices[0]));
        cones.push_back({fd.normal_cone, len});
    }
    return make_cycle(n, n - 1, std::move(cones));
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
    if (P.n != Q.n) throw input_error("minkowski_sum: ambient rank mismatch");
    std::vector<IVec> sums;
    for (const IVec& p : P.vertices)
        for (const IVec& q : Q.vertices) sums.push_back(add(p, q));
    return make_polytope(P.n, sums);
}

bool polytope_contains(const std::vector<IVec>& verts, const IVec& point) {
    if (verts.empty()) return false;
    int n = int(verts[0].size());
    std::vector<IVec> gens;
    for (const IVec& v : verts) {
        IVec g = v;
        g.push_back(1);
        gens.push_back(g);
    }
    Cone c = make_cone(n + 1, gens, {});
    IVec x = point;
    x.push_back(1);
    return cone_contains(c, x);
}

}  // namespace trop
