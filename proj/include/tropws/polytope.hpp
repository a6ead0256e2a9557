#pragma once

#include "tropws/cycle.hpp"

namespace trop {

// A lattice polytope stored by its true vertex set (lex-sorted).
struct LatticePolytope {
    int n = 0;
    std::vector<IVec> vertices;
    bool empty() const { return vertices.empty(); }
};

// Convex hull: filters the points down to the vertex set.
LatticePolytope make_polytope(int n, const std::vector<IVec>& points);

// One face of a polytope with its exterior normal cone under the max
// convention h_P(u) = max_v <u, v>.
struct FaceData {
    std::vector<IVec> face_vertices;
    int face_dim = 0;
    Cone normal_cone;
};

// Every face (vertices up to the polytope itself) with its normal cone;
// the normal cones form the complete normal fan.
std::vector<FaceData> face_normal_data(const LatticePolytope& P);

// n! times the Euclidean volume, via the pulling triangulation from the
// lex-smallest vertex. Zero for dimension-deficient polytopes.
Int lattice_volume(const LatticePolytope& P);

// Codimension-1 skeleton of the normal fan, each cone dual to an edge e
// weighted by the lattice length of e.
TropicalCycle trop_of_polytope(const LatticePolytope& P);

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);

// membership in the convex hull (homogenization cone test)
bool polytope_contains(const std::vector<IVec>& verts, const IVec& point);

// affine dimension of a point set
int affine_dim(const std::vector<IVec>& pts);

}  // namespace trop
