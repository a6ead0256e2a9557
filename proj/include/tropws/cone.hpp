#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropws/lattice.hpp"

namespace trop {

// A rational polyhedral cone in canonical form. rays are the primitive
// extreme rays, reduced to canonical representatives modulo the lineality
// space and sorted; lin is the HNF basis of the saturated lineality
// lattice. ineqs/eqs is the matching irredundant H-representation
// (<a,x> >= 0 facets, <e,x> = 0 equations).
struct Cone {
    int n = 0;
    std::vector<IVec> rays;
    std::vector<IVec> lin;
    std::vector<IVec> ineqs;
    std::vector<IVec> eqs;
    int dim = 0;

    bool operator==(const Cone& o) const {
        return n == o.n && rays == o.rays && lin == o.lin;
    }
    std::string key() const;
    bool is_origin() const { return dim == 0; }
    bool is_full() const { return dim == n; }
    bool pointed() const { return lin.empty(); }
};

// Canonical cone from arbitrary generators (double-description round trip).
Cone make_cone(int n, const std::vector<IVec>& ray_gens,
               const std::vector<IVec>& lin_gens);
Cone cone_from_hrep(int n, const std::vector<IVec>& ineqs,
                    const std::vector<IVec>& eqs);
Cone full_space(int n);
Cone origin_cone(int n);
Cone ray_cone(const IVec& generator);

bool cone_contains(const Cone& C, const IVec& x);
bool cone_contains_cone(const Cone& C, const Cone& D);
bool in_relative_interior(const Cone& C, const IVec& x);

Cone intersect_cones(const Cone& C, const Cone& D);
// conical hull of the union
Cone cone_sum(const Cone& A, const Cone& B);
Cone cone_neg(const Cone& A);

// facets (faces of dimension dim-1)
std::vector<Cone> cone_facets(const Cone& C);
// all faces including C itself and the minimal face
std::vector<Cone> face_closure_of(const Cone& C);
bool is_face_of(const Cone& F, const Cone& C);

// image under an r x n integer matrix
Cone cone_image(const IMat& M, const Cone& C);
// preimage {x : M x in C} for M r x n, C in R^r
Cone cone_preimage(const IMat& M, const Cone& C);

// both closed halves C cap {h >= 0}, C cap {h <= 0}
std::pair<Cone, Cone> split_cone(const Cone& C, const IVec& h);

// HNF basis of the saturated lattice of the linear span
IMat span_lattice(const Cone& C);

// Light single-pass double description, for callers that need only one side
// of the representation. Outputs are canonical (sorted primitive extreme
// rays, HNF lineality basis).
struct VRepLite {
    std::vector<IVec> rays;
    std::vector<IVec> lin;
};
VRepLite vrep_of_hrep(int n, const std::vector<IVec>& ineqs,
                      const std::vector<IVec>& eqs);
struct HRepLite {
    std::vector<IVec> ineqs;
    std::vector<IVec> eqs;
    int dim = 0;
};
HRepLite hrep_of_gens(int n, const std::vector<IVec>& rays,
                      const std::vector<IVec>& lin);

bool hrep_contains(const HRepLite& h, const IVec& x);
bool hrep_interior(const HRepLite& h, int n, const IVec& x);

}  // namespace trop
