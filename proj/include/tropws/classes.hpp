#pragma once

#include <map>
#include <optional>

#include "tropws/cycle.hpp"
#include "tropws/polytope.hpp"
#include "tropws/projection.hpp"

namespace trop {

// Graded affine characteristic class: piece at codimension j is a cycle of
// dimension n-j; absent pieces are zero.
struct TropicalClass {
    int n = 0;
    std::optional<int> dim_U;
    std::map<int, TropicalCycle> pieces;

    TropicalCycle piece(int j) const;
    void set_piece(int j, TropicalCycle c);
    bool is_zero() const;
};

// The same data in the tropical grading: piece at dimension d is the fan
// Trop_d U of dimension d.
struct TropGrading {
    int n = 0;
    int dim_U = 0;
    std::map<int, TropicalCycle> pieces;

    TropicalCycle piece(int d) const;
    void set_piece(int d, TropicalCycle c);
};

struct MonomialSupport {
    int n = 0;
    std::vector<IVec> points;  // distinct
};

TropicalClass torus_class(int n);

TropicalClass class_mul(const TropicalClass& a, const TropicalClass& b);
TropicalClass class_cross(const TropicalClass& a, const TropicalClass& b);
TropicalClass class_pushforward(const ProjectionMap& p, const TropicalClass& a);

// The sign bridge between the affine class and the tropical grading;
// an involution (the inverse applies the same signs).
TropGrading grading_convert(const TropicalClass& a);
TropicalClass grading_convert_back(const TropGrading& g);

// Classes of generic hypersurfaces {g = 0} with Newton polytope A, and of
// complete intersections of k such; alternating Khovanskii expansion.
TropicalClass hypersurface_class(const LatticePolytope& A, int n);
TropicalClass complete_intersection_class(const LatticePolytope& A, int k, int n);

Int euler_characteristic(const TropicalClass& a);

// pushforward of the codim-k piece along m of rank k+1
TropicalCycle euler_discriminant_fan(const TropicalClass& a, const ProjectionMap& m);

// <U>_k = <S>_k + (-1)^k p_* Trop_{n-k} U', p dropping the last coordinate
TropicalClass singular_combine(const TropicalClass& s_class,
                               const TropGrading& trop_primes, int dim_U);

// Trop grading of U cap gV via the graded product
TropGrading intersection_class(const TropicalClass& a, const TropicalClass& b);

int invariance_rank(const TropGrading& g);

struct AdmissibilityViolation {
    std::vector<IVec> face_vertices;
    IVec witness_ray;
};
struct AdmissibilityReport {
    bool admissible = true;
    std::vector<AdmissibilityViolation> violations;
};
AdmissibilityReport admissibility_check(const MonomialSupport& A, const TropGrading& g);

struct inadmissible_error : input_error {
    AdmissibilityReport report;
    explicit inadmissible_error(AdmissibilityReport r)
        : input_error("critical_count: support fails the face condition"),
          report(std::move(r)) {}
};

// Critical point count sum_k (Trop A)^k . Trop_k U; throws
// inadmissible_error (with witnesses) when the face condition fails.
Int critical_count(const MonomialSupport& A, const TropGrading& g);

// Fulton-Sturmfels representative of c_k^SM(U)
TropicalCycle csm_fan(const TropGrading& g, int k);

}  // namespace trop
