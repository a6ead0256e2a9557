#pragma once

#include "tropws/cycle.hpp"
#include "tropws/fan.hpp"
#include "tropws/genericity.hpp"

namespace trop {

// One column of the ladder over a ray v of the base fan: rays (v, j) for
// j in [a, b].
struct LadderColumn {
    IVec v;  // primitive ray of sigma_prime, length 2
    long a = 0;
    long b = 0;
};

// A weakly semistable toric morphism for the projection (x,y,z) -> (x,y):
// sigma complete smooth in R^3, sigma_prime complete smooth in R^2, rays of
// sigma exactly the poles (0,0,+-1) and the ladder columns.
struct SemistablePair {
    Fan sigma;        // in R^3
    Fan sigma_prime;  // in R^2
    IMat p;           // 2 x 3, drops the last coordinate
    std::vector<LadderColumn> profile;
    Int dilation = 1;
};

struct WssReport {
    bool ok = true;
    std::string witness;
};

// Weak semistability: both fans complete and smooth, the image of every
// cone is a cone of sigma_prime, and p(C cap Z^n) = p(C) cap Z^r.
// Implemented for r <= 2.
WssReport check_weakly_semistable(const Fan& sigma, const Fan& sigma_prime,
                                  const IMat& p);

// Dilate-and-complete construction: smooth complete refinement of the image
// of the 1-skeleton, dilation m = lcm of gcd(x,y) over the rays of S_1, and
// a staircase ladder completion containing d_m(S_1).
SemistablePair build_semistable_3to2(const Fan& S);

// A boundary-curve tropical fan in the ladder: rays u_{i,j-1}, u_{i,j},
// u_{i,j+1} with weights (+w, -2w, +w), poles substituted at the column
// ends with weights (+w, -w, +w).
struct Tripod {
    int col = 0;
    long j = 0;
    Int w = 1;
};

TropicalCycle tripod_cycle(const SemistablePair& pair, const Tripod& t);

struct TripodTerm {
    int col = 0;
    long j = 0;
    Int coeff;
};

struct TripodWitness {
    bool found = false;
    bool is_pole = false;
    IVec ray1, ray2;  // the positive pole ray, or a same-column pair
};

// Finds the positively weighted pole ray or same-column ray pair that every
// nonzero tripod combination must contain.
TripodWitness tripod_positivity_witness(const SemistablePair& pair,
                                        const std::vector<TripodTerm>& combo);

struct IsotopyReport {
    bool pushforwards_equal = false;
    bool immersed = false;
    bool hypotheses_met = false;
    bool conclusion_holds = false;
    bool inconsistent = false;  // hypotheses met but cycles differ
};

IsotopyReport isotopy_report(const TropicalCycle& c_bullet, const TropicalCycle& c_0,
                             const ProjectionMap& p);

bool boundary_decomposition_check(const TropicalCycle& c_bullet,
                                  const TropicalCycle& c_0,
                                  const std::vector<TropicalCycle>& boundary);

}  // namespace trop
