#pragma once

#include "tropws/cone.hpp"
#include "tropws/fan.hpp"

namespace trop {

struct WCone {
    Cone cone;
    Int weight;
};

// A tropical cycle: a weighted pure-dimensional rational fan in R^n,
// a Minkowski weight when balanced. Weights are signed. The zero cycle
// has an empty cone list.
struct TropicalCycle {
    int n = 0;
    int k = 0;
    std::vector<WCone> cones;

    bool is_zero() const { return cones.empty(); }
    Int total_weight() const;
};

TropicalCycle zero_cycle(int n, int k);
// R^n with weight 1, the multiplicative identity
TropicalCycle torus_cycle(int n);
// validates pure dimension and ambient ranks
TropicalCycle make_cycle(int n, int k, std::vector<WCone> cones);

struct BalanceReport {
    bool balanced = true;
    std::vector<Cone> failing_cells;
};
BalanceReport is_balanced(const TropicalCycle& C);

// Refines the weighted cones into cells of one hyperplane arrangement,
// sums weights on identical cells, drops zeros, then merges subdivided
// cones back together where weights agree.
TropicalCycle canonicalize(const TropicalCycle& C);
// Semantic equality: the difference canonicalizes to the zero cycle.
bool cycle_equal(const TropicalCycle& a, const TropicalCycle& b);

TropicalCycle add(const TropicalCycle& a, const TropicalCycle& b);
TropicalCycle scale(const TropicalCycle& C, const Int& c);
TropicalCycle cross_product(const TropicalCycle& a, const TropicalCycle& b);

// Fan displacement rule with a deterministic, verified-generic displacement
// vector. offset shifts the candidate enumeration (used to test that the
// result does not depend on the displacement).
TropicalCycle stable_intersection(const TropicalCycle& a, const TropicalCycle& b,
                                  int enum_offset = 0);
Int intersection_number(const TropicalCycle& a, const TropicalCycle& b);

// p must be an integer epimorphism (all Smith divisors 1).
TropicalCycle pushforward(const IMat& p, const TropicalCycle& C);
TropicalCycle pullback(const IMat& p, const TropicalCycle& C);

// HNF basis of the maximal subspace L with C + L = C.
IMat lineality_space(const TropicalCycle& C);

// deterministic displacement search (exposed for tests); throws when the
// retry budget is exhausted
IVec find_displacement(const TropicalCycle& a, const TropicalCycle& b,
                       int budget, int enum_offset);

// Deterministic enumeration of nonzero integer vectors by increasing
// max-coordinate with lexicographic tie-break; index is 0-based.
IVec enumerated_vector(int n, long index);

// Deterministic displacement candidates of increasing height along the
// moment curve (1, h, h^2, ...), h = index + 2.
IVec displacement_candidate(int n, long index);

int stable_retry_budget();
void set_stable_retry_budget(int budget);

}  // namespace trop
