#pragma once

#include "tropws/lattice.hpp"

namespace trop {

// An integer epimorphism Z^n -> Z^r (all Smith divisors 1), with its
// saturated kernel cached.
struct ProjectionMap {
    IMat matrix;  // r x n
    IMat kernel;  // (n-r) x n, HNF basis
    int r = 0;
    int n = 0;
};

ProjectionMap make_projection(const IMat& m);

// The quotient map Z^n -> Z^n / sat(ker) as an epimorphism whose kernel is
// the saturation of the span of the given vectors.
ProjectionMap projection_from_kernel(const std::vector<IVec>& ker_gens, int n);

}  // namespace trop
