#pragma once

#include <utility>

#include "tropws/matrix.hpp"

namespace trop {

// Row-style Hermite normal form: H = U * A with U unimodular, H in row
// echelon form with positive pivots and entries above each pivot reduced
// into [0, pivot). Zero rows of H are collected at the bottom.
struct HnfResult {
    IMat H;
    IMat U;
    int rank;
};
HnfResult hermite_normal_form(const IMat& A);

// Smith normal form D = U * A * V with U, V unimodular, D diagonal with
// d_1 | d_2 | ... | d_r > 0.
struct SnfResult {
    IMat D;
    IMat U;
    IMat V;
    std::vector<Int> divisors;  // the nonzero d_i
};
SnfResult smith_normal_form(const IMat& A);

// Basis of the saturated kernel lattice {v in Z^cols : A v = 0}, one basis
// vector per row, in Hermite normal form.
IMat kernel_basis(const IMat& A);

// v / gcd(entries) and the gcd; throws input_error on the zero vector.
std::pair<IVec, Int> primitive_part(const IVec& v);

// Index of p(L) inside its saturation, where L is the lattice spanned by
// the rows of span_basis. Throws input_error if p drops the rank of L.
Int image_lattice_index(const IMat& p, const IMat& span_basis);

// Basis (in HNF) of the saturation of the row span of M:
// { v in Z^cols : v lies in the Q-span of the rows }.
IMat row_saturation(const IMat& M);

// Inverse of a unimodular matrix (via HNF; H must come out the identity).
IMat unimodular_inverse(const IMat& U);

// Coordinates on the quotient Z^n / L for a saturated sublattice L (rows of
// sat_basis, rank t): proj is (n-t) x n with proj(v) the quotient
// coordinates, and lift is (n-t) x n whose rows are preimages of the
// quotient basis vectors (proj * lift^T = identity).
struct Quotient {
    IMat proj;
    IMat lift;
};
Quotient quotient_by(const IMat& sat_basis, int n);

}  // namespace trop
