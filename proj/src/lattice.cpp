#include "tropws/lattice.hpp"

#include <cstdlib>

namespace trop {

HnfResult hermite_normal_form(const IMat& A) {
    int m = A.rows(), n = A.cols();
    IMat H = A;
    IMat U = IMat::identity(m);
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // gcd out the column below row r
        while (true) {
            int piv = -1;
            for (int i = r; i < m; ++i) {
                if (H.at(i, c) == 0) continue;
                if (piv < 0 || cmp(abs(H.at(i, c)), abs(H.at(piv, c))) < 0) piv = i;
            }
            if (piv < 0) break;
            H.swap_rows(piv, r);
            U.swap_rows(piv, r);
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                if (H.at(i, c) == 0) continue;
                Int q = H.at(i, c) / H.at(r, c);  // truncated; remainder shrinks
                if (q != 0) {
                    for (int j = 0; j < n; ++j) H.at(i, j) -= q * H.at(r, j);
                    for (int j = 0; j < m; ++j) U.at(i, j) -= q * U.at(r, j);
                }
                if (H.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H.at(r, c) == 0) continue;
        if (H.at(r, c) < 0) {
            for (int j = 0; j < n; ++j) H.at(r, j) = -H.at(r, j);
            for (int j = 0; j < m; ++j) U.at(r, j) = -U.at(r, j);
        }
        for (int i = 0; i < r; ++i) {
            Int q = fdiv(H.at(i, c), H.at(r, c));
            if (q != 0) {
                for (int j = 0; j < n; ++j) H.at(i, j) -= q * H.at(r, j);
                for (int j = 0; j < m; ++j) U.at(i, j) -= q * U.at(r, j);
            }
        }
        ++r;
    }
    return {H, U, r};
}

SnfResult smith_normal_form(const IMat& A) {
    int m = A.rows(), n = A.cols();
    IMat D = A;
    IMat U = IMat::identity(m);
    IMat V = IMat::identity(n);
    int t = 0;
    int limit = std::min(m, n);
    while (t < limit) {
        // smallest nonzero entry of the trailing block to (t,t)
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (D.at(i, j) == 0) continue;
                if (pi < 0 || cmp(abs(D.at(i, j)), abs(D.at(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        D.swap_rows(pi, t);
        U.swap_rows(pi, t);
        D.swap_cols(pj, t);
        V.swap_cols(pj, t);
        bool dirty = false;
        for (int i = t + 1; i < m; ++i) {
            if (D.at(i, t) == 0) continue;
            Int q = D.at(i, t) / D.at(t, t);
            if (q != 0) {
                for (int j = 0; j < n; ++j) D.at(i, j) -= q * D.at(t, j);
                for (int j = 0; j < m; ++j) U.at(i, j) -= q * U.at(t, j);
            }
            if (D.at(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < n; ++j) {
            if (D.at(t, j) == 0) continue;
            Int q = D.at(t, j) / D.at(t, t);
            if (q != 0) {
                for (int i = 0; i < m; ++i) D.at(i, j) -= q * D.at(i, t);
                for (int i = 0; i < n; ++i) V.at(i, j) -= q * V.at(i, t);
            }
            if (D.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;
        // divisibility of the trailing block by D(t,t)
        bool fixed = true;
        for (int i = t + 1; i < m && fixed; ++i)
            for (int j = t + 1; j < n && fixed; ++j)
                if (D.at(i, j) % D.at(t, t) != 0) {
                    for (int c = 0; c < n; ++c) D.at(t, c) += D.at(i, c);
                    for (int c = 0; c < m; ++c) U.at(t, c) += U.at(i, c);
                    fixed = false;
                }
        if (!fixed) continue;
        if (D.at(t, t) < 0) {
            D.at(t, t) = -D.at(t, t);
            for (int j = 0; j < m; ++j) U.at(t, j) = -U.at(t, j);
        }
        ++t;
    }
    std::vector<Int> divisors;
    for (int i = 0; i < t; ++i) divisors.push_back(D.at(i, i));
    return {D, U, V, divisors};
}

IMat kernel_basis(const IMat& A) {
    int n = A.cols();
    if (A.rows() == 0) return IMat::identity(n);
    SnfResult s = smith_normal_form(A);
    int r = int(s.divisors.size());
    std::vector<IVec> basis;
    for (int j = r; j < n; ++j) {
        IVec v(n);
        for (int i = 0; i < n; ++i) v[i] = s.V.at(i, j);
        basis.push_back(v);
    }
    HnfResult h = hermite_normal_form(IMat::from_rows(basis, n));
    IMat out(0, n);
    for (int i = 0; i < h.rank; ++i) out.append_row(h.H.row(i));
    return out;
}

std::pair<IVec, Int> primitive_part(const IVec& v) {
    Int g = content(v);
    if (g == 0) throw input_error("primitive_part: zero vector");
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return {r, g};
}

Int image_lattice_index(const IMat& p, const IMat& span_basis) {
    std::vector<IVec> image_rows;
    for (int i = 0; i < span_basis.rows(); ++i)
        image_rows.push_back(p.apply(span_basis.row(i)));
    IMat img = IMat::from_rows(image_rows, p.rows());
    if (rank_of(img) != rank_of(span_basis))
        throw input_error("image_lattice_index: rank drops under the projection");
    SnfResult s = smith_normal_form(img);
    Int idx = 1;
    for (const Int& d : s.divisors) idx *= d;
    return idx;
}

IMat row_saturation(const IMat& M) {
    return kernel_basis(kernel_basis(M));
}

IMat unimodular_inverse(const IMat& U) {
    HnfResult h = hermite_normal_form(U);
    if (h.H == IMat::identity(U.rows())) return h.U;
    throw input_error("unimodular_inverse: matrix is not unimodular");
}

Quotient quotient_by(const IMat& sat_basis, int n) {
    int t = sat_basis.rows();
    if (t == 0) return {IMat::identity(n), IMat::identity(n)};
    SnfResult s = smith_normal_form(sat_basis);
    for (const Int& d : s.divisors)
        if (d != 1) throw input_error("quotient_by: sublattice is not saturated");
    if (int(s.divisors.size()) != t)
        throw input_error("quotient_by: basis rows are dependent");
    IMat Vt = s.V.transpose();
    IMat W = unimodular_inverse(s.V);  // rows of W form a Z-basis of Z^n
    IMat proj(0, n), lift(0, n);
    for (int i = t; i < n; ++i) {
        proj.append_row(Vt.row(i));
        lift.append_row(W.row(i));
    }
    return {proj, lift};
}

}  // namespace trop
