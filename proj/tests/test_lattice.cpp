#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace trop;
using troptest::Rng;

namespace {

// gcd of all k x k minors, by direct enumeration (independent oracle)
Int minor_gcd(const IMat& A, int k) {
    std::vector<std::vector<int>> rsets, csets;
    auto subsets = [](int n, int k, std::vector<std::vector<int>>& out) {
        std::vector<int> cur(k);
        for (int i = 0; i < k; ++i) cur[i] = i;
        while (true) {
            out.push_back(cur);
            int i = k - 1;
            while (i >= 0 && cur[i] == n - k + i) --i;
            if (i < 0) break;
            ++cur[i];
            for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        }
    };
    subsets(A.rows(), k, rsets);
    subsets(A.cols(), k, csets);
    Int g = 0;
    for (const auto& rs : rsets)
        for (const auto& cs : csets) {
            IMat sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = A.at(rs[i], cs[j]);
            g = gcd(g, det(sub));
        }
    return abs(g);
}

bool in_row_lattice(const IMat& basis, const IVec& v) {
    // reduce v against the HNF of the basis
    HnfResult h = hermite_normal_form(basis);
    IVec r = v;
    int n = basis.cols();
    for (int i = 0; i < h.rank; ++i) {
        int piv = 0;
        while (piv < n && h.H.at(i, piv) == 0) ++piv;
        if (piv == n) continue;
        if (r[piv] % h.H.at(i, piv) != 0) return false;
        Int q = r[piv] / h.H.at(i, piv);
        for (int j = 0; j < n; ++j) r[j] -= q * h.H.at(i, j);
    }
    return is_zero(r);
}

}  // namespace

TEST_CASE("hermite normal form on the stated instances") {
    IMat id2 = IMat::identity(2);
    HnfResult h = hermite_normal_form(id2);
    CHECK(h.H == id2);
    CHECK(h.U == id2);

    IMat col({{4}, {6}});
    h = hermite_normal_form(col);
    CHECK(h.H.at(0, 0) == 2);
    CHECK(h.H.at(1, 0) == 0);
    CHECK(h.rank == 1);

    IMat a({{2, 1}, {0, 3}});
    h = hermite_normal_form(a);
    CHECK(h.H == a);
    CHECK(h.U == IMat::identity(2));
}

TEST_CASE("hermite normal form properties on random matrices") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        int rows = int(troptest::rnd(rng, 1, 4)), cols = int(troptest::rnd(rng, 1, 4));
        IMat a = troptest::random_mat(rng, rows, cols, -9, 9);
        HnfResult h = hermite_normal_form(a);
        CHECK(h.U.mul(a) == h.H);
        CHECK(abs(det(h.U)) == 1);
        // idempotent on the result
        HnfResult h2 = hermite_normal_form(h.H);
        CHECK(h2.H == h.H);
        // echelon with positive pivots, entries above reduced into [0, pivot)
        int prev = -1;
        for (int i = 0; i < h.rank; ++i) {
            int piv = 0;
            while (piv < cols && h.H.at(i, piv) == 0) ++piv;
            CHECK(piv > prev);
            prev = piv;
            CHECK(h.H.at(i, piv) > 0);
            for (int r = 0; r < i; ++r) {
                CHECK(h.H.at(r, piv) >= 0);
                CHECK(h.H.at(r, piv) < h.H.at(i, piv));
            }
        }
    }
}

TEST_CASE("smith normal form on the stated instances") {
    CHECK(smith_normal_form(IMat::identity(3)).D == IMat::identity(3));
    SnfResult s = smith_normal_form(IMat({{2, 0}, {0, 3}}));
    CHECK(s.divisors == std::vector<Int>{1, 6});
    s = smith_normal_form(IMat({{2, 0}, {0, 2}}));
    CHECK(s.divisors == std::vector<Int>{2, 2});
}

TEST_CASE("smith normal form vs the minor-gcd oracle") {
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        int rows = int(troptest::rnd(rng, 1, 4)), cols = int(troptest::rnd(rng, 1, 4));
        IMat a = troptest::random_mat(rng, rows, cols, -5, 5);
        SnfResult s = smith_normal_form(a);
        CHECK(s.U.mul(a).mul(s.V) == s.D);
        CHECK(abs(det(s.U)) == 1);
        CHECK(abs(det(s.V)) == 1);
        Int prod = 1;
        for (size_t k = 0; k < s.divisors.size(); ++k) {
            CHECK(s.divisors[k] > 0);
            if (k) CHECK(s.divisors[k] % s.divisors[k - 1] == 0);
            prod *= s.divisors[k];
            CHECK(prod == minor_gcd(a, int(k) + 1));
        }
        if (int(s.divisors.size()) < std::min(rows, cols))
            CHECK(minor_gcd(a, int(s.divisors.size()) + 1) == 0);
    }
}

TEST_CASE("kernel basis on the stated instances") {
    IMat k = kernel_basis(IMat({{1, 1}}));
    CHECK(k.rows() == 1);
    CHECK(k.row(0) == IVec{1, -1});
    k = kernel_basis(IMat({{2, 4}}));
    CHECK(k.rows() == 1);
    CHECK(k.row(0) == IVec{2, -1});
    CHECK(kernel_basis(IMat::identity(3)).rows() == 0);
}

TEST_CASE("kernel basis is saturated") {
    Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        int rows = int(troptest::rnd(rng, 1, 3)), cols = int(troptest::rnd(rng, 2, 4));
        IMat a = troptest::random_mat(rng, rows, cols, -5, 5);
        IMat k = kernel_basis(a);
        for (int i = 0; i < k.rows(); ++i) CHECK(is_zero(a.apply(k.row(i))));
        if (k.rows() == 0) continue;
        for (int rep = 0; rep < 5; ++rep) {
            IVec combo(cols);
            for (int i = 0; i < k.rows(); ++i) {
                Int c = troptest::rnd(rng, -4, 4);
                for (int j = 0; j < cols; ++j) combo[j] += c * k.at(i, j);
            }
            if (is_zero(combo)) continue;
            auto [prim, mult] = primitive_part(combo);
            CHECK(in_row_lattice(k, prim));
        }
    }
}

TEST_CASE("primitive part") {
    auto [v, g] = primitive_part(IVec{4, 6});
    CHECK(v == IVec{2, 3});
    CHECK(g == 2);
    auto [v2, g2] = primitive_part(IVec{0, -5});
    CHECK(v2 == IVec{0, -1});
    CHECK(g2 == 5);
    CHECK_THROWS_AS(primitive_part(IVec{0, 0}), input_error);
}

TEST_CASE("image lattice index on the stated instances") {
    IMat px({{1, 0}});
    CHECK(image_lattice_index(px, IMat({{2, 1}})) == 2);
    CHECK(image_lattice_index(px, IMat({{1, 1}})) == 1);
    IMat id = IMat::identity(3);
    Rng rng(14);
    IMat u = troptest::random_unimodular(rng, 3);
    CHECK(image_lattice_index(id, u) == 1);
    // rank drop is rejected
    CHECK_THROWS_AS(image_lattice_index(px, IMat({{0, 1}})), input_error);
}

TEST_CASE("image lattice index is invariant under unimodular composition") {
    Rng rng(15);
    for (int t = 0; t < 40; ++t) {
        int n = int(troptest::rnd(rng, 2, 4));
        int r = int(troptest::rnd(rng, 1, n));
        int k = int(troptest::rnd(rng, 1, r));
        IMat p = troptest::random_mat(rng, r, n, -3, 3);
        IMat span = troptest::random_mat(rng, k, n, -3, 3);
        if (rank_of(span) != k) continue;
        Int idx;
        try {
            idx = image_lattice_index(p, span);
        } catch (const input_error&) {
            continue;  // projection drops rank on this span
        }
        IMat w = troptest::random_unimodular(rng, r);
        CHECK(image_lattice_index(w.mul(p), span) == idx);
        // a different basis of the same source lattice
        IMat v = troptest::random_unimodular(rng, k);
        CHECK(image_lattice_index(p, v.mul(span)) == idx);
    }
}

TEST_CASE("row saturation and quotient coordinates") {
    IMat b({{2, 0}});
    IMat sat = row_saturation(b);
    CHECK(sat.rows() == 1);
    CHECK(sat.row(0) == IVec{1, 0});

    Rng rng(16);
    for (int t = 0; t < 30; ++t) {
        int n = int(troptest::rnd(rng, 2, 4));
        int k = int(troptest::rnd(rng, 1, n - 1));
        IMat b2 = troptest::random_mat(rng, k, n, -4, 4);
        IMat s = row_saturation(b2);
        if (s.rows() == 0) continue;
        Quotient q = quotient_by(s, n);
        CHECK(q.proj.rows() == n - s.rows());
        // proj kills the sublattice and splits via lift
        for (int i = 0; i < s.rows(); ++i) CHECK(is_zero(q.proj.apply(s.row(i))));
        IMat pl = q.proj.mul(q.lift.transpose());
        CHECK(pl == IMat::identity(q.proj.rows()));
    }
}
