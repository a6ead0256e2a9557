#pragma once

#include <initializer_list>
#include <vector>

#include "tropws/arith.hpp"

namespace trop {

// A lattice vector: entries indexed 0..n-1 in the ambient lattice Z^n.
using IVec = std::vector<Int>;

Int dot(const IVec& a, const IVec& b);
bool is_zero(const IVec& v);
IVec neg(const IVec& v);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scaled(const IVec& v, const Int& c);
// gcd of all entries (nonnegative; 0 for the zero vector)
Int content(const IVec& v);
// lexicographic three-way compare
int lex_cmp(const IVec& a, const IVec& b);
std::string vec_str(const IVec& v);

// Dense integer matrix, row-major. Rows are lattice vectors.
class IMat {
  public:
    IMat() : rows_(0), cols_(0) {}
    IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    IMat(std::initializer_list<std::initializer_list<int>> init);

    static IMat identity(int n);
    static IMat from_rows(const std::vector<IVec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IVec row(int i) const;
    std::vector<IVec> row_list() const;
    void set_row(int i, const IVec& v);
    void append_row(const IVec& v);
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    IMat transpose() const;
    IMat mul(const IMat& other) const;
    // image of a (row) vector: returns this * v^T as a vector of length rows()
    IVec apply(const IVec& v) const;

    bool operator==(const IMat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Exact rank by fraction-free (Bareiss) elimination.
int rank_of(const IMat& A);
int rank_of_rows(const std::vector<IVec>& rows, int cols);
// Determinant of a square matrix, exact.
Int det(const IMat& A);

}  // namespace trop
