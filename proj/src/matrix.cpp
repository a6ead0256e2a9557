#include "tropws/matrix.hpp"

#include <sstream>

namespace trop {

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

IVec neg(const IVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IVec scaled(const IVec& v, const Int& c) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
    return r;
}

Int content(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

int lex_cmp(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string vec_str(const IVec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i].get_str();
    }
    return os.str();
}

IMat::IMat(std::initializer_list<std::initializer_list<int>> init) {
    rows_ = int(init.size());
    cols_ = rows_ ? int(init.begin()->size()) : 0;
    a_.resize(size_t(rows_) * cols_);
    int i = 0;
    for (const auto& r : init) {
        int j = 0;
        for (int x : r) at(i, j++) = x;
        ++i;
    }
}

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::from_rows(const std::vector<IVec>& rows, int cols) {
    IMat m(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(int(i), rows[i]);
    return m;
}

IVec IMat::row(int i) const {
    IVec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

std::vector<IVec> IMat::row_list() const {
    std::vector<IVec> rs;
    rs.reserve(rows_);
    for (int i = 0; i < rows_; ++i) rs.push_back(row(i));
    return rs;
}

void IMat::set_row(int i, const IVec& v) {
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void IMat::append_row(const IVec& v) {
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

void IMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

IMat IMat::transpose() const {
    IMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IMat IMat::mul(const IMat& other) const {
    IMat r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < other.cols_; ++j) r.at(i, j) += x * other.at(k, j);
        }
    return r;
}

IVec IMat::apply(const IVec& v) const {
    IVec r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Int s = 0;
        for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

namespace {

// Bareiss fraction-free elimination; returns rank, and the determinant of a
// square matrix in *det_out when requested and the matrix has full rank.
int bareiss(IMat m, Int* det_out) {
    int rows = m.rows(), cols = m.cols();
    Int prev = 1;
    int r = 0;
    int sign_flips = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            m.swap_rows(piv, r);
            ++sign_flips;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int t = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
                m.at(i, j) = t / prev;  // exact division in Bareiss
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    if (det_out) {
        if (r < rows)
            *det_out = 0;
        else {
            *det_out = prev;
            if (sign_flips & 1) *det_out = -*det_out;
        }
    }
    return r;
}

}  // namespace

int rank_of(const IMat& A) { return bareiss(A, nullptr); }

int rank_of_rows(const std::vector<IVec>& rows, int cols) {
    return rank_of(IMat::from_rows(rows, cols));
}

Int det(const IMat& A) {
    if (A.rows() != A.cols()) throw input_error("det: matrix not square");
    if (A.rows() == 0) return 1;
    Int d;
    bareiss(A, &d);
    return d;
}

}  // namespace trop
