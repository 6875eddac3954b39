#include "cmvar/matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace cmvar {

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (static_cast<int>(e_.size()) != rows * cols)
        throw std::invalid_argument("Matrix: entry count does not match shape");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Matrix Matrix::ones(int rows, int cols) {
    Matrix m(rows, cols);
    for (auto& x : m.e_) x = Rational(1);
    return m;
}

Matrix Matrix::unit(int n, int i, int j) {
    Matrix m(n, n);
    m.at(i - 1, j - 1) = Rational(1);
    return m;
}

Rational Matrix::trace() const {
    if (!square()) throw std::invalid_argument("trace: non-square matrix");
    Rational t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : e_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) m.at(r, c) += ark * b.at(k, c);
        }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(*this);
    for (auto& x : m.e_) x = -x;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix Matrix::inverse() const {
    if (!square()) throw std::invalid_argument("inverse: non-square matrix");
    int n = rows_;
    Matrix a(*this), inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("inverse: singular matrix");
        for (int c = 0; c < n; ++c) {
            std::swap(a.at(col, c), a.at(pivot, c));
            std::swap(inv.at(col, c), inv.at(pivot, c));
        }
        Rational p = a.at(col, col).inverse();
        for (int c = 0; c < n; ++c) {
            a.at(col, c) *= p;
            inv.at(col, c) *= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (int c = 0; c < n; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "[") << at(r, c).str();
        os << "]" << (r + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

int rank(const Matrix& m) {
    int rows = m.rows(), cols = m.cols();
    // Clear denominators row by row; row scaling leaves the rank unchanged.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (int c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).denominator().get_mpz_t());
        for (int c = 0; c < cols; ++c) {
            mpq_class scaled = m.at(r, c).raw() * mpq_class(l);
            assert(scaled.get_den() == 1);
            a[r][c] = scaled.get_num();
        }
    }
    // Bareiss one-step fraction-free elimination.
    mpz_class prev = 1;
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rk], a[pivot]);
        for (int r = rk + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                mpz_class num = a[rk][col] * a[r][c] - a[r][col] * a[rk][c];
                mpz_divexact(a[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

Matrix traceless(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("traceless: non-square matrix");
    int n = m.rows();
    Matrix out(m);
    Rational shift = m.trace() / Rational(n);
    for (int i = 0; i < n; ++i) out.at(i, i) -= shift;
    return out;
}

Matrix cayley_hamilton_residual(const Matrix& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("cayley_hamilton_residual: matrix must be 4x4");
    if (!m.trace().is_zero())
        throw std::invalid_argument("cayley_hamilton_residual: matrix must be traceless");
    Matrix m2 = m * m, m3 = m2 * m, m4 = m3 * m;
    Rational t2 = m2.trace(), t3 = m3.trace(), t4 = m4.trace();
    Matrix r = m4;
    r -= m2 * (t2 / Rational(2));
    r -= m * (t3 / Rational(3));
    r += Matrix::identity(4) * ((t2 * t2 - Rational(2) * t4) / Rational(8));
    return r;
}

bool CMQuadruple::consistent() const {
    if (X.rows() != n || X.cols() != n || Y.rows() != n || Y.cols() != n) return false;
    if (v.rows() != n || v.cols() != 1 || w.rows() != 1 || w.cols() != n) return false;
    Matrix lhs = commutator(X, Y) + Matrix::identity(n);
    if (!(lhs == v * w)) return false;
    return (w * v).at(0, 0) == Rational(n);
}

} // namespace cmvar
