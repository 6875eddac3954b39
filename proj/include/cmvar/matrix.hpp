#pragma once

#include "cmvar/rational.hpp"

#include <initializer_list>
#include <vector>

namespace cmvar {

/// Dense matrix over Rational, row-major. Immutable by convention: operations
/// return fresh values.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(int rows, int cols, std::vector<Rational> entries);

    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<Rational>& d);
    static Matrix ones(int rows, int cols);
    /// Elementary matrix E_ij (1-based indices).
    static Matrix unit(int n, int i, int j);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Rational& at(int r, int c) const { return e_[r * cols_ + c]; }
    Rational& at(int r, int c) { return e_[r * cols_ + c]; }

    Rational trace() const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Exact inverse via Gauss-Jordan; throws std::domain_error if singular.
    Matrix inverse() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

/// Exact rank by fraction-free (Bareiss) elimination after clearing row
/// denominators.
int rank(const Matrix& m);

/// M - (Tr(M)/n) I. Throws std::invalid_argument on non-square input.
Matrix traceless(const Matrix& m);

/// M^4 - 1/2 Tr(M^2) M^2 - 1/3 Tr(M^3) M + 1/8 (Tr^2(M^2) - 2 Tr(M^4)) I
/// for traceless 4x4 M; zero for every valid input. Throws on wrong size or
/// nonzero trace.
Matrix cayley_hamilton_residual(const Matrix& m);

/// Quadruple (X, Y, v, w) with XY - YX + I = v w and w v = n.
/// v is n x 1, w is 1 x n.
struct CMQuadruple {
    int n = 0;
    Matrix X, Y, v, w;

    bool consistent() const;
};

} // namespace cmvar
