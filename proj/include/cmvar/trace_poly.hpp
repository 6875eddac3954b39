#pragma once

#include "cmvar/matrix.hpp"
#include "cmvar/words.hpp"

#include <map>
#include <string>
#include <vector>

namespace cmvar {

/// Polynomial in trace functions: rational combination of products of traces
/// of cyclic words. A term is a sorted list of word factors; the empty list
/// is the constant 1. Trace-of-identity factors are folded into coefficients
/// at construction, so factor words are never empty.
class TracePoly {
public:
    TracePoly() = default;

    static TracePoly constant(const Rational& c);
    static TracePoly trace(const CyclicWord& w); // w nonempty
    static TracePoly from_wordsum(const WordSum& ws, int n);

    const std::map<std::vector<CyclicWord>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(std::vector<CyclicWord> factors, const Rational& c);

    TracePoly& operator+=(const TracePoly& o);
    TracePoly& operator-=(const TracePoly& o);
    TracePoly& operator*=(const Rational& s);
    friend TracePoly operator+(TracePoly a, const TracePoly& b) { return a += b; }
    friend TracePoly operator-(TracePoly a, const TracePoly& b) { return a -= b; }
    friend TracePoly operator*(TracePoly a, const Rational& s) { return a *= s; }
    friend TracePoly operator*(const TracePoly& a, const TracePoly& b);
    friend bool operator==(const TracePoly& a, const TracePoly& b) { return a.terms_ == b.terms_; }

    /// Swap the roles of x and y in every word factor.
    TracePoly letters_swapped() const;

    Rational eval(const Matrix& X, const Matrix& Y) const;

    /// Matrix gradient with respect to the named letter, evaluated at (X, Y):
    /// cyclic gradient on each factor, product rule across factors.
    Matrix gradient(char letter, const Matrix& X, const Matrix& Y) const;

    std::string str() const;

private:
    std::map<std::vector<CyclicWord>, Rational> terms_;
};

/// Number of trace generators for n x n pairs: n(n+3)/2.
int generator_count(int n);

/// Word in the traceless letters for generator i (3-based table; a1 and a2
/// are the plain traces of X and Y).
CyclicWord generator_word(int i, int n);

/// Generator a_i as a trace polynomial in the original letters, obtained by
/// expanding the traceless substitution x - (1/n) tr(x) and multiplying out.
TracePoly expand_generator(int i, int n);

/// Poisson pairing tr(f_x g_y) - tr(f_y g_x) of the matrix gradients,
/// normalized so the pairing of tr(x) with tr(y) is n.
Rational poisson_numeric(const TracePoly& f, const TracePoly& g, const Matrix& X, const Matrix& Y);

} // namespace cmvar
