#pragma once

#include "cmvar/rational.hpp"
#include "cmvar/ring.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cmvar {

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial over Rational. Terms are kept in a map
/// keyed by the structural monomial order, so equal polynomials have
/// identical term maps; no zero coefficient is ever stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const Rational& constant);

    static Polynomial variable(const RingPtr& ring, int var, uint32_t power = 1);
    static Polynomial term(const RingPtr& ring, Monomial m, Rational c);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    /// a*f + *this where a is a scalar multiple of a monomial (fused update,
    /// the inner loop of polynomial division).
    void add_scaled(const Rational& c, const Monomial& m, const Polynomial& f);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_ && same_ring(a.ring_, b.ring_);
    }

    Term leading_term(const TermOrder& ord) const; // throws on zero
    long weighted_degree() const;                  // max over terms, ring weights; -1 for zero
    bool is_homogeneous() const;

    /// Sum of the terms of maximal weighted degree (zero polynomial maps to
    /// zero).
    Polynomial top_component() const;

    /// Full evaluation. values[i] substitutes variable i; variables with
    /// index >= values.size() must not occur.
    Rational eval(std::span<const Rational> values) const;

    /// Ring morphism: variable i goes to images[i] (all in target ring).
    Polynomial compose(std::span<const Polynomial> images, const RingPtr& target) const;

    /// Signed variable permutation: variable i goes to sign[i] * var(perm[i]).
    Polynomial map_variables(std::span<const int> perm, std::span<const int> sign) const;

    /// Exact scalar c with *this == c * other, if one exists (both nonzero).
    std::optional<Rational> scalar_ratio_to(const Polynomial& other) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::map<Monomial, Rational> terms_;
};

/// Sum of the terms of maximal weighted degree of f.
Polynomial drop_lower_terms(const Polynomial& f);

/// Grammar: terms joined by +/-; a term is factors joined by '*'; a factor is
/// an integer or p/q rational, or a variable with optional ^exponent.
/// Whitespace is insignificant. Lines starting with '#' are comments.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// One polynomial per non-comment line.
std::vector<Polynomial> parse_polynomial_lines(std::string_view text, const RingPtr& ring);

struct PolyParseError : std::runtime_error {
    int line, column;
    PolyParseError(const std::string& msg, int line, int column);
};

} // namespace cmvar
