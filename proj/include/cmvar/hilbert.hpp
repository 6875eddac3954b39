#pragma once

#include "cmvar/ring.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cmvar {

/// Dense univariate polynomial in T with integer coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(long long constant) { c_ = {constant}; trim(); }
    explicit UniPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly one_minus_power(long exp); // 1 - T^exp

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    long long sum_coeffs() const;
    const std::vector<long long>& coeffs() const { return c_; }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Shift by T^k.
    UniPoly shifted(long k) const;

    /// Exact quotient; throws std::domain_error when the division leaves a
    /// remainder.
    UniPoly divide_exact(const UniPoly& divisor) const;

    std::string str() const; // polynomial in T, grammar-compatible

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_; // c_[k] is the coefficient of T^k
};

/// numerator / prod (1 - T^weight)^multiplicity
struct HilbertSeries {
    UniPoly numerator;
    std::vector<std::pair<long, int>> denominator; // (weight, multiplicity), ascending weight

    void add_denominator_factor(long weight, int multiplicity = 1);
    UniPoly denominator_poly() const;

    /// Equality as rational functions (cross-multiplied).
    bool equals(const HilbertSeries& o) const;

    /// Rewrite over the given denominator factors; exact division required.
    HilbertSeries with_denominator(std::vector<std::pair<long, int>> target) const;

    std::string str() const;
};

/// Numerator of the Hilbert series of k[x]/(monomial ideal) over the
/// denominator prod_i (1 - T^{weights[i]}), by the pivot-variable recursion.
/// Input order does not matter.
UniPoly hilbert_numerator(std::vector<Monomial> gens, std::span<const long> weights);

HilbertSeries hilbert_series(std::vector<Monomial> gens, std::span<const long> weights);

} // namespace cmvar
