#include <doctest.h>

#include "cmvar/hilbert.hpp"
#include "cmvar/rng.hpp"

#include <algorithm>

using namespace cmvar;

namespace {

Monomial mono(std::vector<uint32_t> e) { return Monomial(std::move(e)); }

} // namespace

TEST_CASE("unipoly arithmetic") {
    UniPoly a(std::vector<long long>{1, 2});       // 1 + 2T
    UniPoly b = UniPoly::one_minus_power(2);       // 1 - T^2
    CHECK((a * b).coeffs() == std::vector<long long>{1, 2, -1, -2});
    CHECK((a * b).divide_exact(a) == b);
    CHECK_THROWS_AS(UniPoly(std::vector<long long>{1, 1}).divide_exact(b), std::domain_error);
    CHECK(a.sum_coeffs() == 3);
    CHECK(b.str() == "1 - T^2");
}

TEST_CASE("hilbert series: base cases") {
    std::vector<long> w1{1};
    // Empty ideal in one variable: 1/(1-T).
    HilbertSeries free1 = hilbert_series({}, w1);
    CHECK(free1.numerator == UniPoly(1));
    CHECK(free1.denominator == std::vector<std::pair<long, int>>{{1, 1}});
    // Ideal (x): numerator 1 - T, the series of the ground field.
    HilbertSeries point = hilbert_series({mono({1})}, w1);
    CHECK(point.numerator == UniPoly::one_minus_power(1));
    CHECK(point.with_denominator({}).numerator == UniPoly(1));
}

TEST_CASE("hilbert numerator: staircase example") {
    // k[x,y]/(x^2, xy): dimensions 1, 2, 1, 1, ... so numerator over
    // (1-T)^2 is (1 - T)(1 + T - T^2) = 1 - 2T^2 + T^3.
    std::vector<long> w{1, 1};
    UniPoly num = hilbert_numerator({mono({2, 0}), mono({1, 1})}, w);
    UniPoly expected = UniPoly(std::vector<long long>{1, 0, -2, 1});
    CHECK(num == expected);
}

TEST_CASE("hilbert numerator is order-independent and ignores redundancy") {
    std::vector<long> w{2, 3, 4};
    std::vector<Monomial> gens{mono({2, 1, 0}), mono({0, 3, 1}), mono({1, 0, 2}), mono({4, 0, 0})};
    UniPoly base = hilbert_numerator(gens, w);
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        std::vector<Monomial> shuffled = gens;
        for (size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.uniform(0, static_cast<long>(i) - 1)]);
        // Adding a multiple of an existing generator changes nothing.
        shuffled.push_back(gens[0] * gens[1]);
        CHECK(hilbert_numerator(shuffled, w) == base);
    }
}

TEST_CASE("hilbert numerator counts standard monomials") {
    // Brute force the monomial staircase up to a degree bound and compare.
    std::vector<long> w{1, 2};
    std::vector<Monomial> gens{mono({3, 0}), mono({1, 1}), mono({0, 2})};
    HilbertSeries s = hilbert_series(gens, w);
    // Expand the series as a power series via numerator * 1/(1-T^w) factors.
    const int bound = 12;
    std::vector<long long> dims(bound + 1, 0);
    for (int d = 0; d <= s.numerator.degree(); ++d)
        if (d <= bound) dims[d] = s.numerator.coeff(d);
    for (auto [weight, mult] : s.denominator)
        for (int m = 0; m < mult; ++m)
            for (int d = weight; d <= bound; ++d) dims[d] += dims[d - weight];
    for (int d = 0; d <= bound; ++d) {
        long long count = 0;
        for (uint32_t ex = 0; ex * 1 <= static_cast<uint32_t>(bound); ++ex)
            for (uint32_t ey = 0; ey * 2 <= static_cast<uint32_t>(bound); ++ey) {
                if (static_cast<int>(ex + 2 * ey) != d) continue;
                Monomial m(mono({ex, ey}));
                bool in_ideal = false;
                for (const auto& g : gens)
                    if (g.divides(m)) { in_ideal = true; break; }
                if (!in_ideal) ++count;
            }
        CHECK(dims[d] == count);
    }
}

TEST_CASE("series equality and rewriting") {
    std::vector<long> w{1, 1};
    HilbertSeries a = hilbert_series({mono({1, 0})}, w); // (1-T)/(1-T)^2
    HilbertSeries b;
    b.numerator = UniPoly(1);
    b.denominator = {{1, 1}};
    CHECK(a.equals(b));
    CHECK(a.with_denominator({{1, 1}}).numerator == UniPoly(1));
    CHECK(!a.equals(hilbert_series({mono({2, 0})}, w)));
    CHECK_THROWS_AS(a.with_denominator({}), std::domain_error);
}
