#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmvar/matrix.hpp"
#include "cmvar/rng.hpp"

using namespace cmvar;

namespace {

Matrix random_integer_matrix(int n, Rng& rng, long box = 5) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = Rational(rng.uniform(-box, box));
    return m;
}

} // namespace

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, 2).denominator() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(5, 3).pow(3) == Rational(125, 27));
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rank: outer products, identity, diagonal") {
    CHECK(rank(Matrix::ones(4, 4)) == 1);
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(Matrix(3, 3)) == 0);
    Matrix d = Matrix::diagonal({Rational(1), Rational(0), Rational(7, 3)});
    CHECK(rank(d) == 2);
}

TEST_CASE("rank agrees with row-reduction on random matrices") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        int n = 3 + static_cast<int>(rng.uniform(0, 2));
        Matrix a = random_integer_matrix(n, rng, 3);
        // Reference: plain Gauss elimination over the rationals.
        Matrix g = a;
        int rk = 0;
        for (int col = 0; col < n && rk < n; ++col) {
            int pivot = -1;
            for (int r = rk; r < n; ++r)
                if (!g.at(r, col).is_zero()) { pivot = r; break; }
            if (pivot < 0) continue;
            for (int c = 0; c < n; ++c) std::swap(g.at(rk, c), g.at(pivot, c));
            for (int r = rk + 1; r < n; ++r) {
                if (g.at(r, col).is_zero()) continue;
                Rational f = g.at(r, col) / g.at(rk, col);
                for (int c = 0; c < n; ++c) g.at(r, c) -= f * g.at(rk, c);
            }
            ++rk;
        }
        CHECK(rank(a) == rk);
    }
}

TEST_CASE("traceless projection") {
    CHECK(traceless(Matrix::identity(4)).is_zero());
    Matrix d = Matrix::diagonal({Rational(0), Rational(1), Rational(2), Rational(3)});
    Matrix expected =
        Matrix::diagonal({Rational(-3, 2), Rational(-1, 2), Rational(1, 2), Rational(3, 2)});
    CHECK(traceless(d) == expected);
    CHECK(traceless(traceless(d)) == traceless(d));
    CHECK_THROWS_AS(traceless(Matrix::ones(2, 3)), std::invalid_argument);
}

TEST_CASE("Cayley-Hamilton residual vanishes for traceless 4x4") {
    CHECK(cayley_hamilton_residual(Matrix(4, 4)).is_zero());
    Matrix d =
        Matrix::diagonal({Rational(-3, 2), Rational(-1, 2), Rational(1, 2), Rational(3, 2)});
    CHECK(cayley_hamilton_residual(d).is_zero());

    Rng rng(23);
    for (int t = 0; t < 1000; ++t) {
        Matrix m = traceless(random_integer_matrix(4, rng));
        CHECK(cayley_hamilton_residual(m).is_zero());
    }

    CHECK_THROWS_AS(cayley_hamilton_residual(Matrix::identity(4)), std::invalid_argument);
    CHECK_THROWS_AS(cayley_hamilton_residual(Matrix(3, 3)), std::invalid_argument);
}

TEST_CASE("matrix inverse") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        Matrix g = random_integer_matrix(4, rng);
        if (rank(g) < 4) continue;
        CHECK(g * g.inverse() == Matrix::identity(4));
    }
    CHECK_THROWS_AS(Matrix::ones(3, 3).inverse(), std::domain_error);
}
