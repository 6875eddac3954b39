#include <doctest.h>

#include "cmvar/rng.hpp"
#include "cmvar/trace_poly.hpp"

using namespace cmvar;

namespace {

Matrix random_matrix(Rng& rng, int n = 4, long box = 3) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = Rational(rng.uniform(-box, box));
    return m;
}

} // namespace

TEST_CASE("generator words and counts") {
    CHECK(generator_count(2) == 5);
    CHECK(generator_count(3) == 9);
    CHECK(generator_count(4) == 14);
    CHECK(generator_word(3, 4) == CyclicWord("xx"));
    CHECK(generator_word(4, 4) == CyclicWord("xy"));
    CHECK(generator_word(5, 4) == CyclicWord("yy"));
    CHECK(generator_word(9, 4) == CyclicWord("yyy"));
    CHECK(generator_word(10, 4) == CyclicWord("xxxx"));
    CHECK(generator_word(12, 4) == CyclicWord("xxyy"));
    CHECK(generator_word(14, 4) == CyclicWord("yyyy"));
    CHECK_THROWS_AS(generator_word(15, 4), std::out_of_range);
    CHECK_THROWS_AS(expand_generator(15, 4), std::out_of_range);
}

TEST_CASE("generator expansion matches the traceless substitution") {
    // a3 = tr(x^2) - 1/4 tr(x)^2 and a4 = tr(xy) - 1/4 tr(x)tr(y).
    TracePoly a3 = expand_generator(3, 4);
    TracePoly expected3 = TracePoly::trace(CyclicWord("xx")) -
                          TracePoly::trace(CyclicWord("x")) * TracePoly::trace(CyclicWord("x")) *
                              Rational(1, 4);
    CHECK(a3 == expected3);
    TracePoly a4 = expand_generator(4, 4);
    TracePoly expected4 = TracePoly::trace(CyclicWord("xy")) -
                          TracePoly::trace(CyclicWord("x")) * TracePoly::trace(CyclicWord("y")) *
                              Rational(1, 4);
    CHECK(a4 == expected4);
    CHECK(expand_generator(1, 4) == TracePoly::trace(CyclicWord("x")));

    // Numeric agreement: the expansion evaluated at (X, Y) equals the plain
    // trace evaluated at the traceless parts.
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        Matrix X = random_matrix(rng), Y = random_matrix(rng);
        Matrix A = traceless(X), B = traceless(Y);
        for (int i = 1; i <= 14; ++i) {
            TracePoly e = expand_generator(i, 4);
            Rational direct = i == 1   ? X.trace()
                              : i == 2 ? Y.trace()
                                       : eval_trace(generator_word(i, 4), A, B);
            CHECK(e.eval(X, Y) == direct);
        }
    }
}

TEST_CASE("poisson pairing calibration: {a1, a2} = n") {
    Rng rng(11);
    Matrix X = random_matrix(rng), Y = random_matrix(rng);
    CHECK(poisson_numeric(expand_generator(1, 4), expand_generator(2, 4), X, Y) == Rational(4));
    CHECK(poisson_numeric(expand_generator(2, 4), expand_generator(1, 4), X, Y) == Rational(-4));
}

TEST_CASE("poisson pairing equals the necklace bracket on single words") {
    Rng rng(13);
    const char* words[] = {"x", "y", "xx", "xy", "yy", "xxy", "xyy", "xxyy", "xyxy", "xxxy"};
    for (int t = 0; t < 200; ++t) {
        Matrix X = random_matrix(rng), Y = random_matrix(rng);
        CyclicWord u(words[rng.uniform(0, 9)]), v(words[rng.uniform(0, 9)]);
        Rational lhs = poisson_numeric(TracePoly::trace(u), TracePoly::trace(v), X, Y);
        Rational rhs = eval_wordsum(necklace_bracket(u, v), X, Y);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("poisson pairing is antisymmetric and Leibniz pointwise") {
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
        Matrix X = random_matrix(rng), Y = random_matrix(rng);
        TracePoly f = expand_generator(static_cast<int>(rng.uniform(3, 14)), 4);
        TracePoly g = expand_generator(static_cast<int>(rng.uniform(3, 14)), 4);
        TracePoly h = expand_generator(static_cast<int>(rng.uniform(3, 14)), 4);
        CHECK(poisson_numeric(f, g, X, Y) == -poisson_numeric(g, f, X, Y));
        // {f, gh} = {f,g} h + g {f,h}.
        Rational lhs = poisson_numeric(f, g * h, X, Y);
        Rational rhs = poisson_numeric(f, g, X, Y) * h.eval(X, Y) +
                       g.eval(X, Y) * poisson_numeric(f, h, X, Y);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("involution law pointwise: letter swap flips the pairing") {
    Rng rng(19);
    for (int t = 0; t < 25; ++t) {
        Matrix X = random_matrix(rng), Y = random_matrix(rng);
        TracePoly f = expand_generator(static_cast<int>(rng.uniform(3, 14)), 4);
        TracePoly g = expand_generator(static_cast<int>(rng.uniform(3, 14)), 4);
        Rational swapped = poisson_numeric(f.letters_swapped(), g.letters_swapped(), X, Y);
        Rational original = poisson_numeric(f, g, Y, X);
        CHECK(swapped == -original);
    }
}

TEST_CASE("pure-letter generators pair onto zero") {
    Rng rng(23);
    for (int t = 0; t < 10; ++t) {
        Matrix X = random_matrix(rng), Y = random_matrix(rng);
        for (int i : {3, 6, 10})
            for (int j : {3, 6, 10})
                CHECK(poisson_numeric(expand_generator(i, 4), expand_generator(j, 4), X, Y) ==
                      Rational(0));
    }
}
