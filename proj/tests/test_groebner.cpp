#include <doctest.h>

#include "cmvar/groebner.hpp"

using namespace cmvar;

namespace {

RingPtr xy_ring() {
    static RingPtr ring = make_ring({"x", "y"}, {1, 1});
    return ring;
}

Polynomial pp(const char* text) { return parse_polynomial(text, xy_ring()); }

} // namespace

TEST_CASE("normal form: single steps and full reduction") {
    TermOrder ord = TermOrder::wdegrevlex(xy_ring());
    CHECK(normal_form(pp("x^2"), {pp("x")}, ord).is_zero());
    // One division step by hand: x^2 y + y = y (x^2 - 1) + 2y.
    CHECK(normal_form(pp("x^2*y + y"), {pp("x^2 - 1")}, ord) == pp("2*y"));
    CHECK(normal_form(pp("y"), {pp("x")}, ord) == pp("y"));
    CHECK_THROWS_AS(normal_form(pp("x"), {}, ord), std::invalid_argument);
}

TEST_CASE("division invariant: remainder plus quotients reassemble the input") {
    TermOrder ord = TermOrder::wdegrevlex(xy_ring());
    std::vector<Polynomial> G{pp("x^2 - y"), pp("x*y - 1"), pp("y^3 + x")};
    Polynomial f = pp("x^4*y^2 - 3*x^2*y + 5*y^4 - x + 2");
    DivisionResult res = divide(f, G, ord);
    Polynomial rebuilt = res.remainder;
    for (size_t i = 0; i < G.size(); ++i) rebuilt += res.quotients[i] * G[i];
    CHECK(rebuilt == f);
    // No remainder term is divisible by any leading term.
    for (const auto& [m, c] : res.remainder.terms())
        for (const auto& g : G) CHECK(!g.leading_term(ord).mono.divides(m));
}

TEST_CASE("s-polynomial") {
    TermOrder ord = TermOrder::wdegrevlex(xy_ring());
    Polynomial f = pp("x^2 - y"), g = pp("y^2 - 1");
    CHECK(s_polynomial(f, f, ord).is_zero());
    CHECK(s_polynomial(pp("x^2"), pp("x*y"), ord).is_zero());
    // By hand: lcm = x^2 y^2, S = y^2 (x^2 - y) - x^2 (y^2 - 1) = x^2 - y^3.
    CHECK(s_polynomial(f, g, ord) == pp("x^2 - y^3"));
    CHECK_THROWS_AS(s_polynomial(Polynomial(xy_ring()), g, ord), std::invalid_argument);
}

TEST_CASE("gb_check: pass, fail, and witness") {
    TermOrder ord = TermOrder::wdegrevlex(xy_ring());
    CHECK(gb_check({pp("x"), pp("y")}, ord).pass); // coprime leading terms
    GbCheckResult bad = gb_check({pp("x^2 - y"), pp("x")}, ord);
    CHECK(!bad.pass);
    REQUIRE(bad.failures.size() == 1);
    CHECK(bad.failures[0].remainder == pp("y")); // S-pair leaves y
}

TEST_CASE("gb_check serial and openmp agree") {
    TermOrder ord = TermOrder::wdegrevlex(xy_ring());
    std::vector<Polynomial> G{pp("x^2 - y"), pp("x*y - 1"), pp("x^3 + y^2")};
    GbCheckResult a = gb_check(G, ord, Exec::serial);
    GbCheckResult b = gb_check(G, ord, Exec::openmp);
    CHECK(a.pass == b.pass);
    REQUIRE(a.failures.size() == b.failures.size());
    for (size_t k = 0; k < a.failures.size(); ++k) {
        CHECK(a.failures[k].i == b.failures[k].i);
        CHECK(a.failures[k].j == b.failures[k].j);
        CHECK(a.failures[k].remainder == b.failures[k].remainder);
    }
}

TEST_CASE("buchberger completes and reduces") {
    TermOrder ord = TermOrder::wdegrevlex(xy_ring());
    CHECK(buchberger({pp("x")}, ord) == std::vector<Polynomial>{pp("x")});

    std::vector<Polynomial> F{pp("x^2 - y"), pp("y^2 - 1")};
    std::vector<Polynomial> gb = buchberger(F, ord);
    CHECK(gb_check(gb, ord).pass);
    for (const auto& f : F) CHECK(normal_form(f, gb, ord).is_zero());

    // A case that genuinely needs completion.
    std::vector<Polynomial> F2{pp("x^2 + y"), pp("x*y + x")};
    std::vector<Polynomial> gb2 = buchberger(F2, ord);
    CHECK(gb_check(gb2, ord).pass);
    for (const auto& f : F2) CHECK(normal_form(f, gb2, ord).is_zero());
    CHECK(gb2.size() > F2.size());
    // Idempotent: rerunning on the output returns it unchanged.
    CHECK(buchberger(gb2, ord) == gb2);
}
