#include <doctest.h>

#include "cmvar/catalogue.hpp"
#include "cmvar/rng.hpp"
#include "cmvar/trace_poly.hpp"
#include "cmvar/varieties.hpp"

using namespace cmvar;

namespace {

Polynomial av(int i) { return Polynomial::variable(a_ring(), i - 1); }

Polynomial random_a_poly(Rng& rng, int terms = 3) {
    Polynomial p(a_ring(), Rational(rng.uniform(-3, 3)));
    for (int t = 0; t < terms; ++t) {
        Monomial m(14);
        for (int k = 0; k < 2; ++k) m[rng.uniform(2, 13)] += 1;
        p.add_term(m, Rational(rng.uniform(-5, 5)));
    }
    return p;
}

} // namespace

TEST_CASE("relation sets have the expected shapes") {
    CHECK(relations(RelationSetName::CM2).polys.size() == 1);
    CHECK(relations(RelationSetName::CM3).polys.size() == 5);
    CHECK(relations(RelationSetName::CM4).polys.size() == 12);
    CHECK(relations(RelationSetName::CM4_EXTRA).polys.size() == 3);
    CHECK(relations(RelationSetName::COM4).polys.size() == 15);
    CHECK(cm4_groebner_catalogue().size() == 15);
    CHECK_THROWS_AS(relations(RelationSetName::CM4).by_name("zz"), std::out_of_range);

    // Export grammar round-trip for every stored polynomial.
    for (auto set : {RelationSetName::CM4, RelationSetName::CM4_EXTRA, RelationSetName::COM4}) {
        for (const auto& [name, p] : relations(set).polys)
            CHECK(parse_polynomial(p.str(), a_ring()) == p);
    }
}

TEST_CASE("r1 matches its closed form") {
    Polynomial r1 = relations(RelationSetName::CM4).by_name("r1");
    Polynomial expected = av(3) * (Polynomial(a_ring(), Rational(8)) + av(4) * av(4) - av(3) * av(5)) -
                          Rational(2) * (av(7) * av(7) - av(6) * av(8)) +
                          Rational(2) * (av(3) * av(12) - Rational(2) * av(4) * av(11) + av(5) * av(10));
    CHECK(r1 == expected);
}

TEST_CASE("CM3 relations specialize with v") {
    RelationSet v0 = relations(RelationSetName::CM3, Rational(0));
    RelationSet v1 = relations(RelationSetName::CM3, Rational(1));
    CHECK(v0.by_name("r3") == v1.by_name("r3") - Rational(9) * av(3));
    CHECK(v0.by_name("r1") == v1.by_name("r1")); // v-independent
}

TEST_CASE("fourier acts as expected") {
    CHECK(fourier(av(12)) == av(12));
    CHECK(fourier(av(4)) == -av(4));
    CHECK(fourier(av(1)) == av(2));
    CHECK(fourier(av(2)) == -av(1));

    // Order four.
    Rng rng(37);
    for (int t = 0; t < 20; ++t) {
        Polynomial f = random_a_poly(rng);
        CHECK(fourier(fourier(fourier(fourier(f)))) == f);
    }
}

TEST_CASE("fourier sends the r-relations to the t-relations up to sign") {
    RelationSet cm = relations(RelationSetName::CM4);
    RelationSet extra = relations(RelationSetName::CM4_EXTRA);
    auto poly = [&](const std::string& n) {
        for (const auto& [name, p] : cm.polys)
            if (name == n) return p;
        return extra.by_name(n);
    };
    for (int i = 1; i <= 6; ++i) {
        Polynomial image = fourier(poly("r" + std::to_string(i)));
        Polynomial target = poly("t" + std::to_string(i));
        auto ratio = image.scalar_ratio_to(target);
        REQUIRE(ratio.has_value());
        CHECK(ratio->abs() == Rational(1));
    }
    CHECK(fourier(poly("r1")) == poly("t1")); // exact for the defining relation
    for (int i = 1; i <= 3; ++i) {
        Polynomial s = poly("s" + std::to_string(i));
        auto ratio = fourier(s).scalar_ratio_to(s);
        REQUIRE(ratio.has_value());
        CHECK(ratio->abs() == Rational(1));
    }
}

TEST_CASE("involution is an involution and fixes a4, a12") {
    CHECK(involution(av(4)) == av(4));
    CHECK(involution(av(12)) == av(12));
    CHECK(involution(av(3)) == av(5));
    Rng rng(41);
    for (int t = 0; t < 20; ++t) {
        Polynomial f = random_a_poly(rng);
        CHECK(involution(involution(f)) == f);
    }
}

TEST_CASE("bracket table: completion and specific entries") {
    const BracketTable& table = BracketTable::standard();
    CHECK(table.gaps().empty());
    CHECK(table.involution_law_holds());

    CHECK(table.entry(1, 2) == Polynomial(a_ring(), Rational(4)));
    CHECK(table.entry(3, 4) == Rational(2) * av(3));
    CHECK(table.entry(3, 5) == Rational(4) * av(4));
    CHECK(table.entry(3, 13) == Rational(6) * av(12) + Polynomial(a_ring(), Rational(12)));
    CHECK(table.entry(7, 8) ==
          Rational(3) * av(12) + Polynomial(a_ring(), Rational(12)) - av(4) * av(4) +
              Rational(1, 4) * av(3) * av(5));
    // Antisymmetry accessor and involution-derived entries.
    CHECK(table.entry(5, 3) == -table.entry(3, 5));
    CHECK(table.entry(4, 5) == Rational(2) * av(5));
    CHECK(table.entry(5, 6) == Rational(-6) * av(7));
    CHECK(table.entry(1, 7).is_zero());
    CHECK(table.entry(3, 6).is_zero());  // both from the first letter
    CHECK(table.entry(5, 14).is_zero()); // both from the second letter
}

TEST_CASE("table_bracket is antisymmetric, Leibniz, and extends the table") {
    const BracketTable& table = BracketTable::standard();
    CHECK(table_bracket(av(3), av(5)) == table.entry(3, 5));
    CHECK(table_bracket(av(3), av(3)).is_zero());

    // {a3 a5, a4} by hand from {a3,a4} = 2a3 and {a5,a4} = -2a5.
    Polynomial lhs = table_bracket(av(3) * av(5), av(4));
    Polynomial expected = av(5) * (Rational(2) * av(3)) + av(3) * (Rational(-2) * av(5));
    CHECK(lhs == expected);

    Rng rng(43);
    for (int t = 0; t < 10; ++t) {
        Polynomial f = random_a_poly(rng), g = random_a_poly(rng), h = random_a_poly(rng);
        CHECK(table_bracket(f, g) == -table_bracket(g, f));
        CHECK(table_bracket(f, g * h) ==
              table_bracket(f, g) * h + g * table_bracket(f, h));
    }
}

TEST_CASE("table agrees with the numeric pairing at CM points") {
    const BracketTable& table = BracketTable::standard();
    Rng rng(47);
    VarietyPoint pt = random_cm_point(4, rng);
    GeneratorPoint gens = generators_at(pt);
    // Tabulated rows, one sample each (the full sweep lives in the suite).
    for (auto [i, j] : {std::pair<int, int>{3, 4}, {3, 13}, {6, 9}, {7, 8}, {10, 14}, {11, 13}}) {
        Rational numeric =
            poisson_numeric(expand_generator(i, 4), expand_generator(j, 4), pt.X, pt.Y);
        CHECK(numeric == table.entry(i, j).eval(gens.values));
    }
}

TEST_CASE("jacobiator values") {
    Polynomial jac = jacobiator(5, 10, 12);
    Polynomial r1 = relations(RelationSetName::CM4).by_name("r1");
    CHECK(jac == r1 * Rational(8));
    CHECK(jacobiator(1, 2, 3).is_zero());

    // On the quotient the bracket is Poisson: jacobiators reduce to zero.
    TermOrder ord = default_order();
    std::vector<Polynomial> gb = cm4_groebner_catalogue();
    CHECK(normal_form(jacobiator(3, 4, 5), gb, ord).is_zero());
}

TEST_CASE("order specs") {
    TermOrder ord = order_from_spec("default");
    CHECK(ord.describe(a_ring()).substr(0, 22) == "wdegrevlex(a3 > a4 > a");
    TermOrder custom = order_from_spec("a14,a13,a12,a11,a10,a9,a8,a7,a6,a5,a4,a3");
    CHECK(custom.describe(a_ring()).substr(0, 16) == "wdegrevlex(a14 >");
    CHECK_THROWS_AS(order_from_spec("zz"), std::invalid_argument);
}
