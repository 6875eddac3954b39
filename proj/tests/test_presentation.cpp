#include <doctest.h>

#include "cmvar/presentation.hpp"

using namespace cmvar;

TEST_CASE("verify_cm on small samples, all sizes") {
    for (int n : {2, 3, 4}) {
        Report rep = verify_cm(n, 5, 123);
        CHECK(rep.all_pass());
    }
    CHECK_THROWS_AS(verify_cm(5, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_cm(1, 5, 0), std::invalid_argument);
}

TEST_CASE("verify_cm serial and openmp reports agree") {
    Report a = verify_cm(4, 6, 9, Exec::serial);
    Report b = verify_cm(4, 6, 9, Exec::openmp);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t k = 0; k < a.checks.size(); ++k) {
        CHECK(a.checks[k].name == b.checks[k].name);
        CHECK(a.checks[k].pass == b.checks[k].pass);
        CHECK(a.checks[k].witness == b.checks[k].witness);
    }
}

TEST_CASE("verify_com symbolic and sampled") {
    Report rep = verify_com(true, 3, 5);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 30); // 15 symbolic + 15 sampled
}

TEST_CASE("verify_brackets on a few points") {
    Report rep = verify_brackets(2, 7);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 2 + 91);
}

TEST_CASE("groebner criterion and mutation witness") {
    TermOrder ord = default_order();
    Report rep = groebner_report(ord, false);
    CHECK(rep.all_pass());

    // One flipped sign must break the Buchberger criterion with a witness.
    std::vector<Polynomial> catalogue = cm4_groebner_catalogue();
    Polynomial r2 = catalogue[1];
    Polynomial corrupted = r2 - Rational(2) * parse_polynomial("48*a6", a_ring());
    catalogue[1] = corrupted;
    GbCheckResult res = gb_check(catalogue, ord, Exec::openmp);
    CHECK(!res.pass);
    CHECK(!res.failures.empty());
}

TEST_CASE("hilbert report") {
    Report rep = hilbert_report(default_order(), Exec::openmp);
    CHECK(rep.all_pass());
}

TEST_CASE("basis report") {
    Report rep = basis_report(default_order());
    CHECK(rep.all_pass());
}

TEST_CASE("derive report") {
    Report rep = derive_report(default_order());
    CHECK(rep.all_pass());
}

TEST_CASE("discriminant report finds |c| = 72 and records the sign") {
    Report rep = discriminant_report();
    CHECK(rep.all_pass());
    REQUIRE(rep.checks.size() == 2);
    CHECK(rep.checks[1].witness.find("72") != std::string::npos);
}

TEST_CASE("discriminant sample value") {
    // Centered power sums of (0,1,2,3): a3 = 5, a6 = 0, a10 = 41/4, and
    // w1 = -10368 = -72 * 144 where 144 is the squared-difference product.
    RingPtr lm = lambda_mu_ring(4);
    std::vector<Polynomial> gens = symbolic_com_generators(4, lm);
    std::vector<Rational> at{Rational(0), Rational(1), Rational(2), Rational(3),
                             Rational(0), Rational(0), Rational(0), Rational(0)};
    CHECK(gens[2].eval(at) == Rational(5));
    CHECK(gens[5].eval(at) == Rational(0));
    CHECK(gens[9].eval(at) == Rational(41, 4));
    Polynomial w1 = parse_polynomial("288*a10^3 - 288*a10^2*a3^2 + 90*a10*a3^4 - 9*a3^6"
                                     " - 144*a10*a3*a6^2 + 68*a3^3*a6^2 + 24*a6^4",
                                     a_ring());
    std::vector<Rational> avals(14, Rational(0));
    avals[2] = Rational(5);
    avals[9] = Rational(41, 4);
    CHECK(w1.eval(avals) == Rational(-10368));
}

TEST_CASE("jacobi report with a few triples") {
    Report rep = jacobi_report(5, 11, default_order());
    CHECK(rep.all_pass());
}

TEST_CASE("identities report, serial equals openmp") {
    Report a = identities_report(50, 3, 13, Exec::serial);
    Report b = identities_report(50, 3, 13, Exec::openmp);
    CHECK(a.all_pass());
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t k = 0; k < a.checks.size(); ++k) CHECK(a.checks[k].pass == b.checks[k].pass);
}
