#include <doctest.h>

#include "cmvar/catalogue.hpp"
#include "cmvar/trace_poly.hpp"
#include "cmvar/varieties.hpp"

using namespace cmvar;

namespace {

std::vector<Rational> rl(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.push_back(Rational(x));
    return out;
}

} // namespace

TEST_CASE("cm_point: Moser construction") {
    VarietyPoint pt = cm_point(4, rl({0, 1, 2, 3}), rl({0, 0, 0, 0}));
    CHECK(pt.valid());
    Matrix m = commutator(pt.X, pt.Y) + Matrix::identity(4);
    CHECK(m == Matrix::ones(4, 4));
    CHECK(rank(m) == 1);
    CHECK(commutator(pt.X, pt.Y).trace().is_zero());
    REQUIRE(pt.witness.has_value());
    CHECK((pt.witness->w * pt.witness->v).at(0, 0) == Rational(4));

    CHECK_THROWS_AS(cm_point(4, rl({0, 0, 1, 2}), rl({0, 0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(cm_point(4, rl({0, 1, 2}), rl({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("cm_point: n = 2 relation value") {
    VarietyPoint pt = cm_point(2, rl({0, 1}), rl({0, 0}));
    GeneratorPoint g = generators_at(pt);
    // a4^2 - a3 a5 - 1 = 0.
    CHECK(g.a(4) * g.a(4) - g.a(3) * g.a(5) - Rational(1) == Rational(0));
}

TEST_CASE("generators_at frozen values") {
    VarietyPoint pt = cm_point(4, rl({0, 1, 2, 3}), rl({0, 0, 0, 0}));
    GeneratorPoint g = generators_at(pt);
    CHECK(g.a(1) == Rational(6));
    CHECK(g.a(3) == Rational(5)); // tr(X^2) - tr(X)^2/4 = 14 - 9
    CHECK(g.a(4) == Rational(0));

    VarietyPoint zero = com_point(rl({0, 0, 0, 0}), rl({0, 0, 0, 0}));
    for (const Rational& v : generators_at(zero).values) CHECK(v.is_zero());

    VarietyPoint same = com_point(rl({0, 1, 2, 3}), rl({0, 1, 2, 3}));
    GeneratorPoint gs = generators_at(same);
    CHECK(gs.a(3) == Rational(5));
    CHECK(gs.a(4) == Rational(5));
    CHECK(gs.a(5) == Rational(5));

    VarietyPoint ones = com_point(rl({1, 1, 1, 1}), rl({1, 1, 1, 1}));
    GeneratorPoint go = generators_at(ones);
    for (int i = 3; i <= 14; ++i) CHECK(go.a(i).is_zero());
}

TEST_CASE("com_point basics") {
    CHECK_THROWS_AS(com_point(rl({1, 2}), rl({1})), std::invalid_argument);
    VarietyPoint pt = com_point(rl({0, 1, 2, 3}), rl({1, -1, 2, -2}));
    CHECK(pt.valid());
    // r1 - 8 a3 vanishes on commuting points.
    Polynomial rel = relations(RelationSetName::COM4).by_name("r1");
    CHECK(rel.eval(generators_at(pt).values).is_zero());
}

TEST_CASE("generator values are conjugation invariant") {
    Rng rng(29);
    VarietyPoint pt = random_cm_point(4, rng);
    GeneratorPoint base = generators_at(pt);
    for (int t = 0; t < 5; ++t) {
        Matrix g(4, 4);
        do {
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) g.at(r, c) = Rational(rng.uniform(-4, 4));
        } while (rank(g) < 4);
        Matrix gi = g.inverse();
        Matrix X = g * pt.X * gi, Y = g * pt.Y * gi;
        Matrix A = traceless(X), B = traceless(Y);
        CHECK(X.trace() == base.a(1));
        CHECK(Y.trace() == base.a(2));
        for (int i = 3; i <= 14; ++i)
            CHECK(eval_trace(generator_word(i, 4), A, B) == base.a(i));
    }
}

TEST_CASE("cm sampling varies nontrivially with every parameter") {
    std::vector<Rational> x = rl({0, 1, 2, 3}), p = rl({1, -2, 3, 5});
    GeneratorPoint base = generators_at(cm_point(4, x, p));
    for (int k = 0; k < 4; ++k) {
        auto x2 = x;
        x2[k] += Rational(7);
        GeneratorPoint moved = generators_at(cm_point(4, x2, p));
        CHECK(moved.values != base.values);
        auto p2 = p;
        p2[k] += Rational(7);
        GeneratorPoint moved_p = generators_at(cm_point(4, x, p2));
        CHECK(moved_p.values != base.values);
    }
}

TEST_CASE("symbolic commuting generators agree with numeric diagonal points") {
    RingPtr lm = lambda_mu_ring(4);
    std::vector<Polynomial> gens = symbolic_com_generators(4, lm);
    REQUIRE(gens.size() == 14);
    CHECK(gens[0] == parse_polynomial("l1 + l2 + l3 + l4", lm));

    std::vector<Rational> lambda = rl({0, 1, 2, 3}), mu = rl({1, -1, 2, -2});
    std::vector<Rational> at = lambda;
    at.insert(at.end(), mu.begin(), mu.end());
    GeneratorPoint numeric = generators_at(com_point(lambda, mu));
    for (int i = 0; i < 14; ++i) CHECK(gens[i].eval(at) == numeric.values[i]);
}

TEST_CASE("off-variety sampler rejects both varieties and r1 detects it") {
    auto [X, Y] = random_offvariety_point(1);
    CHECK(!commutator(X, Y).is_zero());
    CHECK(rank(commutator(X, Y) + Matrix::identity(4)) != 1);
    // Deterministic per seed.
    auto [X2, Y2] = random_offvariety_point(1);
    CHECK(X == X2);
    CHECK(Y == Y2);

    Matrix A = traceless(X), B = traceless(Y);
    std::vector<Rational> vals{X.trace(), Y.trace()};
    for (int i = 3; i <= 14; ++i) vals.push_back(eval_trace(generator_word(i, 4), A, B));
    Polynomial r1 = relations(RelationSetName::CM4).by_name("r1");
    CHECK(!r1.eval(vals).is_zero());
}

TEST_CASE("negative control: commuting point violates the rank-one relation") {
    VarietyPoint pt = com_point(rl({0, 1, 2, 3}), rl({0, 0, 0, 0}));
    Polynomial r1 = relations(RelationSetName::CM4).by_name("r1");
    CHECK(r1.eval(generators_at(pt).values) == Rational(40)); // 8 a3 = 40
}

TEST_CASE("point json round-trip") {
    Rng rng(31);
    VarietyPoint pt = random_cm_point(4, rng);
    VarietyPoint back = point_from_json(point_to_json(pt));
    CHECK(back.valid());
    CHECK(back.X == pt.X);
    CHECK(back.Y == pt.Y);

    VarietyPoint cpt = com_point(rl({1, 2}), rl({3, 4}));
    VarietyPoint cback = point_from_json(point_to_json(cpt));
    CHECK(cback.valid());
    CHECK(cback.Y == cpt.Y);
}

TEST_CASE("identity check at a point") {
    VarietyPoint pt = cm_point(4, rl({0, 1, 2, 3}), rl({2, -1, 0, 4}));
    // tr(ABAB) = tr(A^2B^2) + 6 on rank-4 CM points.
    CHECK(verify_identity_at(WordSum::parse("xyxy"), WordSum::parse("xxyy + 3/2*1"), pt));
    CHECK(!verify_identity_at(WordSum::parse("xyxy"), WordSum::parse("xxyy"), pt));
}
