#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynstab/json_io.hpp"
#include "dynstab/laurent.hpp"
#include "dynstab/ratmatrix.hpp"
#include "test_util.hpp"

using namespace dynstab;

TEST_CASE("poly basics and canonical order") {
    auto vt = make_table(2, 1);
    Poly p = lam(vt) + yv(vt);
    CHECK(p.str() == "lambda + y");
    Poly q = (zv(vt, 1) - zv(vt, 2)) * (zv(vt, 1) + zv(vt, 2));
    CHECK(q == zv(vt, 1) * zv(vt, 1) - zv(vt, 2) * zv(vt, 2));
    CHECK(q.total_degree() == 2);
    CHECK(q.is_homogeneous());
    CHECK(Poly(vt).is_zero());
    CHECK(Poly::constant(vt, 0).is_zero());
}

TEST_CASE("ratf arithmetic: reciprocal cancellation") {
    auto vt = make_table(2, 1);
    RatF a(lam(vt) + yv(vt), lam(vt));
    RatF b(lam(vt), lam(vt) + yv(vt));
    RatF prod = a * b;
    CHECK(prod.equals(RatF::one(vt)));
    CHECK(prod.num().is_one());
    CHECK(prod.den().is_one());
}

TEST_CASE("ratf arithmetic: additive identity keeps canonical form") {
    auto vt = make_table(2, 1);
    RatF f(zv(vt, 1) - zv(vt, 2), zv(vt, 1) - zv(vt, 2) - yv(vt));
    RatF g = f + RatF::zero(vt);
    CHECK(g.equals(f));
    CHECK(g.num() == f.num());
    CHECK(g.den() == f.den());
}

TEST_CASE("ratf arithmetic: partial fractions recombine") {
    auto vt = make_table(2, 1);
    RatF f = RatF(Poly::constant(vt, 1), lam(vt)) - RatF(Poly::constant(vt, 1), lam(vt) + yv(vt));
    RatF expect(yv(vt), lam(vt) * (lam(vt) + yv(vt)));
    CHECK(f.equals(expect));
    CHECK(f.num() == expect.num());
    CHECK(f.den() == expect.den());
}

TEST_CASE("ratf division by zero") {
    auto vt = make_table(2, 1);
    RatF f = RatF::one(vt);
    CHECK_THROWS_AS(f / RatF::zero(vt), std::domain_error);
}

TEST_CASE("ratf_equal independent of cancellation state") {
    auto vt = make_table(2, 1);
    RatF a(lam(vt) * lam(vt) - yv(vt) * yv(vt), lam(vt) - yv(vt));
    RatF b = rf(lam(vt) + yv(vt));
    CHECK(a.equals(b));
    RatF c(lam(vt), lam(vt) - yv(vt));
    RatF d(lam(vt), lam(vt) + yv(vt));
    CHECK(!c.equals(d));
}

TEST_CASE("scalar normalization") {
    auto vt = make_table(2, 1);
    RatF f(mpq_class(2) * lam(vt), mpq_class(2) * yv(vt));
    CHECK(f.num() == lam(vt));
    CHECK(f.den() == yv(vt));
}

TEST_CASE("substitute") {
    auto vt = make_table(2, 1);
    SUBCASE("t1 -> z2 kills t1 - z2") {
        RatF f = rf(tv(vt, 1) - zv(vt, 2));
        RatF g = f.substitute_poly({{vt->t(1), zv(vt, 2)}});
        CHECK(g.is_zero());
    }
    SUBCASE("t1 -> z1 in t1 - z1 + y") {
        RatF f = rf(tv(vt, 1) - zv(vt, 1) + yv(vt));
        RatF g = f.substitute_poly({{vt->t(1), zv(vt, 1)}});
        CHECK(g.equals(rf(yv(vt))));
    }
    SUBCASE("explicit n=2 weight polynomial at t1 -> z2") {
        // y (t1 - z1 + y)(lambda + t1 - z2) evaluated at t1 = z2
        Poly wexp = yv(vt) * (tv(vt, 1) - zv(vt, 1) + yv(vt)) * (lam(vt) + tv(vt, 1) - zv(vt, 2));
        RatF g = rf(wexp).substitute_poly({{vt->t(1), zv(vt, 2)}});
        Poly expect = lam(vt) * yv(vt) * (zv(vt, 2) - zv(vt, 1) + yv(vt));
        CHECK(g.equals(rf(expect)));
    }
    SUBCASE("vanishing denominator is an error") {
        RatF f(Poly::constant(vt, 1), tv(vt, 1) - zv(vt, 2));
        CHECK_THROWS_AS(f.substitute_poly({{vt->t(1), zv(vt, 2)}}), std::domain_error);
    }
}

TEST_CASE("shift_lambda") {
    auto vt = make_table(2, 1);
    CHECK(rf(lam(vt)).shift_lambda(1).equals(rf(lam(vt) + yv(vt))));
    RatF f(lam(vt) - yv(vt), lam(vt));
    RatF expect(lam(vt) - mpq_class(2) * yv(vt), lam(vt) - yv(vt));
    CHECK(f.shift_lambda(-1).equals(expect));

    std::mt19937 rng(12345);
    for (int i = 0; i < 40; ++i) {
        RatF r = testutil::random_ratf(rng, vt);
        CHECK(r.shift_lambda(1).shift_lambda(-1).equals(r));
    }
}

TEST_CASE("swap_z") {
    auto vt = make_table(3, 1);
    Poly d = zv(vt, 1) - zv(vt, 2);
    CHECK(rf(d).swap_vars(vt->z(1), vt->z(2)).equals(rf(zv(vt, 2) - zv(vt, 1))));
    Poly s = zv(vt, 1) * zv(vt, 2);
    CHECK(rf(s).swap_vars(vt->z(1), vt->z(2)).equals(rf(s)));

    std::mt19937 rng(777);
    for (int i = 0; i < 40; ++i) {
        RatF r = testutil::random_ratf(rng, vt);
        CHECK(r.swap_vars(vt->z(1), vt->z(3)).swap_vars(vt->z(1), vt->z(3)).equals(r));
    }
}

TEST_CASE("shift_lambda is a ring automorphism commuting with swap_z") {
    auto vt = make_table(3, 1);
    std::mt19937 rng(999);
    for (int i = 0; i < 25; ++i) {
        RatF a = testutil::random_ratf(rng, vt);
        RatF b = testutil::random_ratf(rng, vt);
        CHECK((a * b).shift_lambda(2).equals(a.shift_lambda(2) * b.shift_lambda(2)));
        CHECK((a + b).shift_lambda(-1).equals(a.shift_lambda(-1) + b.shift_lambda(-1)));
        CHECK(a.shift_lambda(1).swap_vars(vt->z(1), vt->z(2)).equals(
            a.swap_vars(vt->z(1), vt->z(2)).shift_lambda(1)));
    }
}

TEST_CASE("ring axioms on random values") {
    auto vt = make_table(2, 2);
    std::mt19937 rng(4242);
    for (int i = 0; i < 25; ++i) {
        RatF a = testutil::random_ratf(rng, vt);
        RatF b = testutil::random_ratf(rng, vt);
        RatF c = testutil::random_ratf(rng, vt);
        CHECK(((a + b) + c).equals(a + (b + c)));
        CHECK(((a * b) * c).equals(a * (b * c)));
        CHECK((a * (b + c)).equals(a * b + a * c));
        CHECK((a + b).equals(b + a));
        CHECK((a * b).equals(b * a));
    }
}

TEST_CASE("laurent expansion at infinity") {
    auto vt = make_table(2, 1);
    SUBCASE("geometric series") {
        RatF f(wv(vt) - zv(vt, 1) + yv(vt), wv(vt) - zv(vt, 1));
        auto l = laurent_expand(f, vt->w(), 2);
        CHECK(l.coeff(0).equals(RatF::one(vt)));
        CHECK(l.coeff(1).equals(rf(yv(vt))));
        CHECK(l.coeff(2).equals(rf(yv(vt) * zv(vt, 1))));
    }
    SUBCASE("constant") {
        auto l = laurent_expand(RatF::one(vt), vt->w(), 3);
        CHECK(l.coeff(0).equals(RatF::one(vt)));
        for (int s = 1; s <= 3; ++s) CHECK(l.coeff(s).is_zero());
    }
    SUBCASE("shifted pole") {
        RatF f(wv(vt) - zv(vt, 1), wv(vt) - zv(vt, 1) - yv(vt));
        auto l = laurent_expand(f, vt->w(), 1);
        CHECK(l.coeff(0).equals(RatF::one(vt)));
        CHECK(l.coeff(1).equals(rf(yv(vt))));
    }
    SUBCASE("pole at infinity rejected") {
        RatF f(wv(vt) * wv(vt), wv(vt) - zv(vt, 1));
        CHECK_THROWS_AS(laurent_expand(f, vt->w(), 1), std::domain_error);
    }
    SUBCASE("truncated multiplication is a ring homomorphism") {
        std::mt19937 rng(31415);
        const int S = 3;
        for (int i = 0; i < 12; ++i) {
            // rational functions regular at w = infinity
            Poly d1 = (wv(vt) - zv(vt, 1)) * (wv(vt) - zv(vt, 2) - yv(vt));
            Poly d2 = wv(vt) - zv(vt, 2);
            Poly n1 = testutil::random_poly(rng, vt);
            Poly n2 = testutil::random_poly(rng, vt);
            // cap w-degree of numerators
            while (n1.degree_in(vt->w()) > 2) n1 = testutil::random_poly(rng, vt);
            while (n2.degree_in(vt->w()) > 1) n2 = testutil::random_poly(rng, vt);
            RatF f(n1, d1), g(n2, d2);
            auto lf = laurent_expand(f, vt->w(), S);
            auto lg = laurent_expand(g, vt->w(), S);
            auto lfg = laurent_expand(f * g, vt->w(), S);
            CHECK(lfg.equals(lf.mul(lg)));
        }
    }
}

TEST_CASE("matrix inverse") {
    auto vt = make_table(2, 1);
    SUBCASE("identity") {
        RatMatrix m = RatMatrix::identity(vt, 2);
        CHECK(m.inverse().equals(m));
    }
    SUBCASE("diagonal") {
        RatMatrix m(vt, 2, 2);
        m.set(0, 0, rf(lam(vt)));
        m.set(1, 1, rf(lam(vt) - yv(vt)));
        RatMatrix inv = m.inverse();
        CHECK(inv.at(0, 0).equals(RatF(Poly::constant(vt, 1), lam(vt))));
        CHECK(inv.at(1, 1).equals(RatF(Poly::constant(vt, 1), lam(vt) - yv(vt))));
        CHECK(inv.at(0, 1).is_zero());
        CHECK((m * inv).is_identity());
    }
    SUBCASE("random matrices verify M*Minv = Minv*M = I") {
        std::mt19937 rng(2718);
        for (int trial = 0; trial < 8; ++trial) {
            RatMatrix m(vt, 3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m.set(i, j, testutil::random_ratf(rng, vt));
            RatF det = m.determinant();
            if (det.is_zero()) continue;
            RatMatrix inv = m.inverse();
            CHECK((m * inv).is_identity());
            CHECK((inv * m).is_identity());
        }
    }
    SUBCASE("singular matrix throws") {
        RatMatrix m(vt, 2, 2);
        m.set(0, 0, rf(lam(vt)));
        m.set(1, 0, rf(lam(vt)));
        CHECK_THROWS_AS(m.inverse(), std::domain_error);
    }
}

TEST_CASE("divide_exact") {
    auto vt = make_table(3, 1);
    Poly d = zv(vt, 1) - zv(vt, 2);
    auto q = (d * d).divide_exact(d);
    REQUIRE(q.has_value());
    CHECK(*q == d);
    CHECK(!(zv(vt, 1) - zv(vt, 2)).divide_exact(zv(vt, 1) - zv(vt, 3)).has_value());
}

TEST_CASE("json round trip is bit exact") {
    auto vt = make_table(2, 2);
    std::mt19937 rng(5150);
    for (int i = 0; i < 20; ++i) {
        Poly p = testutil::random_poly(rng, vt);
        auto j = poly_to_json(p);
        CHECK(poly_from_json(vt, j) == p);
        auto text = j.dump();
        CHECK(poly_to_json(poly_from_json(vt, nlohmann::json::parse(text))).dump() == text);

        RatF f = testutil::random_ratf(rng, vt);
        auto jf = ratf_to_json(f);
        RatF back = ratf_from_json(vt, jf);
        CHECK(back.equals(f));
        CHECK(ratf_to_json(back).dump() == jf.dump());
    }
}
