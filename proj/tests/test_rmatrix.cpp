#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynstab/rmatrix.hpp"
#include "test_util.hpp"

using namespace dynstab;

namespace {

TensorVector random_vector(std::mt19937& rng, const VarTablePtr& vt, int slots) {
    TensorVector v(vt, slots);
    for (const auto& I : all_subsets_all_k(slots))
        if (std::uniform_int_distribution<int>(0, 1)(rng))
            v.add(I, testutil::random_ratf(rng, vt));
    return v;
}

}  // namespace

TEST_CASE("rmat entries") {
    auto vt = make_table(2, 1);
    RatF l = rf(lam(vt)), z = rf(zv(vt, 1)), y = rf(yv(vt));
    RatMatrix R = rmat(vt, l, z);
    CHECK(R.at(0, 0).equals(RatF::one(vt)));
    CHECK(R.at(3, 3).equals(RatF::one(vt)));
    CHECK(R.at(0, 1).is_zero());
    CHECK(R.at(1, 1).equals((l + y) * z / (l * (z - y))));
    CHECK(R.at(1, 2).equals(-(l + z) * y / (l * (z - y))));
    CHECK(R.at(2, 1).equals(-(l - z) * y / (l * (z - y))));
    CHECK(R.at(2, 2).equals((l - y) * z / (l * (z - y))));
}

TEST_CASE("h_sum") {
    CHECK(h_sum(SubsetIndex(3, {1, 2, 3}), {1, 2, 3}) == 3);
    CHECK(h_sum(SubsetIndex(3, {}), {1, 2, 3}) == -3);
    CHECK(h_sum(SubsetIndex(3, {1}), {2, 3}) == -2);
    CHECK(h_total(SubsetIndex(4, {2})) == -2);
}

TEST_CASE("apply_r basics") {
    auto vt = make_table(2, 1);
    RatF l = rf(lam(vt)), y = rf(yv(vt));
    RatF dz = rf(zv(vt, 1) - zv(vt, 2));

    SUBCASE("corner component acts as identity") {
        TensorVector e = TensorVector::basis(vt, SubsetIndex(2, {}));
        CHECK(apply_r(e, 1, 2, l, {}, dz).equals(e));
        TensorVector f = TensorVector::basis(vt, SubsetIndex(2, {1, 2}));
        CHECK(apply_r(f, 1, 2, l, {}, dz).equals(f));
    }
    SUBCASE("column convention on v1xv2") {
        TensorVector e = TensorVector::basis(vt, SubsetIndex(2, {1}));
        TensorVector r = apply_r(e, 1, 2, l, {}, dz);
        RatF den = l * (dz - y);
        CHECK(r.coeff(SubsetIndex(2, {1})).equals((l + y) * dz / den));
        CHECK(r.coeff(SubsetIndex(2, {2})).equals(-(l - dz) * y / den));
    }
    SUBCASE("inversion relation, symbolic") {
        CHECK(check_inversion(vt));
    }
    SUBCASE("matrix inverse agrees with the swapped placement at -z") {
        RatF z = rf(zv(vt, 1));
        RatMatrix R = rmat(vt, l, z);
        RatMatrix Rinv = R.inverse();
        RatMatrix Rswap = r_operator(vt, 2, 2, 1, l, {}, -z).full_matrix();
        CHECK(Rinv.equals(Rswap));
        CHECK((R * Rinv).is_identity());
    }
}

TEST_CASE("dynamical Yang-Baxter equation") {
    auto vt = make_table(3, 1);
    CHECK(check_ybe(vt));
}

TEST_CASE("s_tilde relations") {
    std::mt19937 rng(1618);
    SUBCASE("involution, n = 2..4") {
        for (int n = 2; n <= 4; ++n) {
            auto vt = make_table(n, 1);
            for (int trial = 0; trial < (n == 4 ? 2 : 4); ++trial) {
                TensorVector v = random_vector(rng, vt, n);
                for (int i = 1; i < n; ++i) CHECK(s_tilde(s_tilde(v, i), i).equals(v));
            }
        }
    }
    SUBCASE("braid relation at n = 3") {
        auto vt = make_table(3, 1);
        for (int trial = 0; trial < 3; ++trial) {
            TensorVector v = random_vector(rng, vt, 3);
            TensorVector a = s_tilde(s_tilde(s_tilde(v, 2), 1), 2);
            TensorVector b = s_tilde(s_tilde(s_tilde(v, 1), 2), 1);
            CHECK(a.equals(b));
        }
    }
    SUBCASE("braid relation at n = 4") {
        auto vt = make_table(4, 1);
        TensorVector v = random_vector(rng, vt, 4);
        for (int i = 1; i <= 2; ++i) {
            TensorVector a = s_tilde(s_tilde(s_tilde(v, i + 1), i), i + 1);
            TensorVector b = s_tilde(s_tilde(s_tilde(v, i), i + 1), i);
            CHECK(a.equals(b));
        }
    }
    SUBCASE("commutation for distant indices at n = 4") {
        auto vt = make_table(4, 1);
        for (int trial = 0; trial < 2; ++trial) {
            TensorVector v = random_vector(rng, vt, 4);
            CHECK(s_tilde(s_tilde(v, 1), 3).equals(s_tilde(s_tilde(v, 3), 1)));
        }
    }
    SUBCASE("conjugation of the z multiplication operators") {
        for (int n = 2; n <= 3; ++n) {
            auto vt = make_table(n, 1);
            TensorVector v = random_vector(rng, vt, n);
            for (int i = 1; i < n; ++i) {
                auto mul = [&](const TensorVector& u, int a) { return u.scaled(rf(zv(vt, a))); };
                CHECK(s_tilde(mul(v, i), i).equals(mul(s_tilde(v, i), i + 1)));
                CHECK(s_tilde(mul(v, i + 1), i).equals(mul(s_tilde(v, i), i)));
                for (int j = 1; j <= n; ++j)
                    if (j != i && j != i + 1)
                        CHECK(s_tilde(mul(v, j), i).equals(mul(s_tilde(v, i), j)));
            }
        }
    }
}

TEST_CASE("s_hat") {
    auto vt = make_table(3, 1);
    RatF mu = rf(lam(vt) - mpq_class(2) * yv(vt));
    RatF y = rf(yv(vt));
    SUBCASE("symmetric functions are scaled by (mu+y)/(mu-y)") {
        RatF f = rf(zv(vt, 1) * zv(vt, 2) + zv(vt, 3));
        CHECK(s_hat(1, mu, f).equals((mu + y) / (mu - y) * f));
    }
    SUBCASE("quadratic identity on random functions") {
        std::mt19937 rng(2024);
        RatF c = (mu + y) / (mu - y);
        for (int trial = 0; trial < 10; ++trial) {
            RatF f = testutil::random_ratf(rng, vt);
            RatF u = s_hat(1, mu, f) - c * f;
            CHECK((s_hat(1, mu, u) + u).is_zero());
        }
    }
    SUBCASE("inverse round trip") {
        std::mt19937 rng(2025);
        for (int trial = 0; trial < 6; ++trial) {
            RatF f = testutil::random_ratf(rng, vt);
            CHECK(s_hat_inverse(2, mu, s_hat(2, mu, f)).equals(f));
            CHECK(s_hat(2, mu, s_hat_inverse(2, mu, f)).equals(f));
        }
    }
    SUBCASE("mu = y is rejected") {
        RatF f = rf(zv(vt, 1));
        CHECK_THROWS_AS(s_hat(1, y, f), std::domain_error);
    }
}
