#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynstab/factors.hpp"

using namespace dynstab;

namespace {

int wnum_brute(int i, const SubsetIndex& I) {
    int acc = 0;
    for (int j = i + 1; j <= I.n; ++j) acc += I.contains(j) ? 1 : -1;
    return acc;
}

}  // namespace

TEST_CASE("wnum examples and brute force") {
    CHECK(wnum(2, SubsetIndex(6, {1, 2, 4})) == -2);
    CHECK(wnum(2, SubsetIndex(7, {1, 2, 4})) == -3);
    CHECK(wnum(3, SubsetIndex(3, {3})) == 0);
    CHECK_THROWS_AS(wnum(2, SubsetIndex(3, {1, 3})), std::invalid_argument);
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& I : all_subsets(n, k))
                for (int i : I.elems) CHECK(wnum(i, I) == wnum_brute(i, I));
}

TEST_CASE("subset plumbing") {
    SubsetIndex I(4, {1, 3});
    CHECK(I.str() == "{1,3}/4");
    CHECK(I.complement() == SubsetIndex(4, {2, 4}));
    CHECK(I.with(2) == SubsetIndex(4, {1, 2, 3}));
    CHECK(I.without(3) == SubsetIndex(4, {1}));
    CHECK(I.bitmask() == 0b0101u);
    auto s32 = all_subsets(3, 2);
    REQUIRE(s32.size() == 3);
    CHECK(s32[0] == SubsetIndex(3, {1, 2}));
    CHECK(s32[1] == SubsetIndex(3, {1, 3}));
    CHECK(s32[2] == SubsetIndex(3, {2, 3}));
}

TEST_CASE("perm plumbing") {
    Perm s = Perm::from_one_line({2, 3, 1});
    CHECK(s.str() == "2,3,1");
    CHECK(s.inverse().after(s).is_identity());
    CHECK(s.apply(SubsetIndex(3, {1, 2})) == SubsetIndex(3, {2, 3}));
    CHECK(Perm::longest(4).img == std::vector<int>{4, 3, 2, 1});
    CHECK_THROWS_AS(Perm::from_one_line({1, 1, 2}), std::invalid_argument);
    CHECK(all_perms(4).size() == 24);
}

TEST_CASE("leq_sigma examples") {
    Perm id2 = Perm::identity(2);
    CHECK(leq_sigma(SubsetIndex(2, {1}), SubsetIndex(2, {2}), id2));
    CHECK(!leq_sigma(SubsetIndex(2, {2}), SubsetIndex(2, {1}), id2));
    Perm s0 = Perm::longest(3);
    CHECK(leq_sigma(SubsetIndex(3, {3}), SubsetIndex(3, {1}), s0));
    for (int n = 1; n <= 3; ++n)
        for (const auto& sigma : all_perms(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& I : all_subsets(n, k)) CHECK(leq_sigma(I, I, sigma));
}

TEST_CASE("leq_sigma is a partial order (exhaustive n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& sigma : all_perms(n)) {
            for (int k = 0; k <= n; ++k) {
                auto subs = all_subsets(n, k);
                for (const auto& a : subs) {
                    CHECK(leq_sigma(a, a, sigma));
                    for (const auto& b : subs) {
                        if (leq_sigma(a, b, sigma) && leq_sigma(b, a, sigma)) CHECK(a == b);
                        for (const auto& c : subs)
                            if (leq_sigma(a, b, sigma) && leq_sigma(b, c, sigma))
                                CHECK(leq_sigma(a, c, sigma));
                    }
                }
            }
        }
    }
}

TEST_CASE("schubert_dim") {
    Perm id2 = Perm::identity(2);
    CHECK(schubert_dim(id2, SubsetIndex(2, {1})) == 0);
    CHECK(schubert_dim(id2, SubsetIndex(2, {2})) == 1);
    for (int n = 1; n <= 4; ++n) {
        Perm id = Perm::identity(n);
        for (int k = 0; k <= n; ++k) {
            std::vector<int> lo, hi;
            for (int i = 1; i <= k; ++i) lo.push_back(i);
            for (int i = n - k + 1; i <= n; ++i) hi.push_back(i);
            CHECK(schubert_dim(id, SubsetIndex(n, lo)) == 0);
            CHECK(schubert_dim(id, SubsetIndex(n, hi)) == k * (n - k));
            for (const auto& sigma : all_perms(n))
                for (const auto& I : all_subsets(n, k)) {
                    int l = schubert_dim(sigma, I);
                    CHECK(l >= 0);
                    CHECK(l <= k * (n - k));
                }
        }
    }
}

TEST_CASE("euler factors") {
    auto vt = make_table(3, 3);
    Perm id2 = Perm::identity(2);
    auto vt2 = make_table(2, 2);
    SubsetIndex I1(2, {1});
    CHECK(euler_factor(vt2, id2, I1, EulerKind::hor, EulerSign::minus) ==
          zv(vt2, 2) - zv(vt2, 1));
    CHECK(euler_factor(vt2, id2, I1, EulerKind::ver, EulerSign::minus).is_one());

    // product identities against the direct value-pair products, n <= 3
    for (int n = 2; n <= 3; ++n) {
        auto vtn = make_table(n, n);
        for (const auto& sigma : all_perms(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& I : all_subsets(n, k)) {
                    Poly hp = euler_factor(vtn, sigma, I, EulerKind::hor, EulerSign::plus);
                    Poly hm = euler_factor(vtn, sigma, I, EulerKind::hor, EulerSign::minus);
                    Poly R = r_product(vtn, I);
                    int e = k * (n - k);
                    Poly expect = (e % 2 == 0) ? R : -R;
                    CHECK(hp * hm == expect);
                    Poly vp = euler_factor(vtn, sigma, I, EulerKind::ver, EulerSign::plus);
                    Poly vm = euler_factor(vtn, sigma, I, EulerKind::ver, EulerSign::minus);
                    CHECK(vp * vm == q_product(vtn, I));
                }
    }
}

TEST_CASE("rq products") {
    auto vt = make_table(3, 3);
    auto vt2 = make_table(2, 2);
    auto [r2, q2] = rq_products(vt2, SubsetIndex(2, {1}));
    CHECK(r2 == zv(vt2, 1) - zv(vt2, 2));
    CHECK(q2 == zv(vt2, 1) - zv(vt2, 2) + yv(vt2));
    auto [re, qe] = rq_products(vt, SubsetIndex(3, {}));
    CHECK(re.is_one());
    CHECK(qe.is_one());
    auto [r3, q3] = rq_products(vt, SubsetIndex(3, {1, 3}));
    CHECK(r3 == (zv(vt, 1) - zv(vt, 2)) * (zv(vt, 3) - zv(vt, 2)));
    CHECK(q3 == (zv(vt, 1) - zv(vt, 2) + yv(vt)) * (zv(vt, 3) - zv(vt, 2) + yv(vt)));
}

TEST_CASE("c_factor") {
    auto vt2 = make_table(2, 2);
    CHECK(c_factor(vt2, Perm::identity(2), SubsetIndex(2, {1}), 0) == lam(vt2) + yv(vt2));
    CHECK(c_factor(vt2, Perm::identity(2), SubsetIndex(2, {}), 5).is_one());
    for (int n = 2; n <= 4; ++n) {
        auto vt = make_table(n, n);
        for (int i = 1; i <= n; ++i) {
            SubsetIndex I(n, {i});
            Poly c01 = c_factor(vt, Perm::identity(n), I, 0) * c_factor(vt, Perm::identity(n), I, 1);
            Poly expect = (lam(vt) + mpq_class(n - i) * yv(vt)) *
                          (lam(vt) + mpq_class(n - i - 1) * yv(vt));
            CHECK(c01 == expect);
        }
    }
}

TEST_CASE("ek products") {
    auto vt = make_table(2, 2);
    CHECK(ek_t(vt, 1) == yv(vt));
    CHECK(ek_t(vt, 0).is_one());
    Poly e2 = ek_z(vt, SubsetIndex(2, {1, 2}));
    Poly expect = yv(vt) * yv(vt) * (zv(vt, 1) - zv(vt, 2) + yv(vt)) *
                  (zv(vt, 2) - zv(vt, 1) + yv(vt));
    CHECK(e2 == expect);
}
