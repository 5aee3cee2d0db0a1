// Acceptance runner: executes every acceptance criterion, printing one
// pass/fail line per criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "dynstab/dynqg.hpp"
#include "dynstab/suites.hpp"
#include "dynstab/xibasis.hpp"

using namespace dynstab;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget_s;  // informational runtime target
    std::function<bool(std::string&)> fn;
};

bool expect_str(const std::string& got, const std::string& want, const std::string& what,
                std::string& log) {
    if (got == want) return true;
    log += "  mismatch at " + what + ":\n    got  " + got + "\n    want " + want + "\n";
    return false;
}

bool suites_pass(const std::vector<std::pair<std::string, int>>& runs, std::string& log) {
    bool ok = true;
    for (const auto& [name, n] : runs) {
        SuiteReport rep = run_suite(name, n);
        if (!rep.pass()) {
            ok = false;
            for (const auto& c : rep.checks)
                if (!c.pass) log += "  FAIL " + name + "(n=" + std::to_string(n) + "): " + c.id + "\n";
        }
    }
    return ok;
}

// ---- criterion 1: displayed examples, canonical-form string equality ----

bool criterion_examples(std::string& log) {
    bool ok = true;
    {
        Context ctx(2);
        auto vt = ctx.vt();
        Poly t1 = tv(vt, 1), z1 = zv(vt, 1), z2 = zv(vt, 2), y = yv(vt), l = lam(vt);
        Perm id = Perm::identity(2), s = Perm::transposition(2, 1, 2);
        ok &= expect_str(ctx.weight_value(id, SubsetIndex(2, {1})).str(),
                         (y * (l + t1 - z1 + y) * (t1 - z2)).str(), "weight id {1}", log);
        ok &= expect_str(ctx.weight_value(id, SubsetIndex(2, {2})).str(),
                         (y * (t1 - z1 + y) * (l + t1 - z2)).str(), "weight id {2}", log);
        ok &= expect_str(ctx.weight_value(s, SubsetIndex(2, {1})).str(),
                         (y * (l + t1 - z1) * (t1 - z2 + y)).str(), "weight s {1}", log);
        ok &= expect_str(ctx.weight_value(s, SubsetIndex(2, {2})).str(),
                         (y * (t1 - z1) * (l + t1 - z2 + y)).str(), "weight s {2}", log);
    }
    for (int n = 3; n <= 4; ++n) {  // general single-variable formula
        Context ctx(n);
        auto vt = ctx.vt();
        for (int i = 1; i <= n; ++i) {
            Poly expect = yv(vt);
            for (int a = 1; a < i; ++a) expect *= tv(vt, 1) - zv(vt, a) + yv(vt);
            expect *= lam(vt) + tv(vt, 1) - zv(vt, i) + mpq_class(n - i) * yv(vt);
            for (int a = i + 1; a <= n; ++a) expect *= tv(vt, 1) - zv(vt, a);
            ok &= expect_str(ctx.weight_value(Perm::identity(n), SubsetIndex(n, {i})).str(),
                             expect.str(), "general k=1 weight n=" + std::to_string(n), log);
        }
    }
    {  // modified variants at k = 1, n = 3
        Context ctx(3);
        auto vt = ctx.vt();
        Perm id = Perm::identity(3);
        for (int i = 1; i <= 3; ++i) {
            SubsetIndex I(3, {i});
            Poly minus_expect = Poly::constant(vt, -1);
            for (int a = 1; a < i; ++a) minus_expect *= tv(vt, 1) - zv(vt, a);
            minus_expect *= -lam(vt) + tv(vt, 1) - zv(vt, i) + mpq_class(i - 3 + 1) * yv(vt);
            for (int a = i + 1; a <= 3; ++a) minus_expect *= tv(vt, 1) - zv(vt, a) + yv(vt);
            ok &= expect_str(modified_weight(vt, WeightVariant::minus, id, I).value.str(),
                             rf(minus_expect).str(), "minus variant k=1 i=" + std::to_string(i),
                             log);
            Poly num = Poly::constant(vt, 1);
            for (int a = 1; a < i; ++a) num *= tv(vt, 1) - zv(vt, a) + yv(vt);
            num *= lam(vt) + tv(vt, 1) - zv(vt, i) + mpq_class(3 - i) * yv(vt);
            for (int a = i + 1; a <= 3; ++a) num *= tv(vt, 1) - zv(vt, a);
            Poly den = (lam(vt) + mpq_class(3 - i) * yv(vt)) *
                       (lam(vt) + mpq_class(3 - i - 1) * yv(vt));
            ok &= expect_str(modified_weight(vt, WeightVariant::plus, id, I).value.str(),
                             RatF(num, den).str(), "plus variant k=1 i=" + std::to_string(i),
                             log);
        }
    }
    {  // xi vectors, n=2
        Context ctx(2);
        auto vt = ctx.vt();
        Poly l = lam(vt), y = yv(vt), z1 = zv(vt, 1), z2 = zv(vt, 2);
        TensorVector a = ctx.xi(SubsetIndex(2, {1}));
        ok &= expect_str(a.coeff(SubsetIndex(2, {1})).str(), rf(l).str(), "xi{1} at {1}", log);
        ok &= expect_str(a.coeff(SubsetIndex(2, {2})).str(), "0", "xi{1} at {2}", log);
        TensorVector b = ctx.xi(SubsetIndex(2, {2}));
        ok &= expect_str(b.coeff(SubsetIndex(2, {1})).str(),
                         RatF(-(l + z1 - z2) * y, z1 - z2 - y).str(), "xi{2} at {1}", log);
        ok &= expect_str(b.coeff(SubsetIndex(2, {2})).str(),
                         RatF((l - y) * (z1 - z2), z1 - z2 - y).str(), "xi{2} at {2}", log);
    }
    {  // xi vectors, n=3 weight 1
        Context ctx(3);
        auto vt = ctx.vt();
        Poly l = lam(vt), y = yv(vt), z1 = zv(vt, 1), z2 = zv(vt, 2), z3 = zv(vt, 3);
        ok &= expect_str(ctx.xi(SubsetIndex(3, {1})).coeff(SubsetIndex(3, {1})).str(),
                         rf(l + y).str(), "xi{1} n=3", log);
        TensorVector b = ctx.xi(SubsetIndex(3, {2}));
        ok &= expect_str(b.coeff(SubsetIndex(3, {1})).str(),
                         RatF(-(l + z1 - z2 + y) * y, z1 - z2 - y).str(), "xi{2} n=3 at {1}",
                         log);
        ok &= expect_str(b.coeff(SubsetIndex(3, {2})).str(),
                         RatF(l * (z1 - z2), z1 - z2 - y).str(), "xi{2} n=3 at {2}", log);
        TensorVector c = ctx.xi(SubsetIndex(3, {3}));
        ok &= expect_str(c.coeff(SubsetIndex(3, {1})).str(),
                         RatF(-(l + z1 - z3 + y) * y, z1 - z3 - y).str(), "xi{3} n=3 at {1}",
                         log);
        ok &= expect_str(
            c.coeff(SubsetIndex(3, {2})).str(),
            RatF(-(l + z2 - z3) * (z1 - z3) * y, (z1 - z3 - y) * (z2 - z3 - y)).str(),
            "xi{3} n=3 at {2}", log);
        ok &= expect_str(
            c.coeff(SubsetIndex(3, {3})).str(),
            RatF((l - y) * (z1 - z3) * (z2 - z3), (z1 - z3 - y) * (z2 - z3 - y)).str(),
            "xi{3} n=3 at {3}", log);
    }
    {  // n=1 L-table
        Context ctx(1);
        auto vt = ctx.vt();
        LOperator L = ctx.loperator(Perm::identity(1));
        Poly l = lam(vt), y = yv(vt), w = wv(vt), z1 = zv(vt, 1);
        SubsetIndex one(1, {1}), none(1, {});
        Poly den = l * (w - z1 - y);
        auto entry = [&](int i, int j, const SubsetIndex& col, const SubsetIndex& row) {
            return L.block(i, j).column(col).coeff(row).str();
        };
        ok &= expect_str(entry(1, 1, one, one), "1", "L11 v1", log);
        ok &= expect_str(entry(1, 1, none, none), RatF((l + y) * (w - z1), den).str(), "L11 v2",
                         log);
        ok &= expect_str(entry(1, 2, one, none), RatF(-(l + w - z1) * y, den).str(), "L12 v1",
                         log);
        ok &= expect_str(entry(1, 2, none, none), "0", "L12 v2", log);
        ok &= expect_str(entry(2, 1, one, one), "0", "L21 v1", log);
        ok &= expect_str(entry(2, 1, none, one), RatF(-(l - w + z1) * y, den).str(), "L21 v2",
                         log);
        ok &= expect_str(entry(2, 2, one, one), RatF((l - y) * (w - z1), den).str(), "L22 v1",
                         log);
        ok &= expect_str(entry(2, 2, none, none), "1", "L22 v2", log);
    }
    {  // n=2 diagonal block columns
        Context ctx(2);
        auto vt = ctx.vt();
        LOperator L = ctx.loperator(Perm::identity(2));
        Poly l = lam(vt), y = yv(vt), w = wv(vt), z1 = zv(vt, 1), z2 = zv(vt, 2);
        SubsetIndex both(2, {1, 2}), first(2, {1}), second(2, {2}), none(2, {});
        ok &= expect_str(L.block(2, 2).column(none).coeff(none).str(), "1", "L22 v2v2", log);
        ok &= expect_str(L.block(2, 2).column(first).coeff(first).str(),
                         RatF(l * (w - z1), (l + y) * (w - z1 - y)).str(), "L22 v1v2", log);
        ok &= expect_str(L.block(2, 2).column(second).coeff(first).str(),
                         (RatF((l + y - w + z1) * y, (l + y) * (w - z1 - y)) *
                          RatF((l + w - z2) * y, l * (w - z2 - y)))
                             .str(),
                         "L22 v2v1 upper", log);
        ok &= expect_str(L.block(2, 2).column(second).coeff(second).str(),
                         RatF((l - y) * (w - z2), l * (w - z2 - y)).str(), "L22 v2v1 diagonal",
                         log);
        // the displayed un-cancelled form agrees after cancellation
        RatF c11 = RatF((l - y) * (l - 2 * y) * (w - z1) * (w - z2),
                        l * (l - y) * (w - z1 - y) * (w - z2 - y));
        ok &= expect_str(L.block(2, 2).column(both).coeff(both).str(), c11.str(), "L22 v1v1",
                         log);
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;
    criteria.push_back({1, "displayed examples reproduce bit-exactly", 1.0, criterion_examples});
    criteria.push_back({2, "recursion identities, n = 2, 3", 10.0, [](std::string& log) {
                            return suites_pass({{"recursion", 2}, {"recursion", 3}}, log);
                        }});
    criteria.push_back({3, "orthogonality sums, n <= 3, all weights", 30.0,
                        [](std::string& log) {
                            return suites_pass({{"orthogonality", 2}, {"orthogonality", 3}},
                                               log);
                        }});
    criteria.push_back({4, "interpolation properties, n <= 3 plus n = 4 spot checks", 120.0,
                        [](std::string& log) {
                            return suites_pass({{"interpolation", 2},
                                                {"interpolation", 3},
                                                {"interpolation", 4}},
                                               log);
                        }});
    criteria.push_back(
        {5, "inversion, Yang-Baxter, Coxeter relations, geometric coincidence", 60.0,
         [](std::string& log) {
             return suites_pass({{"inversion", 2},
                                 {"ybe", 3},
                                 {"braid", 3},
                                 {"r-coincide", 2},
                                 {"r-coincide", 3}},
                                log);
         }});
    criteria.push_back({6, "stable envelope and its inverse, n <= 3", 60.0,
                        [](std::string& log) {
                            return suites_pass({{"stab-inverse", 2}, {"stab-inverse", 3}}, log);
                        }});
    criteria.push_back(
        {7, "quantum group module: exchange relation, determinant, eigenbasis", 300.0,
         [](std::string& log) {
             return suites_pass({{"rll", 1},
                                 {"rll", 2},
                                 {"determinant", 1},
                                 {"determinant", 2},
                                 {"eigen", 2},
                                 {"eigen", 3}},
                                log);
         }});
    criteria.push_back(
        {8, "transport to cohomology and the symmetric submodule", 300.0,
         [](std::string& log) {
             return suites_pass({{"gz-cohomology", 2},
                                 {"gz-cohomology", 3},
                                 {"offdiag", 2},
                                 {"offdiag", 3},
                                 {"submodule", 2}},
                                log);
         }});
    criteria.push_back({9, "property suites (algebraic invariants), n <= 4", 0.0,
                        [](std::string& log) {
                            return suites_pass({{"properties", 2},
                                                {"properties", 3},
                                                {"properties", 4}},
                                               log);
                        }});

    bool all_ok = true;
    for (const auto& c : criteria) {
        std::string log;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.fn(log);
        } catch (const std::exception& e) {
            log += std::string("  exception: ") + e.what() + "\n";
        }
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
             << std::fixed << std::setprecision(1) << secs << " s";
        if (c.budget_s > 0) line << ", target " << std::setprecision(0) << c.budget_s << " s";
        line << ")";
        std::cout << line.str() << "\n";
        if (!ok) {
            std::cout << log;
            all_ok = false;
        }
    }
    std::cout << (all_ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES") << "\n";
    return all_ok ? 0 : 1;
}
