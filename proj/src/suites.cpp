#include "dynstab/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dynstab/dynqg.hpp"
#include "dynstab/laurent.hpp"
#include "dynstab/rmatrix.hpp"
#include "dynstab/xibasis.hpp"

namespace dynstab {

bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

double SuiteReport::total_ms() const {
    double t = 0;
    for (const auto& c : checks) t += c.ms;
    return t;
}

std::string SuiteReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.pass ? "  ok   " : "  FAIL ") << c.id << "  (" << c.ms << " ms)\n";
    os << (pass() ? "PASS" : "FAIL") << " suite " << suite << " (n=" << n << ", "
       << checks.size() << " checks, " << total_ms() << " ms)\n";
    return os.str();
}

namespace {

using CheckFn = std::function<bool()>;

struct Runner {
    std::vector<std::pair<std::string, CheckFn>> items;
    void add(std::string id, CheckFn fn) { items.emplace_back(std::move(id), std::move(fn)); }

    std::vector<CheckResult> run(int jobs) {
        std::vector<CheckResult> out(items.size());
        auto work = [&](size_t i) {
            auto t0 = std::chrono::steady_clock::now();
            bool ok = false;
            try {
                ok = items[i].second();
            } catch (const std::exception&) {
                ok = false;
            }
            auto t1 = std::chrono::steady_clock::now();
            out[i] = {items[i].first, ok,
                      std::chrono::duration<double, std::milli>(t1 - t0).count()};
        };
        if (jobs <= 1) {
            for (size_t i = 0; i < items.size(); ++i) work(i);
        } else {
            std::atomic<size_t> next{0};
            std::vector<std::thread> pool;
            int nthreads = std::min<int>(jobs, static_cast<int>(items.size()));
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        size_t i = next.fetch_add(1);
                        if (i >= items.size()) return;
                        work(i);
                    }
                });
            for (auto& th : pool) th.join();
        }
        return out;
    }
};

std::string sub(const SubsetIndex& I) { return I.str(); }

TensorVector seeded_random_vector(const VarTablePtr& vt, int slots, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    TensorVector v(vt, slots);
    for (const auto& I : all_subsets_all_k(slots)) {
        Poly p(vt);
        Mono m(static_cast<size_t>(vt->size()), 0);
        p.add_term(m, mpq_class(coeff(rng)));
        Mono m2 = m;
        m2[static_cast<size_t>(vt->lambda())] = 1;
        p.add_term(m2, mpq_class(coeff(rng)));
        Mono m3 = m;
        m3[static_cast<size_t>(vt->z(1 + static_cast<int>(seed % slots)))] = 1;
        p.add_term(m3, mpq_class(coeff(rng)));
        if (!p.is_zero()) v.add(I, rf(p));
    }
    return v;
}

void suite_recursion(Runner& r, Context& ctx) {
    const int n = ctx.n();
    for (int k = 0; k <= n; ++k)
        for (const auto& I : all_subsets(n, k))
            for (int a = 1; a < n; ++a)
                r.add("recursion I=" + sub(I) + " a=" + std::to_string(a),
                      [&ctx, I, a] { return check_recursion(ctx.vt(), I, a); });
}

void suite_orthogonality(Runner& r, Context& ctx) {
    const int n = ctx.n();
    for (int k = 0; k <= n; ++k)
        for (const auto& J : all_subsets(n, k))
            for (const auto& K : all_subsets(n, k)) {
                r.add("pairing J=" + sub(J) + " K=" + sub(K),
                      [&ctx, J, K] { return check_orthogonality_pairing(ctx.vt(), J, K); });
                r.add("dual-bases J=" + sub(J) + " K=" + sub(K),
                      [&ctx, J, K] { return check_orthogonality_modified(ctx.vt(), J, K); });
            }
}

void suite_interpolation(Runner& r, Context& ctx) {
    const int n = ctx.n();
    std::vector<int> ks;
    if (n <= 3)
        for (int k = 0; k <= n; ++k) ks.push_back(k);
    else
        ks.push_back(2);  // spot checks at n = 4
    for (const auto& sigma : all_perms(n))
        for (int k : ks)
            for (const auto& I : all_subsets(n, k))
                for (const auto& J : all_subsets(n, k))
                    r.add("interpolation s=" + sigma.str() + " I=" + sub(I) + " J=" + sub(J),
                          [&ctx, sigma, I, J] {
                              return check_interpolation(ctx.vt(), sigma, I, J).pass();
                          });
}

void suite_ybe(Runner& r, Context& ctx) {
    r.add("dynamical yang-baxter, symbolic", [&ctx] { return check_ybe(ctx.vt()); });
}

void suite_inversion(Runner& r, Context& ctx) {
    r.add("inversion relation on basis vectors", [&ctx] { return check_inversion(ctx.vt()); });
    r.add("matrix inverse equals the swapped placement at -z", [&ctx] {
        const VarTablePtr& vt = ctx.vt();
        RatF l = rf(lam(vt)), z = rf(zv(vt, 1));
        RatMatrix R = rmat(vt, l, z);
        RatMatrix Rinv = R.inverse();
        if (!(R * Rinv).is_identity()) return false;
        return Rinv.equals(r_operator(vt, 2, 2, 1, l, {}, -z).full_matrix());
    });
}

void suite_braid(Runner& r, Context& ctx) {
    const int n = ctx.n();
    const VarTablePtr& vt = ctx.vt();
    for (int i = 1; i < n; ++i)
        r.add("involution i=" + std::to_string(i), [vt, n, i] {
            TensorVector v = seeded_random_vector(vt, n, 1000 + static_cast<uint32_t>(i));
            return s_tilde(s_tilde(v, i), i).equals(v);
        });
    for (int i = 1; i + 1 < n; ++i)
        r.add("braid i=" + std::to_string(i), [vt, n, i] {
            TensorVector v = seeded_random_vector(vt, n, 2000 + static_cast<uint32_t>(i));
            TensorVector a = s_tilde(s_tilde(s_tilde(v, i + 1), i), i + 1);
            TensorVector b = s_tilde(s_tilde(s_tilde(v, i), i + 1), i);
            return a.equals(b);
        });
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            r.add("commutation i=" + std::to_string(i) + " j=" + std::to_string(j),
                  [vt, n, i, j] {
                      TensorVector v = seeded_random_vector(vt, n, 3000u);
                      return s_tilde(s_tilde(v, i), j).equals(s_tilde(s_tilde(v, j), i));
                  });
    for (int i = 1; i < n; ++i)
        r.add("z conjugation i=" + std::to_string(i), [vt, n, i] {
            TensorVector v = seeded_random_vector(vt, n, 4000 + static_cast<uint32_t>(i));
            auto mul = [&](const TensorVector& u, int a) { return u.scaled(rf(zv(vt, a))); };
            if (!s_tilde(mul(v, i), i).equals(mul(s_tilde(v, i), i + 1))) return false;
            if (!s_tilde(mul(v, i + 1), i).equals(mul(s_tilde(v, i), i))) return false;
            for (int j = 1; j <= n; ++j)
                if (j != i && j != i + 1 &&
                    !s_tilde(mul(v, j), i).equals(mul(s_tilde(v, i), j)))
                    return false;
            return true;
        });
}

void suite_stab_inverse(Runner& r, Context& ctx) {
    const int n = ctx.n();
    for (int k = 0; k <= n; ++k)
        for (const auto& K : all_subsets(n, k)) {
            r.add("nu o stab = id at " + sub(K), [&ctx, K] {
                TensorVector e = TensorVector::basis(ctx.vt(), K);
                return nu_map(ctx, stab_map(ctx, Perm::identity(ctx.n()), e, K.k())).equals(e);
            });
            r.add("stab o nu = id at " + sub(K), [&ctx, K] {
                LocalizedClass c(ctx.vt(), ctx.n(), K.k());
                c.set(K, RatF::one(ctx.vt()));
                return stab_map(ctx, Perm::identity(ctx.n()), nu_map(ctx, c), K.k()).equals(c);
            });
            r.add("stab of xi product form at " + sub(K), [&ctx, K] {
                LocalizedClass c = stab_map(ctx, Perm::identity(ctx.n()), ctx.xi(K), K.k());
                SubsetIndex kbar = K.complement();
                for (const auto& J : all_subsets(ctx.n(), K.k())) {
                    Poly expect = Poly::constant(ctx.vt(), 1);
                    for (int a : J.elems)
                        for (int j : kbar.elems) expect *= zv(ctx.vt(), a) - zv(ctx.vt(), j);
                    if (!c.component(J).equals(rf(expect))) return false;
                }
                return true;
            });
        }
}

void suite_r_coincide(Runner& r, Context& ctx) {
    const int n = ctx.n();
    r.add("composition at equal orderings is the identity", [&ctx] {
        Perm id = Perm::identity(ctx.n());
        return geometric_r(ctx, id, id).equals(DynOperator::identity(ctx.vt(), ctx.n()));
    });
    if (n == 2)
        r.add("displayed 4x4 matrix", [&ctx] {
            const VarTablePtr& vt = ctx.vt();
            Perm id = Perm::identity(2), s = Perm::transposition(2, 1, 2);
            RatMatrix R = geometric_r(ctx, id, s).full_matrix();
            Poly l = lam(vt), y = yv(vt), dz = zv(vt, 1) - zv(vt, 2);
            Poly den = l * (dz - y);
            return R.at(0, 0).equals(RatF::one(vt)) && R.at(3, 3).equals(RatF::one(vt)) &&
                   R.at(1, 1).equals(RatF((l + y) * dz, den)) &&
                   R.at(1, 2).equals(RatF(-(l + dz) * y, den)) &&
                   R.at(2, 1).equals(RatF(-(l - dz) * y, den)) &&
                   R.at(2, 2).equals(RatF((l - y) * dz, den));
        });
    for (const auto& sigma : all_perms(n))
        for (int a = 1; a < n; ++a)
            r.add("coincidence s=" + sigma.str() + " a=" + std::to_string(a), [&ctx, sigma, a] {
                const VarTablePtr& vt = ctx.vt();
                const int nn = ctx.n();
                Perm sa = sigma.after(Perm::transposition(nn, a, a + 1));
                std::vector<int> offs;
                for (int i = a + 2; i <= nn; ++i) offs.push_back(sigma(i));
                DynOperator dyn =
                    r_operator(vt, nn, sigma(a + 1), sigma(a), rf(lam(vt)), offs,
                               rf(zv(vt, sigma(a + 1)) - zv(vt, sigma(a))));
                return geometric_r(ctx, sa, sigma).equals(dyn);
            });
}

void suite_rll(Runner& r, Context& ctx) {
    for (const auto& sigma : all_perms(ctx.n()))
        r.add("exchange relation s=" + sigma.str(),
              [&ctx, sigma] { return check_rll(ctx.vt(), sigma); });
    r.add("scalar corollaries", [&ctx] {
        LOperator L = ctx.loperator(Perm::identity(ctx.n()));
        return check_l11_exchange(L) && check_l22_exchange(L);
    });
    r.add("function conjugation relations", [&ctx] {
        return check_fh_relations(ctx.loperator(Perm::identity(ctx.n())));
    });
    for (int i = 1; i < ctx.n(); ++i)
        r.add("intertwiner i=" + std::to_string(i), [&ctx, i] {
            return check_intertwiner(ctx, Perm::identity(ctx.n()), i);
        });
}

void suite_determinant(Runner& r, Context& ctx) {
    r.add("acts as the explicit scalar", [&ctx] {
        LOperator L = ctx.loperator(Perm::identity(ctx.n()));
        return det_element(L).equals(
            scalar_op(ctx.vt(), ctx.n(), det_scalar(ctx.vt(), ctx.n())));
    });
    r.add("both displayed forms agree", [&ctx] {
        LOperator L = ctx.loperator(Perm::identity(ctx.n()));
        return det_element(L).equals(det_element(L, true));
    });
    r.add("central against the diagonal series", [&ctx] {
        const VarTablePtr& vt = ctx.vt();
        LOperator L = ctx.loperator(Perm::identity(ctx.n()));
        ShiftOp det = det_element(L);
        ShiftOp l22p = ltilde(L, 2, 2).substitute_poly({{vt->w(), w2v(vt)}});
        return det.compose(l22p).equals(l22p.compose(det));
    });
    r.add("scalar action on every module ordering", [&ctx] {
        LOperator L = ctx.loperator(Perm::longest(ctx.n()));
        return det_element(L).equals(
            scalar_op(ctx.vt(), ctx.n(), det_scalar(ctx.vt(), ctx.n())));
    });
}

void suite_eigen(Runner& r, Context& ctx) {
    const int n = ctx.n();
    for (int k = 0; k <= n; ++k)
        for (const auto& I : all_subsets(n, k)) {
            r.add("diagonal eigenvalue at " + sub(I),
                  [&ctx, I] { return check_l22_eigen(ctx, I); });
            r.add("lowering series at " + sub(I),
                  [&ctx, I] { return check_f_formula(ctx, I); });
            r.add("raising series at " + sub(I),
                  [&ctx, I] { return check_e_formula(ctx, I); });
        }
}

void suite_offdiag(Runner& r, Context& ctx) {
    const int n = ctx.n();
    for (int k = 0; k <= n; ++k)
        for (const auto& I : all_subsets(n, k)) {
            if (k >= 1)
                r.add("localized lowering route at " + sub(I), [&ctx, I] {
                    LocalizedClass c = kappa_class(ctx, Perm::identity(ctx.n()), I);
                    return check_offdiag_transport(ctx, c, true);
                });
            if (k < n)
                r.add("localized raising route at " + sub(I), [&ctx, I] {
                    LocalizedClass c = kappa_class(ctx, Perm::identity(ctx.n()), I);
                    return check_offdiag_transport(ctx, c, false);
                });
        }
}

void suite_gz_cohomology(Runner& r, Context& ctx, int trunc) {
    const int n = ctx.n();
    const int S = trunc > 0 ? trunc : n + 2;
    for (int k = 0; k <= n; ++k)
        for (const auto& I : all_subsets(n, k)) {
            r.add("diagonal transport on xi at " + sub(I),
                  [&ctx, I] { return check_l22_transport(ctx, ctx.xi(I), I.k()); });
            r.add("diagonal transport on basis at " + sub(I), [&ctx, I] {
                return check_l22_transport(ctx, TensorVector::basis(ctx.vt(), I), I.k());
            });
            r.add("determinant transport at " + sub(I), [&ctx, I] {
                return check_det_transport(ctx, ctx.xi(I), I.k()) &&
                       check_det_transport(ctx, TensorVector::basis(ctx.vt(), I), I.k());
            });
        }
    for (int k = 0; k <= n; ++k)
        r.add("coefficient transport k=" + std::to_string(k) + " S=" + std::to_string(S),
              [&ctx, k, S] { return check_gz_coefficient_transport(ctx, k, S); });
}

void suite_submodule(Runner& r, Context& ctx) {
    r.add("symmetric classes stay symmetric", [&ctx] { return check_submodule(ctx); });
}

void suite_properties(Runner& r, Context& ctx) {
    const int n = ctx.n();
    const VarTablePtr& vt = ctx.vt();

    r.add("ring axioms", [vt] {
        std::mt19937 rng(90210);
        std::uniform_int_distribution<int> coeff(-4, 4);
        auto rnd = [&] {
            Poly num(vt);
            Mono m(static_cast<size_t>(vt->size()), 0);
            num.add_term(m, mpq_class(coeff(rng)));
            Mono m1 = m;
            m1[static_cast<size_t>(vt->lambda())] = 1;
            num.add_term(m1, mpq_class(coeff(rng)));
            Mono m2 = m;
            m2[static_cast<size_t>(vt->z(1))] = 2;
            num.add_term(m2, mpq_class(coeff(rng)));
            Poly den = lam(vt) + mpq_class(1 + (coeff(rng) & 1)) * yv(vt);
            return RatF(num, den);
        };
        for (int trial = 0; trial < 15; ++trial) {
            RatF a = rnd(), b = rnd(), c = rnd();
            if (!((a + b) + c).equals(a + (b + c))) return false;
            if (!((a * b) * c).equals(a * (b * c))) return false;
            if (!(a * (b + c)).equals(a * b + a * c)) return false;
        }
        return true;
    });
    r.add("laurent truncation is a ring homomorphism", [vt] {
        Poly d1 = (wv(vt) - zv(vt, 1)) * (wv(vt) - zv(vt, 2) - yv(vt));
        RatF f(lam(vt) * wv(vt) + yv(vt), d1);
        RatF g(wv(vt) - zv(vt, 2) + yv(vt), wv(vt) - zv(vt, 2));
        auto lf = laurent_expand(f, vt->w(), 4);
        auto lg = laurent_expand(g, vt->w(), 4);
        return laurent_expand(f * g, vt->w(), 4).equals(lf.mul(lg));
    });
    r.add("matrix inverse verification", [vt] {
        RatMatrix m(vt, 3, 3);
        std::mt19937 rng(777);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Poly p = Poly::constant(vt, coeff(rng)) + mpq_class(coeff(rng)) * lam(vt) +
                         mpq_class(coeff(rng)) * zv(vt, 1);
                m.set(i, j, RatF(p, lam(vt) + yv(vt)));
            }
        if (m.determinant().is_zero()) return true;  // resample not needed at this seed
        RatMatrix inv = m.inverse();
        return (m * inv).is_identity() && (inv * m).is_identity();
    });
    r.add("partial order axioms", [&ctx] {
        const int nn = ctx.n();
        for (const auto& sigma : all_perms(nn))
            for (int k = 0; k <= nn; ++k) {
                auto subs = all_subsets(nn, k);
                for (const auto& a : subs) {
                    if (!leq_sigma(a, a, sigma)) return false;
                    for (const auto& b : subs) {
                        if (leq_sigma(a, b, sigma) && leq_sigma(b, a, sigma) && !(a == b))
                            return false;
                        for (const auto& c : subs)
                            if (leq_sigma(a, b, sigma) && leq_sigma(b, c, sigma) &&
                                !leq_sigma(a, c, sigma))
                                return false;
                    }
                }
            }
        return true;
    });
    for (int k = 0; k <= n; ++k)
        r.add("weight polynomiality k=" + std::to_string(k), [&ctx, k] {
            for (const auto& I : all_subsets(ctx.n(), k)) {
                Poly w = ctx.weight_value(Perm::identity(ctx.n()), I);
                if (k >= 2 && w.swap_vars(ctx.vt()->t(1), ctx.vt()->t(2)) != w) return false;
            }
            return true;
        });
    for (const auto& sigma : all_perms(n))
        r.add("restriction triangularity s=" + sigma.str(), [&ctx, sigma] {
            const VarTablePtr& vvt = ctx.vt();
            for (int k = 1; k < ctx.n(); ++k)
                for (const auto& I : all_subsets(ctx.n(), k))
                    for (const auto& J : all_subsets(ctx.n(), k)) {
                        if (J == I) continue;
                        if (leq_sigma(J, I, sigma)) continue;
                        if (!ctx.restricted(WeightVariant::tilde, sigma, I, J).is_zero())
                            return false;
                    }
            // the diagonal is pinned by the Euler-class product form
            for (int k = 0; k <= ctx.n(); ++k)
                for (const auto& I : all_subsets(ctx.n(), k)) {
                    Poly expect = c_factor(vvt, sigma, I, 0) *
                                  euler_factor(vvt, sigma, I, EulerKind::hor, EulerSign::minus) *
                                  euler_factor(vvt, sigma, I, EulerKind::ver, EulerSign::minus);
                    if (((ctx.n() + 1) * k + schubert_dim(sigma, I)) % 2 != 0) expect = -expect;
                    if (!ctx.restricted(WeightVariant::tilde, sigma, I, I).equals(rf(expect)))
                        return false;
                }
            return true;
        });
    r.add("xi triangularity and extremal coefficients", [&ctx] {
        const int nn = ctx.n();
        for (int k = 0; k <= nn; ++k)
            for (const auto& I : all_subsets(nn, k)) {
                TensorVector xiI = ctx.xi(I);
                if (!xiI.coeff(I).equals(xi_diagonal(ctx, I))) return false;
                for (const auto& J : all_subsets(nn, k))
                    if (!leq_sigma(J, I, Perm::identity(nn)) && !xiI.coeff(J).is_zero())
                        return false;
            }
        return true;
    });
    if (n <= 3) {
        r.add("cocycle property", [&ctx] {
            std::vector<Perm> ps = all_perms(ctx.n());
            if (ctx.n() >= 3)
                ps = {Perm::identity(ctx.n()), Perm::transposition(ctx.n(), 1, 2),
                      Perm::from_one_line({2, 3, 1}), Perm::longest(ctx.n())};
            for (const auto& a : ps)
                for (const auto& b : ps)
                    for (const auto& c : ps)
                        if (!geometric_r(ctx, a, b)
                                 .compose(geometric_r(ctx, b, c))
                                 .equals(geometric_r(ctx, a, c)))
                            return false;
            return true;
        });
    }
    if (n <= 2)
        r.add("coefficient operators commute", [&ctx] {
            LOperator L = ctx.loperator(Perm::identity(ctx.n()));
            auto l22s = gz_l22_coeffs(L, 3);
            auto dets = gz_det_coeffs(L, 3);
            std::vector<ShiftOp> gens;
            for (const auto& g : l22s) gens.push_back(g);
            for (const auto& g : dets) gens.push_back(g);
            gens.push_back(gz_l22_0_inverse(L));
            for (size_t a = 0; a < gens.size(); ++a)
                for (size_t b = a + 1; b < gens.size(); ++b)
                    if (!gens[a].compose(gens[b]).equals(gens[b].compose(gens[a])))
                        return false;
            return true;
        });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "recursion", "orthogonality", "interpolation", "ybe",        "inversion",
        "braid",     "stab-inverse",  "r-coincide",    "rll",        "determinant",
        "eigen",     "offdiag",       "gz-cohomology", "submodule",  "properties",
        "all"};
    return names;
}

bool is_suite_name(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

int suite_default_max_n(const std::string& name) {
    if (name == "rll" || name == "submodule") return 2;
    if (name == "interpolation" || name == "properties" || name == "braid") return 4;
    if (name == "all") return 4;
    return 3;
}

SuiteReport run_suite(const std::string& name, int n, const SuiteOptions& opts) {
    if (!is_suite_name(name)) throw std::invalid_argument("unknown suite: " + name);
    SuiteReport rep;
    rep.suite = name;
    rep.n = n;
    if (name == "all") {
        for (const auto& s : suite_names()) {
            if (s == "all") continue;
            int ns = std::min(n, suite_default_max_n(s));
            SuiteReport sr = run_suite(s, ns, opts);
            for (auto& c : sr.checks) {
                c.id = s + ": " + c.id;
                rep.checks.push_back(std::move(c));
            }
        }
        return rep;
    }

    Context ctx(std::max(2, n));
    Runner r;
    if (name == "recursion")
        suite_recursion(r, ctx);
    else if (name == "orthogonality")
        suite_orthogonality(r, ctx);
    else if (name == "interpolation")
        suite_interpolation(r, ctx);
    else if (name == "ybe")
        suite_ybe(r, ctx);
    else if (name == "inversion")
        suite_inversion(r, ctx);
    else if (name == "braid")
        suite_braid(r, ctx);
    else if (name == "stab-inverse")
        suite_stab_inverse(r, ctx);
    else if (name == "r-coincide")
        suite_r_coincide(r, ctx);
    else if (name == "rll")
        suite_rll(r, ctx);
    else if (name == "determinant")
        suite_determinant(r, ctx);
    else if (name == "eigen")
        suite_eigen(r, ctx);
    else if (name == "offdiag")
        suite_offdiag(r, ctx);
    else if (name == "gz-cohomology")
        suite_gz_cohomology(r, ctx, opts.trunc);
    else if (name == "submodule")
        suite_submodule(r, ctx);
    else if (name == "properties")
        suite_properties(r, ctx);
    rep.checks = r.run(opts.jobs);
    return rep;
}

}  // namespace dynstab
