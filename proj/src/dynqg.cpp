#include "dynstab/dynqg.hpp"

#include <stdexcept>

#include "dynstab/rmatrix.hpp"

namespace dynstab {

ShiftOp ltilde(const LOperator& L, int i, int j) {
    return ShiftOp::single(j == 1 ? -1 : +1, L.block(i, j));
}

ShiftOp scalar_op(const VarTablePtr& vt, int slots, const RatF& s) {
    return ShiftOp::single(0, DynOperator::identity(vt, slots).scaled(s));
}

ShiftOp weight_scalar_op(const VarTablePtr& vt, int slots,
                         const std::function<RatF(int)>& s) {
    return ShiftOp::single(0, DynOperator::identity(vt, slots).scaled_by_weight(s));
}

DynOperator perm_operator(const VarTablePtr& vt, const Perm& p) {
    DynOperator op(vt, p.n());
    for (const auto& I : all_subsets_all_k(p.n()))
        op.set_column(I, TensorVector::basis(vt, p.apply(I)));
    return op;
}

namespace {

std::map<int, Poly> w_plus_y(const VarTablePtr& vt) {
    return {{vt->w(), wv(vt) + yv(vt)}};
}

RatF weight_prefactor(const VarTablePtr& vt, int n, int k) {
    // lambda / (lambda - y h) on the weight-k subspace
    return RatF(lam(vt), lam(vt) - mpq_class(2 * k - n) * yv(vt));
}

}  // namespace

ShiftOp det_element(const LOperator& L, bool second_form) {
    const VarTablePtr& vt = L.table();
    const int n = L.n();
    ShiftOp a = second_form ? ltilde(L, 1, 1).substitute_poly(w_plus_y(vt))
                            : ltilde(L, 2, 2).substitute_poly(w_plus_y(vt));
    ShiftOp b = second_form ? ltilde(L, 2, 2) : ltilde(L, 1, 1);
    ShiftOp c = second_form ? ltilde(L, 2, 1).substitute_poly(w_plus_y(vt))
                            : ltilde(L, 1, 2).substitute_poly(w_plus_y(vt));
    ShiftOp d = second_form ? ltilde(L, 1, 2) : ltilde(L, 2, 1);
    ShiftOp comb = a.compose(b) - c.compose(d);
    return comb.scaled_by_weight([&](int k) { return weight_prefactor(vt, n, k); });
}

RatF det_scalar(const VarTablePtr& vt, int n) {
    RatF out = RatF::one(vt);
    for (int i = 1; i <= n; ++i)
        out *= RatF(wv(vt) - zv(vt, i) + yv(vt), wv(vt) - zv(vt, i));
    return out;
}

RatF l22_eigenvalue(const VarTablePtr& vt, const SubsetIndex& I) {
    RatF out = RatF::one(vt);
    for (int i : I.elems) out *= RatF(wv(vt) - zv(vt, i), wv(vt) - zv(vt, i) - yv(vt));
    return out;
}

DynOperator l22_inverse(const LOperator& L) {
    const VarTablePtr& vt = L.table();
    const int n = L.n();
    DynOperator out(vt, n);
    for (int k = 0; k <= n; ++k) {
        RatMatrix blk = L.block(2, 2).weight_block(k);
        out = out + DynOperator::from_weight_block(vt, n, k, blk.inverse());
    }
    return out;
}

ShiftOp f_tilde(const LOperator& L) {
    return ShiftOp::single(0, L.block(1, 2).compose(l22_inverse(L)));
}

ShiftOp e_tilde(const LOperator& L) {
    DynOperator inv = l22_inverse(L).shift_lambda(-1);
    DynOperator l21 = L.block(2, 1).shift_lambda(-1);
    return ShiftOp::single(-2, inv.compose(l21));
}

namespace {

std::vector<RatMatrix> laurent_matrix(const RatMatrix& m, int var, int S) {
    std::vector<RatMatrix> out(static_cast<size_t>(S) + 1,
                               RatMatrix(m.table(), m.rows(), m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            if (m.at(r, c).is_zero()) continue;
            LaurentAtInfinity l = laurent_expand(m.at(r, c), var, S);
            for (int s = 0; s <= S; ++s) out[static_cast<size_t>(s)].set(r, c, l.coeff(s));
        }
    return out;
}

std::vector<DynOperator> laurent_operator(const DynOperator& op, int var, int S) {
    const VarTablePtr& vt = op.table();
    const int n = op.slots();
    std::vector<DynOperator> out(static_cast<size_t>(S) + 1, DynOperator(vt, n));
    for (int k = 0; k <= n; ++k) {
        auto mats = laurent_matrix(op.weight_block(k), var, S);
        for (int s = 0; s <= S; ++s)
            out[static_cast<size_t>(s)] =
                out[static_cast<size_t>(s)] + DynOperator::from_weight_block(vt, n, k, mats[static_cast<size_t>(s)]);
    }
    return out;
}

}  // namespace

std::vector<ShiftOp> gz_l22_coeffs(const LOperator& L, int S) {
    std::vector<ShiftOp> out;
    for (auto& op : laurent_operator(L.block(2, 2), L.table()->w(), S))
        out.push_back(ShiftOp::single(+1, std::move(op)));
    return out;
}

std::vector<ShiftOp> gz_det_coeffs(const LOperator& L, int S) {
    ShiftOp det = det_element(L);
    std::vector<ShiftOp> out;
    for (auto& op : laurent_operator(det.block(0), L.table()->w(), S))
        out.push_back(ShiftOp::single(0, std::move(op)));
    return out;
}

ShiftOp gz_l22_0_inverse(const LOperator& L) {
    const VarTablePtr& vt = L.table();
    const int n = L.n();
    DynOperator c0 = laurent_operator(L.block(2, 2), vt->w(), 0)[0];
    DynOperator inv(vt, n);
    for (int k = 0; k <= n; ++k)
        inv = inv + DynOperator::from_weight_block(vt, n, k, c0.weight_block(k).inverse());
    return ShiftOp::single(-1, inv.shift_lambda(-1));
}

namespace {

// apply the full L-operator with auxiliary factor at the given slot of a
// larger space; quantum slots are first_q..first_q+n-1, extra dynamical
// offsets resolve over the listed positions
TensorVector apply_l_embedded(const TensorVector& v, int aux_slot,
                              const std::vector<int>& extra_offsets, const RatF& wval,
                              const Perm& sigma, int first_q) {
    const VarTablePtr& vt = v.table();
    const int n = sigma.n();
    TensorVector out = v;
    for (int j = n; j >= 1; --j) {
        std::vector<int> offs = extra_offsets;
        for (int p = j + 1; p <= n; ++p) offs.push_back(first_q + p - 1);
        out = apply_r(out, aux_slot, first_q + j - 1, rf(lam(vt)), offs,
                      wval - rf(zv(vt, sigma(j))));
    }
    return out;
}

}  // namespace

bool check_rll(const VarTablePtr& vt, const Perm& sigma) {
    const int n = sigma.n();
    const int m = n + 2;  // two auxiliary slots in front
    RatF w1 = rf(w1v(vt)), w2 = rf(w2v(vt)), l = rf(lam(vt));
    std::vector<int> quantum;
    for (int q = 3; q <= m; ++q) quantum.push_back(q);
    for (const auto& B : all_subsets_all_k(m)) {
        TensorVector e = TensorVector::basis(vt, B);
        TensorVector lhs = apply_l_embedded(e, 2, {1}, w2, sigma, 3);
        lhs = apply_l_embedded(lhs, 1, {}, w1, sigma, 3);
        lhs = apply_r(lhs, 1, 2, l, quantum, w1 - w2);
        TensorVector rhs = apply_r(e, 1, 2, l, {}, w1 - w2);
        rhs = apply_l_embedded(rhs, 1, {2}, w1, sigma, 3);
        rhs = apply_l_embedded(rhs, 2, {}, w2, sigma, 3);
        if (!lhs.equals(rhs)) return false;
    }
    return true;
}

namespace {

bool exchange_identity(const DynOperator& block, int shift) {
    const VarTablePtr& vt = block.table();
    DynOperator a1 = block.substitute_poly({{vt->w(), w1v(vt)}});
    DynOperator a2 = block.substitute_poly({{vt->w(), w2v(vt)}}).shift_lambda(shift);
    DynOperator b1 = block.substitute_poly({{vt->w(), w2v(vt)}});
    DynOperator b2 = block.substitute_poly({{vt->w(), w1v(vt)}}).shift_lambda(shift);
    return a1.compose(a2).equals(b1.compose(b2));
}

}  // namespace

bool check_l11_exchange(const LOperator& L) { return exchange_identity(L.block(1, 1), -1); }
bool check_l22_exchange(const LOperator& L) { return exchange_identity(L.block(2, 2), +1); }

bool check_fh_relations(const LOperator& L) {
    const VarTablePtr& vt = L.table();
    const int n = L.n();
    auto lam_op = [&](int shift) { return scalar_op(vt, n, rf(lam(vt) + mpq_class(shift) * yv(vt))); };
    auto yh_op = [&](int bump) {
        return weight_scalar_op(vt, n, [&, bump](int k) {
            return RatF::constant(vt, 2 * k - n + bump) * rf(yv(vt));
        });
    };
    struct Case {
        int i, j;
        int lam_shift;  // f(lambda + shift y, ...)
        int yh_bump;    // f(..., yh + bump y, ...)
    };
    // f(lambda-y, yh, y) L~11 = L~11 f;      f(lambda+y, yh, y) L~22 = L~22 f
    // f(lambda+y, yh+2y, y) L~12 = L~12 f;   f(lambda-y, yh-2y, y) L~21 = L~21 f
    std::vector<Case> cases = {{1, 1, -1, 0}, {2, 2, +1, 0}, {1, 2, +1, +2}, {2, 1, -1, -2}};
    for (const auto& c : cases) {
        ShiftOp lt = ltilde(L, c.i, c.j);
        if (!lam_op(c.lam_shift).compose(lt).equals(lt.compose(lam_op(0)))) return false;
        if (!yh_op(c.yh_bump).compose(lt).equals(lt.compose(yh_op(0)))) return false;
    }
    return true;
}

bool check_intertwiner(Context& ctx, const Perm& sigma, int i) {
    const VarTablePtr& vt = ctx.vt();
    const int n = ctx.n();
    Perm si = sigma.after(Perm::transposition(n, i, i + 1));
    LOperator Lsig = ctx.loperator(sigma);
    LOperator Lsi = ctx.loperator(si);
    std::vector<int> offs;
    for (int p = i + 2; p <= n; ++p) offs.push_back(p);
    DynOperator r = r_operator(vt, n, i, i + 1, rf(lam(vt)), offs,
                               rf(zv(vt, sigma(i)) - zv(vt, sigma(i + 1))));
    ShiftOp rhat = ShiftOp::single(0, r.compose(perm_operator(vt, Perm::transposition(n, i, i + 1))));
    for (int u = 1; u <= 2; ++u)
        for (int v = 1; v <= 2; ++v) {
            ShiftOp lhs = ltilde(Lsig, u, v).compose(rhat);
            ShiftOp rhs = rhat.compose(ltilde(Lsi, u, v));
            if (!lhs.equals(rhs)) return false;
        }
    return true;
}

bool check_l22_eigen(Context& ctx, const SubsetIndex& I) {
    LOperator L = ctx.loperator(Perm::identity(ctx.n()));
    TensorVector lhs = ltilde(L, 2, 2).apply(ctx.xi(I));
    TensorVector rhs = ctx.xi(I).scaled(l22_eigenvalue(ctx.vt(), I));
    return lhs.equals(rhs);
}

bool check_f_formula(Context& ctx, const SubsetIndex& I) {
    const VarTablePtr& vt = ctx.vt();
    const int n = ctx.n(), k = I.k();
    LOperator L = ctx.loperator(Perm::identity(n));
    TensorVector lhs = f_tilde(L).apply(ctx.xi(I));
    TensorVector rhs(vt, n);
    RatF cf = -rf(yv(vt));
    for (int i : I.elems) {
        RatF term = cf * rf(lam(vt) + wv(vt) - zv(vt, i) + mpq_class(n - 2 * k + 1) * yv(vt)) /
                    rf(wv(vt) - zv(vt, i));
        for (int s : I.elems) {
            if (s == i) continue;
            term *= RatF(zv(vt, i) - zv(vt, s) - yv(vt), zv(vt, i) - zv(vt, s));
        }
        rhs = rhs + ctx.xi(I.without(i)).scaled(term);
    }
    return lhs.equals(rhs);
}

bool check_e_formula(Context& ctx, const SubsetIndex& I) {
    const VarTablePtr& vt = ctx.vt();
    const int n = ctx.n();
    LOperator L = ctx.loperator(Perm::identity(n));
    TensorVector lhs = e_tilde(L).apply(ctx.xi(I));
    TensorVector rhs(vt, n);
    RatF ce = -rf(yv(vt)) / rf((lam(vt) - yv(vt)) * (lam(vt) - mpq_class(2) * yv(vt)));
    SubsetIndex ibar = I.complement();
    for (int i : ibar.elems) {
        RatF term = ce * rf(lam(vt) - wv(vt) + zv(vt, i) - yv(vt)) / rf(wv(vt) - zv(vt, i));
        for (int s : ibar.elems) {
            if (s == i) continue;
            term *= RatF(zv(vt, s) - zv(vt, i) - yv(vt), zv(vt, s) - zv(vt, i));
        }
        rhs = rhs + ctx.xi(I.with(i)).scaled(term);
    }
    return lhs.equals(rhs);
}

LocalizedClass l22_mult_transport(Context& ctx, const LocalizedClass& c) {
    LocalizedClass out(ctx.vt(), c.n(), c.k());
    for (const auto& I : all_subsets(c.n(), c.k())) {
        RatF v = c.component(I);
        if (v.is_zero()) continue;
        out.set(I, l22_eigenvalue(ctx.vt(), I) * v.shift_lambda(1));
    }
    return out;
}

LocalizedClass det_mult_transport(Context& ctx, const LocalizedClass& c) {
    return c.scaled(det_scalar(ctx.vt(), c.n()));
}

LocalizedClass as_mult_transport(Context& ctx, const LocalizedClass& c, int s) {
    LocalizedClass out(ctx.vt(), c.n(), c.k());
    for (const auto& I : all_subsets(c.n(), c.k())) {
        RatF v = c.component(I);
        if (v.is_zero()) continue;
        RatF as = laurent_expand(l22_eigenvalue(ctx.vt(), I), ctx.vt()->w(), s).coeff(s);
        out.set(I, as * v.shift_lambda(1));
    }
    return out;
}

LocalizedClass bs_mult_transport(Context& ctx, const LocalizedClass& c, int s) {
    RatF bs = laurent_expand(det_scalar(ctx.vt(), c.n()), ctx.vt()->w(), s).coeff(s);
    return c.scaled(bs);
}

LocalizedClass conjugated_action(Context& ctx, const ShiftOp& op, const LocalizedClass& c,
                                 int target_k) {
    TensorVector moved = op.apply(nu_map(ctx, c));
    return stab_map(ctx, Perm::identity(ctx.n()), moved, target_k);
}

LocalizedClass offdiag_direct(Context& ctx, const LocalizedClass& c, bool f_side) {
    const VarTablePtr& vt = ctx.vt();
    const int n = c.n(), k = c.k();
    if (f_side) {
        if (k == 0) throw std::invalid_argument("offdiag_direct: weight 0 has no F image");
        LocalizedClass out(vt, n, k - 1);
        RatF pref = -rf(yv(vt));  // c_F
        if (k % 2 == 0) pref = -pref;  // (-1)^{k-1}
        for (const auto& J : all_subsets(n, k - 1)) {
            RatF acc = RatF::zero(vt);
            for (int b : J.complement().elems) {
                RatF term = c.component(J.with(b));
                if (term.is_zero()) continue;
                term *= rf(lam(vt) + wv(vt) - zv(vt, b) + mpq_class(n - 2 * k + 1) * yv(vt)) /
                        rf(wv(vt) - zv(vt, b));
                for (int a : J.elems) term *= rf(zv(vt, b) - zv(vt, a) - yv(vt));
                for (int bp : J.complement().elems)
                    if (bp != b) term /= rf(zv(vt, b) - zv(vt, bp));
                acc += term;
            }
            out.set(J, pref * acc);
        }
        return out;
    }
    if (k == n) throw std::invalid_argument("offdiag_direct: weight n has no E image");
    LocalizedClass out(vt, n, k + 1);
    RatF ce = -rf(yv(vt)) / rf((lam(vt) - yv(vt)) * (lam(vt) - mpq_class(2) * yv(vt)));
    RatF pref = (n - k - 1) % 2 == 0 ? ce : -ce;  // (-1)^{n-k-1} c_E
    for (const auto& J : all_subsets(n, k + 1)) {
        RatF acc = RatF::zero(vt);
        SubsetIndex jbar = J.complement();
        for (int a : J.elems) {
            RatF term = c.component(J.without(a)).shift_lambda(-2);
            if (term.is_zero()) continue;
            term *= rf(lam(vt) - wv(vt) + zv(vt, a) - yv(vt)) / rf(wv(vt) - zv(vt, a));
            for (int b : jbar.elems) term *= rf(zv(vt, b) - zv(vt, a) - yv(vt));
            for (int ap : J.elems)
                if (ap != a) term /= rf(zv(vt, ap) - zv(vt, a));
            acc += term;
        }
        out.set(J, pref * acc);
    }
    return out;
}

bool check_l22_transport(Context& ctx, const TensorVector& zeta, int k) {
    LOperator L = ctx.loperator(Perm::identity(ctx.n()));
    LocalizedClass lhs = stab_map(ctx, Perm::identity(ctx.n()), ltilde(L, 2, 2).apply(zeta), k);
    LocalizedClass rhs = l22_mult_transport(ctx, stab_map(ctx, Perm::identity(ctx.n()), zeta, k));
    return lhs.equals(rhs);
}

bool check_det_transport(Context& ctx, const TensorVector& zeta, int k) {
    LOperator L = ctx.loperator(Perm::identity(ctx.n()));
    LocalizedClass lhs =
        stab_map(ctx, Perm::identity(ctx.n()), det_element(L).apply(zeta), k);
    LocalizedClass rhs = det_mult_transport(ctx, stab_map(ctx, Perm::identity(ctx.n()), zeta, k));
    return lhs.equals(rhs);
}

bool check_gz_coefficient_transport(Context& ctx, int k, int S) {
    const int n = ctx.n();
    LOperator L = ctx.loperator(Perm::identity(n));
    auto l22s = gz_l22_coeffs(L, S);
    auto dets = gz_det_coeffs(L, S);
    for (const auto& I : all_subsets(n, k)) {
        TensorVector e = TensorVector::basis(ctx.vt(), I);
        LocalizedClass c = stab_map(ctx, Perm::identity(n), e, k);
        for (int s = 0; s <= S; ++s) {
            LocalizedClass lhs =
                stab_map(ctx, Perm::identity(n), l22s[static_cast<size_t>(s)].apply(e), k);
            if (!lhs.equals(as_mult_transport(ctx, c, s))) return false;
            LocalizedClass lhsd =
                stab_map(ctx, Perm::identity(n), dets[static_cast<size_t>(s)].apply(e), k);
            if (!lhsd.equals(bs_mult_transport(ctx, c, s))) return false;
        }
    }
    return true;
}

bool check_offdiag_transport(Context& ctx, const LocalizedClass& c, bool f_side) {
    LOperator L = ctx.loperator(Perm::identity(ctx.n()));
    int target = f_side ? c.k() - 1 : c.k() + 1;
    ShiftOp op = f_side ? f_tilde(L) : e_tilde(L);
    LocalizedClass via_module = conjugated_action(ctx, op, c, target);
    LocalizedClass direct = offdiag_direct(ctx, c, f_side);
    return via_module.equals(direct);
}

bool check_submodule(Context& ctx) {
    const VarTablePtr& vt = ctx.vt();
    const int n = ctx.n();
    LOperator L = ctx.loperator(Perm::identity(n));
    auto l22s = gz_l22_coeffs(L, n + 2);
    auto dets = gz_det_coeffs(L, n + 2);
    for (int k = 0; k <= n; ++k) {
        // symmetric test classes: constants, e_1 over the first Chern roots,
        // and the full power sum in z
        std::vector<LocalizedClass> tests;
        LocalizedClass ones(vt, n, k);
        LocalizedClass e1g(vt, n, k);
        LocalizedClass pz(vt, n, k);
        Poly zsum(vt);
        for (int a = 1; a <= n; ++a) zsum += zv(vt, a) * zv(vt, a);
        for (const auto& I : all_subsets(n, k)) {
            ones.set(I, RatF::one(vt));
            Poly e1(vt);
            for (int a : I.elems) e1 += zv(vt, a);
            e1g.set(I, rf(e1));
            pz.set(I, rf(zsum));
        }
        tests.push_back(ones);
        tests.push_back(e1g);
        tests.push_back(pz);
        for (const auto& c : tests) {
            if (!gln_symmetric(c)) return false;
            for (int s = 0; s <= n + 2; ++s) {
                if (!gln_symmetric(conjugated_action(ctx, l22s[static_cast<size_t>(s)], c, k)))
                    return false;
                if (!gln_symmetric(conjugated_action(ctx, dets[static_cast<size_t>(s)], c, k)))
                    return false;
            }
            if (k >= 1 && !gln_symmetric(conjugated_action(ctx, f_tilde(L), c, k - 1)))
                return false;
            if (k < n && !gln_symmetric(conjugated_action(ctx, e_tilde(L), c, k + 1)))
                return false;
        }
    }
    return true;
}

}  // namespace dynstab
