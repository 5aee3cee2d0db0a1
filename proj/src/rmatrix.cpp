#include "dynstab/rmatrix.hpp"

#include <stdexcept>

namespace dynstab {

RatMatrix rmat(const VarTablePtr& vt, const RatF& lambda_arg, const RatF& z_arg) {
    RatMatrix m(vt, 4, 4);
    RatF one = RatF::one(vt), y = rf(yv(vt));
    RatF den = lambda_arg * (z_arg - y);
    m.set(0, 0, one);
    m.set(3, 3, one);
    m.set(1, 1, (lambda_arg + y) * z_arg / den);
    m.set(1, 2, -((lambda_arg + z_arg) * y) / den);
    m.set(2, 1, -((lambda_arg - z_arg) * y) / den);
    m.set(2, 2, (lambda_arg - y) * z_arg / den);
    return m;
}

TensorVector apply_r(const TensorVector& v, int i, int j, const RatF& lambda_base,
                     const std::vector<int>& h_positions, const RatF& z_arg) {
    const VarTablePtr& vt = v.table();
    for (int p : h_positions)
        if (p == i || p == j)
            throw std::invalid_argument("apply_r: dynamical offset positions must avoid i, j");
    RatF y = rf(yv(vt));
    std::map<int, RatMatrix> cache;  // by h offset
    TensorVector out(vt, v.slots());
    for (const auto& [I, c] : v.coeffs()) {
        int off = h_sum(I, h_positions);
        auto it = cache.find(off);
        if (it == cache.end())
            it = cache.emplace(off, rmat(vt, lambda_base - RatF::constant(vt, off) * y, z_arg))
                     .first;
        const RatMatrix& R = it->second;
        int ei = I.contains(i) ? 0 : 1;  // 0 = v_1, 1 = v_2
        int ej = I.contains(j) ? 0 : 1;
        int colidx = ei * 2 + ej;
        for (int row = 0; row < 4; ++row) {
            const RatF& entry = R.at(row, colidx);
            if (entry.is_zero()) continue;
            int fi = row / 2, fj = row % 2;
            SubsetIndex J = I;
            if (fi != ei) J = fi == 0 ? J.with(i) : J.without(i);
            if (fj != ej) J = fj == 0 ? J.with(j) : J.without(j);
            out.add(J, c * entry);
        }
    }
    return out;
}

DynOperator r_operator(const VarTablePtr& vt, int slots, int i, int j, const RatF& lambda_base,
                       const std::vector<int>& h_positions, const RatF& z_arg) {
    DynOperator op(vt, slots);
    for (const auto& I : all_subsets_all_k(slots))
        op.set_column(I, apply_r(TensorVector::basis(vt, I), i, j, lambda_base, h_positions,
                                 z_arg));
    return op;
}

TensorVector s_tilde(const TensorVector& v, int i) {
    const VarTablePtr& vt = v.table();
    const int n = v.slots();
    if (i < 1 || i >= n) throw std::invalid_argument("s_tilde: index out of range");
    TensorVector u = v.swap_z(i, i + 1);
    u = u.permute_slots(Perm::transposition(n, i, i + 1));
    std::vector<int> positions;
    for (int p = i + 2; p <= n; ++p) positions.push_back(p);
    return apply_r(u, i, i + 1, rf(lam(vt)), positions, rf(zv(vt, i) - zv(vt, i + 1)));
}

RatF s_hat(int i, const RatF& mu, const RatF& f) {
    const VarTablePtr& vt = f.table();
    RatF y = rf(yv(vt));
    RatF dz = rf(zv(vt, i + 1) - zv(vt, i));
    RatF den = (mu - y) * dz;  // throws via division when mu == y identically
    RatF kf = f.swap_vars(vt->z(i), vt->z(i + 1));
    return ((mu + dz) * y) / den * f + (mu * (dz - y)) / den * kf;
}

RatF s_hat_inverse(int i, const RatF& mu, const RatF& f) {
    // from the quadratic relation (s^+1)(s^ - (mu+y)/(mu-y)) = 0:
    //   s^{-1} = (mu-y)/(mu+y) ( s^ + 1 - (mu+y)/(mu-y) )
    const VarTablePtr& vt = f.table();
    RatF y = rf(yv(vt));
    RatF c = (mu + y) / (mu - y);
    return (s_hat(i, mu, f) + f - c * f) / c;
}

RatF invariant_transfer(int j, const RatF& mu, const RatF& f) {
    const VarTablePtr& vt = f.table();
    RatF y = rf(yv(vt));
    RatF c = (mu + y) / (mu - y);
    return s_hat(j, mu, f) + f - c * f;
}

RatF invariant_transfer_back(int j, const RatF& mu, const RatF& f) {
    const VarTablePtr& vt = f.table();
    RatF y = rf(yv(vt));
    RatF c = (mu + y) / (mu - y);
    return s_hat(j, mu, f) / c;
}

bool check_inversion(const VarTablePtr& vt) {
    RatF z = rf(zv(vt, 1));
    RatF l = rf(lam(vt));
    for (const auto& I : all_subsets_all_k(2)) {
        TensorVector e = TensorVector::basis(vt, I);
        TensorVector r = apply_r(e, 2, 1, l, {}, -z);
        r = apply_r(r, 1, 2, l, {}, z);
        if (!r.equals(e)) return false;
    }
    return true;
}

bool check_ybe(const VarTablePtr& vt) {
    RatF z = rf(zv(vt, 1)), w = rf(zv(vt, 2)), l = rf(lam(vt));
    for (const auto& I : all_subsets_all_k(3)) {
        TensorVector e = TensorVector::basis(vt, I);
        // left side: R12(l - y h3, z - w) R13(l, z) R23(l - y h1, w)
        TensorVector lhs = apply_r(e, 2, 3, l, {1}, w);
        lhs = apply_r(lhs, 1, 3, l, {}, z);
        lhs = apply_r(lhs, 1, 2, l, {3}, z - w);
        // right side: R23(l, w) R13(l - y h2, z) R12(l, z - w)
        TensorVector rhs = apply_r(e, 1, 2, l, {}, z - w);
        rhs = apply_r(rhs, 1, 3, l, {2}, z);
        rhs = apply_r(rhs, 2, 3, l, {}, w);
        if (!lhs.equals(rhs)) return false;
    }
    return true;
}

}  // namespace dynstab
