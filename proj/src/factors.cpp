#include "dynstab/factors.hpp"

namespace dynstab {

Poly euler_factor(const VarTablePtr& vt, const Perm& sigma, const SubsetIndex& I,
                  EulerKind kind, EulerSign sign) {
    const int n = I.n;
    Poly out = Poly::constant(vt, 1);
    for (int a = 1; a <= n; ++a) {
        if (!I.contains(sigma(a))) continue;
        for (int b = 1; b <= n; ++b) {
            if (I.contains(sigma(b))) continue;
            // hor,+: b < a;  hor,-: b > a;  ver,+: b > a;  ver,-: b < a
            bool b_less = (kind == EulerKind::hor) == (sign == EulerSign::plus);
            if (b_less ? !(b < a) : !(b > a)) continue;
            if (kind == EulerKind::hor)
                out *= zv(vt, sigma(b)) - zv(vt, sigma(a));
            else
                out *= zv(vt, sigma(a)) - zv(vt, sigma(b)) + yv(vt);
        }
    }
    return out;
}

std::pair<Poly, Poly> rq_products(const VarTablePtr& vt, const SubsetIndex& I) {
    return {r_product(vt, I), q_product(vt, I)};
}

Poly r_product(const VarTablePtr& vt, const SubsetIndex& I) {
    Poly r = Poly::constant(vt, 1);
    SubsetIndex c = I.complement();
    for (int a : I.elems)
        for (int b : c.elems) r *= zv(vt, a) - zv(vt, b);
    return r;
}

Poly q_product(const VarTablePtr& vt, const SubsetIndex& I) {
    Poly q = Poly::constant(vt, 1);
    SubsetIndex c = I.complement();
    for (int a : I.elems)
        for (int b : c.elems) q *= zv(vt, a) - zv(vt, b) + yv(vt);
    return q;
}

Poly c_factor(const VarTablePtr& vt, const Perm& sigma, const SubsetIndex& I, int r) {
    Poly out = Poly::constant(vt, 1);
    Perm inv = sigma.inverse();
    SubsetIndex pre = inv.apply(I);
    for (int i : I.elems)
        out *= lam(vt) - mpq_class(wnum(inv(i), pre) + r) * yv(vt);
    return out;
}

Poly ek_product(const VarTablePtr& vt, const std::vector<Poly>& args) {
    Poly out = Poly::constant(vt, 1);
    for (const Poly& a : args)
        for (const Poly& b : args) out *= a - b + yv(vt);
    return out;
}

Poly ek_t(const VarTablePtr& vt, int k) {
    std::vector<Poly> args;
    for (int a = 1; a <= k; ++a) args.push_back(tv(vt, a));
    return ek_product(vt, args);
}

Poly ek_z(const VarTablePtr& vt, const SubsetIndex& J) {
    std::vector<Poly> args;
    for (int j : J.elems) args.push_back(zv(vt, j));
    return ek_product(vt, args);
}

}  // namespace dynstab
