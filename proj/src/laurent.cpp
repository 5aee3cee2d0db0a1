#include "dynstab/laurent.hpp"

#include <stdexcept>

namespace dynstab {

bool LaurentAtInfinity::equals(const LaurentAtInfinity& o) const {
    if (var != o.var || c.size() != o.c.size()) return false;
    for (size_t s = 0; s < c.size(); ++s)
        if (!c[s].equals(o.c[s])) return false;
    return true;
}

LaurentAtInfinity LaurentAtInfinity::mul(const LaurentAtInfinity& o) const {
    LaurentAtInfinity r;
    r.var = var;
    int S = std::min(order(), o.order());
    const VarTablePtr& vt = c.at(0).table();
    r.c.assign(static_cast<size_t>(S) + 1, RatF::zero(vt));
    for (int s = 0; s <= S; ++s)
        for (int j = 0; j <= s; ++j)
            r.c[static_cast<size_t>(s)] +=
                c[static_cast<size_t>(j)] * o.c[static_cast<size_t>(s - j)];
    return r;
}

LaurentAtInfinity LaurentAtInfinity::truncate(int S) const {
    LaurentAtInfinity r;
    r.var = var;
    r.c.assign(c.begin(), c.begin() + std::min<size_t>(c.size(), static_cast<size_t>(S) + 1));
    return r;
}

LaurentAtInfinity laurent_expand(const RatF& f, int var, int S) {
    if (S < 0) throw std::invalid_argument("laurent_expand: negative order");
    const VarTablePtr& vt = f.table();
    Poly den = f.den();
    int dn = f.num().degree_in(var);
    int dd = den.degree_in(var);
    if (dn > dd) throw std::domain_error("laurent_expand: pole at infinity");

    auto ncoef = f.num().coeffs_in(var);
    auto dcoef = den.coeffs_in(var);
    auto get = [&](std::map<int, Poly>& m, int e) {
        auto it = m.find(e);
        return it == m.end() ? Poly(vt) : it->second;
    };
    // series in u = var^{-1}: A(u)/B(u) with A_s = num coeff of var^{dd-s},
    // B_j = den coeff of var^{dd-j}
    Poly b0 = get(dcoef, dd);
    RatF b0inv = RatF(Poly::constant(vt, 1), b0);

    LaurentAtInfinity out;
    out.var = var;
    out.c.reserve(static_cast<size_t>(S) + 1);
    for (int s = 0; s <= S; ++s) {
        RatF acc = rf(get(ncoef, dd - s));
        for (int j = 1; j <= s; ++j)
            acc -= rf(get(dcoef, dd - j)) * out.c[static_cast<size_t>(s - j)];
        out.c.push_back(acc * b0inv);
    }
    return out;
}

}  // namespace dynstab
