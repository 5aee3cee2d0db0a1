#include "dynstab/xibasis.hpp"

#include <stdexcept>

namespace dynstab {

RatF xi_diagonal(Context& ctx, const SubsetIndex& I) {
    const VarTablePtr& vt = ctx.vt();
    Poly num = c_factor(vt, Perm::identity(ctx.n()), I, 1);
    Poly den = Poly::constant(vt, 1);
    for (int a : I.elems)
        for (int b = 1; b < a; ++b) {
            if (I.contains(b)) continue;
            num *= zv(vt, b) - zv(vt, a);
            den *= zv(vt, b) - zv(vt, a) - yv(vt);
        }
    return RatF(std::move(num), std::move(den));
}

std::vector<TensorVector> xi_basis(Context& ctx, int k) {
    std::vector<TensorVector> out;
    for (const auto& I : all_subsets(ctx.n(), k)) out.push_back(ctx.xi(I));
    return out;
}

std::map<SubsetIndex, RatF> expand_in_xi(Context& ctx, const TensorVector& v, int k) {
    if (!v.supported_in_weight(k))
        throw std::invalid_argument("expand_in_xi: vector not supported in the given weight");
    auto subs = all_subsets(ctx.n(), k);  // colex refines the triangular order
    std::map<SubsetIndex, RatF> out;
    TensorVector rest = v;
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        const SubsetIndex& I = *it;
        TensorVector xiI = ctx.xi(I);
        RatF f = rest.coeff(I) / xiI.coeff(I);
        if (!f.is_zero()) {
            rest = rest - xiI.scaled(f);
            out.emplace(I, std::move(f));
        }
    }
    if (!rest.is_zero()) throw std::logic_error("expand_in_xi: triangular solve left a residue");
    return out;
}

TensorVector combine_xi(Context& ctx, const std::map<SubsetIndex, RatF>& coeffs, int k) {
    TensorVector out(ctx.vt(), ctx.n());
    for (const auto& [I, f] : coeffs) {
        if (I.k() != k) throw std::invalid_argument("combine_xi: weight mismatch");
        out = out + ctx.xi(I).scaled(f);
    }
    return out;
}

}  // namespace dynstab
