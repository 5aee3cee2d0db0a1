#include "dynstab/context.hpp"

namespace dynstab {

Context::Context(int n) : n_(n), vt_(make_table(n, n)) {}

Poly Context::weight_value(const Perm& sigma, const SubsetIndex& I) {
    auto key = std::make_pair(sigma.img, I.elems);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = weights_.find(key);
        if (it != weights_.end()) return it->second;
    }
    Poly w = weight(vt_, sigma, I).value;
    std::lock_guard<std::mutex> lock(mu_);
    return weights_.emplace(std::move(key), std::move(w)).first->second;
}

RatF Context::restricted(WeightVariant v, const Perm& sigma, const SubsetIndex& I,
                         const SubsetIndex& J) {
    // the minus variant fixes its own permutation; normalize the cache key
    Perm keyperm = v == WeightVariant::minus ? Perm::identity(n_) : sigma;
    auto key = std::make_tuple(static_cast<int>(v), std::move(keyperm.img), I.elems, J.elems);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = restricted_.find(key);
        if (it != restricted_.end()) return it->second;
    }
    RatF r = modified_restrict(vt_, v, sigma, I, J);
    std::lock_guard<std::mutex> lock(mu_);
    return restricted_.emplace(std::move(key), std::move(r)).first->second;
}

TensorVector Context::xi(const SubsetIndex& I) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = xi_.find(I.elems);
        if (it != xi_.end()) return it->second;
    }
    Perm id = Perm::identity(n_);
    RatF qinv = RatF(Poly::constant(vt_, 1), q_product(vt_, I));
    TensorVector v(vt_, n_);
    for (const auto& J : all_subsets(n_, I.k()))
        v.add(J, restricted(WeightVariant::minus, id, J, I) * qinv);
    std::lock_guard<std::mutex> lock(mu_);
    return xi_.emplace(I.elems, std::move(v)).first->second;
}

LOperator Context::loperator(const Perm& sigma) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = lops_.find(sigma.img);
        if (it != lops_.end()) return it->second;
    }
    LOperator L = build_l(vt_, sigma);
    std::lock_guard<std::mutex> lock(mu_);
    return lops_.emplace(sigma.img, std::move(L)).first->second;
}

}  // namespace dynstab
