#pragma once

#include <mutex>
#include <tuple>

#include "dynstab/loperator.hpp"
#include "dynstab/weights.hpp"

namespace dynstab {

// One computation environment: the variable table for a fixed n (with n
// t-slots, enough for every k <= n) plus memoization of the expensive
// repeated objects. Cached values are immutable; the mutex only guards map
// access, so concurrent queries are safe (a race at worst duplicates work).
class Context {
public:
    explicit Context(int n);

    int n() const { return n_; }
    const VarTablePtr& vt() const { return vt_; }

    Poly weight_value(const Perm& sigma, const SubsetIndex& I);
    RatF restricted(WeightVariant v, const Perm& sigma, const SubsetIndex& I,
                    const SubsetIndex& J);
    TensorVector xi(const SubsetIndex& I);
    LOperator loperator(const Perm& sigma);

private:
    int n_;
    VarTablePtr vt_;
    std::mutex mu_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Poly> weights_;
    std::map<std::tuple<int, std::vector<int>, std::vector<int>, std::vector<int>>, RatF>
        restricted_;
    std::map<std::vector<int>, TensorVector> xi_;
    std::map<std::vector<int>, LOperator> lops_;
};

}  // namespace dynstab
