#pragma once

#include <vector>

#include "dynstab/ratf.hpp"

namespace dynstab {

// Truncated expansion sum_{s=0}^{S} c_s * x^{-s} of a rational function
// regular at x = infinity; the coefficients are free of x.
struct LaurentAtInfinity {
    int var = -1;
    std::vector<RatF> c;  // c[s] multiplies var^{-s}; size = order + 1

    int order() const { return static_cast<int>(c.size()) - 1; }
    const RatF& coeff(int s) const { return c.at(static_cast<size_t>(s)); }

    bool equals(const LaurentAtInfinity& o) const;
    // product truncated to min(order, o.order)
    LaurentAtInfinity mul(const LaurentAtInfinity& o) const;
    LaurentAtInfinity truncate(int S) const;
};

// Expand f at var = infinity up to order S by long division in var^{-1}.
// Throws std::domain_error when f has a pole at infinity
// (deg_var num > deg_var den).
LaurentAtInfinity laurent_expand(const RatF& f, int var, int S);

}  // namespace dynstab
