#pragma once

#include <utility>
#include <vector>

#include "dynstab/poly.hpp"
#include "dynstab/subsets.hpp"

namespace dynstab {

enum class EulerKind { hor, ver };
enum class EulerSign { plus, minus };

// Euler-class products at the fixed point indexed by I, for the cell attached
// to sigma. In z, y only.
Poly euler_factor(const VarTablePtr& vt, const Perm& sigma, const SubsetIndex& I,
                  EulerKind kind, EulerSign sign);

// R_I = prod_{a in I} prod_{b notin I} (z_a - z_b), Q_I the same with +y.
std::pair<Poly, Poly> rq_products(const VarTablePtr& vt, const SubsetIndex& I);
Poly r_product(const VarTablePtr& vt, const SubsetIndex& I);
Poly q_product(const VarTablePtr& vt, const SubsetIndex& I);

// C^{(r)}_{sigma,I} = prod_{i in I} (lambda - (w(sigma^{-1}(i), sigma^{-1}(I)) + r) y).
Poly c_factor(const VarTablePtr& vt, const Perm& sigma, const SubsetIndex& I, int r);

// prod_{a,b=1..k} (x_a - x_b + y) over all ordered pairs including a = b.
Poly ek_product(const VarTablePtr& vt, const std::vector<Poly>& args);
// Same evaluated at (t_1, ..., t_k).
Poly ek_t(const VarTablePtr& vt, int k);
// Same evaluated at z_J.
Poly ek_z(const VarTablePtr& vt, const SubsetIndex& J);

}  // namespace dynstab
