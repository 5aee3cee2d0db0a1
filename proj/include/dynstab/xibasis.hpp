#pragma once

#include "dynstab/context.hpp"

namespace dynstab {

// Closed form of the v_I component of xi_I:
//   C^{(1)}_{id,I} * prod_{b<a, a in I, b in complement} (z_b-z_a)/(z_b-z_a-y).
RatF xi_diagonal(Context& ctx, const SubsetIndex& I);

// All xi vectors of one weight, in colex order; a basis (the change-of-basis
// matrix is triangular with the nonzero diagonal above).
std::vector<TensorVector> xi_basis(Context& ctx, int k);

// Coefficients f_I with v = sum f_I xi_I on the weight-k subspace; solved by
// back-substitution along the triangular order. Exact reconstruction.
std::map<SubsetIndex, RatF> expand_in_xi(Context& ctx, const TensorVector& v, int k);
TensorVector combine_xi(Context& ctx, const std::map<SubsetIndex, RatF>& coeffs, int k);

}  // namespace dynstab
