#pragma once

#include "dynstab/tensor.hpp"

namespace dynstab {

// The 4x4 dynamical R-matrix in the basis v1xv1, v1xv2, v2xv1, v2xv2,
// evaluated at the given dynamical and spectral arguments. Operators act on
// column coordinate vectors in this basis.
RatMatrix rmat(const VarTablePtr& vt, const RatF& lambda_arg, const RatF& z_arg);

// R acting in the (ordered) pair of slots (i, j) with dynamical argument
// lambda_base - y * sum_{p in h_positions} h^{(p)}, resolved per basis
// vector. h_positions must avoid i and j.
TensorVector apply_r(const TensorVector& v, int i, int j, const RatF& lambda_base,
                     const std::vector<int>& h_positions, const RatF& z_arg);
DynOperator r_operator(const VarTablePtr& vt, int slots, int i, int j, const RatF& lambda_base,
                       const std::vector<int>& h_positions, const RatF& z_arg);

// s~_i = R^{(i,i+1)}(lambda - y sum_{p >= i+2} h^{(p)}, z_i - z_{i+1})
//        o P^{(i,i+1)} o K^{(i,i+1)}
// acting on (C^2)^{x n} with evaluation parameters z_1..z_n in slot order.
TensorVector s_tilde(const TensorVector& v, int i);

// Divided-difference-type operator on scalar functions:
//   s^_{i,mu} f = ((mu+z_{i+1}-z_i) y) / ((mu-y)(z_{i+1}-z_i)) f
//              + (mu (z_{i+1}-z_i-y)) / ((mu-y)(z_{i+1}-z_i)) K^{(i,i+1)} f
RatF s_hat(int i, const RatF& mu, const RatF& f);
RatF s_hat_inverse(int i, const RatF& mu, const RatF& f);

// Transfer maps relating the standard-basis components of an s~_j-invariant
// vector across a mixed pair: with mu = lambda - y nu,
//   f_{s_j(I)} = ((mu+y)/(mu-y)) s^{-1}_{j,mu} f_I = (s^ + 1 - (mu+y)/(mu-y)) f_I
// for j not in I, j+1 in I, and the inverse map for the other mixed case.
RatF invariant_transfer(int j, const RatF& mu, const RatF& f);
RatF invariant_transfer_back(int j, const RatF& mu, const RatF& f);

// R^{(1,2)}(lambda,z,y) R^{(2,1)}(lambda,-z,y) = Id on two slots, z symbolic.
bool check_inversion(const VarTablePtr& vt);

// Dynamical Yang-Baxter equation on three slots with symbolic z, w.
bool check_ybe(const VarTablePtr& vt);

}  // namespace dynstab
