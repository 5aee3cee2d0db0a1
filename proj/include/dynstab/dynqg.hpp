#pragma once

#include "dynstab/cohomology.hpp"
#include "dynstab/laurent.hpp"
#include "dynstab/shiftop.hpp"

namespace dynstab {

// Difference-operator forms of the L-entries: delta^{-1} for the first
// column, delta^{+1} for the second.
ShiftOp ltilde(const LOperator& L, int i, int j);

// Multiplication operator by a lambda-free/lambda-dependent scalar, and by a
// per-weight scalar (for yh-resolved prefactors).
ShiftOp scalar_op(const VarTablePtr& vt, int slots, const RatF& s);
ShiftOp weight_scalar_op(const VarTablePtr& vt, int slots, const std::function<RatF(int)>& s);

// Tensor-factor permutation as an operator.
DynOperator perm_operator(const VarTablePtr& vt, const Perm& p);

// (lambda/(lambda - y h)) (L~22(w+y) L~11(w) - L~12(w+y) L~21(w)); the
// second form uses the transposed ordering. Both must agree.
ShiftOp det_element(const LOperator& L, bool second_form = false);

// prod_i (w - z_i + y)/(w - z_i)
RatF det_scalar(const VarTablePtr& vt, int n);
// prod_{i in I} (w - z_i)/(w - z_i - y)
RatF l22_eigenvalue(const VarTablePtr& vt, const SubsetIndex& I);

// Blockwise exact inverse of L22 (it preserves the weight grading).
DynOperator l22_inverse(const LOperator& L);

// F~ = L~12 o L~22^{-1}: no net shift. E~ = L~22^{-1} o L~21: shift by -2y.
ShiftOp f_tilde(const LOperator& L);
ShiftOp e_tilde(const LOperator& L);

// Laurent coefficients (in the spectral variable) of the generating series,
// as shift operators; and the inverse of the order-0 coefficient.
std::vector<ShiftOp> gz_l22_coeffs(const LOperator& L, int S);
std::vector<ShiftOp> gz_det_coeffs(const LOperator& L, int S);
ShiftOp gz_l22_0_inverse(const LOperator& L);

// Exchange relation between the full L-operators with two spectral
// parameters, on two auxiliary factors (entrywise on the combined space).
bool check_rll(const VarTablePtr& vt, const Perm& sigma);
// The two displayed scalar corollaries of the exchange relation.
bool check_l11_exchange(const LOperator& L);
bool check_l22_exchange(const LOperator& L);

// Conjugation relations of the difference operators against functions of
// (lambda, yh): checked for f = lambda and f = yh.
bool check_fh_relations(const LOperator& L);

// The intertwiner R^(i,i+1)(lambda - y sum_{p>=i+2} h^(p),
// z_{sigma(i)} - z_{sigma(i+1)}) P^(i,i+1) commutes with all L~uv between the
// modules attached to sigma s_i and sigma.
bool check_intertwiner(Context& ctx, const Perm& sigma, int i);

// Closed-form actions on the xi vectors.
bool check_l22_eigen(Context& ctx, const SubsetIndex& I);
bool check_f_formula(Context& ctx, const SubsetIndex& I);
bool check_e_formula(Context& ctx, const SubsetIndex& I);

// Multiplication-side transports on localized classes.
LocalizedClass l22_mult_transport(Context& ctx, const LocalizedClass& c);
LocalizedClass det_mult_transport(Context& ctx, const LocalizedClass& c);
LocalizedClass as_mult_transport(Context& ctx, const LocalizedClass& c, int s);
LocalizedClass bs_mult_transport(Context& ctx, const LocalizedClass& c, int s);

// stab o op o nu with the stated target weight.
LocalizedClass conjugated_action(Context& ctx, const ShiftOp& op, const LocalizedClass& c,
                                 int target_k);

// The displayed localized formulas for the off-diagonal series.
LocalizedClass offdiag_direct(Context& ctx, const LocalizedClass& c, bool f_side);

// Two-route equalities.
bool check_l22_transport(Context& ctx, const TensorVector& zeta, int k);
bool check_det_transport(Context& ctx, const TensorVector& zeta, int k);
bool check_gz_coefficient_transport(Context& ctx, int k, int S);
bool check_offdiag_transport(Context& ctx, const LocalizedClass& c, bool f_side);

// Closure of the symmetric submodule under the conjugated generators (n = 2
// scale intended).
bool check_submodule(Context& ctx);

}  // namespace dynstab
