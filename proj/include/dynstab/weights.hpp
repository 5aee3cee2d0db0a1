#pragma once

#include "dynstab/factors.hpp"
#include "dynstab/ratf.hpp"

namespace dynstab {

enum class WeightVariant { plain, tilde, minus, plus };

struct WeightFunction {
    int n = 0, k = 0;
    Perm sigma;
    SubsetIndex index;
    Poly value;  // polynomial in (lambda, t_1..t_k, z_1..z_n, y)
};

// The linear factor of the unsymmetrized product: for I = {i_1 < ... < i_k},
//   l_I(r,a) = t_r - z_a + y            (a < i_r)
//            = lambda + t_r - z_a - w(i_r, I) y   (a = i_r)
//            = t_r - z_a                (a > i_r)
Poly l_factor(const VarTablePtr& vt, const SubsetIndex& I, int r, int a);

// W_{sigma,I} = y^k Sym_k( prod_{r,a} l_{sigma^{-1}(I)}(r,a) *
// prod_{a<b} (t_a-t_b+y)/(t_a-t_b) ), with z_a -> z_{sigma(a)} afterwards.
// The symmetrized sum always clears the t-denominators; failure to do so is
// reported as a logic error.
WeightFunction weight(const VarTablePtr& vt, const Perm& sigma, const SubsetIndex& I);

// Independent assembly: sums, over all placements of the t variables into the
// marked rows of the two-column table, the product of the four factor types
// read off the filled table. Must agree with weight().
WeightFunction diagram_weight(const VarTablePtr& vt, const Perm& sigma, const SubsetIndex& I);

struct ModifiedWeight {
    WeightVariant variant = WeightVariant::tilde;
    int n = 0, k = 0;
    Perm sigma;
    SubsetIndex index;
    RatF value;
};

// tilde: W/e_k.  minus: (-1)^k/e_k * W_{s0,K}(-lambda-(n-2k)y, t, z, y)
// (sigma is ignored; the longest permutation is built in).  plus:
// W/(C^(0) C^(1) e_k).
ModifiedWeight modified_weight(const VarTablePtr& vt, WeightVariant v, const Perm& sigma,
                               const SubsetIndex& I);

// t_a -> z_{j_a} (order immaterial for t-symmetric values).
RatF restrict_at(const RatF& f, const SubsetIndex& J);

// Restrictions evaluated term-by-term, never expanding the symmetrization.
RatF weight_restrict(const VarTablePtr& vt, const Perm& sigma, const SubsetIndex& I,
                     const SubsetIndex& J);
RatF modified_restrict(const VarTablePtr& vt, WeightVariant v, const Perm& sigma,
                       const SubsetIndex& I, const SubsetIndex& J);

// (f,g) = sum_{|I|=k} f(z_I) g(z_I) / (R_I Q_I).
RatF scalar_product(const RatF& f, const RatF& g, int k);

// Exchange identities relating W_I and W_{s_{a,a+1}(I)} under the z_a/z_{a+1}
// swap (three cases by the position of a, a+1 relative to I).
bool check_recursion(const VarTablePtr& vt, const SubsetIndex& I, int a);

// sum_I W_{id,J}(z_I) W_{s0,K}(-lambda-(n-2k)y, z_I) /
//       (C^(0)_J C^(1)_J e_k(z_I)^2 R_I Q_I) = (-1)^k delta_{J,K}
bool check_orthogonality_pairing(const VarTablePtr& vt, const SubsetIndex& J,
                                 const SubsetIndex& K);
// (W~+_J, W~-_K) = delta_{J,K}
bool check_orthogonality_modified(const VarTablePtr& vt, const SubsetIndex& J,
                                  const SubsetIndex& K);

struct InterpolationReport {
    bool div_ek = false;        // e_k(z_J, y) divides W(z_J)
    bool div_ever = false;      // e^ver_{sigma,J,-} divides W~(z_J)
    bool vanish_ok = false;     // W~(z_J) = 0 unless J <=_sigma I
    bool diag_ok = false;       // the J = I value and its sign
    bool degree_ok = false;     // homogeneous of degree k(n-k)+k when nonzero
    bool lambda_deg_ok = false; // lambda-degree at most k
    bool ydiv_ok = false;       // divisible by y when J != I
    bool pass() const {
        return div_ek && div_ever && vanish_ok && diag_ok && degree_ok && lambda_deg_ok &&
               ydiv_ok;
    }
};
InterpolationReport check_interpolation(const VarTablePtr& vt, const Perm& sigma,
                                        const SubsetIndex& I, const SubsetIndex& J);

}  // namespace dynstab
