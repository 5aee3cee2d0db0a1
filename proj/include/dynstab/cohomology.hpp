#pragma once

#include <json.hpp>

#include "dynstab/context.hpp"

namespace dynstab {

// Cohomology class in localized form: the tuple of its restrictions to the
// fixed points of one weight-k piece, each a rational function in
// (lambda, z, y).
class LocalizedClass {
public:
    LocalizedClass(VarTablePtr vt, int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const VarTablePtr& table() const { return vt_; }
    const std::map<SubsetIndex, RatF>& components() const { return c_; }

    RatF component(const SubsetIndex& I) const;
    void set(const SubsetIndex& I, RatF v);

    LocalizedClass operator+(const LocalizedClass& o) const;
    LocalizedClass operator-(const LocalizedClass& o) const;
    LocalizedClass operator-() const;
    LocalizedClass scaled(const RatF& s) const;
    LocalizedClass map_components(const std::function<RatF(const RatF&)>& f) const;
    LocalizedClass shift_lambda(int m) const;

    bool is_zero() const;
    bool equals(const LocalizedClass& o) const;

    nlohmann::json to_json() const;
    std::string str() const;

private:
    VarTablePtr vt_;
    int n_, k_;
    std::map<SubsetIndex, RatF> c_;
};

// Restrictions of the class whose fixed-point values are the plus-modified
// weight restrictions attached to (sigma, I).
LocalizedClass kappa_class(Context& ctx, const Perm& sigma, const SubsetIndex& I);

// Linear extension of v_I -> kappa_{sigma,I} on the weight-k subspace.
LocalizedClass stab_map(Context& ctx, const Perm& sigma, const TensorVector& v, int k);

// nu: class -> sum_I component(I)/R_I(z) * xi_I.
TensorVector nu_map(Context& ctx, const LocalizedClass& c);

// Column I = restrictions of kappa_{sigma,I}, rows and columns in colex
// order; triangular with respect to the sigma order.
RatMatrix stab_matrix(Context& ctx, const Perm& sigma, int k);

// Composition matrix solving Stab_{sigma'} X = Stab_{sigma} per weight by
// back-substitution along the sigma' order (never dense inversion).
RatMatrix geometric_r_block(Context& ctx, const Perm& sigma_prime, const Perm& sigma, int k);
DynOperator geometric_r(Context& ctx, const Perm& sigma_prime, const Perm& sigma);

// Localization-image criterion: component differences under index
// transpositions are divisible by the corresponding z difference.
bool in_loc_image(const LocalizedClass& c);

// Equivariance pattern of the localizations of an S_n x (Gamma-symmetric)
// polynomial representative.
bool gln_symmetric(const LocalizedClass& c);

// For display only: a single-root representative at k = 1, interpolated in
// the first tautological Chern root (rendered through the w slot), whose
// value at w = z_i is the i-th component.
RatF gamma_representative_k1(Context& ctx, const LocalizedClass& c);

}  // namespace dynstab
