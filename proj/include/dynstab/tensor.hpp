#pragma once

#include <functional>
#include <map>

#include "dynstab/ratmatrix.hpp"
#include "dynstab/subsets.hpp"

namespace dynstab {

// Element of (C^2)^{x slots} with rational-function coefficients. Basis
// vectors are indexed by the subsets I of [slots] recording which factors
// carry v_1; absent keys are zero and stored coefficients are nonzero.
class TensorVector {
public:
    TensorVector(VarTablePtr vt, int slots);
    static TensorVector basis(VarTablePtr vt, const SubsetIndex& I);

    int slots() const { return slots_; }
    const VarTablePtr& table() const { return vt_; }
    const std::map<SubsetIndex, RatF>& coeffs() const { return c_; }

    RatF coeff(const SubsetIndex& I) const;
    void set(const SubsetIndex& I, RatF v);
    void add(const SubsetIndex& I, const RatF& v);
    bool is_zero() const { return c_.empty(); }
    bool supported_in_weight(int k) const;

    TensorVector operator+(const TensorVector& o) const;
    TensorVector operator-(const TensorVector& o) const;
    TensorVector operator-() const;
    TensorVector scaled(const RatF& s) const;

    TensorVector map_coeffs(const std::function<RatF(const RatF&)>& f) const;
    TensorVector shift_lambda(int m) const;
    TensorVector substitute_poly(const std::map<int, Poly>& bindings) const;
    // coefficient-wise z_i <-> z_j exchange (tensor factors untouched)
    TensorVector swap_z(int i, int j) const;
    // basis relabeling v_I -> v_{p(I)} (tensor factor permutation)
    TensorVector permute_slots(const Perm& p) const;

    bool equals(const TensorVector& o) const;
    std::string str() const;

private:
    VarTablePtr vt_;
    int slots_;
    std::map<SubsetIndex, RatF> c_;
};

// Sum of h eigenvalues over the given positions: +1 if the slot lies in I,
// -1 otherwise.
int h_sum(const SubsetIndex& I, const std::vector<int>& positions);
// Total h eigenvalue 2|I| - slots.
int h_total(const SubsetIndex& I);

// Fixed basis enumeration v_1x..xv_1, ..., v_2x..xv_2 (lexicographic over
// tensor factors with v_1 before v_2).
std::vector<SubsetIndex> vbasis_order(int slots);

// Linear operator on (C^2)^{x slots}, stored by columns; coefficients are
// scalars for the action (no implicit z or lambda substitution).
class DynOperator {
public:
    DynOperator(VarTablePtr vt, int slots);  // zero operator
    static DynOperator identity(VarTablePtr vt, int slots);

    int slots() const { return slots_; }
    const VarTablePtr& table() const { return vt_; }

    void set_column(const SubsetIndex& I, TensorVector col);
    TensorVector column(const SubsetIndex& I) const;

    TensorVector apply(const TensorVector& v) const;
    DynOperator compose(const DynOperator& inner) const;  // this after inner
    DynOperator operator+(const DynOperator& o) const;
    DynOperator operator-(const DynOperator& o) const;
    DynOperator scaled(const RatF& s) const;
    // multiply each column coefficient by a per-output-weight scalar
    DynOperator scaled_by_weight(const std::function<RatF(int)>& s) const;

    DynOperator shift_lambda(int m) const;
    DynOperator substitute_poly(const std::map<int, Poly>& bindings) const;

    bool equals(const DynOperator& o) const;
    bool is_zero() const;

    RatMatrix weight_block(int k) const;  // colex order over k-subsets
    static DynOperator from_weight_block(const VarTablePtr& vt, int slots, int k,
                                         const RatMatrix& m);
    RatMatrix full_matrix() const;  // vbasis_order

    std::string str() const;

private:
    VarTablePtr vt_;
    int slots_;
    std::map<SubsetIndex, TensorVector> col_;
};

}  // namespace dynstab
