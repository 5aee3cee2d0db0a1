#pragma once

#include "dynstab/tensor.hpp"

namespace dynstab {

// Finite Z-linear combination of lambda-shifts with operator coefficients:
//   (A zeta)(lambda) = sum_m block_m(lambda) zeta(lambda + m y).
// Composition shifts lambda inside the right factor's blocks:
//   (A o B)_{m''} = sum_{m+m'=m''} A_m(lambda) B_{m'}(lambda + m y).
class ShiftOp {
public:
    ShiftOp(VarTablePtr vt, int slots);
    static ShiftOp identity(const VarTablePtr& vt, int slots);
    // operator block attached to the shift delta^m
    static ShiftOp single(int m, DynOperator block);

    int slots() const { return slots_; }
    const VarTablePtr& table() const { return vt_; }
    const std::map<int, DynOperator>& blocks() const { return blocks_; }
    DynOperator block(int m) const;

    void add_block(int m, const DynOperator& op);

    TensorVector apply(const TensorVector& zeta) const;
    ShiftOp compose(const ShiftOp& rhs) const;  // this after rhs
    ShiftOp operator+(const ShiftOp& o) const;
    ShiftOp operator-(const ShiftOp& o) const;
    // left multiplication by a lambda-dependent scalar
    ShiftOp scaled(const RatF& s) const;
    // left multiplication by a per-weight scalar (resolves yh prefactors)
    ShiftOp scaled_by_weight(const std::function<RatF(int)>& s) const;
    ShiftOp substitute_poly(const std::map<int, Poly>& bindings) const;

    bool equals(const ShiftOp& o) const;
    bool is_zero() const;

    std::string str() const;

private:
    VarTablePtr vt_;
    int slots_;
    std::map<int, DynOperator> blocks_;  // zero blocks removed
};

}  // namespace dynstab
