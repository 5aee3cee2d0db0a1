#pragma once

#include <string>
#include <vector>

#include "dynstab/ratf.hpp"

namespace dynstab {

// Dense rectangular matrix over the rational-function field.
class RatMatrix {
public:
    RatMatrix(VarTablePtr vt, int rows, int cols);
    static RatMatrix identity(VarTablePtr vt, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const VarTablePtr& table() const { return vt_; }

    const RatF& at(int r, int c) const;
    void set(int r, int c, RatF v);

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix scaled(const RatF& s) const;

    bool equals(const RatMatrix& o) const;
    bool is_identity() const;

    RatMatrix transpose() const;
    RatMatrix substitute_poly(const std::map<int, Poly>& bindings) const;
    RatMatrix shift_lambda(int m) const;

    // Exact inverse: entries are cleared to a common polynomial matrix,
    // reduced by fraction-free (Bareiss) Gaussian elimination, and the
    // triangular system is back-substituted over the field.
    // Throws std::domain_error on a singular matrix.
    RatMatrix inverse() const;
    RatF determinant() const;

    std::string str() const;

private:
    int rows_, cols_;
    VarTablePtr vt_;
    std::vector<RatF> e_;
    size_t idx(int r, int c) const { return static_cast<size_t>(r) * cols_ + c; }
};

}  // namespace dynstab
