#pragma once

#include "dynstab/rmatrix.hpp"

namespace dynstab {

// The 2x2 matrix of operators on (C^2)^{x n} obtained as the ordered product
// of dynamical R-matrices over an auxiliary factor:
//   R^{(0,1)}(lambda - y sum_{j>=2} h^{(j)}, w - z_{sigma(1)}) ...
//   R^{(0,n)}(lambda, w - z_{sigma(n)}),
// read as blocks: L(v_j^aux x u) = sum_i v_i^aux x (block(i,j) u). Entries
// are rational in (lambda, w, z, y) with poles along w = z_i + y only.
class LOperator {
public:
    LOperator(VarTablePtr vt, int n, Perm sigma);

    int n() const { return n_; }
    const Perm& sigma() const { return sigma_; }
    const VarTablePtr& table() const { return vt_; }

    const DynOperator& block(int i, int j) const;  // i, j in {1, 2}
    DynOperator& block(int i, int j);

private:
    VarTablePtr vt_;
    int n_;
    Perm sigma_;
    std::vector<DynOperator> blocks_;
};

LOperator build_l(const VarTablePtr& vt, const Perm& sigma);

}  // namespace dynstab
