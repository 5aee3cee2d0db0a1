#include "dynstab/loperator.hpp"

#include <stdexcept>

namespace dynstab {

LOperator::LOperator(VarTablePtr vt, int n, Perm sigma)
    : vt_(std::move(vt)), n_(n), sigma_(std::move(sigma)) {
    blocks_.assign(4, DynOperator(vt_, n_));
}

const DynOperator& LOperator::block(int i, int j) const {
    if (i < 1 || i > 2 || j < 1 || j > 2) throw std::out_of_range("LOperator::block");
    return blocks_[static_cast<size_t>((i - 1) * 2 + (j - 1))];
}

DynOperator& LOperator::block(int i, int j) {
    if (i < 1 || i > 2 || j < 1 || j > 2) throw std::out_of_range("LOperator::block");
    return blocks_[static_cast<size_t>((i - 1) * 2 + (j - 1))];
}

namespace {

SubsetIndex drop_aux(const SubsetIndex& B) {
    std::vector<int> e;
    for (int i : B.elems)
        if (i > 1) e.push_back(i - 1);
    return SubsetIndex(B.n - 1, std::move(e));
}

}  // namespace

LOperator build_l(const VarTablePtr& vt, const Perm& sigma) {
    const int n = sigma.n();
    LOperator L(vt, n, sigma);
    RatF l = rf(lam(vt)), w = rf(wv(vt));
    const int m = n + 1;  // slot 1 is the auxiliary factor
    for (const auto& B : all_subsets_all_k(m)) {
        TensorVector col = TensorVector::basis(vt, B);
        for (int j = n; j >= 1; --j) {
            std::vector<int> offs;
            for (int p = j + 1; p <= n; ++p) offs.push_back(p + 1);
            col = apply_r(col, 1, j + 1, l, offs, w - rf(zv(vt, sigma(j))));
        }
        int in_aux = B.contains(1) ? 1 : 2;
        SubsetIndex I = drop_aux(B);
        TensorVector out1(vt, n), out2(vt, n);
        for (const auto& [C, v] : col.coeffs())
            (C.contains(1) ? out1 : out2).add(drop_aux(C), v);
        L.block(1, in_aux).set_column(I, std::move(out1));
        L.block(2, in_aux).set_column(I, std::move(out2));
    }
    return L;
}

}  // namespace dynstab
