#include "dynstab/vartable.hpp"

#include <stdexcept>

namespace dynstab {

VarTable::VarTable(int n, int k) : n_(n), k_(k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("VarTable: n and k must be nonnegative");
    names_ = {"lambda", "y", "w", "w1", "w2"};
    for (int i = 1; i <= n; ++i) names_.push_back("z" + std::to_string(i));
    for (int a = 1; a <= k; ++a) names_.push_back("t" + std::to_string(a));
}

int VarTable::z(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("VarTable::z index out of range");
    return 5 + (i - 1);
}

int VarTable::t(int a) const {
    if (a < 1 || a > k_) throw std::out_of_range("VarTable::t index out of range");
    return 5 + n_ + (a - 1);
}

int VarTable::index_of(const std::string& nm) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == nm) return static_cast<int>(i);
    return -1;
}

VarTablePtr make_table(int n, int k) { return std::make_shared<VarTable>(n, k); }

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->names() == b->names();
}

}  // namespace dynstab
