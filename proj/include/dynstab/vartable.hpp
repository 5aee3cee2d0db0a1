#pragma once

#include <memory>
#include <string>
#include <vector>

namespace dynstab {

// Ordered variable registry shared by all symbolic values of one computation.
// Fixed layout: lambda, y, w, w1, w2, z1..zn, t1..tk. Indices never change
// after construction; n and k are fixed at creation.
class VarTable {
public:
    VarTable(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int size() const { return static_cast<int>(names_.size()); }

    int lambda() const { return 0; }
    int y() const { return 1; }
    int w() const { return 2; }
    int w1() const { return 3; }
    int w2() const { return 4; }
    int z(int i) const;  // i in [1, n]
    int t(int a) const;  // a in [1, k]

    const std::string& name(int v) const { return names_.at(static_cast<size_t>(v)); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& nm) const;  // -1 if unknown

private:
    int n_ = 0, k_ = 0;
    std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_table(int n, int k);

// Tables are interchangeable when they register the same names in the same order.
bool same_table(const VarTablePtr& a, const VarTablePtr& b);

}  // namespace dynstab
