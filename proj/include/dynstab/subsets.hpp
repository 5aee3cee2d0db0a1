#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dynstab {

// A k-element subset of [n] = {1..n}, kept sorted. The ambient n matters:
// complements and the combinatorial weights w(i, I) depend on it.
struct SubsetIndex {
    int n = 0;
    std::vector<int> elems;  // strictly increasing, values in [1, n]

    SubsetIndex() = default;
    SubsetIndex(int n_, std::vector<int> elems_);

    int k() const { return static_cast<int>(elems.size()); }
    bool contains(int i) const;
    SubsetIndex complement() const;
    SubsetIndex with(int i) const;     // insert element
    SubsetIndex without(int i) const;  // remove element
    uint32_t bitmask() const;          // bit (i-1) set iff i in I

    bool operator==(const SubsetIndex& o) const { return n == o.n && elems == o.elems; }
    bool operator!=(const SubsetIndex& o) const { return !(*this == o); }
    bool operator<(const SubsetIndex& o) const;  // (n, k, colex) total order

    std::string str() const;  // "{i1,...,ik}/n"
};

// All k-subsets of [n] in colexicographic order (the fixed iteration order
// for matrix rows/columns).
std::vector<SubsetIndex> all_subsets(int n, int k);
// All subsets of [n], grouped by size k = 0..n, colex within each size.
std::vector<SubsetIndex> all_subsets_all_k(int n);

// Permutation of [n], stored in one-line notation.
struct Perm {
    std::vector<int> img;  // img[i-1] = sigma(i)

    static Perm identity(int n);
    static Perm longest(int n);  // (n, n-1, ..., 1)
    static Perm transposition(int n, int i, int j);
    static Perm from_one_line(const std::vector<int>& images);

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img.at(static_cast<size_t>(i - 1)); }
    Perm inverse() const;
    Perm after(const Perm& other) const;  // composition: (this∘other)(i) = this(other(i))
    SubsetIndex apply(const SubsetIndex& I) const;
    bool is_identity() const;

    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }

    std::string str() const;  // one-line "2,1,3"
};

std::vector<Perm> all_perms(int n);

// w(i, I) = -#{j > i, j in complement} + #{j > i, j in I}; i must lie in I.
int wnum(int i, const SubsetIndex& I);

// J <=_sigma I: comparing sigma^{-1}(J) and sigma^{-1}(I) elementwise after
// sorting. Requires |I| = |J|.
bool leq_sigma(const SubsetIndex& J, const SubsetIndex& I, const Perm& sigma);

// Dimension of the Schubert cell: #{(i,j): i > j, sigma(i) in I, sigma(j) in complement}.
int schubert_dim(const Perm& sigma, const SubsetIndex& I);

}  // namespace dynstab
