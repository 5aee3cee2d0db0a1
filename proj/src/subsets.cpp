#include "dynstab/subsets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dynstab {

SubsetIndex::SubsetIndex(int n_, std::vector<int> elems_) : n(n_), elems(std::move(elems_)) {
    std::sort(elems.begin(), elems.end());
    for (size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1 || elems[i] > n)
            throw std::invalid_argument("SubsetIndex: element out of range");
        if (i > 0 && elems[i] == elems[i - 1])
            throw std::invalid_argument("SubsetIndex: duplicate element");
    }
}

bool SubsetIndex::contains(int i) const {
    return std::binary_search(elems.begin(), elems.end(), i);
}

SubsetIndex SubsetIndex::complement() const {
    std::vector<int> c;
    c.reserve(static_cast<size_t>(n - k()));
    for (int i = 1; i <= n; ++i)
        if (!contains(i)) c.push_back(i);
    return SubsetIndex(n, std::move(c));
}

SubsetIndex SubsetIndex::with(int i) const {
    if (contains(i)) throw std::invalid_argument("SubsetIndex::with: already present");
    std::vector<int> e = elems;
    e.push_back(i);
    return SubsetIndex(n, std::move(e));
}

SubsetIndex SubsetIndex::without(int i) const {
    if (!contains(i)) throw std::invalid_argument("SubsetIndex::without: not present");
    std::vector<int> e;
    for (int x : elems)
        if (x != i) e.push_back(x);
    return SubsetIndex(n, std::move(e));
}

uint32_t SubsetIndex::bitmask() const {
    uint32_t m = 0;
    for (int i : elems) m |= 1u << (i - 1);
    return m;
}

bool SubsetIndex::operator<(const SubsetIndex& o) const {
    if (n != o.n) return n < o.n;
    if (k() != o.k()) return k() < o.k();
    // colex: compare largest elements first
    for (int a = k() - 1; a >= 0; --a)
        if (elems[static_cast<size_t>(a)] != o.elems[static_cast<size_t>(a)])
            return elems[static_cast<size_t>(a)] < o.elems[static_cast<size_t>(a)];
    return false;
}

std::string SubsetIndex::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < elems.size(); ++i) {
        if (i) os << ",";
        os << elems[i];
    }
    os << "}/" << n;
    return os.str();
}

std::vector<SubsetIndex> all_subsets(int n, int k) {
    std::vector<SubsetIndex> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 1);
    for (;;) {
        out.emplace_back(n, idx);
        int a = 0;
        while (a < k && (a + 1 < k ? idx[static_cast<size_t>(a)] + 1 == idx[static_cast<size_t>(a) + 1]
                                   : idx[static_cast<size_t>(a)] == n))
            ++a;
        if (a == k) break;
        ++idx[static_cast<size_t>(a)];
        for (int b = 0; b < a; ++b) idx[static_cast<size_t>(b)] = b + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SubsetIndex> all_subsets_all_k(int n) {
    std::vector<SubsetIndex> out;
    for (int k = 0; k <= n; ++k) {
        auto s = all_subsets(n, k);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(static_cast<size_t>(n));
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

Perm Perm::longest(int n) {
    Perm p;
    for (int i = n; i >= 1; --i) p.img.push_back(i);
    return p;
}

Perm Perm::transposition(int n, int i, int j) {
    Perm p = identity(n);
    std::swap(p.img.at(static_cast<size_t>(i - 1)), p.img.at(static_cast<size_t>(j - 1)));
    return p;
}

Perm Perm::from_one_line(const std::vector<int>& images) {
    Perm p;
    p.img = images;
    std::vector<char> seen(images.size() + 1, 0);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Perm: not a bijection of [n]");
        seen[static_cast<size_t>(v)] = 1;
    }
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) p.img[static_cast<size_t>(img[i] - 1)] = static_cast<int>(i) + 1;
    return p;
}

Perm Perm::after(const Perm& other) const {
    if (n() != other.n()) throw std::invalid_argument("Perm: size mismatch");
    Perm p;
    p.img.resize(img.size());
    for (int i = 1; i <= n(); ++i) p.img[static_cast<size_t>(i - 1)] = (*this)(other(i));
    return p;
}

SubsetIndex Perm::apply(const SubsetIndex& I) const {
    if (n() != I.n) throw std::invalid_argument("Perm::apply: size mismatch");
    std::vector<int> e;
    e.reserve(I.elems.size());
    for (int i : I.elems) e.push_back((*this)(i));
    return SubsetIndex(I.n, std::move(e));
}

bool Perm::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::string Perm::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < img.size(); ++i) {
        if (i) os << ",";
        os << img[i];
    }
    return os.str();
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_one_line(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

int wnum(int i, const SubsetIndex& I) {
    if (!I.contains(i)) throw std::invalid_argument("wnum: i not in I");
    int in = 0, outn = 0;
    for (int j = i + 1; j <= I.n; ++j) {
        if (I.contains(j))
            ++in;
        else
            ++outn;
    }
    return in - outn;
}

bool leq_sigma(const SubsetIndex& J, const SubsetIndex& I, const Perm& sigma) {
    if (I.k() != J.k()) throw std::invalid_argument("leq_sigma: size mismatch");
    Perm inv = sigma.inverse();
    SubsetIndex pi = inv.apply(I), pj = inv.apply(J);
    for (int a = 0; a < I.k(); ++a)
        if (pj.elems[static_cast<size_t>(a)] > pi.elems[static_cast<size_t>(a)]) return false;
    return true;
}

int schubert_dim(const Perm& sigma, const SubsetIndex& I) {
    int count = 0;
    for (int i = 1; i <= I.n; ++i)
        for (int j = 1; j < i; ++j)
            if (I.contains(sigma(i)) && !I.contains(sigma(j))) ++count;
    return count;
}

}  // namespace dynstab
