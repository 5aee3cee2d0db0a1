#include "dynstab/ratmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace dynstab {

RatMatrix::RatMatrix(VarTablePtr vt, int rows, int cols)
    : rows_(rows), cols_(cols), vt_(std::move(vt)), e_(static_cast<size_t>(rows) * cols, RatF::zero(vt_)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
}

RatMatrix RatMatrix::identity(VarTablePtr vt, int n) {
    RatMatrix m(std::move(vt), n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, RatF::one(m.vt_));
    return m;
}

const RatF& RatMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("RatMatrix::at");
    return e_[idx(r, c)];
}

void RatMatrix::set(int r, int c, RatF v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("RatMatrix::set");
    e_[idx(r, c)] = std::move(v);
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch in product");
    RatMatrix r(vt_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            RatF acc = RatF::zero(vt_);
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
                acc += at(i, k) * o.at(k, j);
            }
            r.set(i, j, std::move(acc));
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch in sum");
    RatMatrix r(vt_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch in difference");
    RatMatrix r(vt_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

RatMatrix RatMatrix::scaled(const RatF& s) const {
    RatMatrix r(vt_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

bool RatMatrix::equals(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].equals(o.e_[i])) return false;
    return true;
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return equals(identity(vt_, rows_));
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(vt_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

RatMatrix RatMatrix::substitute_poly(const std::map<int, Poly>& bindings) const {
    RatMatrix r(vt_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].substitute_poly(bindings);
    return r;
}

RatMatrix RatMatrix::shift_lambda(int m) const {
    RatMatrix r(vt_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].shift_lambda(m);
    return r;
}

namespace {

// Clears denominators: M = N / D with N polynomial. Returns the factor list
// of D; N is written into the flat array (row-major).
RatF::Factors clear_denominators(const RatMatrix& m, std::vector<Poly>& n_out) {
    RatF::Factors d;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d = factors_merge_max(d, m.at(i, j).den_factors());
    n_out.clear();
    n_out.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const RatF& v = m.at(i, j);
            Poly q = factors_product(m.table(), factors_minus(d, v.den_factors()));
            n_out.push_back(v.num() * q);
        }
    return d;
}

Poly bareiss_step(const Poly& pivot, const Poly& a, const Poly& b, const Poly& c,
                  const Poly& prev) {
    Poly t = pivot * a - b * c;
    if (prev.is_one()) return t;
    auto q = t.divide_exact(prev);
    if (!q) throw std::logic_error("fraction-free elimination: inexact division");
    return *q;
}

}  // namespace

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::inverse: not square");
    const int n = rows_;
    std::vector<Poly> N;
    RatF::Factors dlist = clear_denominators(*this, N);

    // augmented [N | I]
    const int w = 2 * n;
    std::vector<Poly> A;
    A.reserve(static_cast<size_t>(n) * w);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) A.push_back(N[static_cast<size_t>(i) * n + j]);
        for (int j = 0; j < n; ++j)
            A.push_back(Poly::constant(vt_, i == j ? 1 : 0));
    }
    auto a = [&](int r, int c) -> Poly& { return A[static_cast<size_t>(r) * w + c]; };

    Poly prev = Poly::constant(vt_, 1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!a(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("RatMatrix::inverse: singular matrix");
        if (piv != k)
            for (int j = 0; j < w; ++j) std::swap(a(k, j), a(piv, j));
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < w; ++j)
                a(i, j) = bareiss_step(a(k, k), a(i, j), a(i, k), a(k, j), prev);
            a(i, k) = Poly(vt_);
        }
        prev = a(k, k);
    }

    // back substitution over the field; rescale by D at the end
    RatF dfac = rf(factors_product(vt_, dlist));
    RatMatrix out(vt_, n, n);
    for (int c = 0; c < n; ++c) {
        std::vector<RatF> x(static_cast<size_t>(n), RatF::zero(vt_));
        for (int i = n - 1; i >= 0; --i) {
            RatF acc = rf(a(i, n + c));
            for (int j = i + 1; j < n; ++j) acc -= rf(a(i, j)) * x[static_cast<size_t>(j)];
            x[static_cast<size_t>(i)] = acc / rf(a(i, i));
        }
        for (int r = 0; r < n; ++r) out.set(r, c, x[static_cast<size_t>(r)] * dfac);
    }
    return out;
}

RatF RatMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::determinant: not square");
    const int n = rows_;
    if (n == 0) return RatF::one(vt_);
    std::vector<Poly> A;
    RatF::Factors dlist = clear_denominators(*this, A);
    auto a = [&](int r, int c) -> Poly& { return A[static_cast<size_t>(r) * n + c]; };

    int sign = 1;
    Poly prev = Poly::constant(vt_, 1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!a(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return RatF::zero(vt_);
        if (piv != k) {
            sign = -sign;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = bareiss_step(a(k, k), a(i, j), a(i, k), a(k, j), prev);
            a(i, k) = Poly(vt_);
        }
        prev = a(k, k);
    }
    RatF det_n = rf(a(n - 1, n - 1));
    if (sign < 0) det_n = -det_n;
    RatF dpow = rf(factors_product(vt_, dlist)).pow(n);
    return det_n / dpow;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << " ]\n";
    }
    return os.str();
}

}  // namespace dynstab
