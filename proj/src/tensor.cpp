#include "dynstab/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dynstab {

TensorVector::TensorVector(VarTablePtr vt, int slots) : vt_(std::move(vt)), slots_(slots) {
    if (slots < 0) throw std::invalid_argument("TensorVector: negative slot count");
}

TensorVector TensorVector::basis(VarTablePtr vt, const SubsetIndex& I) {
    TensorVector v(std::move(vt), I.n);
    v.c_.emplace(I, RatF::one(v.vt_));
    return v;
}

RatF TensorVector::coeff(const SubsetIndex& I) const {
    auto it = c_.find(I);
    return it == c_.end() ? RatF::zero(vt_) : it->second;
}

void TensorVector::set(const SubsetIndex& I, RatF v) {
    if (I.n != slots_) throw std::invalid_argument("TensorVector::set: slot mismatch");
    if (v.is_zero())
        c_.erase(I);
    else
        c_.insert_or_assign(I, std::move(v));
}

void TensorVector::add(const SubsetIndex& I, const RatF& v) {
    if (v.is_zero()) return;
    auto it = c_.find(I);
    if (it == c_.end()) {
        c_.emplace(I, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
}

bool TensorVector::supported_in_weight(int k) const {
    return std::all_of(c_.begin(), c_.end(),
                       [&](const auto& kv) { return kv.first.k() == k; });
}

TensorVector TensorVector::operator+(const TensorVector& o) const {
    TensorVector r = *this;
    for (const auto& [I, v] : o.c_) r.add(I, v);
    return r;
}

TensorVector TensorVector::operator-(const TensorVector& o) const { return *this + (-o); }

TensorVector TensorVector::operator-() const {
    return map_coeffs([](const RatF& v) { return -v; });
}

TensorVector TensorVector::scaled(const RatF& s) const {
    if (s.is_zero()) return TensorVector(vt_, slots_);
    return map_coeffs([&](const RatF& v) { return v * s; });
}

TensorVector TensorVector::map_coeffs(const std::function<RatF(const RatF&)>& f) const {
    TensorVector r(vt_, slots_);
    for (const auto& [I, v] : c_) r.set(I, f(v));
    return r;
}

TensorVector TensorVector::shift_lambda(int m) const {
    return map_coeffs([&](const RatF& v) { return v.shift_lambda(m); });
}

TensorVector TensorVector::substitute_poly(const std::map<int, Poly>& bindings) const {
    return map_coeffs([&](const RatF& v) { return v.substitute_poly(bindings); });
}

TensorVector TensorVector::swap_z(int i, int j) const {
    return map_coeffs([&](const RatF& v) { return v.swap_vars(vt_->z(i), vt_->z(j)); });
}

TensorVector TensorVector::permute_slots(const Perm& p) const {
    TensorVector r(vt_, slots_);
    for (const auto& [I, v] : c_) r.set(p.apply(I), v);
    return r;
}

bool TensorVector::equals(const TensorVector& o) const {
    if (slots_ != o.slots_) return false;
    for (const auto& [I, v] : c_)
        if (!v.equals(o.coeff(I))) return false;
    for (const auto& [I, v] : o.c_)
        if (c_.find(I) == c_.end() && !v.is_zero()) return false;
    return true;
}

std::string TensorVector::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& I : vbasis_order(slots_)) {
        auto it = c_.find(I);
        if (it == c_.end()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << it->second.str() << "]*v" << I.str();
    }
    return os.str();
}

int h_sum(const SubsetIndex& I, const std::vector<int>& positions) {
    int acc = 0;
    for (int p : positions) acc += I.contains(p) ? 1 : -1;
    return acc;
}

int h_total(const SubsetIndex& I) { return 2 * I.k() - I.n; }

std::vector<SubsetIndex> vbasis_order(int slots) {
    std::vector<SubsetIndex> out = all_subsets_all_k(slots);
    std::sort(out.begin(), out.end(), [slots](const SubsetIndex& a, const SubsetIndex& b) {
        for (int j = 1; j <= slots; ++j) {
            bool ina = a.contains(j), inb = b.contains(j);
            if (ina != inb) return ina;  // v_1 sorts before v_2
        }
        return false;
    });
    return out;
}

DynOperator::DynOperator(VarTablePtr vt, int slots) : vt_(std::move(vt)), slots_(slots) {}

DynOperator DynOperator::identity(VarTablePtr vt, int slots) {
    DynOperator op(std::move(vt), slots);
    for (const auto& I : all_subsets_all_k(slots))
        op.col_.emplace(I, TensorVector::basis(op.vt_, I));
    return op;
}

void DynOperator::set_column(const SubsetIndex& I, TensorVector col) {
    if (col.is_zero())
        col_.erase(I);
    else
        col_.insert_or_assign(I, std::move(col));
}

TensorVector DynOperator::column(const SubsetIndex& I) const {
    auto it = col_.find(I);
    return it == col_.end() ? TensorVector(vt_, slots_) : it->second;
}

TensorVector DynOperator::apply(const TensorVector& v) const {
    TensorVector r(vt_, slots_);
    for (const auto& [I, c] : v.coeffs()) {
        auto it = col_.find(I);
        if (it == col_.end()) continue;
        for (const auto& [J, e] : it->second.coeffs()) r.add(J, c * e);
    }
    return r;
}

DynOperator DynOperator::compose(const DynOperator& inner) const {
    DynOperator r(vt_, slots_);
    for (const auto& [I, col] : inner.col_) r.set_column(I, apply(col));
    return r;
}

DynOperator DynOperator::operator+(const DynOperator& o) const {
    DynOperator r = *this;
    for (const auto& [I, col] : o.col_) r.set_column(I, r.column(I) + col);
    return r;
}

DynOperator DynOperator::operator-(const DynOperator& o) const {
    DynOperator r = *this;
    for (const auto& [I, col] : o.col_) r.set_column(I, r.column(I) - col);
    return r;
}

DynOperator DynOperator::scaled(const RatF& s) const {
    DynOperator r(vt_, slots_);
    for (const auto& [I, col] : col_) r.set_column(I, col.scaled(s));
    return r;
}

DynOperator DynOperator::scaled_by_weight(const std::function<RatF(int)>& s) const {
    DynOperator r(vt_, slots_);
    for (const auto& [I, col] : col_) {
        TensorVector nc(vt_, slots_);
        for (const auto& [J, v] : col.coeffs()) nc.set(J, v * s(J.k()));
        r.set_column(I, std::move(nc));
    }
    return r;
}

DynOperator DynOperator::shift_lambda(int m) const {
    DynOperator r(vt_, slots_);
    for (const auto& [I, col] : col_) r.set_column(I, col.shift_lambda(m));
    return r;
}

DynOperator DynOperator::substitute_poly(const std::map<int, Poly>& bindings) const {
    DynOperator r(vt_, slots_);
    for (const auto& [I, col] : col_) r.set_column(I, col.substitute_poly(bindings));
    return r;
}

bool DynOperator::equals(const DynOperator& o) const {
    if (slots_ != o.slots_) return false;
    for (const auto& I : all_subsets_all_k(slots_))
        if (!column(I).equals(o.column(I))) return false;
    return true;
}

bool DynOperator::is_zero() const {
    return std::all_of(col_.begin(), col_.end(),
                       [](const auto& kv) { return kv.second.is_zero(); });
}

RatMatrix DynOperator::weight_block(int k) const {
    auto subs = all_subsets(slots_, k);
    RatMatrix m(vt_, static_cast<int>(subs.size()), static_cast<int>(subs.size()));
    for (size_t j = 0; j < subs.size(); ++j) {
        TensorVector col = column(subs[j]);
        for (size_t i = 0; i < subs.size(); ++i)
            m.set(static_cast<int>(i), static_cast<int>(j), col.coeff(subs[i]));
    }
    return m;
}

DynOperator DynOperator::from_weight_block(const VarTablePtr& vt, int slots, int k,
                                           const RatMatrix& m) {
    auto subs = all_subsets(slots, k);
    if (m.rows() != static_cast<int>(subs.size()) || m.cols() != m.rows())
        throw std::invalid_argument("DynOperator::from_weight_block: size mismatch");
    DynOperator op(vt, slots);
    for (size_t j = 0; j < subs.size(); ++j) {
        TensorVector col(vt, slots);
        for (size_t i = 0; i < subs.size(); ++i)
            col.add(subs[i], m.at(static_cast<int>(i), static_cast<int>(j)));
        op.set_column(subs[j], std::move(col));
    }
    return op;
}

RatMatrix DynOperator::full_matrix() const {
    auto basis = vbasis_order(slots_);
    RatMatrix m(vt_, static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
        TensorVector col = column(basis[j]);
        for (size_t i = 0; i < basis.size(); ++i)
            m.set(static_cast<int>(i), static_cast<int>(j), col.coeff(basis[i]));
    }
    return m;
}

std::string DynOperator::str() const { return full_matrix().str(); }

}  // namespace dynstab
