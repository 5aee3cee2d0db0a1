#include "dynstab/cohomology.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dynstab/json_io.hpp"

namespace dynstab {

LocalizedClass::LocalizedClass(VarTablePtr vt, int n, int k)
    : vt_(std::move(vt)), n_(n), k_(k) {
    if (k < 0 || k > n) throw std::invalid_argument("LocalizedClass: bad weight");
}

RatF LocalizedClass::component(const SubsetIndex& I) const {
    auto it = c_.find(I);
    return it == c_.end() ? RatF::zero(vt_) : it->second;
}

void LocalizedClass::set(const SubsetIndex& I, RatF v) {
    if (I.n != n_ || I.k() != k_)
        throw std::invalid_argument("LocalizedClass::set: index outside this weight piece");
    if (v.is_zero())
        c_.erase(I);
    else
        c_.insert_or_assign(I, std::move(v));
}

LocalizedClass LocalizedClass::operator+(const LocalizedClass& o) const {
    LocalizedClass r = *this;
    for (const auto& [I, v] : o.c_) r.set(I, r.component(I) + v);
    return r;
}

LocalizedClass LocalizedClass::operator-(const LocalizedClass& o) const { return *this + (-o); }

LocalizedClass LocalizedClass::operator-() const {
    return map_components([](const RatF& v) { return -v; });
}

LocalizedClass LocalizedClass::scaled(const RatF& s) const {
    if (s.is_zero()) return LocalizedClass(vt_, n_, k_);
    return map_components([&](const RatF& v) { return v * s; });
}

LocalizedClass LocalizedClass::map_components(const std::function<RatF(const RatF&)>& f) const {
    LocalizedClass r(vt_, n_, k_);
    for (const auto& [I, v] : c_) r.set(I, f(v));
    return r;
}

LocalizedClass LocalizedClass::shift_lambda(int m) const {
    return map_components([&](const RatF& v) { return v.shift_lambda(m); });
}

bool LocalizedClass::is_zero() const { return c_.empty(); }

bool LocalizedClass::equals(const LocalizedClass& o) const {
    if (n_ != o.n_ || k_ != o.k_) return false;
    for (const auto& I : all_subsets(n_, k_))
        if (!component(I).equals(o.component(I))) return false;
    return true;
}

nlohmann::json LocalizedClass::to_json() const {
    nlohmann::json j;
    j["k"] = k_;
    nlohmann::json comps = nlohmann::json::object();
    for (const auto& I : all_subsets(n_, k_)) comps[I.str()] = ratf_to_json(component(I));
    j["components"] = std::move(comps);
    return j;
}

std::string LocalizedClass::str() const {
    std::ostringstream os;
    for (const auto& I : all_subsets(n_, k_))
        os << I.str() << " -> " << component(I).str() << "\n";
    return os.str();
}

LocalizedClass kappa_class(Context& ctx, const Perm& sigma, const SubsetIndex& I) {
    LocalizedClass c(ctx.vt(), ctx.n(), I.k());
    for (const auto& J : all_subsets(ctx.n(), I.k()))
        c.set(J, ctx.restricted(WeightVariant::plus, sigma, I, J));
    return c;
}

LocalizedClass stab_map(Context& ctx, const Perm& sigma, const TensorVector& v, int k) {
    if (!v.supported_in_weight(k))
        throw std::invalid_argument("stab_map: vector not supported in the given weight");
    LocalizedClass out(ctx.vt(), ctx.n(), k);
    for (const auto& [I, coeff] : v.coeffs()) {
        for (const auto& J : all_subsets(ctx.n(), k)) {
            RatF term = ctx.restricted(WeightVariant::plus, sigma, I, J);
            if (term.is_zero()) continue;
            out.set(J, out.component(J) + coeff * term);
        }
    }
    return out;
}

TensorVector nu_map(Context& ctx, const LocalizedClass& c) {
    TensorVector out(ctx.vt(), ctx.n());
    for (const auto& [I, v] : c.components()) {
        RatF f = v / rf(r_product(ctx.vt(), I));
        out = out + ctx.xi(I).scaled(f);
    }
    return out;
}

RatMatrix stab_matrix(Context& ctx, const Perm& sigma, int k) {
    auto subs = all_subsets(ctx.n(), k);
    RatMatrix m(ctx.vt(), static_cast<int>(subs.size()), static_cast<int>(subs.size()));
    for (size_t col = 0; col < subs.size(); ++col)
        for (size_t row = 0; row < subs.size(); ++row)
            m.set(static_cast<int>(row), static_cast<int>(col),
                  ctx.restricted(WeightVariant::plus, sigma, subs[col], subs[row]));
    return m;
}

namespace {

// indices of the colex subset list sorted along a linear extension of the
// sigma order (lexicographic on sorted sigma^{-1} preimages)
std::vector<int> sigma_order(const Perm& sigma, const std::vector<SubsetIndex>& subs) {
    Perm inv = sigma.inverse();
    std::vector<std::vector<int>> keys;
    keys.reserve(subs.size());
    for (const auto& I : subs) keys.push_back(inv.apply(I).elems);
    std::vector<int> ord(subs.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(),
              [&](int a, int b) { return keys[static_cast<size_t>(a)] < keys[static_cast<size_t>(b)]; });
    return ord;
}

}  // namespace

RatMatrix geometric_r_block(Context& ctx, const Perm& sigma_prime, const Perm& sigma, int k) {
    auto subs = all_subsets(ctx.n(), k);
    const int d = static_cast<int>(subs.size());
    RatMatrix A = stab_matrix(ctx, sigma_prime, k);
    RatMatrix B = stab_matrix(ctx, sigma, k);
    std::vector<int> ord = sigma_order(sigma_prime, subs);
    RatMatrix X(ctx.vt(), d, d);
    for (int c = 0; c < d; ++c) {
        // back-substitute along the sigma' order: A is upper triangular there
        for (int p = d - 1; p >= 0; --p) {
            int r = ord[static_cast<size_t>(p)];
            RatF acc = B.at(r, c);
            for (int q = p + 1; q < d; ++q) {
                int rq = ord[static_cast<size_t>(q)];
                if (A.at(r, rq).is_zero() || X.at(rq, c).is_zero()) continue;
                acc -= A.at(r, rq) * X.at(rq, c);
            }
            X.set(r, c, acc / A.at(r, r));
        }
    }
    return X;
}

DynOperator geometric_r(Context& ctx, const Perm& sigma_prime, const Perm& sigma) {
    DynOperator op(ctx.vt(), ctx.n());
    for (int k = 0; k <= ctx.n(); ++k) {
        DynOperator blk = DynOperator::from_weight_block(
            ctx.vt(), ctx.n(), k, geometric_r_block(ctx, sigma_prime, sigma, k));
        op = op + blk;
    }
    return op;
}

bool in_loc_image(const LocalizedClass& c) {
    const VarTablePtr& vt = c.table();
    const int n = c.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly zij = zv(vt, i) - zv(vt, j);
            for (const auto& I : all_subsets(n, c.k())) {
                if (I.contains(i) == I.contains(j)) continue;
                SubsetIndex J = I.contains(i) ? I.without(i).with(j) : I.without(j).with(i);
                RatF d = c.component(I) - c.component(J);
                if (d.is_zero()) continue;
                for (const auto& [f, m] : d.den_factors())
                    if (f == zij) return false;  // pole along the divisor
                if (!d.num().divide_exact(zij).has_value()) return false;
            }
        }
    return true;
}

RatF gamma_representative_k1(Context& ctx, const LocalizedClass& c) {
    if (c.k() != 1)
        throw std::invalid_argument("gamma_representative_k1: only defined in weight 1");
    const VarTablePtr& vt = ctx.vt();
    RatF acc = RatF::zero(vt);
    for (const auto& I : all_subsets(c.n(), 1)) {
        int i = I.elems.front();
        RatF node = c.component(I);
        if (node.is_zero()) continue;
        for (int j = 1; j <= c.n(); ++j) {
            if (j == i) continue;
            node *= RatF(wv(vt) - zv(vt, j), zv(vt, i) - zv(vt, j));
        }
        acc += node;
    }
    return acc;
}

bool gln_symmetric(const LocalizedClass& c) {
    const VarTablePtr& vt = c.table();
    const int n = c.n();
    for (int i = 1; i < n; ++i) {
        Perm s = Perm::transposition(n, i, i + 1);
        for (const auto& I : all_subsets(n, c.k())) {
            RatF lhs = c.component(s.apply(I));
            RatF rhs = c.component(I).swap_vars(vt->z(i), vt->z(i + 1));
            if (!lhs.equals(rhs)) return false;
        }
    }
    return true;
}

}  // namespace dynstab
