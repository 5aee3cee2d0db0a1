#include "dynstab/ratf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dynstab {

namespace {

bool packed_divides(PackedExp a, PackedExp b, int fields) {  // a | b
    for (int i = 0; i <= fields; ++i) {
        int shift = 8 * i;
        if (((a >> shift) & 0xff) > ((b >> shift) & 0xff)) return false;
    }
    return true;
}

// Necessary conditions for cand | p: support containment plus divisibility of
// the extreme monomials (both are multiplicative in any monomial order).
bool division_precheck(const Poly& cand, const Poly& p) {
    if (p.is_zero()) return false;
    int fields = p.table()->size();
    if (!packed_divides(cand.leading_key(), p.leading_key(), fields)) return false;
    if (!packed_divides(cand.trailing_key(), p.trailing_key(), fields)) return false;
    for (int v : cand.support())
        if (!p.depends_on(v)) return false;
    return true;
}

void append_candidate(std::vector<Poly>& out, Poly c) {
    if (c.is_zero()) return;
    mpq_class s = c.signed_content();
    if (s != 1) c *= mpq_class(1) / s;
    out.push_back(std::move(c));
}

std::vector<Poly> dictionary_candidates(const Poly& p, bool lambda_triples) {
    const VarTablePtr& vt = p.table();
    std::vector<Poly> out;
    std::vector<int> supp = p.support();
    std::vector<char> in_supp(static_cast<size_t>(vt->size()), 0);
    for (int v : supp) in_supp[static_cast<size_t>(v)] = 1;
    bool has_l = in_supp[static_cast<size_t>(vt->lambda())];
    bool has_y = in_supp[static_cast<size_t>(vt->y())];
    const int M = 2 * vt->n() + 6;

    std::vector<int> pair_vars;
    for (int v : supp)
        if (v != vt->lambda() && v != vt->y()) pair_vars.push_back(v);

    if (has_l) {
        for (int m = -M; m <= M; ++m) {
            if (m != 0 && !has_y) continue;
            append_candidate(out, lam(vt) + mpq_class(m) * yv(vt));
        }
    }
    for (size_t a = 0; a < pair_vars.size(); ++a) {
        for (size_t b = a + 1; b < pair_vars.size(); ++b) {
            Poly diff = Poly::variable(vt, pair_vars[a]) - Poly::variable(vt, pair_vars[b]);
            for (int m = -2; m <= 2; ++m) {
                if (m != 0 && !has_y) continue;
                append_candidate(out, diff + mpq_class(m) * yv(vt));
            }
        }
    }
    if (lambda_triples && has_l) {
        for (size_t a = 0; a < pair_vars.size(); ++a) {
            for (size_t b = a + 1; b < pair_vars.size(); ++b) {
                Poly diff = Poly::variable(vt, pair_vars[a]) - Poly::variable(vt, pair_vars[b]);
                for (int sign : {1, -1}) {
                    for (int m = -M; m <= M; ++m) {
                        if (m != 0 && !has_y) continue;
                        append_candidate(out, lam(vt) + mpq_class(sign) * diff + mpq_class(m) * yv(vt));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

mpq_class factor_dictionary(const Poly& p, RatF::Factors& out) {
    if (p.is_zero()) throw std::domain_error("factor_dictionary: zero polynomial");
    const VarTablePtr& vt = p.table();
    mpq_class scalar = p.signed_content();
    Poly q = p * (mpq_class(1) / scalar);
    if (q.is_constant()) return scalar;

    // monomial content
    Mono g = q.unpack(q.trailing_key());
    for (const auto& [key, c] : q.terms()) {
        Mono m = q.unpack(key);
        for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
    }
    bool any_mono = std::any_of(g.begin(), g.end(), [](int e) { return e > 0; });
    if (any_mono) {
        Poly shifted(vt);
        for (const auto& [key, c] : q.terms()) {
            Mono mm = q.unpack(key);
            for (size_t i = 0; i < mm.size(); ++i) mm[i] -= g[i];
            shifted.add_term(mm, c);
        }
        q = shifted;
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i] > 0) out.emplace_back(Poly::variable(vt, static_cast<int>(i)), g[i]);
    }
    if (q.is_constant()) return scalar;

    for (int pass = 0; pass < 2; ++pass) {
        bool triples = pass == 1;
        if (triples && !q.depends_on(vt->lambda())) break;
        for (const Poly& cand : dictionary_candidates(q, triples)) {
            int mult = 0;
            while (division_precheck(cand, q)) {
                auto quo = q.divide_exact(cand);
                if (!quo) break;
                q = *quo;
                ++mult;
            }
            if (mult > 0) out.emplace_back(cand, mult);
            if (q.is_constant()) return scalar;
        }
        if (q.is_constant()) return scalar;
    }
    out.emplace_back(q, 1);  // undigested residual, already primitive-positive
    return scalar;
}

namespace {

struct FactorLess {
    bool operator()(const std::pair<Poly, int>& a, const std::pair<Poly, int>& b) const {
        return a.first.compare(b.first) < 0;
    }
};

void sort_factors(RatF::Factors& f) {
    std::sort(f.begin(), f.end(), FactorLess{});
    // merge equal factors
    RatF::Factors merged;
    for (auto& [p, m] : f) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += m;
        else
            merged.emplace_back(std::move(p), m);
    }
    f = std::move(merged);
}

RatF::Factors merge_add(const RatF::Factors& a, const RatF::Factors& b) {
    RatF::Factors r = a;
    r.insert(r.end(), b.begin(), b.end());
    sort_factors(r);
    return r;
}

}  // namespace

RatF::Factors factors_merge_max(const RatF::Factors& a, const RatF::Factors& b) {
    RatF::Factors r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i == a.size()) {
            r.push_back(b[j++]);
        } else if (j == b.size()) {
            r.push_back(a[i++]);
        } else {
            int c = a[i].first.compare(b[j].first);
            if (c < 0)
                r.push_back(a[i++]);
            else if (c > 0)
                r.push_back(b[j++]);
            else {
                r.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
                ++i, ++j;
            }
        }
    }
    return r;
}

// total / part, assuming part is contained in total
RatF::Factors factors_minus(const RatF::Factors& total, const RatF::Factors& part) {
    RatF::Factors r;
    size_t j = 0;
    for (const auto& [p, m] : total) {
        int sub = 0;
        while (j < part.size() && part[j].first.compare(p) < 0) ++j;
        if (j < part.size() && part[j].first == p) sub = part[j].second;
        if (m - sub > 0) r.emplace_back(p, m - sub);
    }
    return r;
}

Poly factors_product(const VarTablePtr& vt, const RatF::Factors& f) {
    Poly r = Poly::constant(vt, 1);
    for (const auto& [p, m] : f) r *= p.pow(m);
    return r;
}

RatF::RatF(Poly num) : num_(std::move(num)) {}

RatF::RatF(Poly num, Poly den) : num_(std::move(num)) {
    if (den.is_zero()) throw std::domain_error("RatF: zero denominator");
    mpq_class s = factor_dictionary(den, den_);
    sort_factors(den_);
    num_ *= mpq_class(1) / s;
    cancel();
}

RatF::RatF(Poly num, Factors den, bool) : num_(std::move(num)), den_(std::move(den)) {
    sort_factors(den_);
    cancel();
}

Poly RatF::den() const { return factors_product(table(), den_); }

void RatF::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    bool changed = false;
    for (auto& [f, m] : den_) {
        while (m > 0 && division_precheck(f, num_)) {
            auto q = num_.divide_exact(f);
            if (!q) break;
            num_ = std::move(*q);
            --m;
            changed = true;
        }
    }
    if (changed)
        den_.erase(std::remove_if(den_.begin(), den_.end(),
                                  [](const auto& fm) { return fm.second == 0; }),
                   den_.end());
}

RatF RatF::operator-() const {
    RatF r = *this;
    r.num_ = -r.num_;
    return r;
}

RatF& RatF::operator+=(const RatF& o) {
    if (!same_table(table(), o.table()))
        throw std::invalid_argument("RatF: operands use different variable tables");
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        cancel();
        return *this;
    }
    Factors l = factors_merge_max(den_, o.den_);
    Poly qa = factors_product(table(), factors_minus(l, den_));
    Poly qb = factors_product(table(), factors_minus(l, o.den_));
    num_ = num_ * qa + o.num_ * qb;
    den_ = std::move(l);
    cancel();
    return *this;
}

RatF& RatF::operator-=(const RatF& o) { return *this += -o; }

RatF& RatF::operator*=(const RatF& o) {
    if (!same_table(table(), o.table()))
        throw std::invalid_argument("RatF: operands use different variable tables");
    if (is_zero() || o.is_zero()) {
        num_ = Poly(table());
        den_.clear();
        return *this;
    }
    // cross-cancel before forming products
    Poly na = num_, nb = o.num_;
    Factors da = den_, db = o.den_;
    for (auto& [f, m] : db) {
        while (m > 0 && division_precheck(f, na)) {
            auto q = na.divide_exact(f);
            if (!q) break;
            na = std::move(*q);
            --m;
        }
    }
    for (auto& [f, m] : da) {
        while (m > 0 && division_precheck(f, nb)) {
            auto q = nb.divide_exact(f);
            if (!q) break;
            nb = std::move(*q);
            --m;
        }
    }
    auto strip = [](Factors& f) {
        f.erase(std::remove_if(f.begin(), f.end(), [](const auto& fm) { return fm.second == 0; }),
                f.end());
    };
    strip(da);
    strip(db);
    num_ = na * nb;
    den_ = merge_add(da, db);
    cancel();
    return *this;
}

RatF RatF::reciprocal() const {
    if (is_zero()) throw std::domain_error("RatF: division by the zero rational function");
    Factors nf;
    mpq_class s = factor_dictionary(num_, nf);
    Poly newnum = factors_product(table(), den_) * (mpq_class(1) / s);
    return RatF(std::move(newnum), std::move(nf), true);
}

RatF& RatF::operator/=(const RatF& o) { return *this *= o.reciprocal(); }

RatF RatF::pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    RatF r = one(table());
    RatF base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

bool RatF::equals(const RatF& o) const {
    if (!same_table(table(), o.table()))
        throw std::invalid_argument("RatF: operands use different variable tables");
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den() == o.num_ * den();
}

RatF RatF::substitute_poly(const std::map<int, Poly>& bindings) const {
    Poly n = num_.substitute(bindings);
    Factors nd;
    mpq_class s(1);
    for (const auto& [f, m] : den_) {
        Poly fs = f.substitute(bindings);
        if (fs.is_zero())
            throw std::domain_error("RatF::substitute: denominator vanishes identically");
        Factors ff;
        mpq_class fscal = factor_dictionary(fs, ff);
        for (int i = 0; i < m; ++i) s *= fscal;
        for (auto& [p, mm] : ff) nd.emplace_back(std::move(p), mm * m);
    }
    n *= mpq_class(1) / s;
    return RatF(std::move(n), std::move(nd), true);
}

RatF RatF::substitute(const std::map<int, RatF>& bindings) const {
    bool all_poly = std::all_of(bindings.begin(), bindings.end(),
                                [](const auto& kv) { return kv.second.is_polynomial(); });
    if (all_poly) {
        std::map<int, Poly> pb;
        for (const auto& [v, r] : bindings) pb.emplace(v, r.num());
        return substitute_poly(pb);
    }
    const VarTablePtr& vt = table();
    auto eval_poly = [&](const Poly& p) {
        RatF acc = RatF::zero(vt);
        std::map<std::vector<int>, RatF> memo;
        std::vector<int> bvars;
        for (const auto& [v, r] : bindings) bvars.push_back(v);
        std::vector<int> pattern(bvars.size());
        for (const auto& [key, c] : p.terms()) {
            Mono rest = p.unpack(key);
            for (size_t i = 0; i < bvars.size(); ++i) {
                pattern[i] = rest[static_cast<size_t>(bvars[i])];
                rest[static_cast<size_t>(bvars[i])] = 0;
            }
            Poly restp(vt);
            restp.add_term(rest, c);
            auto it = memo.find(pattern);
            if (it == memo.end()) {
                RatF prod = RatF::one(vt);
                for (size_t i = 0; i < bvars.size(); ++i)
                    if (pattern[i] > 0) prod *= bindings.at(bvars[i]).pow(pattern[i]);
                it = memo.emplace(pattern, std::move(prod)).first;
            }
            acc += RatF(std::move(restp)) * it->second;
        }
        return acc;
    };
    RatF n = eval_poly(num_);
    RatF d = RatF::one(vt);
    for (const auto& [f, m] : den_) d *= eval_poly(f).pow(m);
    if (d.is_zero()) throw std::domain_error("RatF::substitute: denominator vanishes identically");
    return n / d;
}

RatF RatF::swap_vars(int v1, int v2) const {
    RatF r = *this;
    r.num_ = r.num_.swap_vars(v1, v2);
    for (auto& [f, m] : r.den_) {
        f = f.swap_vars(v1, v2);
        mpq_class s = f.signed_content();
        if (s != 1) {
            // sign flip only (factors stay integer-primitive under swaps)
            f *= mpq_class(1) / s;
            if (m % 2 != 0 && s < 0) r.num_ = -r.num_;
        }
    }
    sort_factors(r.den_);
    return r;
}

RatF RatF::shift_lambda(int m) const {
    if (m == 0) return *this;
    std::map<int, Poly> b;
    b.emplace(table()->lambda(), lam(table()) + mpq_class(m) * yv(table()));
    return substitute_poly(b);
}

int RatF::degree_in(int v) const {
    int d = num_.degree_in(v);
    for (const auto& [f, m] : den_) d = std::max(d, f.degree_in(v) * m);
    return d;
}

bool RatF::depends_on(int v) const {
    if (num_.depends_on(v)) return true;
    for (const auto& [f, m] : den_)
        if (f.depends_on(v)) return true;
    return false;
}

std::string RatF::str() const {
    if (den_.empty()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(";
    bool first = true;
    for (const auto& [f, m] : den_) {
        if (!first) os << "*";
        first = false;
        os << "(" << f.str() << ")";
        if (m > 1) os << "^" << m;
    }
    os << ")";
    return os.str();
}

std::string RatF::latex() const {
    if (den_.empty()) return num_.latex();
    std::ostringstream os;
    os << "\\frac{" << num_.latex() << "}{";
    bool first = true;
    for (const auto& [f, m] : den_) {
        if (!first) os << " ";
        first = false;
        os << "(" << f.latex() << ")";
        if (m > 1) os << "^{" << m << "}";
    }
    os << "}";
    return os.str();
}

}  // namespace dynstab
