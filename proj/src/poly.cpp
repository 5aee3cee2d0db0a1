#include "dynstab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dynstab {

namespace {

constexpr int kMaxVars = 15;  // one degree byte + 15 exponent bytes
// top bit of every byte; set bits there force the carry-safe slow path
constexpr PackedExp kTopBits = []() {
    PackedExp m = 0;
    for (int i = 0; i < 16; ++i) m = (m << 8) | 0x80;
    return m;
}();

}  // namespace

Poly::Poly(VarTablePtr vt) : vt_(std::move(vt)) {
    if (!vt_) throw std::invalid_argument("Poly: null VarTable");
    nv_ = vt_->size();
    if (nv_ > kMaxVars) throw std::invalid_argument("Poly: too many variables to pack");
}

PackedExp Poly::pack(const Mono& m) const {
    if (static_cast<int>(m.size()) != nv_)
        throw std::invalid_argument("Poly::pack: exponent vector size mismatch");
    int deg = 0;
    PackedExp key = 0;
    for (int i = 0; i < nv_; ++i) {
        int e = m[static_cast<size_t>(i)];
        if (e < 0 || e > 127) throw std::domain_error("Poly::pack: exponent out of range");
        deg += e;
        key = (key << 8) | static_cast<unsigned>(e);
    }
    if (deg > 127) throw std::domain_error("Poly::pack: total degree out of range");
    return key | (static_cast<PackedExp>(deg) << (8 * nv_));
}

Mono Poly::unpack(PackedExp key) const {
    Mono m(static_cast<size_t>(nv_));
    for (int i = nv_ - 1; i >= 0; --i) {
        m[static_cast<size_t>(i)] = static_cast<int>(key & 0xff);
        key >>= 8;
    }
    return m;
}

int Poly::exp_of(PackedExp key, int v) const {
    return static_cast<int>((key >> (8 * (nv_ - 1 - v))) & 0xff);
}

Poly Poly::constant(VarTablePtr vt, const mpq_class& c) {
    Poly p(std::move(vt));
    if (c != 0) p.terms_.emplace(PackedExp{0}, c);
    return p;
}

Poly Poly::variable(VarTablePtr vt, int v) {
    Poly p(std::move(vt));
    if (v < 0 || v >= p.nv_) throw std::out_of_range("Poly::variable index");
    PackedExp key = (PackedExp{1} << (8 * (p.nv_ - 1 - v))) | (PackedExp{1} << (8 * p.nv_));
    p.terms_.emplace(key, mpq_class(1));
    return p;
}

void Poly::check_same_table(const Poly& o) const {
    if (!same_table(vt_, o.vt_))
        throw std::invalid_argument("Poly: operands use different variable tables");
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

mpq_class Poly::constant_value() const {
    if (terms_.empty()) return mpq_class(0);
    if (!is_constant()) throw std::logic_error("Poly::constant_value on non-constant");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first >> (8 * nv_));
}

int Poly::degree_in(int v) const {
    int d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, exp_of(key, v));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    PackedExp d0 = terms_.begin()->first >> (8 * nv_);
    return (terms_.rbegin()->first >> (8 * nv_)) == d0;
}

bool Poly::depends_on(int v) const {
    for (const auto& [key, c] : terms_)
        if (exp_of(key, v) > 0) return true;
    return false;
}

std::vector<int> Poly::support() const {
    std::vector<int> s;
    for (int v = 0; v < nv_; ++v)
        if (depends_on(v)) s.push_back(v);
    return s;
}

PackedExp Poly::leading_key() const {
    if (terms_.empty()) throw std::logic_error("Poly::leading_key on zero");
    return terms_.rbegin()->first;
}

PackedExp Poly::trailing_key() const {
    if (terms_.empty()) throw std::logic_error("Poly::trailing_key on zero");
    return terms_.begin()->first;
}

const mpq_class& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("Poly::leading_coeff on zero");
    return terms_.rbegin()->second;
}

mpq_class Poly::coeff(const Mono& m) const {
    auto it = terms_.find(pack(m));
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void Poly::add_term(const Mono& m, const mpq_class& c) { add_packed(pack(m), c); }

void Poly::add_packed(PackedExp key, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.lower_bound(key);
    if (it != terms_.end() && it->first == key) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.emplace_hint(it, key, c);
    }
}

Poly Poly::operator-() const {
    Poly r(vt_);
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_table(o);
    for (const auto& [key, c] : o.terms_) add_packed(key, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_table(o);
    for (const auto& [key, c] : o.terms_) add_packed(key, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_table(b);
    Poly r(a.vt_);
    if (a.is_zero() || b.is_zero()) return r;
    const Poly& s = a.terms_.size() <= b.terms_.size() ? a : b;
    const Poly& l = a.terms_.size() <= b.terms_.size() ? b : a;

    auto safe_add = [&](PackedExp ks, PackedExp kl) -> PackedExp {
        if (((ks | kl) & kTopBits) == 0) return ks + kl;
        // carry-safe slow path for unusually large exponents
        Mono m = r.unpack(ks & ~(~PackedExp{0} << (8 * r.nv_)));
        Mono ml = r.unpack(kl & ~(~PackedExp{0} << (8 * r.nv_)));
        for (size_t i = 0; i < m.size(); ++i) m[i] += ml[i];
        return r.pack(m);
    };

    if (s.terms_.size() == 1) {
        // monomial factor: order is preserved under a constant key shift
        const auto& [ks, cs] = *s.terms_.begin();
        for (const auto& [kl, cl] : l.terms_)
            r.terms_.emplace_hint(r.terms_.end(), safe_add(ks, kl), cs * cl);
        return r;
    }

    mpq_class prod;
    for (const auto& [ks, cs] : s.terms_) {
        for (const auto& [kl, cl] : l.terms_) {
            prod = cs * cl;
            r.add_packed(safe_add(ks, kl), prod);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= c;
    return *this;
}

int Poly::compare(const Poly& o) const {
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
        int c = cmp(it->second, jt->second);
        if (c != 0) return c;
    }
    if (it != terms_.end()) return 1;
    if (jt != o.terms_.end()) return -1;
    return 0;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = Poly::constant(vt_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& b) const {
    check_same_table(b);
    if (b.is_zero()) throw std::invalid_argument("Poly::divide_exact: zero divisor");
    Poly q(vt_);
    Poly r = *this;
    const PackedExp lb = b.leading_key();
    const mpq_class& cb = b.leading_coeff();
    while (!r.is_zero()) {
        PackedExp lr = r.leading_key();
        // per-field comparison: every exponent of lb must fit under lr
        bool divides = true;
        PackedExp qm = 0;
        for (int i = 0; i <= nv_; ++i) {
            int shift = 8 * i;
            int er = static_cast<int>((lr >> shift) & 0xff);
            int eb = static_cast<int>((lb >> shift) & 0xff);
            if (er < eb) {
                divides = false;
                break;
            }
            qm |= static_cast<PackedExp>(er - eb) << shift;
        }
        if (!divides) return std::nullopt;
        mpq_class qc = r.leading_coeff() / cb;
        q.add_packed(qm, qc);
        bool safe = (qm & kTopBits) == 0;
        mpq_class prod;
        for (const auto& [kb, coefb] : b.terms_) {
            PackedExp key;
            if (safe && (kb & kTopBits) == 0) {
                key = qm + kb;
            } else {
                Mono m = unpack(qm & ~(~PackedExp{0} << (8 * nv_)));
                Mono mb = unpack(kb & ~(~PackedExp{0} << (8 * nv_)));
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                key = pack(m);
            }
            prod = -qc * coefb;
            r.add_packed(key, prod);
        }
    }
    return q;
}

Poly Poly::substitute(const std::map<int, Poly>& bindings) const {
    for (const auto& [v, p] : bindings) {
        if (v < 0 || v >= nv_) throw std::out_of_range("Poly::substitute variable");
        check_same_table(p);
    }
    Poly r(vt_);
    std::map<std::vector<int>, Poly> memo;
    std::vector<int> bvars;
    for (const auto& [v, p] : bindings) bvars.push_back(v);
    std::vector<int> pattern(bvars.size());
    for (const auto& [key, c] : terms_) {
        Mono rest = unpack(key);
        bool any = false;
        for (size_t i = 0; i < bvars.size(); ++i) {
            pattern[i] = rest[static_cast<size_t>(bvars[i])];
            if (pattern[i] > 0) any = true;
            rest[static_cast<size_t>(bvars[i])] = 0;
        }
        if (!any) {
            r.add_packed(key, c);
            continue;
        }
        auto it = memo.find(pattern);
        if (it == memo.end()) {
            Poly prod = Poly::constant(vt_, 1);
            for (size_t i = 0; i < bvars.size(); ++i)
                if (pattern[i] > 0) prod *= bindings.at(bvars[i]).pow(pattern[i]);
            it = memo.emplace(pattern, std::move(prod)).first;
        }
        PackedExp rest_key = pack(rest);
        for (const auto& [kp, cp] : it->second.terms_) r.add_packed(rest_key + kp, c * cp);
    }
    return r;
}

Poly Poly::swap_vars(int v1, int v2) const {
    if (v1 == v2) return *this;
    Poly r(vt_);
    int s1 = 8 * (nv_ - 1 - v1), s2 = 8 * (nv_ - 1 - v2);
    for (const auto& [key, c] : terms_) {
        PackedExp e1 = (key >> s1) & 0xff, e2 = (key >> s2) & 0xff;
        PackedExp k = key & ~((PackedExp{0xff} << s1) | (PackedExp{0xff} << s2));
        k |= (e2 << s1) | (e1 << s2);
        r.terms_.emplace(k, c);
    }
    return r;
}

Poly Poly::shift_lambda(int m) const {
    if (m == 0 || degree_in(vt_->lambda()) == 0) return *this;
    Poly target = lam(vt_) + mpq_class(m) * yv(vt_);
    return substitute({{vt_->lambda(), target}});
}

std::map<int, Poly> Poly::coeffs_in(int v) const {
    std::map<int, Poly> out;
    int shift = 8 * (nv_ - 1 - v);
    for (const auto& [key, c] : terms_) {
        int e = static_cast<int>((key >> shift) & 0xff);
        // clear the field and fix up the degree byte
        PackedExp k = key & ~(PackedExp{0xff} << shift);
        k -= static_cast<PackedExp>(e) << (8 * nv_);
        auto it = out.find(e);
        if (it == out.end()) it = out.emplace(e, Poly(vt_)).first;
        it->second.add_packed(k, c);
    }
    return out;
}

mpq_class Poly::signed_content() const {
    if (terms_.empty()) throw std::logic_error("Poly::signed_content on zero");
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [key, c] : terms_) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        num_gcd = g;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading_coeff() < 0) content = -content;
    return content;
}

namespace {

std::string mono_str(const VarTable& vt, const Mono& m, bool latex) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += latex ? " " : "*";
        std::string nm = vt.name(static_cast<int>(i));
        if (latex) {
            if (nm == "lambda")
                nm = "\\lambda";
            else if (nm.size() > 1)
                nm = nm.substr(0, 1) + "_{" + nm.substr(1) + "}";
        }
        s += nm;
        if (m[i] > 1) s += latex ? ("^{" + std::to_string(m[i]) + "}") : ("^" + std::to_string(m[i]));
    }
    return s;
}

std::string coeff_str(const mpq_class& c, bool latex) {
    if (!latex || c.get_den() == 1) return c.get_str();
    mpq_class a = abs(c);
    std::string s = "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    return (c < 0 ? "-" : "") + s;
}

std::string poly_render(const Poly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const mpq_class& c = it->second;
        std::string mono = mono_str(*p.table(), p.unpack(it->first), latex);
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mono.empty()) {
            os << coeff_str(a, latex);
        } else {
            if (a != 1) os << coeff_str(a, latex) << (latex ? " " : "*");
            os << mono;
        }
    }
    return os.str();
}

}  // namespace

std::string Poly::str() const { return poly_render(*this, false); }
std::string Poly::latex() const { return poly_render(*this, true); }

Poly lam(const VarTablePtr& vt) { return Poly::variable(vt, vt->lambda()); }
Poly yv(const VarTablePtr& vt) { return Poly::variable(vt, vt->y()); }
Poly wv(const VarTablePtr& vt) { return Poly::variable(vt, vt->w()); }
Poly w1v(const VarTablePtr& vt) { return Poly::variable(vt, vt->w1()); }
Poly w2v(const VarTablePtr& vt) { return Poly::variable(vt, vt->w2()); }
Poly zv(const VarTablePtr& vt, int i) { return Poly::variable(vt, vt->z(i)); }
Poly tv(const VarTablePtr& vt, int a) { return Poly::variable(vt, vt->t(a)); }

}  // namespace dynstab
