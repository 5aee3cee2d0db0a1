#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dynstab/poly.hpp"

namespace dynstab {

// Exact rational function num/den over a shared VarTable.
//
// The denominator is kept internally as a canonically sorted list of
// primitive integer factors with positive leading coefficients; all scalar
// content lives in the numerator. Denominators produced by the constructions
// implemented here are products of linear "dictionary" factors
// (lambda + m*y, differences of two variables + m*y), so cancellation is
// trial exact division of the numerator by the denominator factors; equality
// never relies on cancellation and always has the cross-multiplication route.
class RatF {
public:
    using Factors = std::vector<std::pair<Poly, int>>;

    explicit RatF(Poly num);
    RatF(Poly num, Poly den);  // throws on zero denominator

    static RatF zero(const VarTablePtr& vt) { return RatF(Poly(vt)); }
    static RatF one(const VarTablePtr& vt) { return RatF(Poly::constant(vt, 1)); }
    static RatF constant(const VarTablePtr& vt, const mpq_class& c) {
        return RatF(Poly::constant(vt, c));
    }
    static RatF variable(const VarTablePtr& vt, int v) { return RatF(Poly::variable(vt, v)); }

    const VarTablePtr& table() const { return num_.table(); }
    const Poly& num() const { return num_; }
    Poly den() const;  // expanded denominator, positive leading coefficient
    const Factors& den_factors() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    RatF operator-() const;
    RatF& operator+=(const RatF& o);
    RatF& operator-=(const RatF& o);
    RatF& operator*=(const RatF& o);
    RatF& operator/=(const RatF& o);  // throws on division by zero
    friend RatF operator+(RatF a, const RatF& b) { return a += b; }
    friend RatF operator-(RatF a, const RatF& b) { return a -= b; }
    friend RatF operator*(RatF a, const RatF& b) { return a *= b; }
    friend RatF operator/(RatF a, const RatF& b) { return a /= b; }

    RatF reciprocal() const;
    RatF pow(int e) const;  // negative exponents allowed on nonzero values

    // Exact equality as rational functions (cross-multiplication).
    bool equals(const RatF& o) const;

    RatF substitute(const std::map<int, RatF>& bindings) const;
    RatF substitute_poly(const std::map<int, Poly>& bindings) const;
    RatF swap_vars(int v1, int v2) const;
    RatF shift_lambda(int m) const;

    int degree_in(int v) const;  // max of num/den degrees
    bool depends_on(int v) const;

    std::string str() const;
    std::string latex() const;

private:
    Poly num_;
    Factors den_;

    RatF(Poly num, Factors den, bool /*tag*/);
    void cancel();
    void normalize_factors();
    friend class RatFInternal;
};

// Convenience: polynomial -> rational promotions used all over the code.
inline RatF rf(Poly p) { return RatF(std::move(p)); }

// Factor a nonzero polynomial into dictionary linear factors; the returned
// polynomial list is primitive-positive factors (residual included as-is),
// and the scalar s satisfies p = s * product(factors).
mpq_class factor_dictionary(const Poly& p, RatF::Factors& out);

// Multiset operations on canonically sorted factor lists.
RatF::Factors factors_merge_max(const RatF::Factors& a, const RatF::Factors& b);
RatF::Factors factors_minus(const RatF::Factors& total, const RatF::Factors& part);
Poly factors_product(const VarTablePtr& vt, const RatF::Factors& f);

}  // namespace dynstab
