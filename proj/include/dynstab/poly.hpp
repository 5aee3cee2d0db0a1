#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynstab/vartable.hpp"

namespace dynstab {

// Exponent vector, one entry per registered variable.
using Mono = std::vector<int>;

// Monomials are stored packed into one 128-bit key: the total degree in the
// most significant byte, then one byte per variable in registration order.
// Integer comparison of keys is exactly the graded lexicographic order, and
// monomial multiplication is key addition. Exponents stay far below the
// 8-bit capacity at this scale; additions are guarded against field carries.
using PackedExp = unsigned __int128;

// Sparse multivariate polynomial with exact rational coefficients. Stored
// coefficients are never zero; terms iterate in ascending graded-lex order,
// so the leading term is the last one.
class Poly {
public:
    using TermMap = std::map<PackedExp, mpq_class>;

    explicit Poly(VarTablePtr vt);
    static Poly constant(VarTablePtr vt, const mpq_class& c);
    static Poly variable(VarTablePtr vt, int v);

    const VarTablePtr& table() const { return vt_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    PackedExp pack(const Mono& m) const;
    Mono unpack(PackedExp key) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    mpq_class constant_value() const;  // requires is_constant()

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(int v) const;
    bool is_homogeneous() const;
    bool depends_on(int v) const;
    std::vector<int> support() const;  // variables with positive degree

    PackedExp leading_key() const;
    PackedExp trailing_key() const;
    Mono leading_mono() const { return unpack(leading_key()); }
    const mpq_class& leading_coeff() const;
    mpq_class coeff(const Mono& m) const;  // 0 if absent

    void add_term(const Mono& m, const mpq_class& c);
    void add_packed(PackedExp key, const mpq_class& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const mpq_class& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
    friend Poly operator*(const mpq_class& c, Poly a) { return a *= c; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Deterministic total order (for canonical sorting of factor lists).
    int compare(const Poly& o) const;

    Poly pow(int e) const;

    // Exact division: returns q with *this == q * b, or nullopt when no such
    // polynomial exists. The verdict is definite in both directions.
    std::optional<Poly> divide_exact(const Poly& b) const;

    // Simultaneous substitution of polynomial values for variables.
    Poly substitute(const std::map<int, Poly>& bindings) const;
    Poly swap_vars(int v1, int v2) const;
    Poly shift_lambda(int m) const;  // lambda -> lambda + m*y

    // Coefficients with respect to one variable: exponent -> coefficient
    // polynomial (with that variable cleared).
    std::map<int, Poly> coeffs_in(int v) const;

    // c such that (*this)/c has coprime integer coefficients and positive
    // leading coefficient. Requires a nonzero polynomial.
    mpq_class signed_content() const;

    std::string str() const;
    std::string latex() const;

private:
    VarTablePtr vt_;
    TermMap terms_;
    int nv_ = 0;
    int exp_of(PackedExp key, int v) const;
    void check_same_table(const Poly& o) const;
};

// Shorthand constructors for the reserved variables.
Poly lam(const VarTablePtr& vt);
Poly yv(const VarTablePtr& vt);
Poly wv(const VarTablePtr& vt);
Poly w1v(const VarTablePtr& vt);
Poly w2v(const VarTablePtr& vt);
Poly zv(const VarTablePtr& vt, int i);
Poly tv(const VarTablePtr& vt, int a);

}  // namespace dynstab
