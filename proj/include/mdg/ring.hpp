#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mdg/errors.hpp"

namespace mdg {

using Rational = mpq_class;

// Exponent vector, also used as the multidegree label of basis elements.
struct Multidegree {
    std::vector<int32_t> e;

    Multidegree() = default;
    explicit Multidegree(std::size_t n) : e(n, 0) {}
    explicit Multidegree(std::vector<int32_t> v) : e(std::move(v)) {}

    std::size_t size() const { return e.size(); }
    int32_t operator[](std::size_t i) const { return e[i]; }
    int32_t& operator[](std::size_t i) { return e[i]; }
    int total() const;
    bool is_zero() const;

    bool divides(const Multidegree& b) const;
    Multidegree lcm(const Multidegree& b) const;
    Multidegree gcd(const Multidegree& b) const;
    Multidegree operator+(const Multidegree& b) const;
    // Requires *this >= b componentwise.
    Multidegree operator-(const Multidegree& b) const;

    bool operator==(const Multidegree& b) const { return e == b.e; }
    bool operator!=(const Multidegree& b) const { return e != b.e; }
    // Lexicographic on the raw vector; only used for container keys.
    bool operator<(const Multidegree& b) const { return e < b.e; }
};

// Graded lex: total degree first, then lex with x1 > x2 > ... Returns -1, 0, 1.
int grlex_compare(const Multidegree& a, const Multidegree& b);

// Variable names of a polynomial ring over the rationals.
class Ring {
public:
    Ring() = default;
    explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int index_of(const std::string& v) const;
    // Returns the index of a new variable (or the existing one).
    int add_variable(const std::string& v);

    bool operator==(const Ring& o) const { return names_ == o.names_; }
    bool operator!=(const Ring& o) const { return names_ != o.names_; }

    std::string monomial_string(const Multidegree& m) const;

private:
    std::vector<std::string> names_;
};

struct Term {
    Multidegree exp;
    Rational coef;
};

// Sparse polynomial; terms sorted by descending grlex, no zero coefficients.
// A polynomial with nvars() == 0 is a bare constant and adapts to any ring.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c);  // NOLINT: implicit constants read naturally in formulas
    Polynomial(const Rational& c, std::size_t nvars);
    static Polynomial zero(std::size_t nvars);
    static Polynomial monomial(const Multidegree& m, const Rational& c = 1);
    static Polynomial variable(std::size_t nvars, std::size_t i, int power = 1);
    // Builds from unsorted terms, merging duplicates.
    static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_value() const;  // requires is_constant()
    const Term& lead() const;
    int total_degree() const;
    int degree_in(std::size_t v) const;
    // Coefficient of v^k as a polynomial in the remaining variables.
    Polynomial coeff_in(std::size_t v, int k) const;
    // Componentwise min over all terms (the largest monomial dividing f).
    Multidegree monomial_content() const;
    bool is_homogeneous_monomial_multiple(const Multidegree& m) const;

    Polynomial extended(std::size_t nvars) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Polynomial& g);
    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Multidegree& m, const Rational& c = 1) const;
    // Exact quotient by a monomial; throws NotDivisible.
    Polynomial div_monomial(const Multidegree& m) const;

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    std::string to_string(const Ring& r) const;

private:
    void check_compatible(const Polynomial& g) const;
    void adopt_nvars(const Polynomial& g);
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

// Exact division; throws NotDivisible if g does not divide f.
Polynomial poly_divide(const Polynomial& f, const Polynomial& g);
// Division with remainder by the lead term (grlex).
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g);
// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);
// Drops every term divisible by one of the monomial generators.
Polynomial reduce_mod_monomials(const Polynomial& f, const std::vector<Multidegree>& gens);

class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(long c) : num_(c), den_(1L) {}  // NOLINT
    RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1), p.nvars()) {}  // NOLINT
    RationalFunction(const Polynomial& n, const Polynomial& d);
    explicit RationalFunction(const Rational& c) : num_(c, 0), den_(1L) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    std::size_t nvars() const { return num_.nvars() ? num_.nvars() : den_.nvars(); }

    // Numerator and denominator both monomials (or zero): the multigraded case.
    bool is_monomial_ratio() const { return num_.size() <= 1 && den_.is_monomial(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& v);
    RationalFunction& operator-=(const RationalFunction& v);
    RationalFunction& operator*=(const RationalFunction& v);
    RationalFunction& operator/=(const RationalFunction& v);
    friend RationalFunction operator+(RationalFunction u, const RationalFunction& v) { return u += v; }
    friend RationalFunction operator-(RationalFunction u, const RationalFunction& v) { return u -= v; }
    friend RationalFunction operator*(RationalFunction u, const RationalFunction& v) { return u *= v; }
    friend RationalFunction operator/(RationalFunction u, const RationalFunction& v) { return u /= v; }
    RationalFunction inverse() const;

    bool operator==(const RationalFunction& v) const { return num_ == v.num_ && den_ == v.den_; }
    bool operator!=(const RationalFunction& v) const { return !(*this == v); }

    // Plain form for coefficients: "x*y", "-1/2*x", "(x+y)/(z)".
    std::string to_string(const Ring& r) const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_ = Polynomial(1L);
};

using RF = RationalFunction;

// Convenience: parse-free monomial construction from an exponent list.
Polynomial mono(std::initializer_list<int32_t> exps, const Rational& c = 1);

std::string rational_string(const Rational& q);

// Coefficient text in front of a basis name: "x*y*", "(x + y)*", "" for 1.
// The sign of a monomial coefficient is split off into negative.
std::string coefficient_prefix(const RF& c, const Ring& r, bool parenthesize_monomials, bool& negative);

}  // namespace mdg
