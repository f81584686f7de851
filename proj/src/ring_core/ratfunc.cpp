#include "mdg/ring.hpp"

namespace mdg {

RationalFunction::RationalFunction(const Polynomial& n, const Polynomial& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1), den_.nvars());
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = poly_divide(num_, g);
            den_ = poly_divide(den_, g);
        }
    }
    Rational lc = den_.lead().coef;
    if (lc != 1) {
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& v) {
    if (v.is_zero()) return *this;
    if (is_zero()) return *this = v;
    if (den_ == v.den_) {
        num_ += v.num_;
        if (!den_.is_constant()) normalize();
        else if (num_.is_zero()) den_ = Polynomial(Rational(1), den_.nvars());
        return *this;
    }
    num_ = num_ * v.den_ + v.num_ * den_;
    den_ = den_ * v.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& v) { return *this += -v; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& v) {
    if (is_zero()) return *this;
    if (v.is_zero()) return *this = RationalFunction();
    num_ = num_ * v.num_;
    bool both_poly = den_.is_constant() && v.den_.is_constant();
    den_ = den_ * v.den_;
    if (!both_poly) normalize();
    return *this;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& v) {
    if (v.is_zero()) throw DivisionByZero("division by the zero rational function");
    return *this *= v.inverse();
}

std::string RationalFunction::to_string(const Ring& r) const {
    if (den_.is_one()) return num_.to_string(r);
    std::string n = num_.to_string(r);
    if (num_.size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string(r) + ")";
}

std::string coefficient_prefix(const RF& c, const Ring& r, bool parenthesize_monomials, bool& negative) {
    negative = false;
    if (c.is_polynomial() && c.num().is_monomial()) {
        const Term& t = c.num().lead();
        negative = t.coef < 0;
        Rational a = negative ? Rational(-t.coef) : t.coef;
        std::string m = r.monomial_string(t.exp);
        if (m.empty()) return a == 1 ? std::string() : rational_string(a) + "*";
        std::string body = a == 1 ? m : rational_string(a) + "*" + m;
        return (parenthesize_monomials ? "(" + body + ")" : body) + "*";
    }
    return "(" + c.to_string(r) + ")*";
}

}  // namespace mdg
