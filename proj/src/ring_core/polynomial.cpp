#include <algorithm>
#include <numeric>
#include <sstream>

#include "mdg/ring.hpp"

namespace mdg {

int Multidegree::total() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Multidegree::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](int32_t v) { return v == 0; });
}

bool Multidegree::divides(const Multidegree& b) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > (i < b.e.size() ? b.e[i] : 0)) return false;
    return true;
}

Multidegree Multidegree::lcm(const Multidegree& b) const {
    Multidegree r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(e[i], b.e[i]);
    return r;
}

Multidegree Multidegree::gcd(const Multidegree& b) const {
    Multidegree r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::min(e[i], b.e[i]);
    return r;
}

Multidegree Multidegree::operator+(const Multidegree& b) const {
    if (e.empty()) return b;
    if (b.e.empty()) return *this;
    Multidegree r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

Multidegree Multidegree::operator-(const Multidegree& b) const {
    Multidegree r(*this);
    for (std::size_t i = 0; i < b.e.size(); ++i) r.e[i] -= b.e[i];
    return r;
}

int grlex_compare(const Multidegree& a, const Multidegree& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb ? -1 : 1;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int32_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

int Ring::index_of(const std::string& v) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == v) return static_cast<int>(i);
    return -1;
}

int Ring::add_variable(const std::string& v) {
    int i = index_of(v);
    if (i >= 0) return i;
    names_.push_back(v);
    return static_cast<int>(names_.size() - 1);
}

std::string Ring::monomial_string(const Multidegree& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += i < names_.size() ? names_[i] : "x" + std::to_string(i + 1);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
}

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Polynomial::Polynomial(long c) {
    if (c != 0) terms_.push_back({Multidegree(), Rational(c)});
}

Polynomial::Polynomial(const Rational& c, std::size_t nvars) : nvars_(nvars) {
    if (c != 0) terms_.push_back({Multidegree(nvars), c});
}

Polynomial Polynomial::zero(std::size_t nvars) {
    Polynomial p;
    p.nvars_ = nvars;
    return p;
}

Polynomial Polynomial::monomial(const Multidegree& m, const Rational& c) {
    Polynomial p = Polynomial::zero(m.size());
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i, int power) {
    Multidegree m(nvars);
    m[i] = power;
    return monomial(m);
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp) > 0; });
    Polynomial p = Polynomial::zero(nvars);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef == 0) p.terms_.pop_back();
        } else if (t.coef != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].coef == 1 && terms_[0].exp.is_zero();
}

Rational Polynomial::constant_value() const { return terms_.empty() ? Rational(0) : terms_[0].coef; }

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw MathError("lead term of the zero polynomial");
    return terms_.front();
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : terms_.front().exp.total(); }

int Polynomial::degree_in(std::size_t v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_)
        if (v < t.exp.size()) d = std::max(d, static_cast<int>(t.exp[v]));
    return d;
}

Polynomial Polynomial::coeff_in(std::size_t v, int k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int ev = v < t.exp.size() ? t.exp[v] : 0;
        if (ev != k) continue;
        Term u = t;
        if (v < u.exp.size()) u.exp[v] = 0;
        out.push_back(std::move(u));
    }
    // All kept terms share the exponent k in v, so the order survives.
    Polynomial p = Polynomial::zero(nvars_);
    p.terms_ = std::move(out);
    return p;
}

Multidegree Polynomial::monomial_content() const {
    if (terms_.empty()) return Multidegree(nvars_);
    Multidegree m = terms_[0].exp;
    for (const auto& t : terms_) m = m.gcd(t.exp);
    return m;
}

bool Polynomial::is_homogeneous_monomial_multiple(const Multidegree& m) const {
    return terms_.size() <= 1 && (terms_.empty() || terms_[0].exp == m);
}

Polynomial Polynomial::extended(std::size_t nvars) const {
    if (nvars == nvars_) return *this;
    if (nvars < nvars_) throw RingMismatch("cannot shrink the variable list of a polynomial");
    Polynomial p = Polynomial::zero(nvars);
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.exp.e.resize(nvars, 0);
    return p;
}

void Polynomial::check_compatible(const Polynomial& g) const {
    if (nvars_ != g.nvars_ && nvars_ != 0 && g.nvars_ != 0)
        throw RingMismatch("polynomials over different variable lists (" + std::to_string(nvars_) +
                           " vs " + std::to_string(g.nvars_) + ")");
}

void Polynomial::adopt_nvars(const Polynomial& g) {
    if (nvars_ == 0 && g.nvars_ != 0) *this = extended(g.nvars_);
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    check_compatible(g);
    adopt_nvars(g);
    if (g.terms_.empty()) return *this;
    Polynomial widened;
    if (g.nvars_ != nvars_) widened = g.extended(nvars_);
    const Polynomial& h = g.nvars_ == nvars_ ? g : widened;
    std::vector<Term> out;
    out.reserve(terms_.size() + h.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < h.terms_.size()) {
        int c = i == terms_.size() ? -1
                : j == h.terms_.size() ? 1
                                       : grlex_compare(terms_[i].exp, h.terms_[j].exp);
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(h.terms_[j++]);
        } else {
            Rational s = terms_[i].coef + h.terms_[j].coef;
            if (s != 0) out.push_back({std::move(terms_[i].exp), s});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) { return *this += -g; }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_compatible(g);
    std::size_t n = std::max(f.nvars_, g.nvars_);
    if (f.terms_.empty() || g.terms_.empty()) return Polynomial::zero(n);
    if (g.terms_.size() == 1) return f.extended(n).times_monomial(g.extended(n).terms_[0].exp, g.terms_[0].coef);
    if (f.terms_.size() == 1) return g.extended(n).times_monomial(f.extended(n).terms_[0].exp, f.terms_[0].coef);
    Polynomial a = f.extended(n), b = g.extended(n);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) out.push_back({s.exp + t.exp, s.coef * t.coef});
    return Polynomial::from_terms(n, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& g) { return *this = *this * g; }

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial::zero(nvars_);
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coef *= c;
    return p;
}

Polynomial Polynomial::times_monomial(const Multidegree& m, const Rational& c) const {
    if (c == 0) return Polynomial::zero(std::max(nvars_, m.size()));
    Polynomial p = extended(std::max(nvars_, m.size()));
    // Multiplication by a monomial preserves grlex order.
    for (auto& t : p.terms_) {
        t.exp = t.exp + m;
        t.coef *= c;
    }
    return p;
}

Polynomial Polynomial::div_monomial(const Multidegree& m) const {
    Polynomial p(*this);
    for (auto& t : p.terms_) {
        if (!m.divides(t.exp)) throw NotDivisible("monomial does not divide polynomial");
        t.exp = t.exp - m;
    }
    return p;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coef != g.terms_[i].coef) return false;
        if (grlex_compare(terms_[i].exp, g.terms_[i].exp) != 0) return false;
    }
    return true;
}

std::string Polynomial::to_string(const Ring& r) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = t.coef < 0;
        Rational a = neg ? Rational(-t.coef) : t.coef;
        std::string m = r.monomial_string(t.exp);
        std::string body;
        if (m.empty()) body = rational_string(a);
        else if (a == 1) body = m;
        else body = rational_string(a) + "*" + m;
        if (first) os << (neg ? "-" : "") << body;
        else os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_sub(const Polynomial& f, const Polynomial& g) { return f - g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::size_t n = std::max(f.nvars(), g.nvars());
    Polynomial q = Polynomial::zero(n), r = Polynomial::zero(n), p = f.extended(n);
    Polynomial gg = g.extended(n);
    const Term& lt = gg.lead();
    while (!p.is_zero()) {
        const Term& t = p.lead();
        if (lt.exp.divides(t.exp)) {
            Multidegree m = t.exp - lt.exp;
            Rational c = t.coef / lt.coef;
            q += Polynomial::monomial(m, c);
            p -= gg.times_monomial(m, c);
        } else {
            r += Polynomial::monomial(t.exp, t.coef);
            p -= Polynomial::monomial(t.exp, t.coef);
        }
    }
    return {q, r};
}

Polynomial poly_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (g.is_monomial()) {
        const Term& t = g.terms()[0];
        return f.extended(std::max(f.nvars(), g.nvars())).div_monomial(t.exp).scaled(1 / t.coef);
    }
    auto [q, r] = poly_divmod(f, g);
    if (!r.is_zero()) throw NotDivisible("inexact polynomial division");
    return q;
}

Polynomial reduce_mod_monomials(const Polynomial& f, const std::vector<Multidegree>& gens) {
    std::vector<Term> keep;
    for (const auto& t : f.terms()) {
        bool hit = std::any_of(gens.begin(), gens.end(), [&](const Multidegree& m) { return m.divides(t.exp); });
        if (!hit) keep.push_back(t);
    }
    return Polynomial::from_terms(f.nvars(), std::move(keep));
}

Polynomial mono(std::initializer_list<int32_t> exps, const Rational& c) {
    return Polynomial::monomial(Multidegree(std::vector<int32_t>(exps)), c);
}

}  // namespace mdg
