#include <algorithm>

#include "mdg/ring.hpp"

namespace mdg {

namespace {

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return f.scaled(1 / f.lead().coef);
}

int lowest_variable(const Polynomial& f) {
    int best = -1;
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < t.exp.size(); ++i)
            if (t.exp[i] != 0 && (best < 0 || static_cast<int>(i) < best)) best = static_cast<int>(i);
    return best;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g);

// gcd of all coefficients of f viewed as a polynomial in v.
Polynomial content_in(const Polynomial& f, std::size_t v) {
    Polynomial c = Polynomial::zero(f.nvars());
    for (int k = f.degree_in(v); k >= 0; --k) {
        Polynomial ck = f.coeff_in(v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? make_monic(ck) : gcd_rec(c, ck);
        if (c.is_constant()) break;
    }
    return c;
}

// Pseudo-remainder of a by b in the variable v.
Polynomial prem(Polynomial a, const Polynomial& b, std::size_t v) {
    int db = b.degree_in(v);
    Polynomial lb = b.coeff_in(v, db);
    while (!a.is_zero()) {
        int da = a.degree_in(v);
        if (da < db) break;
        Polynomial la = a.coeff_in(v, da);
        Polynomial shift = Polynomial::variable(a.nvars(), v, da - db);
        a = lb * a - la * shift * b;
    }
    return a;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return make_monic(g);
    if (g.is_zero()) return make_monic(f);
    if (f.is_constant() || g.is_constant()) return Polynomial(Rational(1), std::max(f.nvars(), g.nvars()));
    if (f.is_monomial() || g.is_monomial()) {
        Multidegree m = f.monomial_content().gcd(g.monomial_content());
        return Polynomial::monomial(m);
    }
    // Pull out the common monomial factor first; it keeps the remainder
    // sequence short in the multigraded case.
    Multidegree mf = f.monomial_content(), mg = g.monomial_content();
    Multidegree mc = mf.gcd(mg);
    if (!mf.is_zero() || !mg.is_zero()) {
        Polynomial r = gcd_rec(f.div_monomial(mf), g.div_monomial(mg));
        return r.times_monomial(mc);
    }
    int vf = lowest_variable(f), vg = lowest_variable(g);
    std::size_t v = static_cast<std::size_t>(std::min(vf, vg));
    if (f.degree_in(v) == 0) return gcd_rec(f, content_in(g, v));
    if (g.degree_in(v) == 0) return gcd_rec(content_in(f, v), g);

    Polynomial cf = content_in(f, v), cg = content_in(g, v);
    Polynomial c = gcd_rec(cf, cg);
    Polynomial a = poly_divide(f, cf), b = poly_divide(g, cg);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree_in(v) == 0) {
            a = Polynomial(Rational(1), f.nvars());
            break;
        }
        Polynomial r = prem(a, b, v);
        a = std::move(b);
        if (r.is_zero()) {
            b = Polynomial::zero(f.nvars());
        } else {
            Polynomial cr = content_in(r, v);
            b = make_monic(poly_divide(r, cr));
        }
    }
    return make_monic(c * a);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    std::size_t n = std::max(f.nvars(), g.nvars());
    if (f.nvars() != g.nvars() && f.nvars() != 0 && g.nvars() != 0)
        throw RingMismatch("gcd of polynomials over different variable lists");
    return gcd_rec(f.extended(n), g.extended(n));
}

}  // namespace mdg
