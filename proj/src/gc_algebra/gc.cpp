#include <algorithm>
#include <sstream>

#include "mdg/gc.hpp"

namespace mdg {

GCContext::GCContext(Ring ring, std::vector<GCGenerator> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree < 1) throw StructureError("generator " + gens_[i].name + " must have degree >= 1");
        if (i > 0 && gens_[i].degree < gens_[i - 1].degree)
            throw StructureError("generator " + gens_[i].name +
                                 " breaks the ordering rule: degrees must be nondecreasing in index");
    }
}

int GCContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

int gc_total_degree(const GCMonomial& m) {
    int t = 0;
    for (int32_t a : m) t += a;
    return t;
}

int gc_hom_degree(const GCContext& ctx, const GCMonomial& m) {
    int t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i] * ctx.degree(i);
    return t;
}

bool gc_divides(const GCMonomial& a, const GCMonomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

GCMonomial gc_lcm(const GCMonomial& a, const GCMonomial& b) {
    GCMonomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

GCMonomial gc_quotient(const GCMonomial& b, const GCMonomial& a) {
    GCMonomial r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

bool gc_disjoint(const GCMonomial& a, const GCMonomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

int gc_product_sign(const GCContext& ctx, const GCMonomial& a, const GCMonomial& b) {
    // Each odd factor of b moves left past the odd factors of a with larger index.
    long parity = 0;
    long odd_above = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (!ctx.odd(i)) continue;
        parity += static_cast<long>(b[i]) * odd_above;
        odd_above += a[i];
    }
    return (parity & 1) ? -1 : 1;
}

std::pair<int, GCMonomial> normalize_word(const GCContext& ctx, const std::vector<int>& word) {
    int sign = 1;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j] && ctx.odd(word[i]) && ctx.odd(word[j])) sign = -sign;
    GCMonomial m(ctx.size(), 0);
    for (int w : word) m[w] += 1;
    return {sign, m};
}

int gc_compare(const GCContext& ctx, const GCMonomial& a, const GCMonomial& b) {
    int ha = gc_hom_degree(ctx, a), hb = gc_hom_degree(ctx, b);
    if (ha != hb) return ha < hb ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

GCPolynomial GCPolynomial::monomial(const GCContext& ctx, GCMonomial m, RF c) {
    GCPolynomial p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

GCPolynomial GCPolynomial::constant(const GCContext& ctx, RF c) {
    return monomial(ctx, GCMonomial(ctx.size(), 0), std::move(c));
}

GCPolynomial GCPolynomial::generator(const GCContext& ctx, std::size_t i) {
    GCMonomial m(ctx.size(), 0);
    m[i] = 1;
    return monomial(ctx, std::move(m));
}

GCPolynomial GCPolynomial::from_terms(const GCContext& ctx, std::vector<GCTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const GCTerm& a, const GCTerm& b) { return gc_compare(ctx, a.mono, b.mono) > 0; });
    GCPolynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const GCTerm& GCPolynomial::lead() const {
    if (terms_.empty()) throw MathError("lead term of the zero polynomial");
    return terms_.front();
}

int GCPolynomial::max_total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, gc_total_degree(t.mono));
    return d;
}

bool GCPolynomial::is_hom_homogeneous(const GCContext& ctx) const {
    for (const auto& t : terms_)
        if (gc_hom_degree(ctx, t.mono) != gc_hom_degree(ctx, terms_.front().mono)) return false;
    return true;
}

GCPolynomial GCPolynomial::add(const GCContext& ctx, const GCPolynomial& g, const RF& c) const {
    if (c.is_zero() || g.is_zero()) return *this;
    GCPolynomial r;
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
        int cmp = i == terms_.size() ? -1 : j == g.terms_.size() ? 1 : gc_compare(ctx, terms_[i].mono, g.terms_[j].mono);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back({g.terms_[j].mono, g.terms_[j].coef * c});
            ++j;
        } else {
            RF s = terms_[i].coef + g.terms_[j].coef * c;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return r;
}

GCPolynomial GCPolynomial::scaled(const RF& c) const {
    if (c.is_zero()) return {};
    GCPolynomial r(*this);
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

GCPolynomial GCPolynomial::negated() const {
    GCPolynomial r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

GCPolynomial GCPolynomial::left_mul_monomial(const GCContext& ctx, const GCMonomial& m, const RF& c) const {
    if (c.is_zero()) return {};
    GCPolynomial r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial is compatible with the order, so the result stays sorted.
    for (const auto& t : terms_) {
        GCMonomial s(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) s[i] = m[i] + t.mono[i];
        RF k = t.coef * c;
        if (gc_product_sign(ctx, m, t.mono) < 0) k = -k;
        r.terms_.push_back({std::move(s), std::move(k)});
    }
    return r;
}

GCPolynomial GCPolynomial::monic() const {
    if (terms_.empty()) return {};
    return scaled(terms_.front().coef.inverse());
}

bool GCPolynomial::operator==(const GCPolynomial& g) const {
    if (terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != g.terms_[i].mono || terms_[i].coef != g.terms_[i].coef) return false;
    return true;
}

GCPolynomial gc_mul(const GCContext& ctx, const GCPolynomial& f, const GCPolynomial& g) {
    std::vector<GCTerm> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.terms())
        for (const auto& b : g.terms()) {
            GCMonomial s(a.mono.size());
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.mono[i] + b.mono[i];
            RF k = a.coef * b.coef;
            if (gc_product_sign(ctx, a.mono, b.mono) < 0) k = -k;
            out.push_back({std::move(s), std::move(k)});
        }
    return GCPolynomial::from_terms(ctx, std::move(out));
}

GCLead lead(const GCContext& ctx, const GCPolynomial& f) {
    const GCTerm& t = f.lead();
    return {t, t.mono, t.coef};
}

std::string gc_monomial_string(const GCContext& ctx, const GCMonomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += ctx.gen(i).name;
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
}

std::string GCPolynomial::to_string(const GCContext& ctx) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string m = gc_monomial_string(ctx, t.mono);
        bool neg = false;
        std::string body;
        if (m.empty()) {
            RF c = t.coef;
            if (c.is_polynomial() && c.num().is_monomial() && c.num().lead().coef < 0) {
                neg = true;
                c = -c;
            }
            body = c.to_string(ctx.ring());
            if (c.num().size() > 1 && !first) body = "(" + body + ")";
        } else {
            std::string pre = coefficient_prefix(t.coef, ctx.ring(), true, neg);
            body = pre + m;
        }
        if (first) os << (neg ? "-" : "") << body;
        else os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

}  // namespace mdg
