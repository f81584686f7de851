#include <algorithm>
#include <numeric>
#include <sstream>

#include "mdg/errors.hpp"
#include "mdg/symdg.hpp"

namespace mdg {

namespace {

Polynomial to_poly(const RF& c) {
    if (!c.is_polynomial()) throw MathError("coefficient is not a polynomial");
    return c.num().scaled(1 / c.den().constant_value());
}

bool is_odd(const FreeComplex& F, int i) { return F.degree(i) & 1; }

// Koszul sign of sorting a word of basis indices; 0 if an odd index repeats.
// Zero entries (the unit) are kept in place by the caller.
int sort_sign(const FreeComplex& F, std::vector<int>& w) {
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j] && is_odd(F, w[i]) && is_odd(F, w[j])) sign = -sign;
    std::sort(w.begin(), w.end());
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && is_odd(F, w[i])) return 0;
    return sign;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string poly_coefficient(const Polynomial& c, const Ring& R, bool& negative) {
    return coefficient_prefix(RF(c), R, false, negative);
}

}  // namespace

void sym_add(SymElement& x, const SymMonomial& m, const Polynomial& c) {
    if (c.is_zero()) return;
    auto it = x.find(m);
    if (it == x.end()) {
        x.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
}

void sym_add(SymElement& x, const SymElement& y, const Polynomial& c) {
    for (const auto& [m, p] : y) sym_add(x, m, p * c);
}

bool sym_is_zero(const SymElement& x) { return x.empty(); }

SymDGAlgebra::SymDGAlgebra(ComplexPtr A, int N) : A_(std::move(A)), N_(N) {
    if (N < 0) throw Error("truncation must be nonnegative");
    const FreeComplex& F = *A_;
    int n = int(F.size());
    dgen_.resize(std::size_t(n));
    for (int i = 1; i < n; ++i)
        for (const auto& [k, c] : F.d(i).entries()) dgen_[i].push_back({k, to_poly(c)});
    // Nondecreasing sequences of positive indices, odd ones not repeated.
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        all_.push_back(cur);
        comp_[{hom_degree(cur), int(cur.size())}].push_back(cur);
        if (int(cur.size()) == N_) return;
        for (int i = start; i < n; ++i) {
            if (is_odd(F, i) && !cur.empty() && cur.back() == i) continue;
            cur.push_back(i);
            rec(is_odd(F, i) ? i + 1 : i);
            cur.pop_back();
        }
    };
    rec(1);
    std::sort(all_.begin(), all_.end(), [&](const SymMonomial& a, const SymMonomial& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (auto& [k, v] : comp_) std::sort(v.begin(), v.end());
}

int SymDGAlgebra::hom_degree(const SymMonomial& m) const {
    int d = 0;
    for (int i : m) d += A_->degree(i);
    return d;
}

const std::vector<SymMonomial>& SymDGAlgebra::component(int i, int m) const {
    static const std::vector<SymMonomial> none;
    auto it = comp_.find({i, m});
    return it == comp_.end() ? none : it->second;
}

std::map<std::pair<int, int>, long> SymDGAlgebra::dims() const {
    std::map<std::pair<int, int>, long> out;
    for (const auto& [k, v] : comp_) out[k] = long(v.size());
    return out;
}

std::pair<int, SymMonomial> SymDGAlgebra::multiply(const SymMonomial& a, const SymMonomial& b) const {
    std::vector<int> w(a);
    w.insert(w.end(), b.begin(), b.end());
    int s = sort_sign(*A_, w);
    return {s, w};
}

SymElement SymDGAlgebra::multiply(const SymElement& a, const SymElement& b) const {
    SymElement out;
    for (const auto& [m1, c1] : a)
        for (const auto& [m2, c2] : b) {
            auto [s, m] = multiply(m1, m2);
            if (s == 0 || (N_ >= 0 && int(m.size()) > N_)) continue;
            sym_add(out, m, s > 0 ? c1 * c2 : -(c1 * c2));
        }
    return out;
}

namespace {

// One differential term per factor; keep selects the part that survives.
SymElement leibniz(const FreeComplex& F, const std::vector<std::vector<std::pair<int, Polynomial>>>& dgen,
                   const SymMonomial& m, bool keep_linear, bool keep_constant) {
    SymElement out;
    int before = 0;  // homological degree of the factors to the left
    for (std::size_t j = 0; j < m.size(); ++j) {
        int sgn = (before & 1) ? -1 : 1;
        for (const auto& [k, c] : dgen[m[j]]) {
            if (k == 0 && !keep_constant) continue;
            if (k != 0 && !keep_linear) continue;
            std::vector<int> w;
            for (std::size_t t = 0; t < m.size(); ++t) {
                if (t != j) w.push_back(m[t]);
                else if (k != 0) w.push_back(k);
            }
            // The new factor sits at position j; count the odd swaps needed to sort it in.
            int s = 1;
            if (k != 0) {
                std::vector<int> word;
                for (std::size_t t = 0; t < m.size(); ++t) word.push_back(t == j ? k : m[t]);
                s = sort_sign(F, word);
                w = word;
            }
            if (s == 0) continue;
            sym_add(out, w, (s * sgn) > 0 ? c : -c);
        }
        before += F.degree(m[j]);
    }
    return out;
}

}  // namespace

SymElement SymDGAlgebra::eth(const SymMonomial& m) const { return leibniz(*A_, dgen_, m, true, false); }
SymElement SymDGAlgebra::partial(const SymMonomial& m) const { return leibniz(*A_, dgen_, m, false, true); }
SymElement SymDGAlgebra::d(const SymMonomial& m) const { return leibniz(*A_, dgen_, m, true, true); }

SymElement SymDGAlgebra::eth(const SymElement& x) const {
    SymElement out;
    for (const auto& [m, c] : x) sym_add(out, eth(m), c);
    return out;
}
SymElement SymDGAlgebra::partial(const SymElement& x) const {
    SymElement out;
    for (const auto& [m, c] : x) sym_add(out, partial(m), c);
    return out;
}
SymElement SymDGAlgebra::d(const SymElement& x) const {
    SymElement out;
    for (const auto& [m, c] : x) sym_add(out, d(m), c);
    return out;
}

SymElement SymDGAlgebra::generator(int i) const {
    SymElement x;
    x.emplace(i == 0 ? SymMonomial{} : SymMonomial{i}, Polynomial(1L));
    return x;
}

std::string SymDGAlgebra::monomial_string(const SymMonomial& m) const {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!s.empty()) s += "*";
        s += A_->basis(m[i]).name;
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::string SymDGAlgebra::to_string(const SymElement& x) const {
    if (x.empty()) return "0";
    // Lower total degree first, then index order.
    std::vector<const std::pair<const SymMonomial, Polynomial>*> ts;
    for (const auto& t : x) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        if (a->first.size() != b->first.size()) return a->first.size() > b->first.size();
        return a->first < b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        bool neg = false;
        std::string body;
        if (t->first.empty()) {
            Polynomial c = t->second;
            if (c.is_monomial() && c.lead().coef < 0) {
                neg = true;
                c = -c;
            }
            body = c.to_string(A_->ring());
            if (c.size() > 1 && !first) body = "(" + body + ")";
        } else {
            body = poly_coefficient(t->second, A_->ring(), neg) + monomial_string(t->first);
        }
        if (first) os << (neg ? "-" : "") << body;
        else os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

SymCheckReport check_sym(const SymDGAlgebra& S, Exec exec) {
    const auto& ms = S.monomials();
    std::vector<char> bad(ms.size(), 0);
    parallel_for(ms.size(), exec, [&](std::size_t t) {
        const SymMonomial& m = ms[t];
        char b = 0;
        SymElement e = S.eth(m), p = S.partial(m);
        if (!sym_is_zero(S.d(S.d(m)))) b |= 1;
        if (!sym_is_zero(S.eth(e))) b |= 2;
        if (!sym_is_zero(S.partial(p))) b |= 4;
        SymElement ep = S.eth(p);
        sym_add(ep, S.partial(e));
        if (!sym_is_zero(ep)) b |= 8;
        bad[t] = b;
    });
    SymCheckReport r;
    r.monomials = long(ms.size());
    for (std::size_t t = 0; t < ms.size(); ++t) {
        if (!bad[t]) continue;
        if (bad[t] & 1) r.d_squared = false;
        if (bad[t] & 2) r.eth_squared = false;
        if (bad[t] & 4) r.partial_squared = false;
        if (bad[t] & 8) r.anticommute = false;
        if (r.witness.empty()) r.witness = S.monomial_string(ms[t]);
    }
    return r;
}

GCPolynomial sym_to_gc(const GCContext& ctx, const SymDGAlgebra& S, const SymElement& x) {
    std::vector<GCTerm> terms;
    for (const auto& [m, c] : x) {
        GCMonomial g(ctx.size(), 0);
        for (int i : m) g[std::size_t(i - 1)] += 1;
        terms.push_back({g, RF(c)});
    }
    return GCPolynomial::from_terms(ctx, std::move(terms));
}

namespace {

// Coordinates of a linear multigraded witness after rescaling e_s by x^{mdeg s}.
bool rescaled_vector(const FreeComplex& F, const GCPolynomial& w, QVector& out) {
    out.assign(F.size(), Rational(0));
    const GCTerm& lt = w.lead();
    int li = 0;
    for (std::size_t k = 0; k < lt.mono.size(); ++k)
        if (lt.mono[k]) li = int(k) + 1;
    RF base = lt.coef * RF(Polynomial::monomial(F.mdeg(li)));
    for (const auto& t : w.terms()) {
        int idx = 0;
        for (std::size_t k = 0; k < t.mono.size(); ++k)
            if (t.mono[k]) idx = int(k) + 1;
        RF r = t.coef * RF(Polynomial::monomial(F.mdeg(idx))) / base;
        if (!r.num().is_constant() || !r.den().is_constant()) return false;
        out[std::size_t(idx)] = r.num().constant_value() / r.den().constant_value();
    }
    return true;
}

}  // namespace

PresentationReport presentation_check(const MDGAlgebra& A, const AssociatorSubmodule& V,
                                      const AssociativityCertificate& cert) {
    const FreeComplex& F = A.complex();
    std::size_t n = F.size();
    PresentationReport rep;
    std::map<int, EchelonBasis> W, G, J;
    auto at = [&](std::map<int, EchelonBasis>& m, int k) -> EchelonBasis& {
        auto it = m.find(k);
        if (it == m.end()) it = m.emplace(k, EchelonBasis(n)).first;
        return it->second;
    };
    for (const auto& w : cert.witnesses) {
        GBElement probe{w, Provenance::Derived, ""};
        if (!probe.linear()) {
            rep.witnesses_linear = false;
            rep.ok = false;
            rep.diff += "witness with higher terms: " + w.to_string(cert.basis.ctx) + "\n";
            continue;
        }
        int k = gc_hom_degree(cert.basis.ctx, w.lead().mono);
        QVector v;
        if (!rescaled_vector(F, w, v)) throw MathError("witness is not multigraded: " + w.to_string(cert.basis.ctx));
        at(W, k).insert(v);
        at(J, k).insert(v);
    }
    for (const auto& g : V.generators()) {
        at(G, g.degree).insert(g.v);
        at(J, g.degree).insert(g.v);
    }
    for (const auto& [k, E] : J) {
        long a = W.count(k) ? long(W.at(k).rank()) : 0, b = G.count(k) ? long(G.at(k).rank()) : 0;
        long j = long(E.rank());
        if (a) rep.ideal_dims[k] = a;
        if (b) rep.submodule_dims[k] = b;
        if (j) rep.joint_dims[k] = j;
        if (a != j || b != j) {
            rep.ok = false;
            rep.diff += "degree " + std::to_string(k) + ": ideal " + std::to_string(a) + ", submodule " +
                        std::to_string(b) + ", together " + std::to_string(j) + "\n";
        }
    }
    return rep;
}

PresentationReport presentation_check(const MDGAlgebra& A) {
    AssociatorSubmodule V = associator_submodule(A);
    AssociativityCertificate cert = associativity_certificate(A);
    return presentation_check(A, V, cert);
}

bool quotient_is_generated_by_A(const MDGAlgebra& A, const AssociativityCertificate& cert, int N) {
    SymDGAlgebra S(A.complex_ptr(), N);
    const GCContext& ctx = cert.basis.ctx;
    std::vector<GCPolynomial> B = cert.basis.polys();
    const auto& ms = S.monomials();
    std::vector<char> bad(ms.size(), 0);
    parallel_for(ms.size(), Exec::Parallel, [&](std::size_t t) {
        if (ms[t].size() < 2) return;
        SymElement x;
        x.emplace(ms[t], Polynomial(1L));
        GCPolynomial r = normal_form(ctx, sym_to_gc(ctx, S, x), B).first;
        bad[t] = !r.is_zero() && r.max_total_degree() > 1;
    });
    return std::none_of(bad.begin(), bad.end(), [](char c) { return c != 0; });
}

Element evaluate_in(const MDGAlgebra& A, const SymDGAlgebra& S, const SymMonomial& m) {
    Element x = Element::basis(0);
    for (int i : m) x = A.multiply(x, Element::basis(i));
    return x;
}

SplitReport split_witness(const MDGAlgebra& A, int N) {
    AssociativityCertificate cert = associativity_certificate(A);
    if (!cert.associative) throw MathError("split witness needs an associative multiplication");
    SymDGAlgebra S(A.complex_ptr(), N);
    const GCContext& ctx = cert.basis.ctx;
    std::vector<GCPolynomial> B = cert.basis.polys();
    std::vector<SymMonomial> ms;
    for (const auto& m : S.monomials())
        if (m.size() >= 2) ms.push_back(m);
    std::vector<GCPolynomial> theta(ms.size());
    std::vector<char> ok(ms.size(), 0), reduced(ms.size(), 0);
    parallel_for(ms.size(), Exec::Parallel, [&](std::size_t t) {
        SymElement x;
        x.emplace(ms[t], Polynomial(1L));
        GCPolynomial mono = sym_to_gc(ctx, S, x);
        GCPolynomial prod;
        try {
            prod = element_to_gc(ctx, evaluate_in(A, S, ms[t]));
        } catch (const UndefinedProduct&) {
            // Partial tables: the product is whatever the quotient makes it.
            prod = normal_form(ctx, mono, B).first;
            reduced[t] = 1;
            if (!prod.is_zero() && prod.max_total_degree() > 1) return;
        }
        theta[t] = mono.add(ctx, prod, RF(-1L));
        // rho keeps the part of total degree >= 2.
        std::vector<GCTerm> high;
        for (const auto& term : theta[t].terms())
            if (gc_total_degree(term.mono) >= 2) high.push_back(term);
        ok[t] = GCPolynomial::from_terms(ctx, high) == mono && normal_form(ctx, theta[t], B).first.is_zero();
    });
    SplitReport rep;
    for (std::size_t t = 0; t < ms.size(); ++t) {
        ++rep.checked;
        rep.from_normal_form += reduced[t];
        if (!ok[t] && rep.split) {
            rep.split = false;
            rep.witness = S.monomial_string(ms[t]);
        }
        rep.theta.push_back({ms[t], theta[t]});
    }
    return rep;
}

void tensor_add(Tensor& t, const TensorWord& w, const Polynomial& c) {
    if (c.is_zero()) return;
    auto it = t.find(w);
    if (it == t.end()) {
        t.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

bool tensor_is_zero(const Tensor& t) { return t.empty(); }

Tensor tensor_d(const FreeComplex& F, const Tensor& t) {
    Tensor out;
    for (const auto& [w, c] : t) {
        int before = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
            Polynomial s = (before & 1) ? -c : c;
            for (const auto& [k, dc] : F.d(w[j]).entries()) {
                TensorWord v = w;
                v[j] = k;
                tensor_add(out, v, s * to_poly(dc));
            }
            before += F.degree(w[j]);
        }
    }
    return out;
}

Tensor permute(const FreeComplex& F, const Tensor& t, const std::vector<int>& perm) {
    Tensor out;
    for (const auto& [w, c] : t) {
        TensorWord v(w.size());
        int sign = 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            v[std::size_t(perm[i])] = w[i];
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (perm[i] > perm[j] && is_odd(F, w[i]) && is_odd(F, w[j])) sign = -sign;
        }
        tensor_add(out, v, sign > 0 ? c : -c);
    }
    return out;
}

namespace {

template <class Fn>
void for_each_perm(int n, Fn&& fn) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do fn(p);
    while (std::next_permutation(p.begin(), p.end()));
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
    std::vector<int> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[std::size_t(p[i])] = int(i);
    return q;
}

Tensor scaled(const Tensor& t, const Rational& q) {
    Tensor out;
    for (const auto& [w, c] : t) tensor_add(out, w, c.scaled(q));
    return out;
}

void add_into(Tensor& a, const Tensor& b, const Polynomial& c = Polynomial(1L)) {
    for (const auto& [w, p] : b) tensor_add(a, w, p * c);
}

}  // namespace

Tensor symmetrize(const FreeComplex& F, const Tensor& t) {
    if (t.empty()) return t;
    int n = int(t.begin()->first.size());
    Tensor out;
    for_each_perm(n, [&](const std::vector<int>& p) { add_into(out, permute(F, t, p)); });
    return scaled(out, Rational(1, factorial(n)));
}

bool is_symmetric(const FreeComplex& F, const Tensor& t) {
    if (t.empty()) return true;
    int n = int(t.begin()->first.size());
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[std::size_t(i)], p[std::size_t(i + 1)]);
        if (permute(F, t, p) != t) return false;
    }
    return true;
}

Tensor homogenize(const SymDGAlgebra& S, const SymElement& f, int n) {
    Tensor out;
    for (const auto& [m, c] : f) {
        if (int(m.size()) > n) throw MathError("element exceeds the symmetric power");
        TensorWord w(std::size_t(n) - m.size(), 0);
        w.insert(w.end(), m.begin(), m.end());
        Tensor t;
        t.emplace(w, c);
        add_into(out, symmetrize(S.base(), t));
    }
    return out;
}

SymElement dehomogenize(const SymDGAlgebra& S, const Tensor& t) {
    SymElement out;
    for (const auto& [w, c] : t) {
        std::vector<int> v;
        for (int i : w)
            if (i) v.push_back(i);
        int s = sort_sign(S.base(), v);
        if (s) sym_add(out, v, s > 0 ? c : -c);
    }
    return out;
}

Element LinearMap::apply(const Element& x) const {
    Element out;
    for (const auto& [i, c] : x.entries()) out.add(img.at(std::size_t(i)), c);
    return out;
}

LinearMap linear_map(const ChainMap& f) {
    LinearMap m{f.source_ptr(), f.target_ptr(), {}, 0};
    for (std::size_t i = 0; i < f.source().size(); ++i) m.img.push_back(f.image(int(i)));
    return m;
}

Tensor apply_tensor_maps(const std::vector<const LinearMap*>& fs, const TensorWord& w) {
    const FreeComplex& X = *fs.front()->src;
    int sign = 1;
    for (std::size_t j = 0; j < fs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if ((fs[j]->degree & 1) && (X.degree(w[i]) & 1)) sign = -sign;
    Tensor out;
    out.emplace(TensorWord{}, Polynomial(sign));
    for (std::size_t j = 0; j < fs.size(); ++j) {
        const Element& img = fs[j]->img.at(std::size_t(w[j]));
        Tensor next;
        for (const auto& [v, c] : out)
            for (const auto& [k, dc] : img.entries()) {
                TensorWord u = v;
                u.push_back(k);
                tensor_add(next, u, c * to_poly(dc));
            }
        out = std::move(next);
        if (out.empty()) break;
    }
    return out;
}

Tensor apply_tensor_maps(const std::vector<const LinearMap*>& fs, const Tensor& t) {
    Tensor out;
    for (const auto& [w, c] : t) add_into(out, apply_tensor_maps(fs, w), c);
    return out;
}

Tensor sym_homotopy_apply(const LinearMap& phi, const LinearMap& psi, const LinearMap& h, int n, const TensorWord& w) {
    if (n < 1) throw Error("symmetric homotopy needs n >= 1");
    const FreeComplex &X = *phi.src, &Y = *phi.dst;
    Tensor out;
    Tensor base;
    base.emplace(w, Polynomial(1L));
    for_each_perm(n, [&](const std::vector<int>& p) {
        Tensor moved = permute(X, base, inverse_perm(p));
        Tensor acc;
        for (int k = 0; k < n; ++k) {
            std::vector<const LinearMap*> fs;
            for (int i = 0; i < n - k - 1; ++i) fs.push_back(&phi);
            fs.push_back(&h);
            for (int i = 0; i < k; ++i) fs.push_back(&psi);
            add_into(acc, apply_tensor_maps(fs, moved));
        }
        add_into(out, permute(Y, acc, p));
    });
    return scaled(out, Rational(1, factorial(n)));
}

SymHomotopyReport check_sym_homotopy(const LinearMap& phi, const LinearMap& psi, const LinearMap& h, int n) {
    const FreeComplex &X = *phi.src, &Y = *phi.dst;
    SymHomotopyReport rep;
    int nb = int(X.size());
    std::vector<int> w(std::size_t(n), 0);
    auto hn = [&](const Tensor& t) {
        Tensor out;
        for (const auto& [v, c] : t) add_into(out, sym_homotopy_apply(phi, psi, h, n, v), c);
        return out;
    };
    std::vector<const LinearMap*> phis(std::size_t(n), &phi), psis(std::size_t(n), &psi);
    for (;;) {
        Tensor t;
        t.emplace(w, Polynomial(1L));
        Tensor lhs = tensor_d(Y, hn(t));
        add_into(lhs, hn(tensor_d(X, t)));
        Tensor rhs = apply_tensor_maps(phis, t);
        add_into(rhs, apply_tensor_maps(psis, t), Polynomial(-1L));
        ++rep.words;
        if (lhs != rhs && rep.identity) {
            rep.identity = false;
            std::string s;
            for (int i : w) s += (s.empty() ? "" : "(x)") + (i ? X.basis(i).name : std::string("1"));
            rep.witness = s;
        }
        if (std::is_sorted(w.begin(), w.end())) {
            Tensor sym = symmetrize(X, t);
            if (!sym.empty() && !is_symmetric(Y, hn(sym))) rep.restricts = false;
        }
        int pos = n - 1;
        while (pos >= 0 && w[std::size_t(pos)] == nb - 1) w[std::size_t(pos--)] = 0;
        if (pos < 0) break;
        ++w[std::size_t(pos)];
    }
    return rep;
}

}  // namespace mdg
