#include <algorithm>
#include <set>

#include "mdg/errors.hpp"
#include "mdg/groebner.hpp"

namespace mdg {

namespace {

GCPolynomial term_poly(const GCContext& ctx, const GCTerm& t) { return GCPolynomial::monomial(ctx, t.mono, t.coef); }

// Index of the first basis element whose lead monomial divides m, or -1.
int find_reducer(const std::vector<GCPolynomial>& basis, const GCMonomial& m) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!basis[i].is_zero() && gc_divides(basis[i].lead().mono, m)) return int(i);
    return -1;
}

GCMonomial unit_exponent(const GCContext& ctx, std::size_t k, int power) {
    GCMonomial m(ctx.size(), 0);
    m[k] = power;
    return m;
}

}  // namespace

bool GBElement::linear() const {
    for (const auto& t : poly.terms())
        if (gc_total_degree(t.mono) > 1) return false;
    return true;
}

GCPolynomial spoly(const GCContext& ctx, const GCPolynomial& f, const GCPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw MathError("S-polynomial of a zero polynomial");
    const GCMonomial &a = f.lead().mono, &b = g.lead().mono;
    GCMonomial gamma = gc_lcm(a, b);
    GCPolynomial mf = f.left_mul_monomial(ctx, gc_quotient(gamma, a), RF(1L));
    GCPolynomial mg = g.left_mul_monomial(ctx, gc_quotient(gamma, b), RF(1L));
    return mf.add(ctx, mg, -(mf.lead().coef / mg.lead().coef));
}

std::pair<GCPolynomial, ReductionTrace> normal_form(const GCContext& ctx, const GCPolynomial& f,
                                                    const std::vector<GCPolynomial>& basis, ReduceMode mode) {
    ReductionTrace tr;
    GCPolynomial p = f, rem;
    while (!p.is_zero()) {
        const GCTerm& t = p.lead();
        int r = find_reducer(basis, t.mono);
        if (r < 0) {
            if (mode == ReduceMode::LeadOnly) {
                rem = rem.add(ctx, p);
                break;
            }
            GCPolynomial lt = term_poly(ctx, t);
            rem = rem.add(ctx, lt);
            p = p.add(ctx, lt, RF(-1L));
            continue;
        }
        const GCMonomial& lm = basis[r].lead().mono;
        GCMonomial m = gc_quotient(t.mono, lm);
        GCPolynomial mg = basis[r].left_mul_monomial(ctx, m, RF(1L));
        RF c = t.coef / mg.lead().coef;
        tr.steps.push_back({r, m, gc_product_sign(ctx, m, lm), c});
        p = p.add(ctx, mg, -c);
    }
    tr.result = rem;
    return {rem, tr};
}

GCPolynomial replay(const GCContext& ctx, const GCPolynomial& f, const std::vector<GCPolynomial>& basis,
                    const ReductionTrace& trace) {
    GCPolynomial p = f;
    for (const auto& s : trace.steps) p = p.add(ctx, basis.at(s.reducer).left_mul_monomial(ctx, s.cofactor, RF(1L)), -s.coef);
    return p;
}

std::vector<GCPolynomial> GBasis::polys() const {
    std::vector<GCPolynomial> out;
    for (const auto& e : elements) out.push_back(e.poly);
    return out;
}

std::vector<const GBElement*> GBasis::linear_leads() const {
    std::vector<const GBElement*> out;
    for (const auto& e : elements)
        if (gc_total_degree(e.poly.lead().mono) == 1) out.push_back(&e);
    return out;
}

namespace {

struct Pair {
    int i, j;
    GCMonomial lcm;
    long seq;
};

void interreduce(const GCContext& ctx, std::vector<GBElement>& G) {
    std::sort(G.begin(), G.end(), [&](const GBElement& a, const GBElement& b) {
        return gc_compare(ctx, a.poly.lead().mono, b.poly.lead().mono) < 0;
    });
    std::vector<GBElement> keep;
    for (auto& g : G) {
        bool redundant = false;
        for (const auto& k : keep)
            if (gc_divides(k.poly.lead().mono, g.poly.lead().mono)) {
                redundant = true;
                break;
            }
        if (!redundant) keep.push_back(std::move(g));
    }
    // Tail reduction against the other elements; leads stay fixed since none divides another.
    for (std::size_t i = 0; i < keep.size(); ++i) {
        std::vector<GCPolynomial> others;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (j != i) others.push_back(keep[j].poly);
        const GCTerm& lt = keep[i].poly.lead();
        GCPolynomial lead_term = term_poly(ctx, lt);
        GCPolynomial tail = keep[i].poly.add(ctx, lead_term, RF(-1L));
        GCPolynomial red = normal_form(ctx, tail, others, ReduceMode::Full).first;
        keep[i].poly = lead_term.add(ctx, red).monic();
    }
    G = std::move(keep);
}

}  // namespace

GBasis buchberger(const GCContext& ctx, const std::vector<GBElement>& generators, const BuchbergerOptions& opt) {
    GBasis out;
    out.ctx = ctx;
    std::vector<GBElement> G;
    for (const auto& g : generators) {
        if (g.poly.is_zero()) continue;
        GBElement e = g;
        e.poly = e.poly.monic();
        bool dup = false;
        for (const auto& h : G) dup |= h.poly == e.poly;
        if (!dup) G.push_back(std::move(e));
    }

    // The product criterion rests on disjoint monomials commuting up to sign, which
    // needs every square e_k^2 in the ideal.
    bool criterion = opt.product_criterion;
    for (std::size_t k = 0; k < ctx.size() && criterion; ++k) {
        GCMonomial sq = unit_exponent(ctx, k, 2);
        bool found = false;
        for (const auto& g : G) found |= g.poly.lead().mono == sq;
        criterion = found;
    }

    long seq = 0;
    auto cmp = [&](const Pair& a, const Pair& b) {
        if (opt.order == PairOrder::SmallestLcm) {
            int c = gc_compare(ctx, a.lcm, b.lcm);
            if (c) return c < 0;
        }
        return a.seq < b.seq;
    };
    std::set<Pair, decltype(cmp)> queue(cmp);
    auto add_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            const GCMonomial &a = G[i].poly.lead().mono, &b = G[j].poly.lead().mono;
            if (criterion && gc_disjoint(a, b)) {
                ++out.pairs_skipped;
                continue;
            }
            queue.insert({i, j, gc_lcm(a, b), seq++});
        }
    };
    for (int j = 0; j < int(G.size()); ++j) add_pairs(j);

    int threads = max_threads();
    while (!queue.empty()) {
        // A batch of pairs in the lowest homological degree, reduced against a frozen snapshot.
        std::vector<Pair> batch;
        int deg = gc_hom_degree(ctx, queue.begin()->lcm);
        while (!queue.empty() && int(batch.size()) < 4 * threads &&
               (opt.order == PairOrder::Fifo || gc_hom_degree(ctx, queue.begin()->lcm) == deg)) {
            batch.push_back(*queue.begin());
            queue.erase(queue.begin());
            if (opt.order == PairOrder::Fifo) break;
        }
        out.pairs_considered += long(batch.size());
        if (out.pairs_considered > opt.max_pairs) throw MathError("Buchberger pair limit exceeded");
        std::vector<GCPolynomial> snapshot;
        for (const auto& g : G) snapshot.push_back(g.poly);
        std::vector<GCPolynomial> red(batch.size());
        parallel_for(batch.size(), opt.exec, [&](std::size_t t) {
            const Pair& p = batch[t];
            red[t] = normal_form(ctx, spoly(ctx, snapshot[p.i], snapshot[p.j]), snapshot, ReduceMode::Full).first;
        });
        for (std::size_t t = 0; t < batch.size(); ++t) {
            if (red[t].is_zero()) {
                ++out.zero_reductions;
                continue;
            }
            // Elements added earlier in this batch may reduce it further.
            std::vector<GCPolynomial> cur;
            for (const auto& g : G) cur.push_back(g.poly);
            GCPolynomial r = normal_form(ctx, red[t], cur, ReduceMode::Full).first;
            if (r.is_zero()) {
                ++out.zero_reductions;
                continue;
            }
            GBElement e{r.monic(), Provenance::Derived,
                        "S(" + std::to_string(batch[t].i) + "," + std::to_string(batch[t].j) + ")"};
            G.push_back(std::move(e));
            add_pairs(int(G.size()) - 1);
        }
    }
    if (opt.interreduce) interreduce(ctx, G);
    out.elements = std::move(G);
    return out;
}

GBasis buchberger(const GCContext& ctx, const std::vector<GCPolynomial>& generators, const BuchbergerOptions& opt) {
    std::vector<GBElement> gens;
    for (std::size_t i = 0; i < generators.size(); ++i)
        gens.push_back({generators[i], Provenance::Input, "g" + std::to_string(i + 1)});
    return buchberger(ctx, gens, opt);
}

bool is_confluent(const GBasis& G) {
    std::vector<GCPolynomial> B = G.polys();
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j)
            if (!normal_form(G.ctx, spoly(G.ctx, B[i], B[j]), B).first.is_zero()) return false;
    return true;
}

bool same_ideal(const GBasis& a, const GBasis& b) {
    std::vector<GCPolynomial> A = a.polys(), B = b.polys();
    for (const auto& f : A)
        if (!normal_form(a.ctx, f, B).first.is_zero()) return false;
    for (const auto& f : B)
        if (!normal_form(a.ctx, f, A).first.is_zero()) return false;
    return true;
}

bool is_two_sided(const GBasis& G) {
    std::vector<GCPolynomial> B = G.polys();
    for (const auto& g : B)
        for (std::size_t k = 0; k < G.ctx.size(); ++k)
            if (!normal_form(G.ctx, gc_mul(G.ctx, g, GCPolynomial::generator(G.ctx, k)), B).first.is_zero()) return false;
    return true;
}

GCContext gc_context_for(const FreeComplex& F) {
    std::vector<GCGenerator> gens;
    for (std::size_t i = 1; i < F.size(); ++i) {
        GCGenerator g{F.basis(int(i)).name, F.degree(int(i)), std::nullopt};
        if (F.has_mdeg_labels()) g.mdeg = F.mdeg(int(i));
        gens.push_back(g);
    }
    return GCContext(F.ring(), gens);
}

GCPolynomial element_to_gc(const GCContext& ctx, const Element& x) {
    std::vector<GCTerm> terms;
    for (const auto& [i, c] : x.entries()) {
        GCMonomial m(ctx.size(), 0);
        if (i > 0) m[std::size_t(i - 1)] = 1;
        terms.push_back({m, c});
    }
    return GCPolynomial::from_terms(ctx, std::move(terms));
}

Element gc_to_element(const GCContext& ctx, const GCPolynomial& p, const FreeComplex& F) {
    Element x;
    for (const auto& t : p.terms()) {
        int tot = gc_total_degree(t.mono);
        if (tot > 1) throw MathError("polynomial has terms of total degree above one");
        int idx = 0;
        for (std::size_t k = 0; k < t.mono.size(); ++k)
            if (t.mono[k]) idx = int(k) + 1;
        x.add_term(idx, t.coef);
    }
    return x;
}

std::vector<MultiplicatorGenerator> mult_ideal(const MDGAlgebra& A, const GCContext& ctx) {
    const FreeComplex& F = A.complex();
    std::vector<MultiplicatorGenerator> out;
    for (std::size_t i = 1; i < F.size(); ++i)
        for (std::size_t j = i; j < F.size(); ++j) {
            if (!A.defined(int(i), int(j))) continue;
            GCPolynomial f = gc_mul(ctx, GCPolynomial::generator(ctx, i - 1), GCPolynomial::generator(ctx, j - 1));
            f = f.add(ctx, element_to_gc(ctx, A.basis_product(int(i), int(j))), RF(-1L));
            out.push_back({int(i), int(j), f});
        }
    return out;
}

AssociativityCertificate associativity_certificate(const MDGAlgebra& A, const BuchbergerOptions& opt) {
    const FreeComplex& F = A.complex();
    GCContext ctx = gc_context_for(F);
    std::vector<GBElement> gens;
    for (const auto& g : mult_ideal(A, ctx))
        gens.push_back({g.f, Provenance::Input, "f(" + F.basis(g.i).name + ")(" + F.basis(g.j).name + ")"});
    AssociativityCertificate cert;
    cert.basis = buchberger(ctx, gens, opt);
    for (const GBElement* e : cert.basis.linear_leads()) cert.witnesses.push_back(e->poly);
    cert.associative = cert.witnesses.empty();
    std::vector<GCPolynomial> B = cert.basis.polys();
    int top = F.max_degree();
    for (std::size_t i = 1; i < F.size(); ++i)
        for (std::size_t j = i; j < F.size(); ++j) {
            if (A.defined(int(i), int(j)) || F.degree(int(i)) + F.degree(int(j)) > top) continue;
            GCPolynomial m = gc_mul(ctx, GCPolynomial::generator(ctx, i - 1), GCPolynomial::generator(ctx, j - 1));
            GCPolynomial r = normal_form(ctx, m, B).first;
            if (!r.is_zero() && gc_total_degree(r.lead().mono) == 2) cert.undefined.push_back({int(i), int(j)});
        }
    return cert;
}

}  // namespace mdg
