#include "mdg/mdg.hpp"

namespace mdg {

namespace {

RF sign_rf(int s) { return RF(static_cast<long>(s)); }
int koszul(int a, int b) { return ((a * b) & 1) ? -1 : 1; }

}  // namespace

void Homotopy::set(int i, int j, Element v) {
    if (i == 0 || j == 0) {
        if (!v.is_zero()) throw StructureError("a homotopy must vanish on pairs with the unit");
        return;
    }
    if (i > j) {
        v = v.scaled(sign_rf(koszul(F_->degree(i), F_->degree(j))));
        std::swap(i, j);
    }
    if (i == j && (F_->degree(i) & 1) && !v.is_zero())
        throw StructureError("h(a,a) must vanish for odd a by symmetry");
    if (v.is_zero()) t_.erase({i, j});
    else t_[{i, j}] = std::move(v);
}

Element Homotopy::basis_value(int i, int j) const {
    if (i == 0 || j == 0) return {};
    bool swapped = i > j;
    auto it = swapped ? t_.find({j, i}) : t_.find({i, j});
    if (it == t_.end()) return {};
    return swapped ? it->second.scaled(sign_rf(koszul(F_->degree(i), F_->degree(j)))) : it->second;
}

Element Homotopy::apply(const Element& a, const Element& b) const {
    Element r;
    for (const auto& [i, c] : a.entries())
        for (const auto& [j, e] : b.entries()) {
            Element v = basis_value(i, j);
            if (!v.is_zero()) r.add(v, c * e);
        }
    return r;
}

PerturbResult perturb_multiplication(const MDGAlgebra& A, const Homotopy& h, Exec exec) {
    const FreeComplex& F = A.complex();
    ComplexPtr Fp = A.complex_ptr();
    int top = F.max_degree();
    std::size_t n = F.size();
    MultiplicationTable T;
    T.implicit_odd_squares = A.table().implicit_odd_squares;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            int ii = int(i), jj = int(j);
            if (F.degree(ii) + F.degree(jj) > top) continue;
            if (!A.defined(ii, jj)) continue;
            Element ei = Element::basis(ii), ej = Element::basis(jj);
            Element v = A.basis_product(ii, jj) + F.apply_d(h.basis_value(ii, jj)) + h.apply(F.d(ii), ej) +
                        h.apply(ei, F.d(jj)).scaled(sign_rf(koszul(F.degree(ii), 1)));
            if (!v.is_zero() || A.table().has(ii, jj)) T.set(F, ii, jj, v);
        }
    PerturbResult out;
    out.algebra = MDGAlgebra(A.name() + "_h", Fp, std::move(T));
    out.axioms = check_mdg_axioms(out.algebra, exec);

    std::vector<std::array<int, 3>> triples;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t k = 1; k < n; ++k)
                if (F.degree(int(i)) + F.degree(int(j)) + F.degree(int(k)) <= top)
                    triples.push_back({int(i), int(j), int(k)});
    std::vector<char> bad(triples.size(), 0);
    const MDGAlgebra& Ah = out.algebra;
    parallel_for(triples.size(), exec, [&](std::size_t t) {
        Element a = Element::basis(triples[t][0]), b = Element::basis(triples[t][1]), c = Element::basis(triples[t][2]);
        Element lhs = Ah.associator(a, b, c) - A.associator(a, b, c);
        if (lhs != homotopy_boundary(A, Ah, h, a, b, c)) bad[t] = 1;
    });
    for (std::size_t t = 0; t < triples.size(); ++t)
        if (bad[t]) {
            out.identity_holds = false;
            out.identity_witness = "(" + F.basis(triples[t][0]).name + "," + F.basis(triples[t][1]).name + "," +
                                   F.basis(triples[t][2]).name + ")";
            break;
        }
    return out;
}

Element homotopy_H(const MDGAlgebra& A, const MDGAlgebra& Ah, const Homotopy& h, const Element& a, const Element& b,
                   const Element& c) {
    const FreeComplex& F = A.complex();
    int da = element_degree(F, a);
    return A.multiply(h.apply(a, b), c) - A.multiply(a, h.apply(b, c)).scaled(sign_rf(koszul(da, 1))) +
           h.apply(Ah.multiply(a, b), c) - h.apply(a, Ah.multiply(b, c));
}

Element homotopy_boundary(const MDGAlgebra& A, const MDGAlgebra& Ah, const Homotopy& h, const Element& a,
                          const Element& b, const Element& c) {
    const FreeComplex& F = A.complex();
    int da = element_degree(F, a), db = element_degree(F, b);
    Element r = F.apply_d(homotopy_H(A, Ah, h, a, b, c));
    r.add(homotopy_H(A, Ah, h, F.apply_d(a), b, c));
    r.add(homotopy_H(A, Ah, h, a, F.apply_d(b), c), sign_rf(koszul(da, 1)));
    r.add(homotopy_H(A, Ah, h, a, b, F.apply_d(c)), sign_rf(koszul(da + db, 1)));
    return r;
}

Homotopy random_homotopy(ComplexPtr F, std::mt19937_64& rng, double density) {
    Homotopy h(F);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> coef(-2, 2);
    int top = F->max_degree();
    for (std::size_t i = 1; i < F->size(); ++i)
        for (std::size_t j = i; j < F->size(); ++j) {
            int ii = int(i), jj = int(j);
            int deg = F->degree(ii) + F->degree(jj) + 1;
            if (deg > top) continue;
            if (ii == jj && (F->degree(ii) & 1)) continue;
            Multidegree m = F->mdeg(ii) + F->mdeg(jj);
            Element v;
            for (int k : F->indices_in_degree(deg)) {
                if (!F->mdeg(k).divides(m) || coin(rng) >= density) continue;
                int c = coef(rng);
                if (c == 0) continue;
                v.add_term(k, RF(Polynomial::monomial(m - F->mdeg(k), Rational(c))));
            }
            h.set(ii, jj, v);
        }
    return h;
}

}  // namespace mdg
