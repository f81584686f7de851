#include <algorithm>
#include <set>

#include "mdg/constructions.hpp"

namespace mdg {

namespace {

RF sgn(int s) { return RF(static_cast<long>(s)); }
int parity_sign(long p) { return (p & 1) ? -1 : 1; }

Multidegree lcm_of(const std::vector<Multidegree>& g, const std::vector<int>& s, std::size_t n) {
    Multidegree m(n);
    for (int i : s) m = m.lcm(g[i]);
    return m;
}

Multidegree resized(Multidegree m, std::size_t n) {
    m.e.resize(n, 0);
    return m;
}

}  // namespace

MonomialIdeal::MonomialIdeal(Ring r, std::vector<Multidegree> g) : ring(std::move(r)), gens(std::move(g)) {
    if (gens.empty()) throw StructureError("a monomial ideal needs at least one generator");
    std::set<Multidegree> seen;
    for (auto& m : gens) {
        m = resized(m, ring.nvars());
        if (m.is_zero()) throw StructureError("monomial ideal generators must be nonconstant");
        if (!seen.insert(m).second) throw StructureError("repeated generator " + ring.monomial_string(m));
    }
}

std::string taylor_name(const std::vector<int>& subset, std::size_t g) {
    std::string s = "e";
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (g > 9 && k) s += '_';
        s += std::to_string(subset[k] + 1);
    }
    return s;
}

MDGAlgebra taylor_resolution(const MonomialIdeal& I) {
    std::size_t g = I.gens.size(), n = I.ring.nvars();
    if (g > 20) throw StructureError("Taylor resolution on more than 20 generators is too large");
    auto F = std::make_shared<FreeComplex>("taylor", I.ring);
    // Subsets by size, then lexicographically.
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << g); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < g; ++i)
            if (mask >> i & 1) s.push_back(int(i));
        subsets.push_back(s);
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    std::map<std::vector<int>, int> idx;
    idx[{}] = 0;
    for (const auto& s : subsets) idx[s] = F->add_basis(taylor_name(s, g), int(s.size()), lcm_of(I.gens, s, n));
    for (const auto& s : subsets) {
        Element v;
        Multidegree m = lcm_of(I.gens, s, n);
        for (std::size_t p = 0; p < s.size(); ++p) {
            std::vector<int> t = s;
            t.erase(t.begin() + long(p));
            Multidegree c = m - lcm_of(I.gens, t, n);
            v.add_term(idx[t], RF(Polynomial::monomial(c, Rational(parity_sign(long(p))))));
        }
        F->set_d(idx[s], v);
    }
    MultiplicationTable T;
    std::size_t top = g;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a; b < subsets.size(); ++b) {
            const auto &s = subsets[a], &t = subsets[b];
            if (s.size() + t.size() > top) continue;
            std::vector<int> u;
            std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
            if (u.size() != s.size() + t.size()) {
                T.set(*F, idx[s], idx[t], {});  // overlapping sets multiply to zero
                continue;
            }
            long inv = 0;
            for (int i : s)
                for (int j : t)
                    if (i > j) ++inv;
            Multidegree c = lcm_of(I.gens, s, n) + lcm_of(I.gens, t, n) - lcm_of(I.gens, u, n);
            T.set(*F, idx[s], idx[t], Element::basis(idx[u], RF(Polynomial::monomial(c, Rational(parity_sign(inv))))));
        }
    return MDGAlgebra("taylor", F, std::move(T));
}

MDGAlgebra transport_multiplication(const MDGAlgebra& T, const ChainMap& pi, const ChainMap& iota,
                                    const std::string& name) {
    const FreeComplex& F = iota.source();
    for (std::size_t i = 0; i < F.size(); ++i) {
        int ii = int(i);
        if (pi.apply(iota.image(ii)) != Element::basis(ii))
            throw MathError("pi(iota(" + F.basis(ii).name + ")) = " + F.element_string(pi.apply(iota.image(ii))) +
                            ", but transport needs pi iota = id");
    }
    MultiplicationTable M;
    int top = F.max_degree();
    for (std::size_t i = 1; i < F.size(); ++i)
        for (std::size_t j = i; j < F.size(); ++j) {
            int ii = int(i), jj = int(j);
            if (F.degree(ii) + F.degree(jj) > top) continue;
            Element v = pi.apply(T.multiply(iota.image(ii), iota.image(jj)));
            if (!v.is_zero() || ii != jj || !(F.degree(ii) & 1)) M.set(F, ii, jj, v);
        }
    return MDGAlgebra(name.empty() ? "transport" : name, iota.source_ptr(), std::move(M));
}

Element extend_element(const Element& x, std::size_t nvars) {
    Element r;
    for (const auto& [i, c] : x.entries()) r.add_term(i, RF(c.num().extended(nvars), c.den().extended(nvars)));
    return r;
}

MDGAlgebra extend_scalars(const MDGAlgebra& A, const Ring& R) {
    if (R.nvars() == A.complex().ring().nvars()) return A;
    auto F = std::make_shared<FreeComplex>(A.complex());
    F->set_ring(R);
    MultiplicationTable T;
    T.implicit_odd_squares = A.table().implicit_odd_squares;
    for (const auto& [ij, v] : A.table().entries()) T.set(*F, ij.first, ij.second, extend_element(v, R.nvars()));
    return MDGAlgebra(A.name(), F, std::move(T));
}

ConeExtension mapping_cone_extension(const MDGAlgebra& F0, const std::vector<Polynomial>& rs, const Ring& ring) {
    if (rs.empty()) throw StructureError("mapping cone needs at least one element r");
    if (rs.size() > 8) throw StructureError("at most 8 exterior generators are supported");
    std::size_t nv = ring.nvars();
    ConeExtension C;
    C.base = extend_scalars(F0, ring);
    const FreeComplex& F = C.base.complex();
    for (const auto& r : rs) {
        Polynomial p = r.extended(nv);
        if (p.is_zero() || (p.is_constant())) throw StructureError("r must lie in the maximal graded ideal");
        for (const auto& t : p.terms())
            if (t.exp.is_zero()) throw StructureError("r must lie in the maximal graded ideal");
        C.rs.push_back(p);
    }
    std::size_t m = C.rs.size();
    bool monomial = std::all_of(C.rs.begin(), C.rs.end(), [](const Polynomial& p) { return p.is_monomial(); });
    bool labeled = monomial && F.has_mdeg_labels();
    auto mask_mdeg = [&](unsigned mask) {
        Multidegree d(nv);
        for (std::size_t j = 0; j < m; ++j)
            if (mask >> j & 1) d = d + C.rs[j].lead().exp;
        return d;
    };
    auto ext_name = [&](unsigned mask) {
        std::string s = "E";
        if (m > 1)
            for (std::size_t j = 0; j < m; ++j)
                if (mask >> j & 1) s += std::to_string(j + 1);
        return s;
    };
    auto cone = std::make_shared<FreeComplex>(F.name() + "_cone", ring);
    C.index[{0u, 0}] = 0;
    int top = F.max_degree() + int(m);
    for (int k = 1; k <= top; ++k)
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            int s = __builtin_popcount(mask);
            if (k - s < 0 || k - s > F.max_degree()) continue;
            for (int i : F.indices_in_degree(k - s)) {
                std::string nm = mask == 0 ? F.basis(i).name : i == 0 ? ext_name(mask) : ext_name(mask) + "_" + F.basis(i).name;
                std::optional<Multidegree> md;
                if (labeled) md = F.mdeg(i) + mask_mdeg(mask);
                C.index[{mask, i}] = cone->add_basis(nm, k, md);
            }
        }
    auto bits = [&](unsigned mask) {
        std::vector<int> b;
        for (std::size_t j = 0; j < m; ++j)
            if (mask >> j & 1) b.push_back(int(j));
        return b;
    };
    // d(e_S a) = sum_p (-1)^p r_{s_p} e_{S - s_p} a + (-1)^{|S|} e_S d(a)
    for (const auto& [key, ci] : C.index) {
        auto [mask, i] = key;
        if (ci == 0) continue;
        Element v;
        std::vector<int> b = bits(mask);
        for (std::size_t p = 0; p < b.size(); ++p)
            v.add_term(C.embed(mask & ~(1u << b[p]), i), RF(C.rs[b[p]].scaled(Rational(parity_sign(long(p))))));
        int s = int(b.size());
        for (const auto& [j, c] : F.d(i).entries()) v.add_term(C.embed(mask, j), c * sgn(parity_sign(s)));
        cone->set_d(ci, v);
    }
    auto ext_sign = [&](unsigned S, unsigned T) {
        long inv = 0;
        for (int i : bits(S))
            for (int j : bits(T))
                if (i > j) ++inv;
        return parity_sign(inv);
    };
    MultiplicationTable M;
    M.implicit_odd_squares = C.base.table().implicit_odd_squares;
    for (const auto& [k1, c1] : C.index)
        for (const auto& [k2, c2] : C.index) {
            if (c1 == 0 || c2 == 0 || c1 > c2) continue;
            if (cone->degree(c1) + cone->degree(c2) > top) continue;
            auto [S, a] = k1;
            auto [T, b] = k2;
            if (S & T) {
                M.set(*cone, c1, c2, {});
                continue;
            }
            if (!C.base.defined(a, b)) continue;
            // (e_S a)(e_T b) = (-1)^{|a||T|} sign(S,T) e_{S+T} ab
            int sg = ext_sign(S, T) * parity_sign(long(F.degree(a)) * __builtin_popcount(T));
            Element v;
            Element ab = C.base.basis_product(a, b);
            for (const auto& [k, c] : ab.entries()) v.add_term(C.embed(S | T, k), c * sgn(sg));
            if (v.is_zero() && c1 == c2 && (cone->degree(c1) & 1)) continue;
            M.set(*cone, c1, c2, v);
        }
    C.algebra = MDGAlgebra(F.name() + "+eF", cone, std::move(M));
    return C;
}

Report check_nucleus(const ConeExtension& C, Exec exec) {
    Report rep;
    const FreeComplex& F = C.base.complex();
    const MDGAlgebra& A = C.algebra;
    std::size_t m = C.rs.size();
    int top = F.max_degree();
    auto lift = [&](const Element& x, unsigned mask) {
        Element r;
        for (const auto& [i, c] : x.entries()) r.add_term(C.embed(mask, i), c);
        return r;
    };
    std::vector<std::array<int, 3>> triples;
    for (std::size_t i = 1; i < F.size(); ++i)
        for (std::size_t j = 1; j < F.size(); ++j)
            for (std::size_t k = 1; k < F.size(); ++k)
                if (F.degree(int(i)) + F.degree(int(j)) + F.degree(int(k)) + 1 <= top + int(m))
                    triples.push_back({int(i), int(j), int(k)});
    std::vector<std::string> bad(triples.size());
    parallel_for(triples.size(), exec, [&](std::size_t t) {
        auto [i, j, k] = triples[t];
        int da = F.degree(i), db = F.degree(j);
        for (std::size_t e = 0; e < m; ++e) {
            unsigned bit = 1u << e;
            Element E = Element::basis(C.embed(bit, 0));
            Element a = lift(Element::basis(i), 0), b = lift(Element::basis(j), 0), c = lift(Element::basis(k), 0);
            Element ref = A.multiply(E, A.associator(a, b, c));
            Element x1 = A.associator(A.multiply(E, a), b, c);
            Element x2 = A.associator(a, A.multiply(E, b), c).scaled(sgn(parity_sign(da)));
            Element x3 = A.associator(a, b, A.multiply(E, c)).scaled(sgn(parity_sign(da + db)));
            if (ref != x1 || ref != x2 || ref != x3) {
                bad[t] = "e" + std::to_string(e + 1) + " fails the nucleus identity on (" + F.basis(i).name + "," +
                         F.basis(j).name + "," + F.basis(k).name + ")";
                return;
            }
        }
    });
    for (auto& s : bad)
        if (!s.empty()) rep.fail(s);
    return rep;
}

namespace {

// F-submodule of the cone generated by [a1,a2,x] with a1, a2 from the base.
AssociatorSubmodule base_action_submodule(const ConeExtension& C, Exec exec) {
    const MDGAlgebra& A = C.algebra;
    const FreeComplex& K = A.complex();
    const ScalarTable& S = A.scalar();
    std::vector<int> fidx;
    for (std::size_t i = 1; i < C.base.complex().size(); ++i) fidx.push_back(C.embed(0, int(i)));
    std::size_t n = K.size();
    int top = K.max_degree();
    auto unit = [&](int i) {
        QVector v(n);
        v[i] = 1;
        return v;
    };
    AssociatorSubmodule V(A);
    struct Cand {
        QVector v;
        Multidegree m;
        int deg;
    };
    std::vector<std::array<int, 3>> triples;
    for (int i : fidx)
        for (int j : fidx)
            for (std::size_t k = 1; k < n; ++k)
                if (K.degree(i) + K.degree(j) + K.degree(int(k)) <= top) triples.push_back({i, j, int(k)});
    std::vector<std::vector<Cand>> found(triples.size());
    parallel_for(triples.size(), exec, [&](std::size_t t) {
        auto [i, j, k] = triples[t];
        QVector a = S.mul(S.mul(unit(i), unit(j)), unit(k));
        QVector b = S.mul(unit(i), S.mul(unit(j), unit(k)));
        for (std::size_t c = 0; c < n; ++c) a[c] -= b[c];
        if (is_zero_vector(a)) return;
        int deg = K.degree(i) + K.degree(j) + K.degree(k);
        Multidegree m = K.mdeg(i) + K.mdeg(j) + K.mdeg(k);
        found[t].push_back({a, m, deg});
        for (int s : fidx) {
            if (K.degree(s) + deg > top) continue;
            QVector w = S.mul(unit(s), a);
            if (!is_zero_vector(w)) found[t].push_back({w, K.mdeg(s) + m, deg + K.degree(s)});
        }
    });
    for (auto& f : found)
        for (auto& c : f) V.add(c.v, c.m, c.deg, "");
    // Close under the base action and d.
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Cand> extra;
        for (const auto& G : V.generators()) {
            if (G.degree > 0) extra.push_back({S.apply_d(G.v), G.m, G.degree - 1});
            for (int s : fidx)
                if (K.degree(s) + G.degree <= top) extra.push_back({S.mul(unit(s), G.v), K.mdeg(s) + G.m, G.degree + K.degree(s)});
        }
        for (auto& c : extra) grew |= V.add(c.v, c.m, c.deg, "");
    }
    return V;
}

}  // namespace

ConeAssociatorReport compare_cone_associators(const ConeExtension& C, Exec exec) {
    ConeAssociatorReport rep;
    const FreeComplex& K = C.algebra.complex();
    AssociatorSubmodule full = associator_submodule(C.algebra, exec);
    AssociatorSubmodule fpart = base_action_submodule(C, exec);
    AssociatorSubmodule basev = associator_submodule(C.base, exec);
    // <F> + sum_S e_S <F> inside the cone coordinates.
    AssociatorSubmodule sum(C.algebra);
    std::size_t m = C.rs.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Multidegree shift(K.ring().nvars());
        for (std::size_t j = 0; j < m; ++j)
            if (mask >> j & 1) shift = shift + C.rs[j].lead().exp;
        int s = __builtin_popcount(mask);
        for (const auto& g : basev.generators()) {
            QVector v(K.size());
            for (std::size_t i = 0; i < g.v.size(); ++i)
                if (g.v[i] != 0) v[C.embed(mask, int(i))] = g.v[i];
            sum.add(v, g.m + shift, g.degree + s, "");
        }
    }
    std::vector<Multidegree> box = divisors_of([&] {
        Multidegree L = K.lcm_all();
        for (const auto* V : {&full, &fpart, &sum})
            for (const auto& g : V->generators()) L = L.lcm(g.m);
        return L;
    }());
    std::vector<std::string> bad(box.size());
    std::vector<std::map<int, long>> dfull(box.size());
    parallel_for(box.size(), exec, [&](std::size_t bi) {
        PieceSpaces a = full.piece(box[bi]), b = fpart.piece(box[bi]), c = sum.piece(box[bi]);
        std::set<int> degs;
        for (const auto* P : {&a, &b, &c})
            for (const auto& [k, E] : *P) degs.insert(k);
        for (int k : degs) {
            EchelonBasis Ea = a.count(k) ? a[k] : EchelonBasis(K.size());
            EchelonBasis Eb = b.count(k) ? b[k] : EchelonBasis(K.size());
            EchelonBasis Ec = c.count(k) ? c[k] : EchelonBasis(K.size());
            std::size_t rb = Eb.rank(), rc = Ec.rank(), ra = Ea.rank();
            bool bc = rb == rc && span_sum(Eb, Ec).rank() == rb;
            bool ca = rc == ra && span_sum(Ec, Ea).rank() == ra;
            if (!bc) bad[bi] = "F-part and <F> + e<F> differ at degree " + std::to_string(k);
            else if (!ca) bad[bi] = "<F> + e<F> and <F+eF> differ at degree " + std::to_string(k);
            if (ra) dfull[bi][k] = long(ra);
        }
    });
    for (std::size_t bi = 0; bi < box.size(); ++bi) {
        for (const auto& [k, v] : dfull[bi]) rep.dims_full[k] += v;
        if (bad[bi].empty()) continue;
        if (bad[bi][0] == 'F') rep.f_part_equals_sum = false;
        else rep.sum_equals_full = false;
        if (rep.witness.empty())
            rep.witness = bad[bi] + " in multidegree " + K.ring().monomial_string(box[bi]);
    }
    // Base and shifted dimensions over the same box, for the degreewise split.
    for (const auto& b : box) {
        for (const auto& [k, E] : basev.piece(b)) rep.dims_base[k] += long(E.rank());
        for (std::size_t j = 0; j < m; ++j) {
            const Multidegree& rj = C.rs[j].lead().exp;
            if (!rj.divides(b)) continue;
            for (const auto& [k, E] : basev.piece(b - rj)) rep.dims_shifted[k + 1] += long(E.rank());
        }
    }
    return rep;
}

ConeHomologyReport compare_cone_homology(const ConeExtension& C, Exec exec) {
    if (C.rs.size() != 1 || !C.rs[0].is_monomial())
        throw StructureError("the homology comparison needs a single monomial r");
    ConeHomologyReport rep;
    AssociatorSubmodule Vb = associator_submodule(C.base, exec);
    AssociatorSubmodule Vc = associator_submodule(C.algebra, exec);
    rep.base = associator_homology(Vb, exec);
    rep.cone = associator_homology(Vc, exec);
    Multidegree r = C.rs[0].lead().exp;
    rep.lengths = shifted_lengths(Vb, {r}, exec);
    int top = C.algebra.complex().max_degree();
    auto get = [](const std::map<int, long>& m, int k) {
        auto it = m.find(k);
        return it == m.end() ? 0L : it->second;
    };
    for (int i = 0; i <= top; ++i) {
        long p = get(rep.lengths.quotient, i) + get(rep.lengths.annihilator, i - 1);
        if (p) rep.predicted[i] = p;
        if (p != rep.cone.at(i)) rep.lengths_match = false;
    }
    rep.inf_matches = rep.base.inf == rep.cone.inf;
    if (rep.base.sup) {
        int d = *rep.base.sup;
        rep.r_regular_on_top = get(rep.lengths.annihilator, d) == 0;
        rep.sup_in_range = rep.cone.sup && (*rep.cone.sup == d || *rep.cone.sup == d + 1);
        rep.sup_rule = rep.cone.sup && *rep.cone.sup == (rep.r_regular_on_top ? d : d + 1);
    } else {
        rep.sup_in_range = rep.sup_rule = !rep.cone.sup;
    }
    return rep;
}

}  // namespace mdg
