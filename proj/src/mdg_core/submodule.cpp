#include <algorithm>
#include <mutex>

#include "mdg/mdg.hpp"

namespace mdg {

namespace {

struct Candidate {
    QVector v;
    Multidegree m;
    int degree;
    std::string label;
};

bool nonzero(const QVector& v) { return !is_zero_vector(v); }

void sort_candidates(std::vector<Candidate>& cs) {
    // Small multidegrees first so that later candidates tend to be redundant.
    std::stable_sort(cs.begin(), cs.end(), [](const Candidate& a, const Candidate& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return grlex_compare(a.m, b.m) < 0;
    });
}

}  // namespace

bool AssociatorSubmodule::contains(const QVector& v, const Multidegree& m, int degree) const {
    EchelonBasis E(v.size());
    for (const auto& g : gens_)
        if (g.degree == degree && g.m.divides(m)) E.insert(g.v);
    return E.contains(v);
}

bool AssociatorSubmodule::add(const QVector& v, const Multidegree& m, int degree, const std::string& label) {
    if (!nonzero(v) || contains(v, m, degree)) return false;
    gens_.push_back({v, m, degree, label});
    if (!inf || degree < *inf) inf = degree;
    if (!sup || degree > *sup) sup = degree;
    return true;
}

bool AssociatorSubmodule::contains_element(const Element& x) const {
    const FreeComplex& F = A_->complex();
    for (const auto& [m, part] : F.split_multidegrees(x)) {
        int k = element_degree(F, part);
        if (!contains(scalar_vector(F, part, m), m, k)) return false;
    }
    return true;
}

PieceSpaces AssociatorSubmodule::piece(const Multidegree& b) const {
    PieceSpaces P;
    std::size_t n = A_->complex().size();
    for (const auto& g : gens_) {
        if (!g.m.divides(b)) continue;
        auto it = P.find(g.degree);
        if (it == P.end()) it = P.emplace(g.degree, EchelonBasis(n)).first;
        it->second.insert(g.v);
    }
    return P;
}

PieceFn AssociatorSubmodule::piece_fn() const {
    return [this](const Multidegree& b) { return piece(b); };
}

// Pieces only depend on gcd(b, L) once L covers every basis and generator multidegree.
std::vector<Multidegree> AssociatorSubmodule::box() const {
    Multidegree L = A_->complex().lcm_all();
    for (const auto& g : gens_) L = L.lcm(g.m);
    return divisors_of(L);
}

std::map<int, long> AssociatorSubmodule::dims(Exec exec) const { return piece_dims(box(), piece_fn(), exec); }

AssociatorSubmodule associator_submodule(const MDGAlgebra& A, Exec exec) {
    const FreeComplex& F = A.complex();
    const ScalarTable& S = A.scalar();
    F.scalar_d();
    AssociatorSubmodule V(A);
    std::size_t n = F.size();
    int top = F.max_degree();
    auto unit = [&](int i) {
        QVector v(n);
        v[i] = 1;
        return v;
    };
    auto name = [&](int i) { return F.basis(i).name; };

    // Triples of positive basis elements, then one multiplication on the left.
    std::vector<std::array<int, 3>> triples;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t k = 1; k < n; ++k)
                if (F.degree(int(i)) + F.degree(int(j)) + F.degree(int(k)) <= top)
                    triples.push_back({int(i), int(j), int(k)});
    std::vector<std::vector<Candidate>> found(triples.size());
    parallel_for(triples.size(), exec, [&](std::size_t t) {
        auto [i, j, k] = triples[t];
        QVector a = S.mul(S.mul(unit(i), unit(j)), unit(k));
        QVector b = S.mul(unit(i), S.mul(unit(j), unit(k)));
        for (std::size_t c = 0; c < n; ++c) a[c] -= b[c];
        if (!nonzero(a)) return;
        int deg = F.degree(i) + F.degree(j) + F.degree(k);
        Multidegree m = F.mdeg(i) + F.mdeg(j) + F.mdeg(k);
        std::string lbl = "[" + name(i) + "," + name(j) + "," + name(k) + "]";
        found[t].push_back({a, m, deg, lbl});
        for (std::size_t s = 1; s < n; ++s) {
            if (F.degree(int(s)) + deg > top) continue;
            QVector w = S.mul(unit(int(s)), a);
            if (nonzero(w)) found[t].push_back({w, F.mdeg(int(s)) + m, deg + F.degree(int(s)), name(int(s)) + lbl});
        }
    });
    std::vector<Candidate> all;
    for (auto& f : found)
        for (auto& c : f) all.push_back(std::move(c));
    sort_candidates(all);
    for (const auto& c : all) V.add(c.v, c.m, c.degree, c.label);

    // Closure under d and the action; the generators above normally suffice.
    for (;;) {
        const auto& gens = V.generators();
        std::vector<std::vector<Candidate>> missing(gens.size());
        parallel_for(gens.size(), exec, [&](std::size_t g) {
            const SubmoduleGenerator& G = gens[g];
            if (G.degree > 0) {
                QVector dv = S.apply_d(G.v);
                if (nonzero(dv) && !V.contains(dv, G.m, G.degree - 1))
                    missing[g].push_back({dv, G.m, G.degree - 1, "d" + G.label});
            }
            for (std::size_t s = 1; s < n; ++s) {
                if (F.degree(int(s)) + G.degree > top) continue;
                QVector w = S.mul(unit(int(s)), G.v);
                Multidegree m = F.mdeg(int(s)) + G.m;
                if (nonzero(w) && !V.contains(w, m, G.degree + F.degree(int(s))))
                    missing[g].push_back({w, m, G.degree + F.degree(int(s)), name(int(s)) + G.label});
            }
        });
        std::vector<Candidate> extra;
        for (auto& f : missing)
            for (auto& c : f) extra.push_back(std::move(c));
        if (extra.empty()) break;
        sort_candidates(extra);
        bool grew = false;
        for (const auto& c : extra) grew |= V.add(c.v, c.m, c.degree, c.label);
        if (!grew) break;
        V.closure_iterated = true;
        ++V.closure_rounds;
    }
    return V;
}

HomologyResult associator_homology(const AssociatorSubmodule& V, Exec exec, const std::vector<Multidegree>* box) {
    const FreeComplex& F = V.algebra().complex();
    return subcomplex_homology(F, box ? *box : V.box(), V.piece_fn(), exec);
}

HomologyResult maximal_associative_quotient_dims(const AssociatorSubmodule& V, Exec exec) {
    const FreeComplex& F = V.algebra().complex();
    return quotient_homology(F, V.box(), V.piece_fn(), exec);
}

namespace {

EchelonBasis at(const PieceSpaces& P, int k, std::size_t n) {
    auto it = P.find(k);
    return it == P.end() ? EchelonBasis(n) : it->second;
}

}  // namespace

bool annihilates_associator_homology(const AssociatorSubmodule& V, const Multidegree& r, Exec exec) {
    const FreeComplex& F = V.algebra().complex();
    F.scalar_d();
    std::size_t n = F.size();
    int top = F.max_degree();
    std::vector<Multidegree> box = V.box();
    // Cycles past the box repeat those inside it, and b + r covers the boundaries they need.
    std::vector<char> bad(box.size(), 0);
    parallel_for(box.size(), exec, [&](std::size_t bi) {
        PieceSpaces here = V.piece(box[bi]), up = V.piece(box[bi] + r);
        for (int k = 0; k <= top && !bad[bi]; ++k) {
            EchelonBasis Z = cycles_in(F, at(here, k, n));
            EchelonBasis B = image_under_d(F, at(up, k + 1, n));
            for (const auto& z : Z.rows())
                if (!B.contains(z)) {
                    bad[bi] = 1;
                    break;
                }
        }
    });
    return std::none_of(bad.begin(), bad.end(), [](char c) { return c != 0; });
}

ShiftedLengths shifted_lengths(const AssociatorSubmodule& V, const std::vector<Multidegree>& rs, Exec exec) {
    const FreeComplex& F = V.algebra().complex();
    F.scalar_d();
    std::size_t n = F.size();
    int top = F.max_degree();
    std::vector<Multidegree> box = V.box();
    std::vector<std::map<int, long>> q(box.size()), a(box.size());
    parallel_for(box.size(), exec, [&](std::size_t bi) {
        const Multidegree& c = box[bi];
        PieceSpaces here = V.piece(c);
        std::vector<PieceSpaces> up, down;
        std::vector<char> has_down;
        for (const auto& r : rs) {
            up.push_back(V.piece(c + r));
            bool d = r.divides(c);
            has_down.push_back(d);
            down.push_back(d ? V.piece(c - r) : PieceSpaces{});
        }
        for (int k = 0; k <= top; ++k) {
            EchelonBasis Z = cycles_in(F, at(here, k, n));
            EchelonBasis B = image_under_d(F, at(here, k + 1, n));
            long h = long(Z.rank()) - long(B.rank());
            // H/rH at c: cycles from c - r_j land in c through multiplication by r_j.
            EchelonBasis ZB = B;
            for (std::size_t j = 0; j < rs.size(); ++j)
                if (has_down[j]) ZB = span_sum(ZB, cycles_in(F, at(down[j], k, n)));
            long quot = h - (long(ZB.rank()) - long(B.rank()));
            // 0 :_H r at c: cycles that become boundaries at every c + r_j.
            EchelonBasis K = Z;
            for (std::size_t j = 0; j < rs.size(); ++j) K = intersect(K, image_under_d(F, at(up[j], k + 1, n)));
            long ann = long(K.rank()) - long(B.rank());
            if (quot < 0 || ann < 0) throw MathError("inconsistent pieces in shifted length computation");
            if (quot) q[bi][k] = quot;
            if (ann) a[bi][k] = ann;
        }
    });
    ShiftedLengths out;
    for (std::size_t i = 0; i < box.size(); ++i) {
        for (const auto& [k, v] : q[i]) out.quotient[k] += v;
        for (const auto& [k, v] : a[i]) out.annihilator[k] += v;
    }
    return out;
}

}  // namespace mdg
