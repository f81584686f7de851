#pragma once

#include <doctest.h>

#include <map>
#include <random>
#include <string>

#include "mdg/io.hpp"
#include "mdg/symdg.hpp"

namespace mdgtest {

using namespace mdg;

inline std::string fixture_path(const std::string& name) { return std::string(MDG_FIXTURE_DIR) + "/" + name; }

// Parsed once per process.
inline const Document& fixture(const std::string& name) {
    static std::map<std::string, Document> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, parse_file(fixture_path(name))).first;
    return it->second;
}

inline Element E(const std::string& s, const FreeComplex& F) { return parse_element(s, F); }
inline Polynomial P(const std::string& s, const Ring& R) { return parse_polynomial(s, R); }

// Evaluation at a point, written out term by term so it shares nothing with the multiplication code.
inline Rational eval(const Polynomial& f, const std::vector<Rational>& pt) {
    Rational s = 0;
    for (const auto& t : f.terms()) {
        Rational v = t.coef;
        for (std::size_t i = 0; i < t.exp.size(); ++i)
            for (int k = 0; k < t.exp[i]; ++k) v *= pt[i];
        s += v;
    }
    return s;
}

// Plain Gaussian elimination, kept separate from the library's echelon code.
inline long brute_rank(std::vector<QVector> m) {
    long r = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < long(m.size()); ++c) {
        std::size_t p = std::size_t(r);
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[std::size_t(r)]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == std::size_t(r) || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[std::size_t(r)][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[std::size_t(r)][k];
        }
        ++r;
    }
    return r;
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, int terms = 3, int maxdeg = 2) {
    std::uniform_int_distribution<int> c(-3, 3), d(0, maxdeg);
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Multidegree m(nvars);
        for (std::size_t i = 0; i < nvars; ++i) m[i] = d(rng);
        ts.push_back({m, Rational(c(rng))});
    }
    return Polynomial::from_terms(nvars, ts);
}

}  // namespace mdgtest

namespace mdgtest {

// Product straight from the stored table: e_j e_i = (-1)^{|i||j|} e_i e_j, unit acts trivially.
inline Element oracle_mul(const MDGAlgebra& A, const Element& u, const Element& v) {
    const FreeComplex& F = A.complex();
    Element out;
    for (const auto& [i, a] : u.entries())
        for (const auto& [j, b] : v.entries()) {
            if (i == 0 || j == 0) {
                out.add_term(i + j, a * b);
                continue;
            }
            int lo = std::min(i, j), hi = std::max(i, j);
            const Element* p = A.table().find(lo, hi);
            if (!p) {
                if (lo == hi && (F.degree(lo) & 1)) continue;
                throw Error("oracle: missing product");
            }
            RF s = a * b;
            if (i > j && (F.degree(i) & 1) && (F.degree(j) & 1)) s = -s;
            out.add(*p, s);
        }
    return out;
}

inline Element oracle_assoc(const MDGAlgebra& A, const Element& a, const Element& b, const Element& c) {
    return oracle_mul(A, oracle_mul(A, a, b), c) - oracle_mul(A, a, oracle_mul(A, b, c));
}

}  // namespace mdgtest
