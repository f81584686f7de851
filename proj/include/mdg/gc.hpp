#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdg/ring.hpp"

namespace mdg {

struct GCGenerator {
    std::string name;
    int degree = 1;
    std::optional<Multidegree> mdeg;
};

// Generators of the free non-strict graded-commutative algebra K[e_1..e_n].
// Indices must have nondecreasing homological degree.
class GCContext {
public:
    GCContext() = default;
    GCContext(Ring ring, std::vector<GCGenerator> gens);

    const Ring& ring() const { return ring_; }
    std::size_t size() const { return gens_.size(); }
    const GCGenerator& gen(std::size_t i) const { return gens_[i]; }
    int degree(std::size_t i) const { return gens_[i].degree; }
    bool odd(std::size_t i) const { return gens_[i].degree & 1; }
    int index_of(const std::string& name) const;

private:
    Ring ring_;
    std::vector<GCGenerator> gens_;
};

using GCMonomial = std::vector<int32_t>;

int gc_total_degree(const GCMonomial& m);
int gc_hom_degree(const GCContext& ctx, const GCMonomial& m);
bool gc_divides(const GCMonomial& a, const GCMonomial& b);
GCMonomial gc_lcm(const GCMonomial& a, const GCMonomial& b);
GCMonomial gc_quotient(const GCMonomial& b, const GCMonomial& a);  // b / a, needs a | b
bool gc_disjoint(const GCMonomial& a, const GCMonomial& b);

// Sign of the product e^a * e^b when rewritten as e^(a+b).
int gc_product_sign(const GCContext& ctx, const GCMonomial& a, const GCMonomial& b);

// Sorts a word of generator indices; odd squares do not vanish.
std::pair<int, GCMonomial> normalize_word(const GCContext& ctx, const std::vector<int>& word);

// Homological degree first, then lexicographic with larger leading exponent winning.
int gc_compare(const GCContext& ctx, const GCMonomial& a, const GCMonomial& b);

struct GCTerm {
    GCMonomial mono;
    RF coef;
};

// Terms kept in descending order under gc_compare, no zero coefficients.
class GCPolynomial {
public:
    GCPolynomial() = default;
    static GCPolynomial monomial(const GCContext& ctx, GCMonomial m, RF c = RF(1L));
    static GCPolynomial constant(const GCContext& ctx, RF c);
    static GCPolynomial generator(const GCContext& ctx, std::size_t i);
    static GCPolynomial from_terms(const GCContext& ctx, std::vector<GCTerm> terms);

    const std::vector<GCTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const GCTerm& lead() const;
    int max_total_degree() const;
    bool is_hom_homogeneous(const GCContext& ctx) const;

    GCPolynomial add(const GCContext& ctx, const GCPolynomial& g, const RF& c = RF(1L)) const;
    GCPolynomial scaled(const RF& c) const;
    GCPolynomial negated() const;
    // m * f with m on the left, including the Koszul sign.
    GCPolynomial left_mul_monomial(const GCContext& ctx, const GCMonomial& m, const RF& c) const;
    GCPolynomial monic() const;

    bool operator==(const GCPolynomial& g) const;
    bool operator!=(const GCPolynomial& g) const { return !(*this == g); }

    std::string to_string(const GCContext& ctx) const;

private:
    std::vector<GCTerm> terms_;
};

GCPolynomial gc_mul(const GCContext& ctx, const GCPolynomial& f, const GCPolynomial& g);

struct GCLead {
    GCTerm term;
    GCMonomial mono;
    RF coef;
};
GCLead lead(const GCContext& ctx, const GCPolynomial& f);

std::string gc_monomial_string(const GCContext& ctx, const GCMonomial& m);

}  // namespace mdg
