#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdg/complex.hpp"
#include "mdg/gc.hpp"
#include "mdg/mdg.hpp"

namespace mdg {

// Left S-polynomial m_f f - (c_f / c_g) m_g g with the lead terms cancelling.
GCPolynomial spoly(const GCContext& ctx, const GCPolynomial& f, const GCPolynomial& g);

struct ReductionStep {
    int reducer;          // index into the basis
    GCMonomial cofactor;  // multiplies the reducer on the left
    int sign;             // Koszul sign of cofactor * lead(reducer)
    RF coef;              // f <- f - coef * (cofactor * reducer)
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    GCPolynomial result;
};

enum class ReduceMode { LeadOnly, Full };

std::pair<GCPolynomial, ReductionTrace> normal_form(const GCContext& ctx, const GCPolynomial& f,
                                                    const std::vector<GCPolynomial>& basis,
                                                    ReduceMode mode = ReduceMode::Full);
// Applies the steps to f again; equals the traced result when the trace is honest.
GCPolynomial replay(const GCContext& ctx, const GCPolynomial& f, const std::vector<GCPolynomial>& basis,
                    const ReductionTrace& trace);

enum class Provenance { Input, Derived };

struct GBElement {
    GCPolynomial poly;  // monic
    Provenance origin = Provenance::Input;
    std::string label;  // "f(i)(j)" for inputs, "S(a,b)" for derived
    bool linear() const;  // every term has total degree <= 1
};

struct GBasis {
    GCContext ctx;
    std::vector<GBElement> elements;
    long pairs_considered = 0, pairs_skipped = 0, zero_reductions = 0;
    std::vector<GCPolynomial> polys() const;
    // Elements whose lead monomial has total degree one.
    std::vector<const GBElement*> linear_leads() const;
};

enum class PairOrder { SmallestLcm, Fifo };

struct BuchbergerOptions {
    PairOrder order = PairOrder::SmallestLcm;
    // Only used when every generator square lies in the input, where it is valid.
    bool product_criterion = true;
    bool interreduce = true;
    Exec exec = Exec::Parallel;
    long max_pairs = 2000000;
};

GBasis buchberger(const GCContext& ctx, const std::vector<GBElement>& generators, const BuchbergerOptions& opt = {});
GBasis buchberger(const GCContext& ctx, const std::vector<GCPolynomial>& generators, const BuchbergerOptions& opt = {});

// Every S-polynomial of the basis reduces to zero.
bool is_confluent(const GBasis& G);
// Each generator of one list reduces to zero modulo the other basis.
bool same_ideal(const GBasis& a, const GBasis& b);
// Right multiples g * e_k of the basis elements reduce to zero as well.
bool is_two_sided(const GBasis& G);

// K[e] on the positive basis of A, and its elements for basis indices.
GCContext gc_context_for(const FreeComplex& F);
GCPolynomial element_to_gc(const GCContext& ctx, const Element& x);
Element gc_to_element(const GCContext& ctx, const GCPolynomial& p, const FreeComplex& F);  // total degree <= 1

struct MultiplicatorGenerator {
    int i, j;  // basis indices, i <= j
    GCPolynomial f;
};
// f_ij = e_i e_j - e_i * e_j over the defined pairs with i <= j; squares included.
std::vector<MultiplicatorGenerator> mult_ideal(const MDGAlgebra& A, const GCContext& ctx);

struct AssociativityCertificate {
    bool associative = true;
    GBasis basis;
    std::vector<GCPolynomial> witnesses;   // basis elements with a linear lead monomial
    std::vector<std::pair<int, int>> undefined;  // e_i e_j irreducible for pairs missing from the table
};
AssociativityCertificate associativity_certificate(const MDGAlgebra& A, const BuchbergerOptions& opt = {});

}  // namespace mdg
