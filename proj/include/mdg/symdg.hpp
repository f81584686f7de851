#pragma once

#include <map>
#include <string>
#include <vector>

#include "mdg/groebner.hpp"
#include "mdg/mdg.hpp"

namespace mdg {

// Nondecreasing positive basis indices; odd ones at most once.
using SymMonomial = std::vector<int>;
using SymElement = std::map<SymMonomial, Polynomial>;

// S_R(A) on the positive part of a complex centered at R, up to total degree N.
class SymDGAlgebra {
public:
    SymDGAlgebra(ComplexPtr A, int N);

    const FreeComplex& base() const { return *A_; }
    int truncation() const { return N_; }
    std::size_t nvars() const { return A_->ring().nvars(); }

    int hom_degree(const SymMonomial& m) const;
    // Monomials of S_i^m, in index order.
    const std::vector<SymMonomial>& component(int i, int m) const;
    std::map<std::pair<int, int>, long> dims() const;  // (i, m) -> rank
    const std::vector<SymMonomial>& monomials() const { return all_; }

    // Product of monomials with the Koszul sign; 0 when an odd factor repeats.
    std::pair<int, SymMonomial> multiply(const SymMonomial& a, const SymMonomial& b) const;
    SymElement multiply(const SymElement& a, const SymElement& b) const;

    // d = eth + partial: eth keeps the total degree, partial lowers it by one.
    SymElement eth(const SymMonomial& m) const;
    SymElement partial(const SymMonomial& m) const;
    SymElement d(const SymMonomial& m) const;
    SymElement eth(const SymElement& x) const;
    SymElement partial(const SymElement& x) const;
    SymElement d(const SymElement& x) const;

    std::string to_string(const SymElement& x) const;
    std::string monomial_string(const SymMonomial& m) const;
    SymElement generator(int i) const;  // e_i in S^1, or 1 for i = 0

private:
    ComplexPtr A_;
    int N_;
    std::vector<SymMonomial> all_;
    std::map<std::pair<int, int>, std::vector<SymMonomial>> comp_;
    // Terms of d(e_i): (index, coefficient), index 0 for the constant part.
    std::vector<std::vector<std::pair<int, Polynomial>>> dgen_;
};

void sym_add(SymElement& x, const SymMonomial& m, const Polynomial& c);
void sym_add(SymElement& x, const SymElement& y, const Polynomial& c = Polynomial(1L));
bool sym_is_zero(const SymElement& x);

struct SymCheckReport {
    bool d_squared = true, eth_squared = true, partial_squared = true, anticommute = true;
    long monomials = 0;
    std::string witness;
    bool ok() const { return d_squared && eth_squared && partial_squared && anticommute; }
};
// d^2 = 0 and the eth / partial relations on every monomial of the truncation.
SymCheckReport check_sym(const SymDGAlgebra& S, Exec exec = Exec::Parallel);

GCPolynomial sym_to_gc(const GCContext& ctx, const SymDGAlgebra& S, const SymElement& x);

struct PresentationReport {
    bool ok = true;
    bool witnesses_linear = true;          // linear-lead basis elements have no higher terms
    std::map<int, long> ideal_dims;        // s^{<=1} per homological degree
    std::map<int, long> submodule_dims;    // <A> (x) K per homological degree
    std::map<int, long> joint_dims;        // both together
    std::string diff;
};
// The linear part of the multiplicator ideal against the associator submodule, over K.
PresentationReport presentation_check(const MDGAlgebra& A, const AssociatorSubmodule& V,
                                      const AssociativityCertificate& cert);
PresentationReport presentation_check(const MDGAlgebra& A);

// Every monomial of S up to total degree N reduces to total degree <= 1 modulo the ideal.
bool quotient_is_generated_by_A(const MDGAlgebra& A, const AssociativityCertificate& cert, int N);

// Product a_1 * ... * a_m evaluated in an associative A (left to right).
Element evaluate_in(const MDGAlgebra& A, const SymDGAlgebra& S, const SymMonomial& m);

struct SplitReport {
    bool split = true;        // rho theta = id and im theta inside the ideal
    long checked = 0;
    long from_normal_form = 0;  // products missing from the table, read off the quotient
    std::string witness;
    std::vector<std::pair<SymMonomial, GCPolynomial>> theta;  // values on the truncation
};
// theta(a1..am) = a1..am - (a1 * ... * am); throws MathError if A is not associative.
// Products absent from a partial table are taken from the normal form.
SplitReport split_witness(const MDGAlgebra& A, int N);

// Words over the basis indices of a complex (unit included), with Koszul signs.
using TensorWord = std::vector<int>;
using Tensor = std::map<TensorWord, Polynomial>;

void tensor_add(Tensor& t, const TensorWord& w, const Polynomial& c);
bool tensor_is_zero(const Tensor& t);
Tensor tensor_d(const FreeComplex& F, const Tensor& t);
// sigma acting on positions: the factor in slot i moves to slot perm[i].
Tensor permute(const FreeComplex& F, const Tensor& t, const std::vector<int>& perm);
Tensor symmetrize(const FreeComplex& F, const Tensor& t);  // (1/n!) sum over sigma
bool is_symmetric(const FreeComplex& F, const Tensor& t);

// Between S^{<=n} and symmetric tensors of length n over the base (unit included).
Tensor homogenize(const SymDGAlgebra& S, const SymElement& f, int n);
SymElement dehomogenize(const SymDGAlgebra& S, const Tensor& t);

// Degree-one map X -> Y on basis elements (unit included), with d h + h d = phi - psi.
struct LinearMap {
    ComplexPtr src, dst;
    std::vector<Element> img;
    int degree = 0;
    Element apply(const Element& x) const;
};
LinearMap linear_map(const ChainMap& f);

// f_1 (x) ... (x) f_n applied to a word, Koszul signs from the degrees of the maps.
Tensor apply_tensor_maps(const std::vector<const LinearMap*>& fs, const TensorWord& w);
Tensor apply_tensor_maps(const std::vector<const LinearMap*>& fs, const Tensor& t);

// h^n = (1/n!) sum_sigma sigma (sum_k phi^{n-k-1} (x) h (x) psi^k) sigma^{-1}.
Tensor sym_homotopy_apply(const LinearMap& phi, const LinearMap& psi, const LinearMap& h, int n, const TensorWord& w);

struct SymHomotopyReport {
    bool identity = true;      // d h^n + h^n d = phi^n - psi^n on every word
    bool restricts = true;     // h^n of a symmetric tensor is symmetric
    long words = 0;
    std::string witness;
};
SymHomotopyReport check_sym_homotopy(const LinearMap& phi, const LinearMap& psi, const LinearMap& h, int n);

}  // namespace mdg
