#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mdg/complex.hpp"

namespace mdg {

using ComplexPtr = std::shared_ptr<const FreeComplex>;

// R-linear map between free complexes given on basis elements; the unit maps
// to the unit unless set explicitly.
class ChainMap {
public:
    ChainMap() = default;
    ChainMap(std::string name, ComplexPtr src, ComplexPtr dst);

    const std::string& name() const { return name_; }
    const FreeComplex& source() const { return *src_; }
    const FreeComplex& target() const { return *dst_; }
    ComplexPtr source_ptr() const { return src_; }
    ComplexPtr target_ptr() const { return dst_; }

    void set(int i, Element img);
    const Element& image(int i) const { return img_[i]; }
    Element apply(const Element& x) const;
    // d phi = phi d on every basis element.
    Report check() const;
    // Composite other after this.
    ChainMap then(const ChainMap& other, const std::string& name = "") const;

    static ChainMap identity(ComplexPtr F);

private:
    std::string name_;
    ComplexPtr src_, dst_;
    std::vector<Element> img_;
};

// Products e_i * e_j stored for i <= j; the rest follows from graded commutativity.
class MultiplicationTable {
public:
    void set(const FreeComplex& F, int i, int j, Element v);
    bool has(int i, int j) const;
    const Element* find(int i, int j) const;  // i <= j
    const std::map<std::pair<int, int>, Element>& entries() const { return t_; }
    void erase(int i, int j);
    // Odd squares not listed count as zero (strictness); set false to make them undefined.
    bool implicit_odd_squares = true;

private:
    std::map<std::pair<int, int>, Element> t_;
};

using SparseQ = std::vector<std::pair<int, Rational>>;

// Structure constants with monomials divided out; only for multigraded tables.
struct ScalarTable {
    std::size_t n = 0;
    std::vector<std::vector<SparseQ>> prod;
    std::vector<std::vector<char>> defined;
    std::vector<SparseQ> d;
    QVector mul(const QVector& u, const QVector& v) const;
    QVector apply_d(const QVector& u) const;
};

class MDGAlgebra {
public:
    MDGAlgebra() = default;
    MDGAlgebra(std::string name, ComplexPtr F, MultiplicationTable T);

    const std::string& name() const { return name_; }
    const FreeComplex& complex() const { return *F_; }
    ComplexPtr complex_ptr() const { return F_; }
    const MultiplicationTable& table() const { return T_; }

    bool defined(int i, int j) const;
    // Throws UndefinedProduct for products absent from the table.
    Element basis_product(int i, int j) const;
    Element multiply(const Element& u, const Element& v) const;
    Element associator(const Element& a, const Element& b, const Element& c) const;
    Element basis_associator(int i, int j, int k) const;

    bool is_multigraded() const;
    const ScalarTable& scalar() const;

private:
    std::string name_;
    ComplexPtr F_;
    MultiplicationTable T_;
    mutable std::shared_ptr<ScalarTable> scalar_;
};

// Degree of a homogeneous element (throws if mixed); 0 for the zero element.
int element_degree(const FreeComplex& F, const Element& x);
bool is_degree_homogeneous(const FreeComplex& F, const Element& x);

struct AxiomReport {
    bool unital = true, graded_commutative = true, strict = true, leibniz = true, multigraded = true;
    bool associative = true;  // informational
    std::vector<std::string> failures;
    std::string associativity_witness;
    bool ok() const { return unital && graded_commutative && strict && leibniz && multigraded; }
};

AxiomReport check_mdg_axioms(const MDGAlgebra& A, Exec exec = Exec::Parallel);

struct AlternativeReport {
    bool alternative = true;
    std::string witness;
};
AlternativeReport is_alternative(const MDGAlgebra& A, unsigned seed = 1, int random_trials = 200);

// A acting on the complex of X; via pulls the action back along an algebra map A -> X.
class ModuleView {
public:
    ModuleView(const MDGAlgebra& A, const MDGAlgebra& X, const ChainMap* via = nullptr)
        : A_(&A), X_(&X), via_(via) {}
    static ModuleView regular(const MDGAlgebra& A) { return ModuleView(A, A); }

    const MDGAlgebra& algebra() const { return *A_; }
    const FreeComplex& complex() const { return X_->complex(); }
    Element act(const Element& a, const Element& x) const;
    // (a1 a2) x - a1 (a2 x)
    Element associator(const Element& a1, const Element& a2, const Element& x) const;

private:
    const MDGAlgebra* A_;
    const MDGAlgebra* X_;
    const ChainMap* via_;
};

// phi(a x) - a phi(x)
Element multiplicator(const ChainMap& phi, const ModuleView& X, const ModuleView& Y, const Element& a,
                      const Element& x);
// phi([a1,a2,x]) - [a1,a2,phi x]
Element two_multiplicator(const ChainMap& phi, const ModuleView& X, const ModuleView& Y, const Element& a1,
                          const Element& a2, const Element& x);

struct MultiplicativityReport {
    bool multiplicative = true;
    bool two_multiplicative = true;
    std::string witness, witness2;
};
MultiplicativityReport check_multiplicative(const ChainMap& phi, const MDGAlgebra& A, const MDGAlgebra& B);

// Scalar-coordinate generator of the associator submodule.
struct SubmoduleGenerator {
    QVector v;
    Multidegree m;
    int degree;
    std::string label;
};

class AssociatorSubmodule {
public:
    AssociatorSubmodule() = default;
    explicit AssociatorSubmodule(const MDGAlgebra& A) : A_(&A) {}

    const MDGAlgebra& algebra() const { return *A_; }
    const std::vector<SubmoduleGenerator>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    // Adds v if it is not already in the piece at m; returns true if added.
    bool add(const QVector& v, const Multidegree& m, int degree, const std::string& label);
    bool contains(const QVector& v, const Multidegree& m, int degree) const;
    bool contains_element(const Element& x) const;
    PieceSpaces piece(const Multidegree& b) const;
    PieceFn piece_fn() const;
    std::vector<Multidegree> box() const;

    std::map<int, long> dims(Exec exec = Exec::Parallel) const;
    std::optional<int> inf, sup;  // degrees where the submodule is nonzero
    bool closure_iterated = false;  // closure checks had to add generators
    int closure_rounds = 0;

private:
    const MDGAlgebra* A_ = nullptr;
    std::vector<SubmoduleGenerator> gens_;
};

AssociatorSubmodule associator_submodule(const MDGAlgebra& A, Exec exec = Exec::Parallel);

HomologyResult associator_homology(const AssociatorSubmodule& V, Exec exec = Exec::Parallel,
                                   const std::vector<Multidegree>* box = nullptr);
// Homology of F / <F> over the box.
HomologyResult maximal_associative_quotient_dims(const AssociatorSubmodule& V, Exec exec = Exec::Parallel);

// Multiplication by the monomial r kills associator homology.
bool annihilates_associator_homology(const AssociatorSubmodule& V, const Multidegree& r, Exec exec = Exec::Parallel);

struct ShiftedLengths {
    std::map<int, long> quotient;    // lengths of H_i / r H_i
    std::map<int, long> annihilator; // lengths of 0 :_{H_i} r
};
// Lengths over the box for a list of monomials r_1..r_m.
ShiftedLengths shifted_lengths(const AssociatorSubmodule& V, const std::vector<Multidegree>& rs,
                               Exec exec = Exec::Parallel);

// Graded map F (x) F -> F of degree one given on basis pairs i <= j; zero on
// pairs with the unit; h(b,a) = (-1)^{|a||b|} h(a,b).
class Homotopy {
public:
    Homotopy() = default;
    explicit Homotopy(ComplexPtr F) : F_(std::move(F)) {}
    void set(int i, int j, Element v);
    Element basis_value(int i, int j) const;
    Element apply(const Element& a, const Element& b) const;
    const std::map<std::pair<int, int>, Element>& entries() const { return t_; }
    const FreeComplex& complex() const { return *F_; }

private:
    ComplexPtr F_;
    std::map<std::pair<int, int>, Element> t_;
};

struct PerturbResult {
    MDGAlgebra algebra;
    AxiomReport axioms;
    bool identity_holds = true;
    std::string identity_witness;
};

// mu_h = mu + dh + hd; also checks [.]_{mu_h} = [.]_mu + dH + Hd on all basis triples.
PerturbResult perturb_multiplication(const MDGAlgebra& A, const Homotopy& h, Exec exec = Exec::Parallel);
// H(a,b,c) from the homotopy identity.
Element homotopy_H(const MDGAlgebra& A, const MDGAlgebra& Ah, const Homotopy& h, const Element& a, const Element& b,
                   const Element& c);
// (dH + Hd)(a,b,c)
Element homotopy_boundary(const MDGAlgebra& A, const MDGAlgebra& Ah, const Homotopy& h, const Element& a,
                          const Element& b, const Element& c);

// Random multidegree-respecting homotopy with scalar entries in {-2..2}.
Homotopy random_homotopy(ComplexPtr F, std::mt19937_64& rng, double density = 0.5);

// Random homogeneous element of degree k with coefficients from {0, +-1, +-x_i}.
Element random_homogeneous(const FreeComplex& F, int k, std::mt19937_64& rng, int max_terms = 3);

// Reduces every coefficient modulo the monomial ideal.
Element reduce_mod(const Element& x, const std::vector<Multidegree>& ideal);

}  // namespace mdg
