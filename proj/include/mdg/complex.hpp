#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdg/linalg.hpp"
#include "mdg/ring.hpp"

namespace mdg {

enum class Exec { Serial, Parallel };

// Pass/fail summary shared by the structural checks.
struct Report {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

struct BasisElement {
    std::string name;
    int degree = 0;
    Multidegree mdeg;
};

class FreeComplex;

// Sparse combination of basis elements (index 0 is the unit of degree 0).
class Element {
public:
    using Entry = std::pair<int, RF>;

    Element() = default;
    static Element basis(int i, RF c = RF(1L));

    const std::vector<Entry>& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }
    std::size_t size() const { return e_.size(); }
    RF coeff(int i) const;

    Element& add(const Element& o, const RF& c = RF(1L));
    Element& add_term(int i, const RF& c);
    Element scaled(const RF& c) const;
    Element operator-() const { return scaled(RF(-1L)); }
    friend Element operator+(Element a, const Element& b) { return a.add(b); }
    friend Element operator-(Element a, const Element& b) { return a.add(b, RF(-1L)); }
    bool operator==(const Element& o) const { return e_ == o.e_; }
    bool operator!=(const Element& o) const { return !(e_ == o.e_); }

private:
    std::vector<Entry> e_;  // sorted by index, nonzero coefficients
};

// Free complex centered at R.
class FreeComplex {
public:
    FreeComplex() = default;
    FreeComplex(std::string name, Ring ring);

    const std::string& name() const { return name_; }
    const Ring& ring() const { return ring_; }
    void set_ring(Ring r);
    std::size_t size() const { return basis_.size(); }  // including the unit
    const BasisElement& basis(int i) const { return basis_[i]; }
    int degree(int i) const { return basis_[i].degree; }
    const Multidegree& mdeg(int i) const { return basis_[i].mdeg; }
    int index_of(const std::string& name) const;
    int max_degree() const;
    std::vector<int> indices_in_degree(int k) const;

    // Appends a basis element; degrees must be nondecreasing.
    int add_basis(const std::string& name, int degree, std::optional<Multidegree> mdeg = std::nullopt);
    void set_d(int i, Element v);
    const Element& d(int i) const { return d_[i]; }
    bool has_mdeg_labels() const { return labeled_; }

    Element apply_d(const Element& x) const;

    // True when every d(e_sigma) is multihomogeneous of degree mdeg(sigma).
    bool is_multigraded() const;
    // Multidegree of each homogeneous component of x.
    std::map<Multidegree, Element> split_multidegrees(const Element& x) const;
    std::optional<Multidegree> homogeneous_mdeg(const Element& x) const;

    // Differential with the monomials divided out (see scalar_vector).
    const std::vector<std::vector<std::pair<int, Rational>>>& scalar_d() const;
    Multidegree lcm_all() const;

    std::string element_string(const Element& x) const;

private:
    std::string name_;
    Ring ring_;
    std::vector<BasisElement> basis_;
    std::vector<Element> d_;
    bool labeled_ = true;
    mutable std::vector<std::vector<std::pair<int, Rational>>> scalar_d_;
    mutable bool scalar_ready_ = false;
};

// A b-homogeneous element sum_s c_s x^(b - mdeg s) e_s corresponds to the
// scalar vector (c_s) over all basis indices. Throws if x is not b-homogeneous.
QVector scalar_vector(const FreeComplex& F, const Element& x, const Multidegree& b);
Element from_scalar_vector(const FreeComplex& F, const QVector& v, const Multidegree& b);

Report check_complex(const FreeComplex& F);

struct GradedPiece {
    Multidegree b;
    std::map<int, std::vector<int>> basis;  // degree -> contributing indices
    // matrices[k] maps degree k coordinates to degree k-1 coordinates, row per source.
    std::map<int, std::vector<QVector>> matrices;
};

GradedPiece graded_piece(const FreeComplex& F, const Multidegree& b);

// All divisors of bound, in grlex order.
std::vector<Multidegree> divisors_of(const Multidegree& bound);

struct HomologyResult {
    std::map<int, long> total;
    std::map<Multidegree, std::map<int, long>> per_mdeg;  // nonzero entries only
    std::optional<int> inf, sup;
    long at(int k) const {
        auto it = total.find(k);
        return it == total.end() ? 0 : it->second;
    }
};

// Subspaces per homological degree inside the scalar coordinates of F.
using PieceSpaces = std::map<int, EchelonBasis>;
using PieceFn = std::function<PieceSpaces(const Multidegree&)>;

// Homology of the subcomplex given per multidegree by pieces.
HomologyResult subcomplex_homology(const FreeComplex& F, const std::vector<Multidegree>& box, const PieceFn& pieces,
                                   Exec exec = Exec::Parallel);
// Homology of F / V with V given by pieces.
HomologyResult quotient_homology(const FreeComplex& F, const std::vector<Multidegree>& box, const PieceFn& pieces,
                                 Exec exec = Exec::Parallel);
// Homology of F itself over the divisors of its lcm.
HomologyResult homology_dims(const FreeComplex& F, Exec exec = Exec::Parallel);
// Dimensions of V per degree summed over the box.
std::map<int, long> piece_dims(const std::vector<Multidegree>& box, const PieceFn& pieces, Exec exec = Exec::Parallel);

// Image under d of the subspace, as a subspace of degree k-1 coordinates.
EchelonBasis image_under_d(const FreeComplex& F, const EchelonBasis& V);
// Cycles inside the subspace V.
EchelonBasis cycles_in(const FreeComplex& F, const EchelonBasis& V);
QVector apply_scalar_d(const FreeComplex& F, const QVector& v);
// Full coordinate space of F_k at b.
EchelonBasis full_piece(const FreeComplex& F, int k, const Multidegree& b);

// Runs f(i) for i in [0, n), in parallel when requested and available.
void parallel_for(std::size_t n, Exec exec, const std::function<void(std::size_t)>& f);
int max_threads();

// A v B: unit shared, positive parts side by side.
FreeComplex wedge_sum(const FreeComplex& A, const FreeComplex& B, const std::string& name = "wedge");

}  // namespace mdg
