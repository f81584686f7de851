#pragma once

#include <map>
#include <string>
#include <vector>

#include "mdg/mdg.hpp"

namespace mdg {

struct MonomialIdeal {
    Ring ring;
    std::vector<Multidegree> gens;
    MonomialIdeal() = default;
    MonomialIdeal(Ring r, std::vector<Multidegree> g);  // rejects zero and repeated generators
};

// Taylor resolution of R/I with the Taylor multiplication.
MDGAlgebra taylor_resolution(const MonomialIdeal& I);
// Name of the Taylor basis element for a subset of {0..g-1}.
std::string taylor_name(const std::vector<int>& subset, std::size_t g);

// mu(a,b) = pi(iota(a) * iota(b)) on the source of iota. Needs pi iota = id.
MDGAlgebra transport_multiplication(const MDGAlgebra& T, const ChainMap& pi, const ChainMap& iota,
                                    const std::string& name = "");

// Same algebra over a ring with extra variables appended.
MDGAlgebra extend_scalars(const MDGAlgebra& A, const Ring& R);
Element extend_element(const Element& x, std::size_t nvars);

// F + eF, iterated over r_1..r_m; basis e_S a with S a set of exterior generators.
struct ConeExtension {
    MDGAlgebra base;  // over the cone ring
    std::vector<Polynomial> rs;
    MDGAlgebra algebra;
    std::map<std::pair<unsigned, int>, int> index;  // (mask of S, base index) -> cone index
    int embed(unsigned mask, int i) const { return index.at({mask, i}); }
};

// r may mention variables missing from the ring of F; they are appended.
ConeExtension mapping_cone_extension(const MDGAlgebra& F, const std::vector<Polynomial>& rs, const Ring& ring);

// e[a,b,c] = [ea,b,c] = (-1)^|a| [a,eb,c] = (-1)^{|a|+|b|} [a,b,ec] on base triples.
Report check_nucleus(const ConeExtension& C, Exec exec = Exec::Parallel);

struct ConeAssociatorReport {
    bool f_part_equals_sum = true;    // <F+eF>_F = <F> + e<F>
    bool sum_equals_full = true;      // <F> + e<F> = <F+eF>
    std::map<int, long> dims_full, dims_base, dims_shifted;  // shifted: e<F> by cone degree
    std::string witness;
};
ConeAssociatorReport compare_cone_associators(const ConeExtension& C, Exec exec = Exec::Parallel);

struct ConeHomologyReport {
    HomologyResult base, cone;
    ShiftedLengths lengths;              // of H<F> for the single r
    std::map<int, long> predicted;       // l(H_i/rH_i) + l(0 :_{H_{i-1}} r)
    bool lengths_match = true;
    bool inf_matches = true;             // inf<F+eF> = inf<F>
    bool sup_in_range = true;            // sup<F+eF> in {sup, sup + 1}
    bool r_regular_on_top = false;       // r is H_sup<F>-regular
    bool sup_rule = true;                // sup<F+eF> = sup if regular, sup + 1 otherwise
};
// Needs a single monomial r.
ConeHomologyReport compare_cone_homology(const ConeExtension& C, Exec exec = Exec::Parallel);

}  // namespace mdg
