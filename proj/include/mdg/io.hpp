#pragma once

#include <map>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mdg/constructions.hpp"
#include "mdg/gc.hpp"
#include "mdg/groebner.hpp"
#include "mdg/mdg.hpp"

namespace mdg {

// Chain homotopy between chain maps phi, psi: X -> Y, of degree +1.
struct ChainHomotopy {
    std::string phi, psi;
    std::vector<Element> img;  // per basis element of X
};

struct MultBlock {
    std::string on;
    bool squares_zero = false;  // every square e*e set to zero unless listed
    std::vector<std::pair<int, int>> explicit_entries;  // as written, for printing
};

struct Document {
    std::optional<Ring> ring;
    // Declaration order as (kind, name) for printing.
    std::vector<std::pair<std::string, std::string>> order;
    std::map<std::string, std::shared_ptr<FreeComplex>> complexes;
    std::map<std::string, std::vector<Multidegree>> taylor_gens;  // complexes built by a taylor statement
    std::map<std::string, MDGAlgebra> algebras;
    std::map<std::string, MultBlock> mult_blocks;
    std::map<std::string, ChainMap> maps;
    std::map<std::string, Homotopy> homotopies;
    std::map<std::string, std::string> homotopy_on;
    std::map<std::string, ChainHomotopy> chain_homotopies;
    std::map<std::string, std::string> meta;

    bool empty() const { return order.empty() && !ring; }
    const FreeComplex& complex(const std::string& name) const;
    // First complex / algebra in declaration order (meta algebra overrides), or the one with this name.
    std::string default_complex() const;
    std::string default_algebra() const;
    const MDGAlgebra& algebra(const std::string& name = "") const;
};

Document parse_document(const std::string& text);
Document parse_file(const std::string& path);
std::string print_document(const Document& doc);

// Expressions in the document grammar, evaluated in a complex or in K[e].
Element parse_element(const std::string& text, const FreeComplex& F);
Polynomial parse_polynomial(const std::string& text, const Ring& R);
GCPolynomial parse_gc(const std::string& text, const GCContext& ctx);
// "x^2,x*y" or compact "x2,y,z,w" (single-letter variables only).
std::vector<Multidegree> parse_monomial_list(const std::string& text, const Ring& R);

// One mdg subcommand; args exclude the program name. Returns 0 on success, 1 for a
// mathematical negative (non-associative, failed check), 2 for bad input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Script for the external system that sets up K[e] and the multiplicator ideal of A. Export only.
std::string singular_script(const MDGAlgebra& A, const std::string& ring_name = "A");

}  // namespace mdg
