#include <CLI11.hpp>
#include <json.hpp>
#include <random>
#include <sstream>

#include "mdg/io.hpp"
#include "mdg/symdg.hpp"

namespace mdg {

namespace {

using json = nlohmann::ordered_json;

const char* kGrammar = R"(mdg document grammar
  ring x,y,z;
  complex F {
    basis 1: e1 mdeg(2,0,0), e2 mdeg(1,1,0);   # nondecreasing degrees; mdeg optional
    basis 2: e12 mdeg(2,1,0);
    d e1 = x^2;  d e12 = x*e2 - y*e1;
  }
  taylor T (x^2, x*y);                         # Taylor resolution with its product
  mult mu on F { squares = 0; e1*e2 = y*e12; }  # i <= j in declaration order
  map pi: T -> F { e1 = e1; e12 = e12; }        # unit maps to the unit unless given
  homotopy h on F { e1*e2 = ...; }              # degree-one map on pairs
  homotopy H: phi ~ psi { e1 = e12; }           # dH + Hd = phi - psi
  meta key = "value";                       # cone_r, algebra
  # comments run to the end of the line

exit codes: 0 success, 1 mathematical negative, 2 input error
)";

// Mathematical negative: the command ran and the answer is "no".
constexpr int kNegative = 1;
constexpr int kInput = 2;

struct Options {
    std::string file, algebra, triple, expr, ideal, modulus, rs, homotopy, pi, iota, ring;
    bool json = false, matrices = false, split = false, presentation = false;
    unsigned long seed = 1;
    int truncate = 4;
};

struct Out {
    json j = json::object();
    std::ostringstream text;
    int code = 0;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

json dims_json(const std::map<int, long>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

std::string dims_text(const std::map<int, long>& m) {
    if (m.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : m) s += (s.empty() ? "" : ", ") + std::to_string(k) + ": " + std::to_string(v);
    return s;
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }
json opt_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

int basis_index(const FreeComplex& F, const std::string& name) {
    if (name == "1") return 0;
    int i = F.index_of(name);
    if (i < 0) throw Error("unknown basis element " + name);
    return i;
}

void cmd_check(const Document& D, const Options& o, Out& r) {
    bool all = true;
    json items = json::array();
    auto line = [&](const std::string& kind, const std::string& name, bool ok, const std::vector<std::string>& why) {
        all = all && ok;
        r.text << kind << " " << name << ": " << (ok ? "ok" : "FAIL") << "\n";
        for (const auto& w : why) r.text << "  " << w << "\n";
        items.push_back({{"kind", kind}, {"name", name}, {"ok", ok}, {"failures", why}});
    };
    for (const auto& [kind, name] : D.order) {
        if (kind == "complex" || kind == "taylor") {
            Report rep = check_complex(*D.complexes.at(name));
            line("complex", name, rep.ok, rep.failures);
        }
        if (kind == "mult" || kind == "taylor") {
            const MDGAlgebra& A = D.algebras.at(name);
            AxiomReport rep = check_mdg_axioms(A);
            line("mult", name, rep.ok(), rep.failures);
            r.text << "  associative on basis triples: " << (rep.associative ? "yes" : "no") << "\n";
        }
        if (kind == "map") {
            Report rep = D.maps.at(name).check();
            line("map", name, rep.ok, rep.failures);
        }
        if (kind == "homotopy") {
            const Homotopy& h = D.homotopies.at(name);
            // perturb against the first multiplication on the same complex
            for (const auto& [k2, n2] : D.order) {
                if ((k2 == "mult" || k2 == "taylor") && D.algebras.at(n2).complex().name() == h.complex().name()) {
                    PerturbResult p = perturb_multiplication(D.algebras.at(n2), h);
                    std::vector<std::string> why = p.axioms.failures;
                    if (!p.identity_holds) why.push_back("homotopy identity fails at " + p.identity_witness);
                    line("homotopy", name, p.axioms.ok() && p.identity_holds, why);
                    break;
                }
            }
        }
        if (kind == "chainhomotopy") {
            const ChainHomotopy& H = D.chain_homotopies.at(name);
            const ChainMap &phi = D.maps.at(H.phi), &psi = D.maps.at(H.psi);
            const FreeComplex &X = phi.source(), &Y = phi.target();
            std::vector<std::string> why;
            for (std::size_t i = 0; i < X.size(); ++i) {
                Element lhs = Y.apply_d(H.img[i]);
                Element dx = X.d(int(i));
                for (const auto& [k, c] : dx.entries()) lhs.add(H.img[std::size_t(k)], c);
                if (lhs != phi.image(int(i)) - psi.image(int(i)))
                    why.push_back("dH + Hd != phi - psi at " + (i ? X.basis(int(i)).name : std::string("1")));
            }
            line("homotopy", name, why.empty(), why);
        }
    }
    r.j["items"] = items;
    r.j["ok"] = all;
    r.code = all ? 0 : kNegative;
}

void cmd_assoc(const Document& D, const Options& o, Out& r) {
    const MDGAlgebra& A = D.algebra(o.algebra);
    const FreeComplex& F = A.complex();
    if (!o.triple.empty()) {
        auto names = split_list(o.triple);
        if (names.size() != 3) throw Error("--triple needs three basis names");
        Element v = A.basis_associator(basis_index(F, names[0]), basis_index(F, names[1]), basis_index(F, names[2]));
        std::string s = F.element_string(v);
        r.text << s << "\n";
        r.j["triple"] = names;
        r.j["associator"] = s;
        r.code = v.is_zero() ? 0 : kNegative;
        return;
    }
    long nonzero = 0, total = 0;
    std::string first;
    int n = int(F.size());
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k < n; ++k) {
                if (F.degree(i) + F.degree(j) + F.degree(k) > F.max_degree()) continue;
                ++total;
                Element v = A.basis_associator(i, j, k);
                if (v.is_zero()) continue;
                if (!nonzero++)
                    first = "[" + F.basis(i).name + "," + F.basis(j).name + "," + F.basis(k).name + "] = " +
                            F.element_string(v);
            }
    r.text << (nonzero ? "not associative" : "associative") << " (" << nonzero << " of " << total
           << " basis triples nonzero)\n";
    if (nonzero) r.text << "witness " << first << "\n";
    r.j["associative"] = nonzero == 0;
    r.j["triples"] = total;
    r.j["nonzero"] = nonzero;
    if (nonzero) r.j["witness"] = first;
    r.code = nonzero ? kNegative : 0;
}

void cmd_alt(const Document& D, const Options& o, Out& r) {
    AlternativeReport rep = is_alternative(D.algebra(o.algebra), unsigned(o.seed));
    r.text << (rep.alternative ? "alternative" : "not alternative") << "\n";
    if (!rep.alternative) r.text << "witness " << rep.witness << "\n";
    r.j["alternative"] = rep.alternative;
    r.j["witness"] = rep.witness;
    r.code = rep.alternative ? 0 : kNegative;
}

void cmd_submodule(const Document& D, const Options& o, Out& r) {
    AssociatorSubmodule V = associator_submodule(D.algebra(o.algebra));
    auto dims = V.dims();
    r.text << "generators " << V.generators().size() << "\n";
    r.text << "dims " << dims_text(dims) << "\n";
    r.text << "inf " << opt_int(V.inf) << ", sup " << opt_int(V.sup) << "\n";
    r.j["generators"] = V.generators().size();
    r.j["dims"] = dims_json(dims);
    r.j["inf"] = opt_json(V.inf);
    r.j["sup"] = opt_json(V.sup);
    r.code = 0;
}

void cmd_homology(const Document& D, const Options& o, Out& r) {
    const MDGAlgebra& A = D.algebra(o.algebra);
    AssociatorSubmodule V = associator_submodule(A);
    HomologyResult H = associator_homology(V);
    r.text << "H<" << A.name() << "> " << dims_text(H.total) << "\n";
    r.j["homology"] = dims_json(H.total);
    r.code = 0;
    if (!o.ideal.empty()) {
        json ann = json::object();
        for (const auto& m : parse_monomial_list(o.ideal, A.complex().ring())) {
            bool kills = annihilates_associator_homology(V, m);
            std::string s = A.complex().ring().monomial_string(m);
            r.text << s << (kills ? " annihilates" : " does not annihilate") << " the associator homology\n";
            ann[s] = kills;
            if (!kills) r.code = kNegative;
        }
        r.j["annihilates"] = ann;
    }
}

void cmd_quotient(const Document& D, const Options& o, Out& r) {
    AssociatorSubmodule V = associator_submodule(D.algebra(o.algebra));
    HomologyResult Q = maximal_associative_quotient_dims(V);
    HomologyResult H = associator_homology(V);
    bool shift = true;
    for (const auto& [k, v] : Q.total)
        if (k >= 2 && v != H.at(k - 1)) shift = false;
    for (const auto& [k, v] : H.total)
        if (v && Q.at(k + 1) != v) shift = false;
    r.text << "H(F/<F>) " << dims_text(Q.total) << "\n";
    r.text << "H_i(F/<F>) = H_(i-1)<F> for i >= 2: " << (shift ? "yes" : "no") << "\n";
    r.j["quotient"] = dims_json(Q.total);
    r.j["shift_matches"] = shift;
    r.code = shift ? 0 : kNegative;
}

void cmd_gb(const Document& D, const Options& o, Out& r) {
    const MDGAlgebra& A = D.algebra(o.algebra);
    AssociativityCertificate C = associativity_certificate(A);
    const GCContext& ctx = C.basis.ctx;
    r.text << "basis " << C.basis.elements.size() << " elements, " << C.basis.pairs_considered << " pairs, "
           << C.basis.pairs_skipped << " skipped by the product criterion\n";
    json basis = json::array();
    for (std::size_t i = 0; i < C.basis.elements.size(); ++i) {
        const GBElement& g = C.basis.elements[i];
        std::string s = g.poly.to_string(ctx);
        r.text << "_[" << i + 1 << "]=" << s << "  # " << g.label << "\n";
        basis.push_back({{"poly", s}, {"label", g.label}});
    }
    json und = json::array();
    for (auto [i, j] : C.undefined) {
        std::string s = A.complex().basis(i).name + "*" + A.complex().basis(j).name;
        r.text << "undefined " << s << "\n";
        und.push_back(s);
    }
    json wit = json::array();
    for (const auto& w : C.witnesses) {
        r.text << "witness " << w.to_string(ctx) << "\n";
        wit.push_back(w.to_string(ctx));
    }
    r.text << (C.associative ? "associative" : "not associative") << "\n";
    r.j["basis"] = basis;
    r.j["undefined"] = und;
    r.j["witnesses"] = wit;
    r.j["associative"] = C.associative;
    r.code = C.associative ? 0 : kNegative;
}

void cmd_reduce(const Document& D, const Options& o, Out& r) {
    if (o.expr.empty()) throw Error("reduce needs --expr");
    const MDGAlgebra& A = D.algebra(o.algebra);
    AssociativityCertificate C = associativity_certificate(A);
    const GCContext& ctx = C.basis.ctx;
    GCPolynomial f = parse_gc(o.expr, ctx);
    auto [nf, trace] = normal_form(ctx, f, C.basis.polys());
    std::string s = nf.to_string(ctx);
    r.text << s << "\n";
    r.j["expr"] = o.expr;
    r.j["normal_form"] = s;
    r.j["steps"] = trace.steps.size();
    r.code = 0;
}

void cmd_taylor(const std::string& gens, const Options& o, Out& r) {
    std::vector<std::string> names;
    if (!o.ring.empty()) {
        names = split_list(o.ring);
    } else {
        for (char c : gens)
            if (std::isalpha(static_cast<unsigned char>(c)) && std::find(names.begin(), names.end(), std::string(1, c)) == names.end())
                names.push_back(std::string(1, c));
        std::sort(names.begin(), names.end());
    }
    std::string ring = "ring ";
    for (std::size_t i = 0; i < names.size(); ++i) ring += (i ? "," : "") + names[i];
    Ring R(names);
    auto ms = parse_monomial_list(gens, R);
    std::string list;
    for (std::size_t i = 0; i < ms.size(); ++i) list += (i ? ", " : "") + R.monomial_string(ms[i]);
    Document D = parse_document(ring + ";\ntaylor T (" + list + ");\n");
    const MDGAlgebra& A = D.algebra("T");
    const FreeComplex& F = A.complex();
    r.text << "complex T {\n";
    for (int k = 1; k <= F.max_degree(); ++k)
        for (int i : F.indices_in_degree(k))
            r.text << "  " << F.basis(i).name << " deg " << k << " mdeg " << R.monomial_string(F.mdeg(i))
                   << ": d = " << F.element_string(F.d(i)) << "\n";
    r.text << "}\n";
    for (const auto& [ij, v] : A.table().entries())
        if (!v.is_zero()) r.text << F.basis(ij.first).name << "*" << F.basis(ij.second).name << " = " << F.element_string(v) << "\n";
    AxiomReport ax = check_mdg_axioms(A);
    r.text << "axioms " << (ax.ok() ? "ok" : "FAIL") << ", associative " << (ax.associative ? "yes" : "no") << "\n";
    r.j["basis"] = F.size() - 1;
    r.j["axioms"] = ax.ok();
    r.j["associative"] = ax.associative;
    r.code = ax.ok() ? 0 : kNegative;
}

void cmd_cone(const Document& D, const Options& o, Out& r) {
    const MDGAlgebra& A = D.algebra(o.algebra);
    std::string list = o.rs;
    if (list.empty()) {
        auto it = D.meta.find("cone_r");
        if (it == D.meta.end()) throw Error("cone needs --r or a meta cone_r entry");
        list = it->second;
    }
    Ring R = A.complex().ring();
    std::vector<Polynomial> rs;
    for (const auto& s : split_list(list)) {
        for (char c : s)
            if (std::isalpha(static_cast<unsigned char>(c)) && R.index_of(std::string(1, c)) < 0) R.add_variable(std::string(1, c));
        rs.push_back(parse_polynomial(s, R));
    }
    ConeExtension C = mapping_cone_extension(A, rs, R);
    Report nuc = check_nucleus(C);
    ConeAssociatorReport cmp = compare_cone_associators(C);
    bool ok = nuc.ok && cmp.f_part_equals_sum && cmp.sum_equals_full;
    r.text << "cone over " << list << ": " << C.algebra.complex().size() - 1 << " basis elements\n";
    r.text << "nucleus " << (nuc.ok ? "ok" : "FAIL") << "\n";
    for (const auto& f : nuc.failures) r.text << "  " << f << "\n";
    r.text << "<F+eF>_F = <F> + e<F>: " << (cmp.f_part_equals_sum ? "yes" : "no") << "\n";
    r.text << "<F> + e<F> = <F+eF>: " << (cmp.sum_equals_full ? "yes" : "no") << "\n";
    r.text << "dims <F+eF> " << dims_text(cmp.dims_full) << "\n";
    r.j["nucleus"] = nuc.ok;
    r.j["f_part_equals_sum"] = cmp.f_part_equals_sum;
    r.j["sum_equals_full"] = cmp.sum_equals_full;
    r.j["dims"] = dims_json(cmp.dims_full);
    if (rs.size() == 1) {
        ConeHomologyReport h = compare_cone_homology(C);
        r.text << "H<F> " << dims_text(h.base.total) << "; H<F+eF> " << dims_text(h.cone.total) << "\n";
        r.text << "predicted " << dims_text(h.predicted) << ": " << (h.lengths_match ? "match" : "MISMATCH") << "\n";
        r.text << "inf equal: " << (h.inf_matches ? "yes" : "no") << "; sup " << opt_int(h.cone.sup) << " (base "
               << opt_int(h.base.sup) << ", r " << (h.r_regular_on_top ? "regular" : "not regular") << " on the top)"
               << ": " << (h.sup_rule ? "ok" : "FAIL") << "\n";
        ok = ok && h.lengths_match && h.inf_matches && h.sup_in_range && h.sup_rule;
        r.j["homology"] = dims_json(h.cone.total);
        r.j["predicted"] = dims_json(h.predicted);
        r.j["lengths_match"] = h.lengths_match;
        r.j["sup_rule"] = h.sup_rule;
        r.j["regular"] = h.r_regular_on_top;
    }
    r.j["ok"] = ok;
    r.code = ok ? 0 : kNegative;
}

void cmd_sym(const Document& D, const Options& o, Out& r) {
    ComplexPtr F = o.algebra.empty() && !D.order.empty() ? ComplexPtr(D.complexes.at(D.default_complex()))
                                                         : D.algebra(o.algebra).complex_ptr();
    SymDGAlgebra S(F, o.truncate);
    r.text << "S_i^m ranks up to total degree " << o.truncate << "\n";
    json dims = json::array();
    for (const auto& [im, v] : S.dims()) {
        r.text << "  S_" << im.first << "^" << im.second << " = " << v << "\n";
        dims.push_back({{"i", im.first}, {"m", im.second}, {"rank", v}});
    }
    r.j["dims"] = dims;
    SymCheckReport c = check_sym(S);
    r.text << "d^2 = 0, eth^2 = 0, partial^2 = 0, eth partial + partial eth = 0 on " << c.monomials
           << " monomials: " << (c.ok() ? "ok" : "FAIL at " + c.witness) << "\n";
    r.j["check"] = c.ok();
    r.code = c.ok() ? 0 : kNegative;
    if (o.matrices) {
        for (const auto& m : S.monomials()) {
            if (m.empty()) continue;
            r.text << "d " << S.monomial_string(m) << " = " << S.to_string(S.d(m)) << "\n";
        }
    }
    if (o.presentation) {
        PresentationReport p = presentation_check(D.algebra(o.algebra));
        r.text << "ideal in total degree <= 1 against <A> (x) K: " << (p.ok ? "equal" : "DIFFERENT") << "\n";
        r.text << "  ideal " << dims_text(p.ideal_dims) << "; submodule " << dims_text(p.submodule_dims) << "\n";
        if (!p.ok) r.text << p.diff;
        r.j["presentation"] = p.ok;
        if (!p.ok) r.code = kNegative;
    }
    if (o.split) {
        SplitReport sp = split_witness(D.algebra(o.algebra), o.truncate);
        r.text << "split on " << sp.checked << " monomials: " << (sp.split ? "yes" : "no at " + sp.witness) << "\n";
        r.j["split"] = sp.split;
        if (!sp.split) r.code = kNegative;
    }
}

void cmd_transport(const Document& D, const Options& o, Out& r) {
    if (o.pi.empty() || o.iota.empty()) throw Error("transport needs --pi and --iota");
    const ChainMap &pi = D.maps.at(o.pi), &iota = D.maps.at(o.iota);
    const MDGAlgebra& T = D.algebra(pi.source().name());
    MDGAlgebra mu = transport_multiplication(T, pi, iota, "mu");
    const FreeComplex& F = mu.complex();
    for (const auto& [ij, v] : mu.table().entries())
        if (!v.is_zero()) r.text << F.basis(ij.first).name << "*" << F.basis(ij.second).name << " = " << F.element_string(v) << "\n";
    AxiomReport ax = check_mdg_axioms(mu);
    r.text << "axioms " << (ax.ok() ? "ok" : "FAIL") << ", associative " << (ax.associative ? "yes" : "no") << "\n";
    r.j["axioms"] = ax.ok();
    r.j["associative"] = ax.associative;
    r.code = ax.ok() ? 0 : kNegative;
    // Compare with a declared multiplication on the same complex.
    for (const auto& [kind, name] : D.order) {
        if (kind != "mult" || D.algebras.at(name).complex().name() != F.name()) continue;
        const MDGAlgebra& B = D.algebras.at(name);
        bool same = true;
        for (std::size_t i = 1; i < F.size() && same; ++i)
            for (std::size_t j = i; j < F.size() && same; ++j) {
                if (!B.defined(int(i), int(j)) || !mu.defined(int(i), int(j))) continue;
                if (B.basis_product(int(i), int(j)) != mu.basis_product(int(i), int(j))) same = false;
            }
        r.text << "agrees with " << name << ": " << (same ? "yes" : "no") << "\n";
        r.j["agrees_with_" + name] = same;
        if (!same) r.code = kNegative;
        break;
    }
}

void cmd_perturb(const Document& D, const Options& o, Out& r) {
    const MDGAlgebra& A = D.algebra(o.algebra);
    Homotopy h;
    if (!o.homotopy.empty()) {
        h = D.homotopies.at(o.homotopy);
    } else {
        std::mt19937_64 rng(o.seed);
        h = random_homotopy(A.complex_ptr(), rng);
    }
    PerturbResult p = perturb_multiplication(A, h);
    r.text << "h with " << h.entries().size() << " entries" << (o.homotopy.empty() ? " (random, seed " + std::to_string(o.seed) + ")" : "") << "\n";
    r.text << "axioms for mu_h " << (p.axioms.ok() ? "ok" : "FAIL") << "\n";
    for (const auto& f : p.axioms.failures) r.text << "  " << f << "\n";
    r.text << "[.]_{mu_h} = [.]_mu + dH + Hd: " << (p.identity_holds ? "yes" : "no at " + p.identity_witness) << "\n";
    r.j["axioms"] = p.axioms.ok();
    r.j["identity"] = p.identity_holds;
    bool ok = p.axioms.ok() && p.identity_holds;
    if (!o.triple.empty()) {
        const FreeComplex& F = A.complex();
        auto names = split_list(o.triple);
        if (names.size() != 3) throw Error("--triple needs three basis names");
        int a = basis_index(F, names[0]), b = basis_index(F, names[1]), c = basis_index(F, names[2]);
        Element u = A.basis_associator(a, b, c), v = p.algebra.basis_associator(a, b, c);
        r.text << "[" << o.triple << "]_mu = " << F.element_string(u) << "\n";
        r.text << "[" << o.triple << "]_{mu_h} = " << F.element_string(v) << "\n";
        r.j["associator"] = F.element_string(u);
        r.j["perturbed"] = F.element_string(v);
        if (!o.modulus.empty()) {
            auto I = parse_monomial_list(o.modulus, F.ring());
            Element du = reduce_mod(u, I), dv = reduce_mod(v, I);
            bool cong = du == dv;
            r.text << "modulo (" << o.modulus << ")F: " << F.element_string(du) << (cong ? " for both" : " vs " + F.element_string(dv))
                   << (du.is_zero() ? ", zero" : ", nonzero") << "\n";
            r.j["congruent"] = cong;
            r.j["reduced"] = F.element_string(du);
            ok = ok && cong && !du.is_zero();
        }
    }
    r.code = ok ? 0 : kNegative;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mdg: multiplications on free resolutions"};
    app.require_subcommand(1);
    app.footer(kGrammar);
    Options o;
    std::string taylor_gens;
    const std::vector<std::pair<std::string, std::string>> cmds = {
        {"check", "verify complexes, multiplications, maps and homotopies"},
        {"assoc", "associator of a triple, or associativity over basis triples"},
        {"alt", "alternative check"},
        {"submodule", "associator submodule ranks"},
        {"homology", "associator homology; --ideal lists candidate annihilators"},
        {"quotient", "homology of the maximal associative quotient"},
        {"gb", "Groebner basis of the multiplicator ideal"},
        {"reduce", "normal form of --expr modulo the multiplicator ideal"},
        {"taylor", "Taylor resolution of a monomial list"},
        {"cone", "mapping cone extension by --r (or meta cone_r)"},
        {"sym", "symmetric DG algebra up to --truncate"},
        {"transport", "multiplication transported along --pi and --iota"},
        {"perturb", "perturbation by a homotopy (named or random)"}};
    std::map<std::string, CLI::App*> sub;
    for (const auto& [name, help] : cmds) {
        CLI::App* s = app.add_subcommand(name, help);
        if (name == "taylor") s->add_option("generators", taylor_gens, "monomials, e.g. x^2,x*y")->required();
        else s->add_option("file", o.file, ".mdg document")->required();
        s->add_flag("--json", o.json, "machine-readable report");
        s->add_option("--seed", o.seed, "random seed");
        s->add_option("--algebra", o.algebra, "multiplication to use");
        sub[name] = s;
    }
    sub["assoc"]->add_option("--triple", o.triple, "a,b,c");
    sub["perturb"]->add_option("--triple", o.triple, "a,b,c");
    sub["perturb"]->add_option("--modulus", o.modulus, "monomial ideal, e.g. x2,y,z,w");
    sub["perturb"]->add_option("--homotopy", o.homotopy, "homotopy block name");
    sub["reduce"]->add_option("--expr", o.expr, "element of K[e]")->required();
    sub["homology"]->add_option("--ideal", o.ideal, "monomials");
    sub["cone"]->add_option("--r", o.rs, "monomial list");
    sub["sym"]->add_option("--truncate", o.truncate, "total degree bound")->check(CLI::NonNegativeNumber);
    sub["sym"]->add_flag("--matrices", o.matrices, "print d on every monomial");
    sub["sym"]->add_flag("--presentation", o.presentation, "compare the multiplicator ideal with <A>");
    sub["sym"]->add_flag("--split", o.split, "split witness (associative tables)");
    sub["transport"]->add_option("--pi", o.pi, "map T -> F");
    sub["transport"]->add_option("--iota", o.iota, "map F -> T");
    sub["taylor"]->add_option("--ring", o.ring, "variable names");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << kGrammar;
        return kInput;
    }
    std::string cmd = app.get_subcommands().front()->get_name();
    Out r;
    try {
        if (cmd == "taylor") {
            cmd_taylor(taylor_gens, o, r);
        } else {
            Document D;
            try {
                D = parse_file(o.file);
            } catch (const ParseError& e) {
                err << o.file << ":" << e.what() << "\n";
                return kInput;
            }
            if (cmd == "check") cmd_check(D, o, r);
            else if (cmd == "assoc") cmd_assoc(D, o, r);
            else if (cmd == "alt") cmd_alt(D, o, r);
            else if (cmd == "submodule") cmd_submodule(D, o, r);
            else if (cmd == "homology") cmd_homology(D, o, r);
            else if (cmd == "quotient") cmd_quotient(D, o, r);
            else if (cmd == "gb") cmd_gb(D, o, r);
            else if (cmd == "reduce") cmd_reduce(D, o, r);
            else if (cmd == "cone") cmd_cone(D, o, r);
            else if (cmd == "sym") cmd_sym(D, o, r);
            else if (cmd == "transport") cmd_transport(D, o, r);
            else if (cmd == "perturb") cmd_perturb(D, o, r);
        }
    } catch (const ParseError& e) {
        err << "argument " << e.what() << "\n";
        return kInput;
    } catch (const MathError& e) {
        err << e.what() << "\n";
        r.code = kNegative;
        r.j["error"] = e.what();
        if (o.json) out << json{{"command", cmd}, {"status", r.code}, {"report", r.j}}.dump(2) << "\n";
        return r.code;
    } catch (const std::out_of_range& e) {
        err << "unknown name in the document\n";
        return kInput;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kInput;
    }
    if (o.json) out << json{{"command", cmd}, {"status", r.code}, {"report", r.j}}.dump(2) << "\n";
    else out << r.text.str();
    return r.code;
}

}  // namespace mdg
