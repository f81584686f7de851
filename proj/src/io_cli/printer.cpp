#include <sstream>

#include "mdg/io.hpp"

namespace mdg {

namespace {

std::string mdeg_string(const Multidegree& m) {
    std::string s = "mdeg(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
}

void print_complex(std::ostream& os, const std::string& name, const FreeComplex& F) {
    os << "complex " << name << " {\n";
    for (int k = 1; k <= F.max_degree(); ++k) {
        std::vector<int> idx = F.indices_in_degree(k);
        if (idx.empty()) continue;
        os << "  basis " << k << ": ";
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (t) os << ", ";
            os << F.basis(idx[t]).name;
            if (F.has_mdeg_labels()) os << " " << mdeg_string(F.mdeg(idx[t]));
        }
        os << ";\n";
    }
    for (std::size_t i = 1; i < F.size(); ++i)
        if (!F.d(int(i)).is_zero()) os << "  d " << F.basis(int(i)).name << " = " << F.element_string(F.d(int(i))) << ";\n";
    os << "}\n";
}

}  // namespace

std::string print_document(const Document& doc) {
    std::ostringstream os;
    if (doc.ring) {
        os << "ring ";
        for (std::size_t i = 0; i < doc.ring->nvars(); ++i) os << (i ? "," : "") << doc.ring->name(i);
        os << ";\n";
    }
    for (const auto& [kind, name] : doc.order) {
        os << "\n";
        if (kind == "complex") {
            print_complex(os, name, *doc.complexes.at(name));
        } else if (kind == "taylor") {
            os << "taylor " << name << " (";
            const auto& g = doc.taylor_gens.at(name);
            for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << doc.ring->monomial_string(g[i]);
            os << ");\n";
        } else if (kind == "mult") {
            const MultBlock& blk = doc.mult_blocks.at(name);
            const MDGAlgebra& A = doc.algebras.at(name);
            const FreeComplex& F = A.complex();
            os << "mult " << name << " on " << blk.on << " {\n";
            if (blk.squares_zero) os << "  squares = 0;\n";
            for (const auto& [ij, v] : A.table().entries()) {
                if (blk.squares_zero && ij.first == ij.second && v.is_zero()) continue;
                os << "  " << F.basis(ij.first).name << "*" << F.basis(ij.second).name << " = " << F.element_string(v)
                   << ";\n";
            }
            os << "}\n";
        } else if (kind == "map") {
            const ChainMap& phi = doc.maps.at(name);
            const FreeComplex &S = phi.source(), &D = phi.target();
            os << "map " << name << ": " << S.name() << " -> " << D.name() << " {\n";
            if (phi.image(0) != Element::basis(0)) os << "  1 = " << D.element_string(phi.image(0)) << ";\n";
            for (std::size_t i = 1; i < S.size(); ++i)
                if (!phi.image(int(i)).is_zero())
                    os << "  " << S.basis(int(i)).name << " = " << D.element_string(phi.image(int(i))) << ";\n";
            os << "}\n";
        } else if (kind == "homotopy") {
            const Homotopy& h = doc.homotopies.at(name);
            const FreeComplex& F = h.complex();
            os << "homotopy " << name << " on " << doc.homotopy_on.at(name) << " {\n";
            for (const auto& [ij, v] : h.entries())
                os << "  " << F.basis(ij.first).name << "*" << F.basis(ij.second).name << " = " << F.element_string(v)
                   << ";\n";
            os << "}\n";
        } else if (kind == "chainhomotopy") {
            const ChainHomotopy& H = doc.chain_homotopies.at(name);
            const ChainMap& phi = doc.maps.at(H.phi);
            const FreeComplex &X = phi.source(), &Y = phi.target();
            os << "homotopy " << name << ": " << H.phi << " ~ " << H.psi << " {\n";
            for (std::size_t i = 0; i < X.size(); ++i)
                if (!H.img[i].is_zero())
                    os << "  " << (i ? X.basis(int(i)).name : "1") << " = " << Y.element_string(H.img[i]) << ";\n";
            os << "}\n";
        } else if (kind == "meta") {
            os << "meta " << name << " = \"" << doc.meta.at(name) << "\";\n";
        }
    }
    return os.str();
}

std::string singular_script(const MDGAlgebra& A, const std::string& ring_name) {
    const FreeComplex& F = A.complex();
    const Ring& R = F.ring();
    std::ostringstream os;
    std::size_t n = F.size() - 1;
    os << "LIB \"ncalg.lib\";\n\n";
    os << "intvec V = ";
    // run-length encoded degrees, as in 1:6, 2:9
    int cur = -1, run = 0;
    bool first = true;
    auto flush = [&] {
        if (run) os << (first ? "" : ", ") << cur << ":" << run;
        first = false;
    };
    for (std::size_t i = 1; i <= n; ++i) {
        int d = F.degree(int(i));
        if (d != cur) {
            if (run) flush();
            cur = d;
            run = 0;
        }
        ++run;
    }
    flush();
    os << ";\n\nring " << ring_name << "=(0";
    for (std::size_t i = 0; i < R.nvars(); ++i) os << "," << R.name(i);
    os << "),(";
    for (std::size_t i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << F.basis(int(i)).name;
    os << "),Wp(V);\n\n";
    os << "matrix C[" << n << "][" << n << "]; matrix D[" << n << "][" << n << "]; int i; int j;\n";
    os << "for (i=1; i<=" << n << "; i++) {for (j=1; j<=" << n << "; j++) {C[i,j]=(-1)^(V[i]*V[j]);}}\n";
    os << "ncalgebra(C,D);\n\n";
    GCContext ctx = gc_context_for(F);
    std::vector<std::string> names;
    for (const auto& [ij, v] : A.table().entries()) {
        auto [i, j] = ij;
        if (i == j) continue;
        std::string nm = "f(" + F.basis(i).name.substr(1) + ")(" + F.basis(j).name.substr(1) + ")";
        GCPolynomial f = GCPolynomial::generator(ctx, std::size_t(i - 1));
        f = gc_mul(ctx, f, GCPolynomial::generator(ctx, std::size_t(j - 1)));
        for (const auto& [k, c] : v.entries()) f = f.add(ctx, GCPolynomial::generator(ctx, std::size_t(k - 1)), -c);
        os << "poly " << nm << " = " << f.to_string(ctx) << ";\n";
        names.push_back(nm);
    }
    os << "\nlist L = (";
    for (std::size_t i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << F.basis(int(i)).name;
    os << ");\n\nideal I; for (i=1; i<=" << n << "; i++) {I = I + L[i]*L[i];}\n";
    if (!names.empty()) {
        os << "I = I + ";
        for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
        os << ";\n";
    }
    os << "I = std(I);\n";
    return os.str();
}

}  // namespace mdg
