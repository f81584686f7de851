#include "support.hpp"

using namespace mdgtest;

namespace {

// e_I e_J = sign(I,J) m_I m_J / m_{I u J} e_{I u J}, zero when I and J meet.
Element taylor_oracle(const FreeComplex& T, const std::vector<Multidegree>& gens, std::vector<int> I, std::vector<int> J) {
    std::vector<int> U;
    for (int i : I)
        if (std::count(J.begin(), J.end(), i)) return {};
    int inversions = 0;
    for (int i : I)
        for (int j : J) inversions += i > j;
    U = I;
    U.insert(U.end(), J.begin(), J.end());
    std::sort(U.begin(), U.end());
    auto lcm = [&](const std::vector<int>& S) {
        Multidegree m(gens[0].size());
        for (int s : S) m = m.lcm(gens[std::size_t(s)]);
        return m;
    };
    Multidegree c = lcm(I) + lcm(J) - lcm(U);
    RF coef(Polynomial::monomial(c, Rational(inversions % 2 ? -1 : 1)));
    if (U.empty()) return Element::basis(0, coef);
    return Element::basis(T.index_of(taylor_name(U, gens.size())), coef);
}

std::vector<std::vector<int>> subsets(int g) {
    std::vector<std::vector<int>> out;
    for (unsigned m = 0; m < (1u << g); ++m) {
        std::vector<int> s;
        for (int i = 0; i < g; ++i)
            if (m >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

bool same_products(const MDGAlgebra& A, const MDGAlgebra& B) {
    std::size_t n = A.complex().size();
    if (n != B.complex().size()) return false;
    for (int i = 1; i < int(n); ++i)
        for (int j = i; j < int(n); ++j) {
            if (A.complex().degree(i) + A.complex().degree(j) > A.complex().max_degree()) continue;
            if (A.basis_product(i, j) != B.basis_product(i, j)) return false;
        }
    return true;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("Taylor products match the subset formula") {
    Ring R({"x", "y", "z", "w"});
    for (std::string gens_text : {"x^2,x*y", "x^2,w^2,z*w,x*y,y^2*z^2", "x*y,y*z,z*w"}) {
        CAPTURE(gens_text);
        std::vector<Multidegree> gens = parse_monomial_list(gens_text, R);
        MDGAlgebra T = taylor_resolution(MonomialIdeal(R, gens));
        CHECK(check_mdg_axioms(T).ok());
        CHECK(check_mdg_axioms(T).associative);
        for (const auto& I : subsets(int(gens.size())))
            for (const auto& J : subsets(int(gens.size()))) {
                if (I.empty() || J.empty()) continue;
                int a = T.complex().index_of(taylor_name(I, gens.size())), b = T.complex().index_of(taylor_name(J, gens.size()));
                CHECK(T.basis_product(a, b) == taylor_oracle(T.complex(), gens, I, J));
            }
        CHECK(homology_dims(T.complex()).at(1) == 0);
    }
}

TEST_CASE("Taylor examples") {
    const MDGAlgebra& T = fixture("taylor_x2_xy.mdg").algebra();
    const FreeComplex& F = T.complex();
    CHECK(T.basis_product(F.index_of("e1"), F.index_of("e2")) == E("x*e12", F));
    CHECK(T.basis_product(F.index_of("e2"), F.index_of("e1")) == E("-x*e12", F));
    CHECK(F.d(F.index_of("e12")) == E("x*e2 - y*e1", F));
    CHECK(check_mdg_axioms(fixture("ex6.mdg").algebras.at("T")).associative);
    CHECK_THROWS_AS(MonomialIdeal(Ring({"x"}), {Multidegree(1)}), StructureError);
}

TEST_CASE("transported multiplications") {
    const Document& D = fixture("fk.mdg");
    MDGAlgebra mu = transport_multiplication(D.algebras.at("T"), D.maps.at("pi"), D.maps.at("iota"));
    CHECK(check_mdg_axioms(mu).ok());
    CHECK(same_products(mu, D.algebra("mu")));
    const FreeComplex& F = mu.complex();
    CHECK(mu.basis_product(F.index_of("e1"), F.index_of("e5")) == E("y*z^2*e14 + x*e45", F));
    for (std::string f : {"fm.mdg", "fo.mdg"}) {
        CAPTURE(f);
        const Document& G = fixture(f);
        MDGAlgebra m = transport_multiplication(G.algebras.at("T"), G.maps.at("pi"), G.maps.at("iota"));
        CHECK(check_mdg_axioms(m).ok());
        CHECK(same_products(m, G.algebra("mu")));
    }
}

TEST_CASE("transport needs pi iota = id") {
    const Document& D = fixture("fk.mdg");
    ChainMap bad = D.maps.at("iota");
    const FreeComplex& F = bad.source();
    bad.set(F.index_of("e1"), Element::basis(bad.target().index_of("e1"), RF(2L)));
    CHECK_THROWS_AS(transport_multiplication(D.algebras.at("T"), D.maps.at("pi"), bad), MathError);
}

TEST_CASE("comparison maps are chain maps") {
    for (std::string f : {"fk.mdg", "fm.mdg", "fo.mdg", "fa.mdg"}) {
        for (const auto& [name, m] : fixture(f).maps) {
            CAPTURE(f);
            CAPTURE(name);
            CHECK(m.check().ok);
        }
    }
}

TEST_CASE("cone by a new variable") {
    const Document& D = fixture("fk_cone.mdg");
    const MDGAlgebra& A = D.algebra();
    const Ring& R = A.complex().ring();
    ConeExtension C = mapping_cone_extension(A, {P("t", R)}, R);
    CHECK(C.algebra.complex().size() == 2 * A.complex().size());
    CHECK(check_complex(C.algebra.complex()).ok);
    CHECK(check_mdg_axioms(C.algebra).ok());
    CHECK(check_nucleus(C).ok);
    ConeAssociatorReport a = compare_cone_associators(C);
    CHECK(a.f_part_equals_sum);
    CHECK(a.sum_equals_full);
    ConeHomologyReport h = compare_cone_homology(C);
    CHECK(h.lengths_match);
    CHECK(h.inf_matches);
    CHECK(h.r_regular_on_top);
    CHECK(h.sup_rule);
    CHECK(h.cone.sup == 3);
    CHECK(h.base.sup == 3);
    // e e_i is the shifted copy: d(e a) = r a - e da
    int i = A.complex().index_of("e1");
    Element de = C.algebra.complex().d(C.embed(1, i));
    Element want = Element::basis(C.embed(0, i), RF(P("t", R)));
    for (const auto& [j, c] : A.complex().d(i).entries()) want.add_term(C.embed(1, j), -c);
    CHECK(de == want);
}

TEST_CASE("cone by a zero divisor on the top homology") {
    const MDGAlgebra& A = fixture("fk.mdg").algebra();
    const Ring& R = A.complex().ring();
    ConeExtension C = mapping_cone_extension(A, {P("x", R)}, R);
    CHECK(check_nucleus(C).ok);
    ConeHomologyReport h = compare_cone_homology(C);
    CHECK(h.lengths_match);
    CHECK_FALSE(h.r_regular_on_top);
    CHECK(h.sup_rule);
    CHECK(h.cone.sup == 4);
    CHECK_THROWS_AS(mapping_cone_extension(A, {P("1", R)}, R), StructureError);
}

TEST_CASE("two exterior generators") {
    const MDGAlgebra& A = fixture("taylor_x2_xy.mdg").algebra();
    Ring R = A.complex().ring();
    R.add_variable("s");
    R.add_variable("t");
    ConeExtension C = mapping_cone_extension(A, {P("s", R), P("t", R)}, R);
    CHECK(C.algebra.complex().size() == 4 * A.complex().size());
    CHECK(check_mdg_axioms(C.algebra).ok());
    CHECK(check_nucleus(C).ok);
    CHECK(compare_cone_associators(C).sum_equals_full);
}

TEST_CASE("extending scalars") {
    const MDGAlgebra& A = fixture("fk.mdg").algebra();
    Ring R = A.complex().ring();
    R.add_variable("t");
    MDGAlgebra B = extend_scalars(A, R);
    CHECK(B.complex().ring().nvars() == 5);
    CHECK(check_mdg_axioms(B).ok());
    auto h = [](const MDGAlgebra& X) {
        auto t = associator_homology(associator_submodule(X)).total;
        std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
        return t;
    };
    CHECK(h(A) == h(B));
    Element x = extend_element(A.basis_associator(1, 5, 2), 5);
    CHECK(x == B.basis_associator(1, 5, 2));
}

TEST_CASE("wedge sum symmetric algebra dims convolve") {
    Document D = parse_document("ring x,y;\ntaylor A (x^2, x*y);\ntaylor B (y^3);\n");
    auto A = D.complexes.at("A"), B = D.complexes.at("B");
    auto W = std::make_shared<FreeComplex>(wedge_sum(*A, *B));
    const int N = 4;
    SymDGAlgebra SA(A, N), SB(B, N), SW(W, N);
    std::map<std::pair<int, int>, long> conv;
    for (const auto& [a, u] : SA.dims())
        for (const auto& [b, v] : SB.dims())
            if (a.second + b.second <= N) conv[{a.first + b.first, a.second + b.second}] += u * v;
    auto w = SW.dims();
    std::erase_if(conv, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
    CHECK(w == conv);
}

}
