#include "support.hpp"

#include <json.hpp>
#include <sstream>

using namespace mdgtest;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

const std::vector<std::string> kAll = {"fk.mdg", "fa.mdg", "fm.mdg", "fo.mdg", "ex6.mdg", "ex55.mdg",
                                       "fk_cone.mdg", "taylor_x2_xy.mdg", "homotopy.mdg"};

bool same_algebra(const MDGAlgebra& A, const MDGAlgebra& B) {
    if (A.complex().size() != B.complex().size()) return false;
    for (std::size_t i = 0; i < A.complex().size(); ++i)
        if (A.complex().d(int(i)) != B.complex().d(int(i)) || A.complex().basis(int(i)).name != B.complex().basis(int(i)).name)
            return false;
    return A.table().entries() == B.table().entries();
}

}  // namespace

TEST_SUITE("io_cli") {

TEST_CASE("print and parse round trip on every fixture") {
    for (const auto& f : kAll) {
        CAPTURE(f);
        const Document& D = fixture(f);
        std::string text = print_document(D);
        Document E2 = parse_document(text);
        CHECK(print_document(E2) == text);
        CHECK(E2.order == D.order);
        CHECK(E2.meta == D.meta);
        for (const auto& [name, A] : D.algebras) CHECK(same_algebra(A, E2.algebras.at(name)));
        for (const auto& [name, m] : D.maps)
            for (std::size_t i = 0; i < m.source().size(); ++i) CHECK(m.image(int(i)) == E2.maps.at(name).image(int(i)));
    }
}

TEST_CASE("empty and malformed documents") {
    CHECK(parse_document("").empty());
    CHECK(parse_document("# only a comment\n").empty());
    try {
        parse_document("ring x;\ncomplex F {\n  basis 1: a mdeg(1);\n  d a = x +;\n}\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(e.col == 12);  // the ";" where a term should be
    }
    // Semantic: degrees must not decrease.
    CHECK_THROWS_AS(parse_document("ring x;\ncomplex F {\n  basis 2: a mdeg(1);\n  basis 1: b mdeg(1);\n}\n"), ParseError);
    CHECK_THROWS_AS(parse_document("ring x;\nmult m on G { }\n"), ParseError);
    CHECK_THROWS_AS(parse_document("ring x;\ntaylor T (x, 2*x);\n"), ParseError);
}

TEST_CASE("element and monomial parsing") {
    const FreeComplex& F = fixture("fk.mdg").complex("FK");
    Element x = E("y*z^2*e14 + x*e45", F);
    CHECK(F.element_string(x) == "y*z^2*e14 + x*e45");
    CHECK(E("2*e1 - e1", F) == Element::basis(F.index_of("e1")));
    CHECK_THROWS(E("e99", F));
    Ring R({"x", "y", "z", "w"});
    auto c = parse_monomial_list("x2,y,z,w", R);
    auto l = parse_monomial_list("x^2, y, z, w", R);
    CHECK(c == l);
    CHECK(parse_monomial_list("1", R).front().is_zero());
}

TEST_CASE("assoc command") {
    std::string fk = fixture_path("fk.mdg");
    Run r = run({"assoc", fk, "--triple", "e1,e5,e2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("y^2*z*e123 - y*z^2*e124 + y*z*w*e134 - x*y*z*e234") != std::string::npos);
    Run o = run({"assoc", fixture_path("fo.mdg")});
    CHECK(o.code == 0);
    Run z = run({"assoc", fk, "--triple", "e1,e2,e3"});
    CHECK(z.code == 0);
}

TEST_CASE("check, homology and quotient commands") {
    CHECK(run({"check", fixture_path("fk.mdg")}).code == 0);
    CHECK(run({"check", fixture_path("homotopy.mdg")}).code == 0);
    Run h = run({"homology", fixture_path("fk.mdg"), "--ideal", "x,y,z,w"});
    CHECK(h.code == 0);
    CHECK(h.out.find("H<mu> 3: 1") != std::string::npos);
    CHECK(h.out.find("w annihilates") != std::string::npos);
    CHECK(run({"quotient", fixture_path("fk.mdg")}).code == 0);
    CHECK(run({"alt", fixture_path("fk.mdg")}).code == 1);
    CHECK(run({"alt", fixture_path("fo.mdg")}).code == 0);
}

TEST_CASE("Groebner commands") {
    std::string f = fixture_path("ex55.mdg");
    Run r = run({"reduce", f, "--expr", "e12*e35"});
    CHECK(r.code == 0);
    CHECK(r.out == "-(v)*e12345\n");
    Run r0 = run({"reduce", f, "--algebra", "mu0", "--expr", "e2*e26"});
    CHECK(r0.out == "0\n");
    Run g = run({"gb", f, "--algebra", "mu0"});
    CHECK(g.code == 0);
    CHECK(g.out.find("_[2]=e5*e6 - (u)*e56") != std::string::npos);
    CHECK(run({"gb", fixture_path("fk.mdg")}).code == 1);
}

TEST_CASE("taylor, cone, sym and transport commands") {
    Run t = run({"taylor", "x^2,x*y"});
    CHECK(t.code == 0);
    CHECK(t.out.find("e1*e2 = x*e12") != std::string::npos);
    Run c = run({"cone", fixture_path("fk_cone.mdg")});
    CHECK(c.code == 0);
    CHECK(c.out.find("match") != std::string::npos);
    CHECK(run({"cone", fixture_path("fk.mdg"), "--r", "x"}).code == 0);
    Run s = run({"sym", fixture_path("taylor_x2_xy.mdg"), "--truncate", "3", "--split"});
    CHECK(s.code == 0);
    CHECK(s.out.find("S_3^2 = 2") != std::string::npos);
    CHECK(run({"sym", fixture_path("fk.mdg"), "--truncate", "2", "--presentation"}).code == 0);
    CHECK(run({"transport", fixture_path("fk.mdg"), "--pi", "pi", "--iota", "iota"}).code == 0);
}

TEST_CASE("perturb command") {
    std::string f = fixture_path("fa.mdg");
    Run a = run({"perturb", f, "--seed", "9", "--triple", "e1,e45,e2", "--modulus", "x2,y,z,w"});
    Run b = run({"perturb", f, "--seed", "9", "--triple", "e1,e45,e2", "--modulus", "x2,y,z,w"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("x*e12345") != std::string::npos);
    Run h = run({"perturb", fixture_path("ex6.mdg"), "--algebra", "T", "--homotopy", "h"});
    CHECK(h.code == 0);
}

TEST_CASE("json output") {
    Run r = run({"homology", fixture_path("fm.mdg"), "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "homology");
    CHECK(j["status"] == 0);
    CHECK(j.contains("report"));
    Run a = run({"assoc", fixture_path("fk.mdg"), "--triple", "e1,e5,e2", "--json"});
    CHECK(nlohmann::json::parse(a.out)["status"] == 1);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run({}).code == 2);
    Run bogus = run({"frobnicate", fixture_path("fk.mdg")});
    CHECK(bogus.code == 2);
    CHECK(run({"check", "/nonexistent.mdg"}).code == 2);
    CHECK(run({"assoc", fixture_path("fk.mdg"), "--triple", "e1,e99,e2"}).code == 2);
    CHECK(run({"reduce", fixture_path("ex55.mdg")}).code == 2);
}

TEST_CASE("Singular export") {
    std::string s = singular_script(fixture("ex55.mdg").algebra());
    CHECK(s.find("poly f(1)(5) = e1*e5 - (u)*e14 - (z)*e45;") != std::string::npos);
    CHECK(s.find("std(I)") != std::string::npos);
}

}
