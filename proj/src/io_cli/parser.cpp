#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "mdg/io.hpp"

namespace mdg {

namespace {

enum class Tok { Ident, Number, String, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto adv = [&](std::size_t n = 1) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            adv();
        } else if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
            while (i < s.size() && s[i] != '\n') adv();
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int l = line, cc = col;
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), l, cc});
            adv(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            int l = line, cc = col;
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, s.substr(i, j - i), l, cc});
            adv(j - i);
        } else if (c == '"') {
            int l = line, cc = col;
            std::size_t j = i + 1;
            while (j < s.size() && s[j] != '"' && s[j] != '\n') ++j;
            if (j >= s.size() || s[j] != '"') throw ParseError("unterminated string", l, cc, "\"");
            out.push_back({Tok::String, s.substr(i + 1, j - i - 1), l, cc});
            adv(j - i + 1);
        } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            out.push_back({Tok::Sym, "->", line, col});
            adv(2);
        } else if (std::string(";,:{}()*+-^/=~").find(c) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, c), line, col});
            adv();
        } else {
            throw ParseError("unexpected character", line, col, std::string(1, c));
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// Expression tree; names are resolved when evaluated.
struct Expr {
    enum Kind { Num, Name, Add, Sub, Mul, Div, Neg, Pow } kind;
    Rational num;
    std::string name;
    long power = 0;
    int line = 0, col = 0;
    std::shared_ptr<Expr> a, b;
};
using ExprP = std::shared_ptr<Expr>;

class Parser {
public:
    explicit Parser(std::vector<Token> t) : t_(std::move(t)) {}

    const Token& peek(int k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
    bool at_end() const { return peek().kind == Tok::End; }
    bool is(const std::string& sym) const { return peek().kind != Tok::String && peek().text == sym; }
    Token next() { return t_[p_ < t_.size() - 1 ? p_++ : p_]; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& k = peek();
        throw ParseError(msg, k.line, k.col, k.kind == Tok::End ? "end of input" : k.text);
    }
    void expect(const std::string& sym) {
        if (!is(sym)) fail("expected '" + sym + "'");
        next();
    }
    Token ident(const std::string& what = "identifier") {
        if (peek().kind != Tok::Ident) fail("expected " + what);
        return next();
    }
    long integer() {
        bool neg = false;
        if (is("-")) {
            next();
            neg = true;
        }
        if (peek().kind != Tok::Number) fail("expected an integer");
        long v = std::stol(next().text);
        return neg ? -v : v;
    }

    ExprP expr() {
        ExprP e;
        if (is("-")) {
            Token m = next();
            e = node(Expr::Neg, m);
            e->a = term();
        } else {
            if (is("+")) next();
            e = term();
        }
        while (is("+") || is("-")) {
            Token op = next();
            ExprP n = node(op.text == "+" ? Expr::Add : Expr::Sub, op);
            n->a = e;
            n->b = term();
            e = n;
        }
        return e;
    }

private:
    ExprP node(Expr::Kind k, const Token& at) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->line = at.line;
        e->col = at.col;
        return e;
    }
    ExprP term() {
        ExprP e = power();
        while (is("*") || is("/")) {
            Token op = next();
            ExprP n = node(op.text == "*" ? Expr::Mul : Expr::Div, op);
            n->a = e;
            n->b = power();
            e = n;
        }
        return e;
    }
    ExprP power() {
        ExprP e = atom();
        if (is("^")) {
            Token op = next();
            ExprP n = node(Expr::Pow, op);
            n->a = e;
            if (peek().kind != Tok::Number) fail("expected an exponent");
            n->power = std::stol(next().text);
            e = n;
        }
        return e;
    }
    ExprP atom() {
        const Token& k = peek();
        if (k.kind == Tok::Number) {
            Token n = next();
            ExprP e = node(Expr::Num, n);
            e->num = Rational(mpz_class(n.text));
            return e;
        }
        if (k.kind == Tok::Ident) {
            Token n = next();
            ExprP e = node(Expr::Name, n);
            e->name = n.text;
            return e;
        }
        if (is("(")) {
            next();
            ExprP e = expr();
            expect(")");
            return e;
        }
        if (is("-")) {
            Token m = next();
            ExprP e = node(Expr::Neg, m);
            e->a = power();
            return e;
        }
        fail("expected a term");
    }

    std::vector<Token> t_;
    std::size_t p_ = 0;
};

[[noreturn]] void eval_fail(const Expr& e, const std::string& msg) {
    throw ParseError(msg, e.line, e.col, e.kind == Expr::Name ? e.name : "");
}

// Linear value in a complex: a scalar, or an element.
struct LinVal {
    bool scalar = true;
    RF s;
    Element e;
    Element as_element() const { return scalar ? (s.is_zero() ? Element() : Element::basis(0, s)) : e; }
};

LinVal eval_lin(const Expr& x, const FreeComplex* F, const Ring& R) {
    switch (x.kind) {
        case Expr::Num: return {true, RF(x.num), {}};
        case Expr::Name: {
            int v = R.index_of(x.name);
            int b = F ? F->index_of(x.name) : -1;
            if (v >= 0 && b >= 0) eval_fail(x, "name is both a ring variable and a basis element");
            if (v >= 0) return {true, RF(Polynomial::variable(R.nvars(), std::size_t(v))), {}};
            if (b >= 0) return {false, RF(0L), Element::basis(b)};
            eval_fail(x, F ? "unknown name in complex " + F->name() : "unknown ring variable");
        }
        case Expr::Neg: {
            LinVal a = eval_lin(*x.a, F, R);
            return a.scalar ? LinVal{true, -a.s, {}} : LinVal{false, RF(0L), -a.e};
        }
        case Expr::Add:
        case Expr::Sub: {
            LinVal a = eval_lin(*x.a, F, R), b = eval_lin(*x.b, F, R);
            RF sg(x.kind == Expr::Add ? 1L : -1L);
            if (a.scalar && b.scalar) return {true, a.s + b.s * sg, {}};
            return {false, RF(0L), a.as_element() + b.as_element().scaled(sg)};
        }
        case Expr::Mul: {
            LinVal a = eval_lin(*x.a, F, R), b = eval_lin(*x.b, F, R);
            if (a.scalar && b.scalar) return {true, a.s * b.s, {}};
            if (a.scalar) return {false, RF(0L), b.e.scaled(a.s)};
            if (b.scalar) return {false, RF(0L), a.e.scaled(b.s)};
            eval_fail(x, "product of two basis elements is not allowed here");
        }
        case Expr::Div: {
            LinVal a = eval_lin(*x.a, F, R), b = eval_lin(*x.b, F, R);
            if (!b.scalar) eval_fail(x, "division by a basis element");
            if (b.s.is_zero()) eval_fail(x, "division by zero");
            RF inv = b.s.inverse();
            if (a.scalar) return {true, a.s * inv, {}};
            return {false, RF(0L), a.e.scaled(inv)};
        }
        case Expr::Pow: {
            LinVal a = eval_lin(*x.a, F, R);
            if (!a.scalar) eval_fail(x, "power of a basis element is not allowed here");
            RF r(1L);
            for (long k = 0; k < x.power; ++k) r = r * a.s;
            return {true, r, {}};
        }
    }
    eval_fail(x, "bad expression");
}

GCPolynomial eval_gc(const Expr& x, const GCContext& ctx) {
    const Ring& R = ctx.ring();
    switch (x.kind) {
        case Expr::Num: return GCPolynomial::constant(ctx, RF(x.num));
        case Expr::Name: {
            int v = R.index_of(x.name), g = ctx.index_of(x.name);
            if (v >= 0 && g >= 0) eval_fail(x, "name is both a ring variable and a generator");
            if (v >= 0) return GCPolynomial::constant(ctx, RF(Polynomial::variable(R.nvars(), std::size_t(v))));
            if (g >= 0) return GCPolynomial::generator(ctx, std::size_t(g));
            eval_fail(x, "unknown generator");
        }
        case Expr::Neg: return eval_gc(*x.a, ctx).negated();
        case Expr::Add: return eval_gc(*x.a, ctx).add(ctx, eval_gc(*x.b, ctx));
        case Expr::Sub: return eval_gc(*x.a, ctx).add(ctx, eval_gc(*x.b, ctx), RF(-1L));
        case Expr::Mul: return gc_mul(ctx, eval_gc(*x.a, ctx), eval_gc(*x.b, ctx));
        case Expr::Div: {
            GCPolynomial b = eval_gc(*x.b, ctx);
            if (b.is_zero()) eval_fail(x, "division by zero");
            if (b.size() != 1 || gc_total_degree(b.lead().mono) != 0) eval_fail(x, "division by a non-scalar");
            return eval_gc(*x.a, ctx).scaled(b.lead().coef.inverse());
        }
        case Expr::Pow: {
            GCPolynomial a = eval_gc(*x.a, ctx), r = GCPolynomial::constant(ctx, RF(1L));
            for (long k = 0; k < x.power; ++k) r = gc_mul(ctx, r, a);
            return r;
        }
    }
    eval_fail(x, "bad expression");
}

struct Pending {
    std::string msg;
    int line, col;
    std::string token;
};

class DocBuilder {
public:
    explicit DocBuilder(Parser& p) : p_(p) {}

    Document run() {
        while (!p_.at_end()) statement();
        if (!errors_.empty()) {
            std::string all;
            for (std::size_t i = 0; i < errors_.size(); ++i) {
                if (i) all += "; ";
                all += std::to_string(errors_[i].line) + ":" + std::to_string(errors_[i].col) + ": " + errors_[i].msg;
            }
            const Pending& f = errors_.front();
            throw ParseError(errors_.size() == 1 ? f.msg : "semantic errors: " + all, f.line, f.col, f.token);
        }
        return std::move(doc_);
    }

private:
    void error(const Token& at, const std::string& msg) { errors_.push_back({msg, at.line, at.col, at.text}); }

    template <class F>
    void guarded(const Token& at, F&& f) {
        try {
            f();
        } catch (const ParseError& e) {
            errors_.push_back({e.what(), e.line, e.col, e.token});
        } catch (const Error& e) {
            error(at, e.what());
        }
    }

    const Ring& ring(const Token& at) {
        if (!doc_.ring) throw ParseError("declare the ring before using it", at.line, at.col, at.text);
        return *doc_.ring;
    }

    void statement() {
        Token kw = p_.ident("a statement keyword");
        if (kw.text == "ring") ring_stmt(kw);
        else if (kw.text == "complex") complex_stmt(kw);
        else if (kw.text == "taylor") taylor_stmt(kw);
        else if (kw.text == "mult") mult_stmt(kw);
        else if (kw.text == "map") map_stmt(kw);
        else if (kw.text == "homotopy") homotopy_stmt(kw);
        else if (kw.text == "meta") meta_stmt(kw);
        else throw ParseError("unknown statement", kw.line, kw.col, kw.text);
    }

    void ring_stmt(const Token& kw) {
        if (doc_.ring) throw ParseError("ring declared twice", kw.line, kw.col, kw.text);
        std::vector<std::string> names;
        if (!p_.is(";")) {
            names.push_back(p_.ident("variable name").text);
            while (p_.is(",")) {
                p_.next();
                names.push_back(p_.ident("variable name").text);
            }
        }
        p_.expect(";");
        std::set<std::string> seen;
        for (const auto& n : names)
            if (!seen.insert(n).second) error(kw, "repeated ring variable " + n);
        doc_.ring = Ring(names);
    }

    void declare(const std::string& kind, const Token& name) {
        for (const auto& [k, n] : doc_.order)
            if (k == kind && n == name.text) {
                error(name, kind + " " + name.text + " declared twice");
                return;
            }
        doc_.order.push_back({kind, name.text});
    }

    void complex_stmt(const Token& kw) {
        Token name = p_.ident("complex name");
        const Ring& R = ring(kw);
        auto F = std::make_shared<FreeComplex>(name.text, R);
        p_.expect("{");
        struct DStmt {
            Token at;
            ExprP e;
        };
        std::vector<DStmt> ds;
        while (!p_.is("}")) {
            Token k = p_.ident("'basis' or 'd'");
            if (k.text == "basis") {
                long deg = p_.integer();
                p_.expect(":");
                for (;;) {
                    Token b = p_.ident("basis element name");
                    std::optional<Multidegree> md;
                    if (p_.is("mdeg")) {
                        p_.next();
                        p_.expect("(");
                        std::vector<int32_t> v;
                        if (!p_.is(")")) {
                            v.push_back(int32_t(p_.integer()));
                            while (p_.is(",")) {
                                p_.next();
                                v.push_back(int32_t(p_.integer()));
                            }
                        }
                        p_.expect(")");
                        md = Multidegree(v);
                    }
                    if (R.index_of(b.text) >= 0) error(b, "basis element " + b.text + " clashes with a ring variable");
                    guarded(b, [&] { F->add_basis(b.text, int(deg), md); });
                    if (!p_.is(",")) break;
                    p_.next();
                }
                p_.expect(";");
            } else if (k.text == "d") {
                Token b = p_.ident("basis element name");
                p_.expect("=");
                ds.push_back({b, p_.expr()});
                p_.expect(";");
            } else {
                throw ParseError("expected 'basis' or 'd'", k.line, k.col, k.text);
            }
        }
        p_.expect("}");
        std::set<std::string> seen;
        for (const auto& [at, e] : ds) {
            int i = F->index_of(at.text);
            if (i <= 0) {
                error(at, "unknown basis element " + at.text + " in complex " + name.text);
                continue;
            }
            if (!seen.insert(at.text).second) error(at, "differential of " + at.text + " given twice");
            guarded(at, [&] { F->set_d(i, eval_lin(*e, F.get(), R).as_element()); });
        }
        declare("complex", name);
        doc_.complexes[name.text] = F;
    }

    void taylor_stmt(const Token& kw) {
        Token name = p_.ident("complex name");
        const Ring& R = ring(kw);
        p_.expect("(");
        std::vector<Multidegree> gens;
        for (;;) {
            ExprP e = p_.expr();
            guarded(name, [&] {
                LinVal v = eval_lin(*e, nullptr, R);
                if (!v.s.is_polynomial() || !v.s.num().is_monomial() || v.s.num().lead().coef != 1)
                    eval_fail(*e, "taylor generators must be monic monomials");
                Multidegree m = v.s.num().lead().exp;
                m.e.resize(R.nvars(), 0);
                gens.push_back(m);
            });
            if (!p_.is(",")) break;
            p_.next();
        }
        p_.expect(")");
        p_.expect(";");
        guarded(name, [&] {
            MDGAlgebra T = taylor_resolution(MonomialIdeal(R, gens));
            auto F = std::make_shared<FreeComplex>(T.complex());
            auto Fn = std::make_shared<FreeComplex>(name.text, R);
            for (std::size_t i = 1; i < F->size(); ++i)
                Fn->add_basis(F->basis(int(i)).name, F->degree(int(i)), F->mdeg(int(i)));
            for (std::size_t i = 1; i < F->size(); ++i) Fn->set_d(int(i), F->d(int(i)));
            MultiplicationTable tab = T.table();
            declare("taylor", name);
            doc_.complexes[name.text] = Fn;
            doc_.taylor_gens[name.text] = gens;
            doc_.algebras[name.text] = MDGAlgebra(name.text, Fn, std::move(tab));
        });
    }

    std::shared_ptr<FreeComplex> need_complex(const Token& t) {
        auto it = doc_.complexes.find(t.text);
        if (it == doc_.complexes.end()) throw ParseError("unknown complex", t.line, t.col, t.text);
        return it->second;
    }

    void mult_stmt(const Token& kw) {
        Token name = p_.ident("multiplication name");
        if (!p_.is("on")) p_.fail("expected 'on'");
        p_.next();
        Token on = p_.ident("complex name");
        const Ring& R = ring(kw);
        auto F = need_complex(on);
        p_.expect("{");
        MultBlock blk;
        blk.on = on.text;
        struct Entry {
            Token a, b;
            ExprP e;
        };
        std::vector<Entry> es;
        while (!p_.is("}")) {
            Token a = p_.ident("basis element name");
            if (a.text == "squares" && p_.is("=")) {
                p_.next();
                if (p_.peek().text != "0") p_.fail("expected 0");
                p_.next();
                p_.expect(";");
                blk.squares_zero = true;
                continue;
            }
            p_.expect("*");
            Token b = p_.ident("basis element name");
            p_.expect("=");
            es.push_back({a, b, p_.expr()});
            p_.expect(";");
        }
        p_.expect("}");
        MultiplicationTable T;
        std::set<std::pair<int, int>> seen;
        for (const auto& [a, b, e] : es) {
            int i = F->index_of(a.text), j = F->index_of(b.text);
            if (i < 0 || j < 0) {
                error(i < 0 ? a : b, "unknown basis element in multiplication " + name.text);
                continue;
            }
            if (i == 0 || j == 0) {
                error(a, "products with the unit are fixed");
                continue;
            }
            if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
                error(a, "product " + a.text + "*" + b.text + " given twice");
                continue;
            }
            guarded(a, [&] {
                Element v = eval_lin(*e, F.get(), R).as_element();
                for (const auto& [k, c] : v.entries())
                    if (F->degree(k) != F->degree(i) + F->degree(j))
                        throw StructureError(a.text + "*" + b.text + " has a term " + F->basis(k).name +
                                             " of the wrong degree");
                T.set(*F, i, j, v);
                blk.explicit_entries.push_back({i, j});
            });
        }
        if (blk.squares_zero)
            for (std::size_t i = 1; i < F->size(); ++i)
                if (!T.has(int(i), int(i)) && 2 * F->degree(int(i)) <= F->max_degree()) T.set(*F, int(i), int(i), {});
        declare("mult", name);
        doc_.mult_blocks[name.text] = blk;
        doc_.algebras[name.text] = MDGAlgebra(name.text, F, std::move(T));
    }

    void map_stmt(const Token& kw) {
        Token name = p_.ident("map name");
        p_.expect(":");
        Token src = p_.ident("source complex");
        p_.expect("->");
        Token dst = p_.ident("target complex");
        const Ring& R = ring(kw);
        auto S = need_complex(src);
        auto D = need_complex(dst);
        ChainMap phi(name.text, S, D);
        p_.expect("{");
        std::set<std::string> seen;
        while (!p_.is("}")) {
            Token a = p_.peek().kind == Tok::Number ? p_.next() : p_.ident("basis element name");
            p_.expect("=");
            ExprP e = p_.expr();
            p_.expect(";");
            int i = a.text == "1" ? 0 : S->index_of(a.text);
            if (i < 0) {
                error(a, "unknown basis element " + a.text + " of " + src.text);
                continue;
            }
            if (!seen.insert(a.text).second) error(a, "image of " + a.text + " given twice");
            guarded(a, [&] {
                Element v = eval_lin(*e, D.get(), R).as_element();
                for (const auto& [k, c] : v.entries())
                    if (D->degree(k) != S->degree(i))
                        throw StructureError(name.text + "(" + a.text + ") has a term of the wrong degree");
                phi.set(i, v);
            });
        }
        p_.expect("}");
        declare("map", name);
        doc_.maps[name.text] = phi;
    }

    void homotopy_stmt(const Token& kw) {
        Token name = p_.ident("homotopy name");
        const Ring& R = ring(kw);
        if (p_.is(":")) {
            // chain homotopy between two maps
            p_.next();
            Token phi = p_.ident("map name");
            p_.expect("~");
            Token psi = p_.ident("map name");
            auto ip = doc_.maps.find(phi.text), iq = doc_.maps.find(psi.text);
            if (ip == doc_.maps.end() || iq == doc_.maps.end())
                throw ParseError("unknown map", phi.line, phi.col, ip == doc_.maps.end() ? phi.text : psi.text);
            const FreeComplex& X = ip->second.source();
            const FreeComplex& Y = ip->second.target();
            ChainHomotopy H{phi.text, psi.text, std::vector<Element>(X.size())};
            p_.expect("{");
            while (!p_.is("}")) {
                Token a = p_.peek().kind == Tok::Number ? p_.next() : p_.ident("basis element name");
                p_.expect("=");
                ExprP e = p_.expr();
                p_.expect(";");
                int i = a.text == "1" ? 0 : X.index_of(a.text);
                if (i < 0) {
                    error(a, "unknown basis element " + a.text);
                    continue;
                }
                guarded(a, [&] {
                    Element v = eval_lin(*e, &Y, R).as_element();
                    for (const auto& [k, c] : v.entries())
                        if (Y.degree(k) != X.degree(i) + 1)
                            throw StructureError(name.text + "(" + a.text + ") must raise the degree by one");
                    H.img[i] = v;
                });
            }
            p_.expect("}");
            declare("chainhomotopy", name);
            doc_.chain_homotopies[name.text] = H;
            return;
        }
        if (!p_.is("on")) p_.fail("expected 'on' or ':'");
        p_.next();
        Token on = p_.ident("complex name");
        auto F = need_complex(on);
        Homotopy h(F);
        p_.expect("{");
        while (!p_.is("}")) {
            Token a = p_.ident("basis element name");
            p_.expect("*");
            Token b = p_.ident("basis element name");
            p_.expect("=");
            ExprP e = p_.expr();
            p_.expect(";");
            int i = F->index_of(a.text), j = F->index_of(b.text);
            if (i < 0 || j < 0) {
                error(i < 0 ? a : b, "unknown basis element in homotopy " + name.text);
                continue;
            }
            guarded(a, [&] {
                Element v = eval_lin(*e, F.get(), R).as_element();
                for (const auto& [k, c] : v.entries())
                    if (F->degree(k) != F->degree(i) + F->degree(j) + 1)
                        throw StructureError("h(" + a.text + "," + b.text + ") must have degree |a|+|b|+1");
                h.set(i, j, v);
            });
        }
        p_.expect("}");
        declare("homotopy", name);
        doc_.homotopies[name.text] = h;
        doc_.homotopy_on[name.text] = on.text;
    }

    void meta_stmt(const Token&) {
        Token key = p_.ident("meta key");
        p_.expect("=");
        const Token& v = p_.peek();
        if (v.kind != Tok::String) p_.fail("expected a quoted string");
        std::string val = p_.next().text;
        p_.expect(";");
        if (!doc_.meta.count(key.text)) doc_.order.push_back({"meta", key.text});
        doc_.meta[key.text] = val;
    }

    Parser& p_;
    Document doc_;
    std::vector<Pending> errors_;
};

ExprP parse_expr_text(const std::string& text) {
    Parser p(lex(text));
    ExprP e = p.expr();
    if (!p.at_end()) p.fail("trailing input");
    return e;
}

}  // namespace

Document parse_document(const std::string& text) {
    Parser p(lex(text));
    return DocBuilder(p).run();
}

Document parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

Element parse_element(const std::string& text, const FreeComplex& F) {
    return eval_lin(*parse_expr_text(text), &F, F.ring()).as_element();
}

Polynomial parse_polynomial(const std::string& text, const Ring& R) {
    LinVal v = eval_lin(*parse_expr_text(text), nullptr, R);
    if (!v.s.is_polynomial()) throw ParseError("expected a polynomial", 1, 1, text);
    return v.s.num().extended(R.nvars());
}

GCPolynomial parse_gc(const std::string& text, const GCContext& ctx) { return eval_gc(*parse_expr_text(text), ctx); }

std::vector<Multidegree> parse_monomial_list(const std::string& text, const Ring& R) {
    std::vector<Multidegree> out;
    std::stringstream ss(text);
    std::string item;
    bool single = true;
    for (const auto& n : R.names()) single &= n.size() == 1;
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) throw ParseError("empty monomial in list", 1, 1, text);
        Multidegree m(R.nvars());
        bool compact = single && t != "1" && t.find_first_of("*^") == std::string::npos && R.index_of(t) < 0;
        if (compact) {
            // x2y means x^2*y
            for (std::size_t i = 0; i < t.size();) {
                int v = R.index_of(std::string(1, t[i]));
                if (v < 0) throw ParseError("unknown variable in monomial", 1, int(i) + 1, t);
                std::size_t j = i + 1;
                while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
                m.e[v] += j > i + 1 ? std::stoi(t.substr(i + 1, j - i - 1)) : 1;
                i = j;
            }
        } else {
            Polynomial p = parse_polynomial(t, R);
            if (!p.is_monomial()) throw ParseError("expected a monomial", 1, 1, t);
            m = p.lead().exp;
            m.e.resize(R.nvars(), 0);
        }
        out.push_back(m);
    }
    return out;
}

const FreeComplex& Document::complex(const std::string& name) const {
    auto it = complexes.find(name.empty() ? default_complex() : name);
    if (it == complexes.end()) throw Error("no complex named " + name);
    return *it->second;
}

std::string Document::default_complex() const {
    for (const auto& [k, n] : order)
        if (k == "complex" || k == "taylor") return n;
    throw Error("document declares no complex");
}

std::string Document::default_algebra() const {
    if (auto it = meta.find("algebra"); it != meta.end()) return it->second;
    for (const auto& [k, n] : order)
        if (k == "mult") return n;
    for (const auto& [k, n] : order)
        if (k == "taylor") return n;
    throw Error("document declares no multiplication");
}

const MDGAlgebra& Document::algebra(const std::string& name) const {
    auto it = algebras.find(name.empty() ? default_algebra() : name);
    if (it == algebras.end()) throw Error("no multiplication named " + name);
    return it->second;
}

}  // namespace mdg
