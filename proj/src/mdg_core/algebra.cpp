#include <algorithm>

#include "mdg/mdg.hpp"

namespace mdg {

namespace {

int koszul(int a, int b) { return ((a * b) & 1) ? -1 : 1; }

}  // namespace

ChainMap::ChainMap(std::string name, ComplexPtr src, ComplexPtr dst)
    : name_(std::move(name)), src_(std::move(src)), dst_(std::move(dst)) {
    img_.resize(src_->size());
    img_[0] = Element::basis(0);
}

void ChainMap::set(int i, Element img) { img_[i] = std::move(img); }

Element ChainMap::apply(const Element& x) const {
    Element r;
    for (const auto& [i, c] : x.entries()) r.add(img_[i], c);
    return r;
}

Report ChainMap::check() const {
    Report rep;
    for (std::size_t i = 0; i < src_->size(); ++i) {
        int ii = static_cast<int>(i);
        for (const auto& [j, c] : img_[ii].entries()) {
            if (dst_->degree(j) != src_->degree(ii)) {
                rep.fail(name_ + "(" + src_->basis(ii).name + ") has a term of the wrong degree");
                return rep;
            }
        }
        Element lhs = dst_->apply_d(img_[ii]);
        Element rhs = apply(src_->d(ii));
        if (lhs != rhs) {
            rep.fail("d" + name_ + " != " + name_ + "d at " + src_->basis(ii).name + ": " + dst_->element_string(lhs) +
                     " vs " + dst_->element_string(rhs));
            return rep;
        }
    }
    return rep;
}

ChainMap ChainMap::then(const ChainMap& other, const std::string& name) const {
    ChainMap r(name.empty() ? other.name_ + "*" + name_ : name, src_, other.dst_);
    for (std::size_t i = 0; i < src_->size(); ++i) r.img_[i] = other.apply(img_[i]);
    return r;
}

ChainMap ChainMap::identity(ComplexPtr F) {
    ChainMap r("id", F, F);
    for (std::size_t i = 0; i < F->size(); ++i) r.img_[i] = Element::basis(static_cast<int>(i));
    return r;
}

void MultiplicationTable::set(const FreeComplex& F, int i, int j, Element v) {
    if (i == 0 || j == 0) throw StructureError("products with the unit are fixed and cannot be assigned");
    if (i > j) {
        v = v.scaled(RF(static_cast<long>(koszul(F.degree(i), F.degree(j)))));
        std::swap(i, j);
    }
    t_[{i, j}] = std::move(v);
}

bool MultiplicationTable::has(int i, int j) const {
    if (i > j) std::swap(i, j);
    return t_.count({i, j}) > 0;
}

const Element* MultiplicationTable::find(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? nullptr : &it->second;
}

void MultiplicationTable::erase(int i, int j) {
    if (i > j) std::swap(i, j);
    t_.erase({i, j});
}

MDGAlgebra::MDGAlgebra(std::string name, ComplexPtr F, MultiplicationTable T)
    : name_(std::move(name)), F_(std::move(F)), T_(std::move(T)) {}

bool MDGAlgebra::defined(int i, int j) const {
    if (i == 0 || j == 0) return true;
    int a = std::min(i, j), b = std::max(i, j);
    if (T_.find(a, b)) return true;
    if (a == b && (F_->degree(a) & 1) && T_.implicit_odd_squares) return true;
    // Nothing lives in the target degree, so the product is forced to vanish.
    return F_->indices_in_degree(F_->degree(a) + F_->degree(b)).empty();
}

Element MDGAlgebra::basis_product(int i, int j) const {
    if (i == 0) return Element::basis(j);
    if (j == 0) return Element::basis(i);
    int a = std::min(i, j), b = std::max(i, j);
    if (const Element* v = T_.find(a, b)) {
        if (i <= j) return *v;
        return v->scaled(RF(static_cast<long>(koszul(F_->degree(i), F_->degree(j)))));
    }
    if (defined(i, j)) return {};
    throw UndefinedProduct("product " + F_->basis(i).name + "*" + F_->basis(j).name + " is not defined", i, j);
}

Element MDGAlgebra::multiply(const Element& u, const Element& v) const {
    Element r;
    for (const auto& [i, c] : u.entries())
        for (const auto& [j, e] : v.entries()) {
            Element p = basis_product(i, j);
            if (!p.is_zero()) r.add(p, c * e);
        }
    return r;
}

Element MDGAlgebra::associator(const Element& a, const Element& b, const Element& c) const {
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c));
}

Element MDGAlgebra::basis_associator(int i, int j, int k) const {
    return associator(Element::basis(i), Element::basis(j), Element::basis(k));
}

bool MDGAlgebra::is_multigraded() const {
    if (!F_->is_multigraded()) return false;
    std::size_t n = F_->ring().nvars();
    for (const auto& [ij, v] : T_.entries()) {
        Multidegree target = F_->mdeg(ij.first) + F_->mdeg(ij.second);
        for (const auto& [k, c] : v.entries()) {
            if (!c.is_polynomial() || !c.num().is_monomial()) return false;
            Multidegree a = c.num().lead().exp;
            a.e.resize(n, 0);
            if (F_->mdeg(k) + a != target) return false;
        }
    }
    return true;
}

const ScalarTable& MDGAlgebra::scalar() const {
    if (scalar_) return *scalar_;
    if (!is_multigraded()) throw StructureError("algebra " + name_ + " is not multigraded");
    auto S = std::make_shared<ScalarTable>();
    std::size_t n = F_->size();
    S->n = n;
    S->prod.assign(n, std::vector<SparseQ>(n));
    S->defined.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int ii = static_cast<int>(i), jj = static_cast<int>(j);
            if (!defined(ii, jj)) continue;
            S->defined[i][j] = 1;
            Element v = basis_product(ii, jj);
            for (const auto& [k, c] : v.entries()) S->prod[i][j].push_back({k, c.num().lead().coef});
        }
    S->d = F_->scalar_d();
    scalar_ = S;
    return *scalar_;
}

QVector ScalarTable::mul(const QVector& u, const QVector& v) const {
    QVector r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            if (!defined[i][j]) throw UndefinedProduct("undefined product in scalar multiplication", int(i), int(j));
            Rational c = u[i] * v[j];
            for (const auto& [k, s] : prod[i][j]) r[k] += c * s;
        }
    }
    return r;
}

QVector ScalarTable::apply_d(const QVector& u) const {
    QVector r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (const auto& [k, s] : d[i]) r[k] += u[i] * s;
    }
    return r;
}

int element_degree(const FreeComplex& F, const Element& x) {
    if (x.is_zero()) return 0;
    int k = F.degree(x.entries().front().first);
    for (const auto& [i, c] : x.entries())
        if (F.degree(i) != k) throw MathError("element is not homogeneous in homological degree");
    return k;
}

bool is_degree_homogeneous(const FreeComplex& F, const Element& x) {
    if (x.is_zero()) return true;
    int k = F.degree(x.entries().front().first);
    return std::all_of(x.entries().begin(), x.entries().end(), [&](const auto& e) { return F.degree(e.first) == k; });
}

AxiomReport check_mdg_axioms(const MDGAlgebra& A, Exec exec) {
    AxiomReport rep;
    const FreeComplex& F = A.complex();
    int top = F.max_degree();
    std::size_t n = F.size();
    std::size_t nvar = F.ring().nvars();

    for (const auto& [ij, v] : A.table().entries()) {
        auto [i, j] = ij;
        for (const auto& [k, c] : v.entries()) {
            if (F.degree(k) != F.degree(i) + F.degree(j)) {
                rep.graded_commutative = false;
                rep.failures.push_back("degree of " + F.basis(i).name + "*" + F.basis(j).name + " is wrong");
            }
        }
        if (i == j && (F.degree(i) & 1) && !v.is_zero()) {
            rep.strict = false;
            rep.failures.push_back("odd square " + F.basis(i).name + "^2 is nonzero");
        }
        if (F.has_mdeg_labels()) {
            Multidegree target = F.mdeg(i) + F.mdeg(j);
            for (const auto& [k, c] : v.entries()) {
                bool good = c.is_polynomial() && c.num().is_monomial();
                if (good) {
                    Multidegree a = c.num().lead().exp;
                    a.e.resize(nvar, 0);
                    good = F.mdeg(k) + a == target;
                }
                if (!good) {
                    rep.multigraded = false;
                    rep.failures.push_back(F.basis(i).name + "*" + F.basis(j).name + " does not respect the multidegree");
                    break;
                }
            }
        }
    }

    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (F.degree(int(i)) + F.degree(int(j)) <= top) pairs.push_back({int(i), int(j)});
    std::vector<std::string> bad(pairs.size());
    parallel_for(pairs.size(), exec, [&](std::size_t p) {
        auto [i, j] = pairs[p];
        try {
            Element ei = Element::basis(i), ej = Element::basis(j);
            Element lhs = F.apply_d(A.multiply(ei, ej));
            Element rhs = A.multiply(F.d(i), ej) + A.multiply(ei, F.d(j)).scaled(RF(long(koszul(F.degree(i), 1))));
            if (lhs != rhs) bad[p] = "Leibniz fails at (" + F.basis(i).name + "," + F.basis(j).name + ")";
        } catch (const UndefinedProduct&) {
            // partial tables: pairs that touch undefined products are not checked
        }
    });
    for (const auto& s : bad)
        if (!s.empty()) {
            rep.leibniz = false;
            rep.failures.push_back(s);
        }

    std::vector<std::array<int, 3>> triples;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t k = 1; k < n; ++k)
                if (F.degree(int(i)) + F.degree(int(j)) + F.degree(int(k)) <= top) triples.push_back({int(i), int(j), int(k)});
    std::vector<char> nonassoc(triples.size(), 0);
    parallel_for(triples.size(), exec, [&](std::size_t t) {
        try {
            if (!A.basis_associator(triples[t][0], triples[t][1], triples[t][2]).is_zero()) nonassoc[t] = 1;
        } catch (const UndefinedProduct&) {
        }
    });
    for (std::size_t t = 0; t < triples.size(); ++t)
        if (nonassoc[t]) {
            rep.associative = false;
            rep.associativity_witness = "[" + F.basis(triples[t][0]).name + "," + F.basis(triples[t][1]).name + "," +
                                        F.basis(triples[t][2]).name + "]";
            break;
        }
    return rep;
}

AlternativeReport is_alternative(const MDGAlgebra& A, unsigned seed, int random_trials) {
    AlternativeReport rep;
    const FreeComplex& F = A.complex();
    int top = F.max_degree();
    auto name = [&](int i) { return F.basis(i).name; };
    // [a,a,x] = 0 on basis elements, then on a = e_i + e_j by polarization.
    for (std::size_t i = 1; i < F.size(); ++i)
        for (std::size_t j = i; j < F.size(); ++j) {
            if (F.degree(int(i)) != F.degree(int(j))) continue;
            for (std::size_t k = 1; k < F.size(); ++k) {
                if (2 * F.degree(int(i)) + F.degree(int(k)) > top) continue;
                Element a = Element::basis(int(i)) + (i == j ? Element() : Element::basis(int(j)));
                Element x = Element::basis(int(k));
                if (!A.associator(a, a, x).is_zero()) {
                    rep.alternative = false;
                    rep.witness = i == j ? "[" + name(int(i)) + "," + name(int(i)) + "," + name(int(k)) + "]"
                                         : "[a,a," + name(int(k)) + "] with a = " + name(int(i)) + " + " + name(int(j));
                    return rep;
                }
            }
        }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < random_trials; ++t) {
        int k1 = 1 + int(rng() % std::max(1, top));
        int k2 = 1 + int(rng() % std::max(1, top));
        if (2 * k1 + k2 > top) continue;
        Element a = random_homogeneous(F, k1, rng), x = random_homogeneous(F, k2, rng);
        if (!A.associator(a, a, x).is_zero()) {
            rep.alternative = false;
            rep.witness = "[a,a,x] with a = " + F.element_string(a) + ", x = " + F.element_string(x);
            return rep;
        }
    }
    return rep;
}

Element ModuleView::act(const Element& a, const Element& x) const {
    if (via_) return X_->multiply(via_->apply(a), x);
    return X_->multiply(a, x);
}

Element ModuleView::associator(const Element& a1, const Element& a2, const Element& x) const {
    return act(A_->multiply(a1, a2), x) - act(a1, act(a2, x));
}

Element multiplicator(const ChainMap& phi, const ModuleView& X, const ModuleView& Y, const Element& a,
                      const Element& x) {
    return phi.apply(X.act(a, x)) - Y.act(a, phi.apply(x));
}

Element two_multiplicator(const ChainMap& phi, const ModuleView& X, const ModuleView& Y, const Element& a1,
                          const Element& a2, const Element& x) {
    return phi.apply(X.associator(a1, a2, x)) - Y.associator(a1, a2, phi.apply(x));
}

MultiplicativityReport check_multiplicative(const ChainMap& phi, const MDGAlgebra& A, const MDGAlgebra& B) {
    MultiplicativityReport rep;
    ModuleView X = ModuleView::regular(A);
    ModuleView Y(A, B, &phi);
    const FreeComplex& F = A.complex();
    int top = F.max_degree();
    for (std::size_t i = 1; i < F.size() && rep.multiplicative; ++i)
        for (std::size_t j = 1; j < F.size(); ++j) {
            if (F.degree(int(i)) + F.degree(int(j)) > top) continue;
            Element m = multiplicator(phi, X, Y, Element::basis(int(i)), Element::basis(int(j)));
            if (!m.is_zero()) {
                rep.multiplicative = false;
                rep.witness = "[" + F.basis(int(i)).name + "," + F.basis(int(j)).name + "] = " + B.complex().element_string(m);
                break;
            }
        }
    for (std::size_t i = 1; i < F.size() && rep.two_multiplicative; ++i)
        for (std::size_t j = 1; j < F.size() && rep.two_multiplicative; ++j)
            for (std::size_t k = 1; k < F.size(); ++k) {
                if (F.degree(int(i)) + F.degree(int(j)) + F.degree(int(k)) > top) continue;
                Element m = two_multiplicator(phi, X, Y, Element::basis(int(i)), Element::basis(int(j)),
                                              Element::basis(int(k)));
                if (!m.is_zero()) {
                    rep.two_multiplicative = false;
                    rep.witness2 = "[" + F.basis(int(i)).name + "," + F.basis(int(j)).name + "," + F.basis(int(k)).name +
                                   "]^(2) = " + B.complex().element_string(m);
                    break;
                }
            }
    return rep;
}

Element random_homogeneous(const FreeComplex& F, int k, std::mt19937_64& rng, int max_terms) {
    std::vector<int> idx = F.indices_in_degree(k);
    Element x;
    if (idx.empty()) return x;
    std::size_t nv = F.ring().nvars();
    int terms = 1 + int(rng() % std::max(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        int i = idx[rng() % idx.size()];
        long sign = (rng() & 1) ? 1 : -1;
        unsigned kind = rng() % 4;
        Polynomial c = Polynomial(Rational(sign), nv);
        if (kind >= 2 && nv > 0) c = Polynomial::variable(nv, rng() % nv).scaled(Rational(sign));
        if (kind == 3 && nv > 0) c = c * Polynomial::variable(nv, rng() % nv);
        x.add_term(i, RF(c));
    }
    return x;
}

Element reduce_mod(const Element& x, const std::vector<Multidegree>& ideal) {
    Element r;
    for (const auto& [i, c] : x.entries()) {
        if (!c.is_polynomial()) throw MathError("reduction modulo an ideal needs polynomial coefficients");
        r.add_term(i, RF(reduce_mod_monomials(c.num(), ideal)));
    }
    return r;
}

}  // namespace mdg
