#include <algorithm>
#include <sstream>

#include "mdg/complex.hpp"

namespace mdg {

Element Element::basis(int i, RF c) {
    Element x;
    if (!c.is_zero()) x.e_.push_back({i, std::move(c)});
    return x;
}

RF Element::coeff(int i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, int k) { return a.first < k; });
    return it != e_.end() && it->first == i ? it->second : RF();
}

Element& Element::add_term(int i, const RF& c) {
    if (c.is_zero()) return *this;
    auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, int k) { return a.first < k; });
    if (it != e_.end() && it->first == i) {
        it->second += c;
        if (it->second.is_zero()) e_.erase(it);
    } else {
        e_.insert(it, {i, c});
    }
    return *this;
}

Element& Element::add(const Element& o, const RF& c) {
    if (o.e_.empty() || c.is_zero()) return *this;
    std::vector<Entry> out;
    out.reserve(e_.size() + o.e_.size());
    std::size_t i = 0, j = 0;
    bool unit = c.is_one();
    while (i < e_.size() || j < o.e_.size()) {
        if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
            out.push_back(std::move(e_[i++]));
        } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
            out.push_back({o.e_[j].first, unit ? o.e_[j].second : o.e_[j].second * c});
            ++j;
        } else {
            RF s = e_[i].second + (unit ? o.e_[j].second : o.e_[j].second * c);
            if (!s.is_zero()) out.push_back({e_[i].first, std::move(s)});
            ++i;
            ++j;
        }
    }
    e_ = std::move(out);
    return *this;
}

Element Element::scaled(const RF& c) const {
    if (c.is_zero()) return {};
    Element x(*this);
    for (auto& [i, v] : x.e_) v *= c;
    return x;
}

FreeComplex::FreeComplex(std::string name, Ring ring) : name_(std::move(name)), ring_(std::move(ring)) {
    basis_.push_back({"1", 0, Multidegree(ring_.nvars())});
    d_.emplace_back();
}

void FreeComplex::set_ring(Ring r) {
    std::size_t n = r.nvars();
    if (n < ring_.nvars()) throw RingMismatch("cannot drop ring variables from a complex");
    ring_ = std::move(r);
    for (auto& b : basis_) b.mdeg.e.resize(n, 0);
    for (auto& dv : d_) {
        Element w;
        for (const auto& [i, c] : dv.entries())
            w.add_term(i, RF(c.num().extended(n), c.den().extended(n)));
        dv = std::move(w);
    }
    scalar_ready_ = false;
}

int FreeComplex::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return static_cast<int>(i);
    return -1;
}

int FreeComplex::max_degree() const { return basis_.back().degree; }

std::vector<int> FreeComplex::indices_in_degree(int k) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].degree == k) r.push_back(static_cast<int>(i));
    return r;
}

int FreeComplex::add_basis(const std::string& name, int degree, std::optional<Multidegree> mdeg) {
    if (degree < 1) throw StructureError("basis element " + name + " must have degree >= 1");
    if (index_of(name) >= 0) throw StructureError("duplicate basis element " + name);
    if (degree < basis_.back().degree)
        throw StructureError("basis element " + name +
                             " breaks the ordering rule: declare basis elements in nondecreasing degree");
    if (!mdeg) labeled_ = false;
    Multidegree m = mdeg ? *mdeg : Multidegree(ring_.nvars());
    if (m.size() != ring_.nvars()) throw RingMismatch("multidegree of " + name + " has the wrong length");
    basis_.push_back({name, degree, m});
    d_.emplace_back();
    scalar_ready_ = false;
    return static_cast<int>(basis_.size() - 1);
}

void FreeComplex::set_d(int i, Element v) {
    for (const auto& [j, c] : v.entries())
        if (basis_[j].degree != basis_[i].degree - 1)
            throw StructureError("d(" + basis_[i].name + ") has a term " + basis_[j].name + " of the wrong degree");
    d_[i] = std::move(v);
    scalar_ready_ = false;
}

Element FreeComplex::apply_d(const Element& x) const {
    Element r;
    for (const auto& [i, c] : x.entries())
        if (basis_[i].degree > 0) r.add(d_[i], c);
    return r;
}

std::map<Multidegree, Element> FreeComplex::split_multidegrees(const Element& x) const {
    std::map<Multidegree, Element> out;
    std::size_t n = ring_.nvars();
    for (const auto& [i, c] : x.entries()) {
        if (!c.den().is_monomial()) throw MathError("coefficient is not a monomial ratio; no multidegree");
        Multidegree dexp = c.den().lead().exp;
        dexp.e.resize(n, 0);
        for (const auto& t : c.num().terms()) {
            Multidegree a = t.exp;
            a.e.resize(n, 0);
            Multidegree b = basis_[i].mdeg + a - dexp;
            RF piece(Polynomial::monomial(a, t.coef), c.den());
            out[b].add_term(i, piece);
        }
    }
    return out;
}

std::optional<Multidegree> FreeComplex::homogeneous_mdeg(const Element& x) const {
    auto parts = split_multidegrees(x);
    if (parts.size() != 1) return std::nullopt;
    return parts.begin()->first;
}

bool FreeComplex::is_multigraded() const {
    if (!labeled_) return false;
    for (std::size_t i = 1; i < basis_.size(); ++i) {
        for (const auto& [j, c] : d_[i].entries()) {
            if (!c.is_polynomial() || !c.num().is_monomial()) return false;
            Multidegree a = c.num().lead().exp;
            a.e.resize(ring_.nvars(), 0);
            if (basis_[j].mdeg + a != basis_[i].mdeg) return false;
        }
    }
    return true;
}

const std::vector<std::vector<std::pair<int, Rational>>>& FreeComplex::scalar_d() const {
    if (!scalar_ready_) {
        if (!is_multigraded()) throw StructureError("complex " + name_ + " is not multigraded");
        scalar_d_.assign(basis_.size(), {});
        for (std::size_t i = 1; i < basis_.size(); ++i)
            for (const auto& [j, c] : d_[i].entries()) scalar_d_[i].push_back({j, c.num().lead().coef});
        scalar_ready_ = true;
    }
    return scalar_d_;
}

Multidegree FreeComplex::lcm_all() const {
    Multidegree m(ring_.nvars());
    for (const auto& b : basis_) m = m.lcm(b.mdeg);
    return m;
}

std::string FreeComplex::element_string(const Element& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x.entries()) {
        bool neg = false;
        std::string body;
        if (i == 0) {
            RF v = c;
            if (v.is_polynomial() && v.num().is_monomial() && v.num().lead().coef < 0) {
                neg = true;
                v = -v;
            }
            body = v.to_string(ring_);
            if (v.num().size() > 1) body = "(" + body + ")";
        } else {
            body = coefficient_prefix(c, ring_, false, neg) + basis_[i].name;
        }
        if (first) os << (neg ? "-" : "") << body;
        else os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

QVector scalar_vector(const FreeComplex& F, const Element& x, const Multidegree& b) {
    QVector v(F.size());
    std::size_t n = F.ring().nvars();
    for (const auto& [i, c] : x.entries()) {
        if (!c.is_monomial_ratio()) throw MathError("element is not multihomogeneous");
        Multidegree a = c.num().lead().exp, dd = c.den().lead().exp;
        a.e.resize(n, 0);
        dd.e.resize(n, 0);
        if (F.mdeg(i) + a - dd != b) throw MathError("element is not homogeneous of the requested multidegree");
        v[i] = c.num().lead().coef;
    }
    return v;
}

Element from_scalar_vector(const FreeComplex& F, const QVector& v, const Multidegree& b) {
    Element x;
    std::size_t n = F.ring().nvars();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Multidegree up(n), down(n);
        for (std::size_t j = 0; j < n; ++j) {
            int32_t e = b[j] - F.mdeg(static_cast<int>(i))[j];
            (e >= 0 ? up[j] : down[j]) = e >= 0 ? e : -e;
        }
        RF c = down.is_zero() ? RF(Polynomial::monomial(up, v[i]))
                              : RF(Polynomial::monomial(up, v[i]), Polynomial::monomial(down));
        x.add_term(static_cast<int>(i), c);
    }
    return x;
}

Report check_complex(const FreeComplex& F) {
    Report rep;
    for (std::size_t i = 1; i < F.size(); ++i) {
        Element dd = F.apply_d(F.d(static_cast<int>(i)));
        if (!dd.is_zero()) {
            rep.fail("d^2(" + F.basis(static_cast<int>(i)).name + ") = " + F.element_string(dd) + " != 0");
            break;
        }
    }
    if (F.has_mdeg_labels()) {
        for (std::size_t i = 1; i < F.size(); ++i) {
            for (const auto& [j, c] : F.d(static_cast<int>(i)).entries()) {
                bool good = c.is_polynomial() && c.num().is_monomial();
                if (good) {
                    Multidegree a = c.num().lead().exp;
                    a.e.resize(F.ring().nvars(), 0);
                    good = F.mdeg(j) + a == F.mdeg(static_cast<int>(i));
                }
                if (!good) {
                    rep.fail("d(" + F.basis(static_cast<int>(i)).name + ") does not respect the multidegree at " +
                             F.basis(j).name);
                    return rep;
                }
            }
        }
    }
    return rep;
}

GradedPiece graded_piece(const FreeComplex& F, const Multidegree& b) {
    GradedPiece P;
    P.b = b;
    const auto& sd = F.scalar_d();
    std::map<int, std::map<int, std::size_t>> pos;
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (!F.mdeg(static_cast<int>(i)).divides(b)) continue;
        int k = F.degree(static_cast<int>(i));
        pos[k][static_cast<int>(i)] = P.basis[k].size();
        P.basis[k].push_back(static_cast<int>(i));
    }
    for (auto& [k, idx] : P.basis) {
        if (k == 0) continue;
        auto& M = P.matrices[k];
        std::size_t cols = P.basis.count(k - 1) ? P.basis[k - 1].size() : 0;
        for (int i : idx) {
            QVector row(cols);
            for (const auto& [j, c] : sd[i]) row[pos[k - 1].at(j)] = c;
            M.push_back(std::move(row));
        }
    }
    return P;
}

std::vector<Multidegree> divisors_of(const Multidegree& bound) {
    std::vector<Multidegree> out;
    Multidegree cur(bound.size());
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < bound.size() && cur[i] == bound[i]) cur[i++] = 0;
        if (i == bound.size()) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), [](const Multidegree& a, const Multidegree& b) { return grlex_compare(a, b) < 0; });
    return out;
}

EchelonBasis full_piece(const FreeComplex& F, int k, const Multidegree& b) {
    EchelonBasis E(F.size());
    for (int i : F.indices_in_degree(k)) {
        if (!F.mdeg(i).divides(b)) continue;
        QVector v(F.size());
        v[i] = 1;
        E.insert(std::move(v));
    }
    return E;
}

QVector apply_scalar_d(const FreeComplex& F, const QVector& v) {
    const auto& sd = F.scalar_d();
    QVector w(F.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (const auto& [j, c] : sd[i]) w[j] += v[i] * c;
    }
    return w;
}

EchelonBasis image_under_d(const FreeComplex& F, const EchelonBasis& V) {
    EchelonBasis img(F.size());
    for (const auto& row : V.rows()) img.insert(apply_scalar_d(F, row));
    return img;
}

EchelonBasis cycles_in(const FreeComplex& F, const EchelonBasis& V) {
    std::vector<QVector> imgs;
    imgs.reserve(V.rank());
    for (const auto& row : V.rows()) imgs.push_back(apply_scalar_d(F, row));
    return kernel_of(V.rows(), imgs, F.size());
}

}  // namespace mdg
