#include <algorithm>

#include "mdg/linalg.hpp"

namespace mdg {

bool is_zero_vector(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool EchelonBasis::reduce(QVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = v[pivots_[r]];
        if (c == 0) continue;
        const QVector& row = rows_[r];
        for (std::size_t j = 0; j < ncols_; ++j)
            if (row[j] != 0) v[j] -= c * row[j];
    }
    return is_zero_vector(v);
}

bool EchelonBasis::insert(QVector v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    Rational inv = 1 / v[p];
    for (auto& q : v) q *= inv;
    // Clear the new pivot column from existing rows to stay fully reduced.
    for (auto& row : rows_) {
        Rational c = row[p];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (v[j] != 0) row[j] -= c * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool EchelonBasis::insert_all(const std::vector<QVector>& vs) {
    bool grew = false;
    for (const auto& v : vs) grew |= insert(v);
    return grew;
}

std::size_t matrix_rank(std::vector<QVector> rows) {
    if (rows.empty()) return 0;
    EchelonBasis e(rows[0].size());
    for (auto& r : rows) e.insert(std::move(r));
    return e.rank();
}

EchelonBasis span_sum(const EchelonBasis& a, const EchelonBasis& b) {
    EchelonBasis s = a;
    s.insert_all(b.rows());
    return s;
}

namespace {

// Rows with a pivot past the first block have a zero first block; return their tails.
EchelonBasis tails(const EchelonBasis& joined, std::size_t split, std::size_t ncols) {
    EchelonBasis out(ncols);
    for (std::size_t r = 0; r < joined.rank(); ++r) {
        if (joined.pivots()[r] < split) continue;
        const QVector& row = joined.rows()[r];
        out.insert(QVector(row.begin() + static_cast<long>(split), row.end()));
    }
    return out;
}

}  // namespace

EchelonBasis intersect(const EchelonBasis& a, const EchelonBasis& b) {
    std::size_t n = a.ncols();
    if (a.rank() == 0 || b.rank() == 0) return EchelonBasis(n);
    EchelonBasis z(2 * n);
    for (const auto& row : a.rows()) {
        QVector v(row);
        v.insert(v.end(), row.begin(), row.end());
        z.insert(std::move(v));
    }
    for (const auto& row : b.rows()) {
        QVector v(row);
        v.resize(2 * n, Rational(0));
        z.insert(std::move(v));
    }
    return tails(z, n, n);
}

EchelonBasis kernel_of(const std::vector<QVector>& src, const std::vector<QVector>& images, std::size_t src_cols) {
    if (src.empty()) return EchelonBasis(src_cols);
    std::size_t m = images[0].size();
    EchelonBasis z(m + src_cols);
    for (std::size_t i = 0; i < src.size(); ++i) {
        QVector v(images[i]);
        v.insert(v.end(), src[i].begin(), src[i].end());
        z.insert(std::move(v));
    }
    return tails(z, m, src_cols);
}

}  // namespace mdg
