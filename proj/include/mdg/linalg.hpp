#pragma once

#include <vector>

#include "mdg/ring.hpp"

namespace mdg {

using QVector = std::vector<Rational>;

// Row space kept in fully reduced echelon form.
class EchelonBasis {
public:
    EchelonBasis() = default;
    explicit EchelonBasis(std::size_t ncols) : ncols_(ncols) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<QVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Reduces v against the basis in place; returns true if v became zero.
    bool reduce(QVector& v) const;
    bool contains(QVector v) const { return reduce(v); }
    // Returns true if the span grew.
    bool insert(QVector v);
    bool insert_all(const std::vector<QVector>& vs);

private:
    std::size_t ncols_ = 0;
    std::vector<QVector> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t matrix_rank(std::vector<QVector> rows);
bool is_zero_vector(const QVector& v);

EchelonBasis span_sum(const EchelonBasis& a, const EchelonBasis& b);
EchelonBasis intersect(const EchelonBasis& a, const EchelonBasis& b);
// Span of the combinations sum c_i src_i with sum c_i images_i = 0.
EchelonBasis kernel_of(const std::vector<QVector>& src, const std::vector<QVector>& images, std::size_t src_cols);

}  // namespace mdg
