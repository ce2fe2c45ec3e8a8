#ifndef INIALG_QLINALG_HPP
#define INIALG_QLINALG_HPP

#include <vector>

#include "inialg/rational.hpp"

namespace inialg {

/// Incremental row space over Q: feed rows, query rank. Kept in reduced
/// form so insertion is O(rank * dim) rational operations.
class RowSpace {
public:
    explicit RowSpace(int dim) : dim_(dim) {}

    /// Returns true if the row was independent of the current span.
    bool insert(QVector row);

    bool contains(QVector row) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    // rows_ kept in echelon form, pivot columns strictly increasing.
    void reduce(QVector& row) const;

    int dim_;
    std::vector<QVector> rows_;
    std::vector<int> pivots_;
};

int rank(const std::vector<QVector>& rows, int dim);

} // namespace inialg

#endif
