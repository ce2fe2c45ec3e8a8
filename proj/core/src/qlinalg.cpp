#include "inialg/qlinalg.hpp"

#include <algorithm>

#include "inialg/errors.hpp"

namespace inialg {

void RowSpace::reduce(QVector& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        int p = pivots_[k];
        if (sign(row[static_cast<std::size_t>(p)]) == 0) continue;
        Rational factor = row[static_cast<std::size_t>(p)] / rows_[k][static_cast<std::size_t>(p)];
        for (int j = p; j < dim_; ++j)
            row[static_cast<std::size_t>(j)] -= factor * rows_[k][static_cast<std::size_t>(j)];
    }
}

bool RowSpace::insert(QVector row) {
    if (static_cast<int>(row.size()) != dim_)
        throw DimensionError("row of wrong dimension in RowSpace");
    reduce(row);
    int pivot = -1;
    for (int j = 0; j < dim_; ++j) {
        if (sign(row[static_cast<std::size_t>(j)]) != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) return false;
    // Keep rows sorted by pivot column so reduce() terminates in one pass.
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

bool RowSpace::contains(QVector row) const {
    if (static_cast<int>(row.size()) != dim_)
        throw DimensionError("row of wrong dimension in RowSpace");
    reduce(row);
    for (const auto& e : row)
        if (sign(e) != 0) return false;
    return true;
}

int rank(const std::vector<QVector>& rows, int dim) {
    RowSpace space(dim);
    for (const auto& r : rows) space.insert(r);
    return space.rank();
}

} // namespace inialg
