#ifndef INIALG_ORDERS_HPP
#define INIALG_ORDERS_HPP

#include <span>
#include <vector>

#include "inialg/exponent.hpp"
#include "inialg/rational.hpp"

namespace inialg {

enum class Ordering { Less, Equal, Greater };

/// A total group order on Z^n, represented by a rational weight matrix of
/// rank n. Vectors are compared by the sign of the first row whose dot
/// products differ; full rank guarantees that distinct vectors never tie,
/// and linearity of the dot product makes the order translation invariant.
///
/// Every total group order restricted to a finite set of exponents is
/// realized by such a matrix (see find_generic_weight), so this class is
/// the library-wide stand-in for abstract group orders.
class TermOrder {
public:
    /// Rows must have uniform length n and rank n; throws otherwise.
    explicit TermOrder(std::vector<QVector> rows);

    /// Identity matrix: plain lexicographic order, largest variable first.
    static TermOrder lex(int dim);

    /// Weight rows completed, if rank-deficient, by appending the identity
    /// rows that increase the rank, in index order. The result agrees with
    /// the pure weight comparison whenever the given rows already
    /// distinguish two vectors.
    static TermOrder from_weights(std::vector<QVector> rows);

    int dim() const { return dim_; }
    const std::vector<QVector>& rows() const { return rows_; }

    Ordering compare(const ExponentVector& a, const ExponentVector& b) const;
    bool less(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) == Ordering::Less;
    }
    bool greater(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) == Ordering::Greater;
    }

    /// True iff 0 is the minimum of (Z>=0)^n, i.e. 0 precedes every unit
    /// vector: for each column the first row with a nonzero entry there
    /// must be positive.
    bool is_monomial_order() const;

    bool operator==(const TermOrder& o) const {
        return dim_ == o.dim_ && rows_ == o.rows_;
    }

private:
    int dim_;
    std::vector<QVector> rows_;
};

enum class Extreme { Min, Max };

/// The unique order-minimum or -maximum of a nonempty set.
ExponentVector extreme_of_set(const TermOrder& order,
                              std::span<const ExponentVector> set,
                              Extreme which);

/// A rational weight vector w agreeing with the order on the finite set F:
/// w.a < w.b iff a < b for all a, b in F. Computed as sum_i eps^i * row_i
/// with eps a positive rational chosen small enough (from the difference
/// set of F) that no comparison flips; the result is verified against
/// every pair before returning.
QVector find_generic_weight(const std::vector<ExponentVector>& F,
                            const TermOrder& order);

} // namespace inialg

#endif
