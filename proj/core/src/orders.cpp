#include "inialg/orders.hpp"

#include <set>

#include "inialg/errors.hpp"
#include "inialg/qlinalg.hpp"

namespace inialg {

TermOrder::TermOrder(std::vector<QVector> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw Error("term order needs at least one weight row");
    dim_ = static_cast<int>(rows_[0].size());
    if (dim_ < 1) throw DimensionError("term order needs dimension >= 1");
    for (const auto& r : rows_)
        if (static_cast<int>(r.size()) != dim_)
            throw DimensionError("inconsistent row lengths in term order");
    if (rank(rows_, dim_) != dim_)
        throw Error("weight matrix has rank < n; distinct vectors could tie");
}

TermOrder TermOrder::lex(int dim) {
    std::vector<QVector> rows;
    for (int i = 0; i < dim; ++i) {
        QVector row(static_cast<std::size_t>(dim), Rational(0));
        row[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(row));
    }
    return TermOrder(std::move(rows));
}

TermOrder TermOrder::from_weights(std::vector<QVector> rows) {
    if (rows.empty()) throw Error("from_weights needs at least one row");
    int dim = static_cast<int>(rows[0].size());
    RowSpace space(dim);
    for (const auto& r : rows) space.insert(r);
    for (int i = 0; i < dim && space.rank() < dim; ++i) {
        QVector unit(static_cast<std::size_t>(dim), Rational(0));
        unit[static_cast<std::size_t>(i)] = 1;
        if (space.insert(unit)) rows.push_back(std::move(unit));
    }
    return TermOrder(std::move(rows));
}

Ordering TermOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
    if (a.dim() != dim_ || b.dim() != dim_)
        throw DimensionError("comparing vectors of dimension " + std::to_string(a.dim()) +
                             "/" + std::to_string(b.dim()) + " under order of dimension " +
                             std::to_string(dim_));
    for (const auto& row : rows_) {
        Rational da = dot(row, a);
        Rational db = dot(row, b);
        int c = cmp(da, db);
        if (c < 0) return Ordering::Less;
        if (c > 0) return Ordering::Greater;
    }
    return Ordering::Equal;
}

bool TermOrder::is_monomial_order() const {
    for (int col = 0; col < dim_; ++col) {
        for (const auto& row : rows_) {
            int s = sign(row[static_cast<std::size_t>(col)]);
            if (s == 0) continue;
            if (s < 0) return false;
            break; // first nonzero entry in this column is positive
        }
    }
    return true;
}

ExponentVector extreme_of_set(const TermOrder& order,
                              std::span<const ExponentVector> set,
                              Extreme which) {
    if (set.empty()) throw Error("extreme_of_set on empty set");
    ExponentVector best = set[0];
    for (std::size_t i = 1; i < set.size(); ++i) {
        Ordering c = order.compare(set[i], best);
        if ((which == Extreme::Max && c == Ordering::Greater) ||
            (which == Extreme::Min && c == Ordering::Less))
            best = set[i];
    }
    return best;
}

QVector find_generic_weight(const std::vector<ExponentVector>& F,
                            const TermOrder& order) {
    std::set<ExponentVector> points(F.begin(), F.end());
    if (points.size() <= 1) return order.rows()[0];

    // For each ordered pair a < b let v_j = row_j.(b - a); the first
    // nonzero v_j is positive. eps below the per-pair threshold
    // v_j0 / (1 + sum_{j>j0} |v_j|) keeps sum_j eps^j v_j positive.
    Rational eps(1, 2);
    std::vector<ExponentVector> pts(points.begin(), points.end());
    const auto& rows = order.rows();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (i == k) continue;
            if (order.compare(pts[i], pts[k]) != Ordering::Less) continue;
            ExponentVector d = pts[k] - pts[i];
            std::size_t j0 = 0;
            Rational lead(0);
            for (; j0 < rows.size(); ++j0) {
                lead = dot(rows[j0], d);
                if (sign(lead) != 0) break;
            }
            Rational tail(0);
            for (std::size_t j = j0 + 1; j < rows.size(); ++j)
                tail += abs(dot(rows[j], d));
            Rational bound = lead / (1 + tail);
            if (bound < eps) eps = bound / 2;
        }
    }

    auto build = [&](const Rational& e) {
        QVector w(static_cast<std::size_t>(order.dim()), Rational(0));
        Rational scale = e;
        for (const auto& row : rows) {
            for (std::size_t j = 0; j < w.size(); ++j) w[j] += scale * row[j];
            scale *= e;
        }
        return w;
    };
    auto agrees = [&](const QVector& w) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (i == k) continue;
                bool lt = order.compare(pts[i], pts[k]) == Ordering::Less;
                if (lt != (dot(w, pts[i]) < dot(w, pts[k]))) return false;
            }
        return true;
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        QVector w = build(eps);
        if (agrees(w)) return w;
        eps /= 2;
    }
    throw Error("find_generic_weight failed to converge"); // unreachable by construction
}

} // namespace inialg
