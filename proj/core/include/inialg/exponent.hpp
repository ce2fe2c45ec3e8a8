#ifndef INIALG_EXPONENT_HPP
#define INIALG_EXPONENT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "inialg/errors.hpp"
#include "inialg/rational.hpp"

namespace inialg {

/// A point of Z^n: the exponent of a Laurent monomial. Entries may be
/// negative. All vectors taking part in one computation share the same
/// dimension; mixing dimensions throws DimensionError.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<std::int64_t> coords)
        : coords_(std::move(coords)) {
        if (coords_.empty()) throw DimensionError("exponent vector needs dimension >= 1");
    }

    ExponentVector(std::initializer_list<std::int64_t> coords)
        : ExponentVector(std::vector<std::int64_t>(coords)) {}

    static ExponentVector zero(int dim) {
        return ExponentVector(std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0));
    }

    static ExponentVector unit(int dim, int i) {
        auto v = std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0);
        v.at(static_cast<std::size_t>(i)) = 1;
        return ExponentVector(std::move(v));
    }

    int dim() const { return static_cast<int>(coords_.size()); }
    std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& coords() const { return coords_; }

    bool is_zero() const {
        for (auto c : coords_)
            if (c != 0) return false;
        return true;
    }

    ExponentVector operator+(const ExponentVector& o) const {
        check_dim(o);
        auto v = coords_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.coords_[i];
        return ExponentVector(std::move(v));
    }

    ExponentVector operator-(const ExponentVector& o) const {
        check_dim(o);
        auto v = coords_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.coords_[i];
        return ExponentVector(std::move(v));
    }

    ExponentVector operator*(std::int64_t k) const {
        auto v = coords_;
        for (auto& c : v) c *= k;
        return ExponentVector(std::move(v));
    }

    ExponentVector operator-() const { return *this * -1; }

    bool operator==(const ExponentVector& o) const { return coords_ == o.coords_; }

    /// Lexicographic componentwise order. This is the canonical *storage*
    /// order used for map keys and serialization; term orders live in
    /// TermOrder, not here.
    std::strong_ordering operator<=>(const ExponentVector& o) const {
        check_dim(o);
        return coords_ <=> o.coords_;
    }

    std::int64_t l1_norm() const {
        std::int64_t s = 0;
        for (auto c : coords_) s += c < 0 ? -c : c;
        return s;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords_[i]);
        }
        return s + ")";
    }

private:
    void check_dim(const ExponentVector& o) const {
        if (coords_.size() != o.coords_.size())
            throw DimensionError("exponent vectors of dimension " +
                                 std::to_string(coords_.size()) + " and " +
                                 std::to_string(o.coords_.size()));
    }

    std::vector<std::int64_t> coords_;
};

inline Rational dot(const QVector& w, const ExponentVector& a) {
    if (static_cast<int>(w.size()) != a.dim())
        throw DimensionError("weight/exponent dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        acc += w[i] * static_cast<long>(a[static_cast<int>(i)]);
    return acc;
}

} // namespace inialg

#endif
