#ifndef INIALG_RATIONAL_HPP
#define INIALG_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "inialg/errors.hpp"

namespace inialg {

// All arithmetic in this library is exact: arbitrary-precision integers
// and rationals, no floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Canonicalized rational from an integer pair (mpq_class itself does not
/// reduce num/den passed to its constructor).
inline Rational rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("cannot parse rational '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline Rational dot(const QVector& w, const QVector& v) {
    if (w.size() != v.size())
        throw DimensionError("dot product of vectors with different dimensions");
    Rational acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * v[i];
    return acc;
}

inline QVector qvec(std::initializer_list<long> entries) {
    QVector v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

} // namespace inialg

#endif
