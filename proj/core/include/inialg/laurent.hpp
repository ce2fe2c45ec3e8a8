#ifndef INIALG_LAURENT_HPP
#define INIALG_LAURENT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "inialg/exponent.hpp"
#include "inialg/orders.hpp"
#include "inialg/rational.hpp"

namespace inialg {

/// Sparse Laurent polynomial over Q: a finite map from exponent vectors to
/// nonzero rational coefficients. The zero polynomial is the empty map and
/// a first-class value. Terms are stored in the canonical (lexicographic)
/// key order, so iteration and serialization are deterministic.
class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit LaurentPoly(int dim) : dim_(dim) {
        if (dim < 1) throw DimensionError("polynomial needs dimension >= 1");
    }

    static LaurentPoly monomial(const ExponentVector& exp, const Rational& coeff);
    static LaurentPoly constant(int dim, Rational value);
    static LaurentPoly variable(int dim, int i); // x_i
    static LaurentPoly from_terms(int dim,
                                  const std::vector<std::pair<ExponentVector, Rational>>& terms);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const ExponentVector& e) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly pow(unsigned long k) const;

    /// True iff the polynomial is a single term (every such Laurent
    /// polynomial is a unit of the Laurent ring).
    bool is_unit_monomial() const { return terms_.size() == 1; }
    LaurentPoly unit_inverse() const;

    std::vector<ExponentVector> support() const;

    /// Leading term: the order-maximal exponent of the support with its
    /// coefficient. Throws on the zero polynomial.
    std::pair<ExponentVector, Rational> leading(const TermOrder& order) const;

    bool operator==(const LaurentPoly& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }
    /// Arbitrary but deterministic total order, for dedup and sorting.
    bool operator<(const LaurentPoly& o) const;

    std::string to_string() const;

private:
    void add_term(const ExponentVector& e, const Rational& c);

    int dim_;
    TermMap terms_;
};

/// Image of p under the algebra homomorphism sending source variable j to
/// images[j]. Source and image dimensions may differ. A negative source
/// exponent requires the corresponding image to be a unit monomial.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images);

} // namespace inialg

#endif
