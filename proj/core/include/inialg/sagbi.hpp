#ifndef INIALG_SAGBI_HPP
#define INIALG_SAGBI_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "inialg/construction.hpp"
#include "inialg/laurent.hpp"
#include "inialg/orders.hpp"

namespace inialg {

/// Reduced row echelon form of a list of polynomials, with columns sorted
/// descending by the term order. The pivot exponents are exactly the
/// degree set of the spanned vector space, and the reduced basis realizes
/// each degree by a monic representative.
struct EchelonResult {
    std::set<ExponentVector> pivots;
    std::vector<LaurentPoly> basis; // pivot order, descending
};

EchelonResult echelon_pivots(const std::vector<LaurentPoly>& polys, const TermOrder& order);

/// Fully reduces f against an echelon basis (leading-term cancellation
/// only). The result is zero iff f lies in the spanned space.
LaurentPoly reduce_against(LaurentPoly f, const EchelonResult& echelon, const TermOrder& order);

enum class DegreeOrigin { Origin, PhiI, J };

struct GradeGenerators {
    Rational grade;
    int count = 0;
    std::vector<LaurentPoly> representatives;
};

/// The truncated degree monoid of A with the {0} | deg phi(I) | deg J
/// partition, minimal monoid generators within the truncation, and (for
/// graded instances) the new-algebra-generator counts per grade.
struct DegreeReport {
    std::vector<QVector> order_rows;
    Rational bound;
    std::vector<ExponentVector> degrees; // canonical (lex) order
    std::map<ExponentVector, DegreeOrigin> partition;
    std::vector<ExponentVector> monoid_min_gens;
    std::vector<GradeGenerators> algebra_new_gens; // graded instances only
    bool truncated = false;                        // true for non-graded instances
};

DegreeReport degree_monoid(const Construction& c, const TermOrder& order, const Rational& D);

/// Minimal algebra generators per grade, for graded instances: per grade a
/// maximal set of span elements whose pivots are independent from products
/// of the previously chosen generators. Representatives are reduced and
/// chosen deterministically (smallest grade, then order-smallest pivot).
/// Throws on non-graded instances.
std::vector<GradeGenerators> algebra_min_generators(const Construction& c,
                                                    const TermOrder& order, const Rational& D);

struct SubductionStep {
    Rational coeff;
    std::vector<unsigned> exponents; // one per element of S
};

struct SubductionResult {
    LaurentPoly remainder;
    std::vector<SubductionStep> certificate;
    bool step_limit_hit = false;
};

/// Subduction of f against S: repeatedly cancels the leading term of f by
/// a scalar multiple of a product of elements of S whenever deg f
/// decomposes as a nonnegative integer combination of the deg s (decided
/// by bounded search). Stops at zero, at an undecomposable leading term,
/// or at the step limit (flagged). The certificate satisfies
///   f = remainder + sum coeff * prod S^exponents
/// exactly.
SubductionResult subduce(const LaurentPoly& f, const std::vector<LaurentPoly>& S,
                         const TermOrder& order,
                         std::optional<long> step_limit = std::nullopt);

/// Exact value of a subduction certificate.
LaurentPoly certificate_value(const std::vector<LaurentPoly>& S,
                              const std::vector<SubductionStep>& certificate, int dim);

} // namespace inialg

#endif
