#ifndef INIALG_ANALYSIS_HPP
#define INIALG_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "inialg/construction.hpp"
#include "inialg/sagbi.hpp"

namespace inialg {

/// Two distinguished embedding roles for the asymmetric diagnostics
/// (mu_map, complement_scan). Defaults to the first two embeddings.
struct AnalysisRoles {
    int psi1 = 0;
    int psi2 = 1;
};

/// The index i with deg psi_i(p) strictly largest among all embeddings;
/// the image supports are disjoint across embeddings, so the maximum is
/// unique and coincides with deg psi(p). That identity is asserted.
/// p must be nonzero and constant-free.
int classify_I(const Construction& c, const LaurentPoly& p, const TermOrder& order);

struct MuRecord {
    ExponentVector a;                  // in truncated deg psi2(I_{<=,2})
    std::vector<ExponentVector> M;     // truncated set of reachable psi1-degrees
    ExponentVector mu;                 // order-minimum of M
    bool in_deg_psi_I = false;         // mu inside truncated deg psi(I)?
    bool truncated = false;            // family touches the bound
};

struct MuReport {
    AnalysisRoles roles;
    Rational bound;
    std::vector<MuRecord> records; // a ascending in the order
    bool mu_injective = true;
    std::string claim;
};

/// For each truncated degree a of psi2 on its dominant slice, minimize the
/// psi1-degree over the affine family of elements with deg psi = a (two
/// echelon stages over the filtered source space). Each minimum should
/// avoid deg psi(I) and the map a -> mu(a) should be injective; both are
/// reported, not assumed.
MuReport mu_map(const Construction& c, const TermOrder& order, const Rational& D,
                AnalysisRoles roles = {});

enum class Verdict { CompleteConsistent, IncompleteWitnessed, Inconclusive };

std::string verdict_name(Verdict v);

struct FaceCompleteness {
    int face = 0;
    std::vector<ExponentVector> face_part;   // truncated deg psi(I) on this face, at D
    std::vector<ExponentVector> target;      // truncated deg psi_i(I), at D
    bool part_empty = false;                 // at both bounds, with nonempty target
    bool cones_equal = false;                // at both bounds
    bool proper_stable = false;              // proper subcone, stable across bounds
    Verdict verdict = Verdict::Inconclusive;
};

struct CompletenessReport {
    Rational bound;
    Rational second_bound;
    std::vector<FaceCompleteness> faces;
    Verdict verdict = Verdict::Inconclusive;
    std::string claim;
};

/// Face-by-face comparison of the cone generated by the dominant-slice
/// degrees against the cone of all truncated psi_i degrees, evaluated at
/// the given bound and at a strictly larger one. A starved or stably
/// proper face witnesses incompleteness; matching cones at both bounds are
/// consistent with completeness; anything else is inconclusive.
CompletenessReport completeness_report(const Construction& c, const TermOrder& order,
                                       const Rational& D);

struct ComplementRow {
    Rational grade;
    long count = 0; // cumulative complement size up to this grade
};

struct ComplementReport {
    AnalysisRoles roles;
    Rational bound;
    std::vector<ComplementRow> rows;
    bool strictly_increasing = false;
    bool stabilized = false;
    std::string claim;
};

/// Growth table of |truncated deg psi1(R) \ truncated deg psi(I)|,
/// cumulative per grade, origin excluded. Strict growth is the infinite-
/// complement signature; stabilization the finite-complement one.
ComplementReport complement_scan(const Construction& c, const TermOrder& order,
                                 const Rational& D, AnalysisRoles roles = {});

enum class HypothesisVerdict { Holds, Fails, Inconclusive };

struct EmbeddingHypothesis {
    int embedding = 0;
    HypothesisVerdict verdict = HypothesisVerdict::Inconclusive;
    bool monomial_fast_path = false; // monomial order + polynomial images
    std::optional<int> witness_gen;  // generator with deg below 0, when Fails
};

struct HypothesisReport {
    std::vector<EmbeddingHypothesis> embeddings;
    bool any_holds = false;
    std::string claim;
};

/// Checks min deg psi_i(R) = 0 per embedding: Holds when every support
/// point of every generator image is above 0 (or via the fast path:
/// monomial order with polynomial images); Fails when some generator image
/// has degree below 0; Inconclusive otherwise.
HypothesisReport check_main_hypothesis(const Construction& c, const TermOrder& order);

struct FingerprintClass {
    std::vector<int> members;             // indices into the order list
    std::vector<ExponentVector> degrees;  // the shared truncated degree set
};

struct FingerprintReport {
    Rational bound;
    std::vector<FingerprintClass> classes;
    std::string claim;
};

/// Groups orders by identical truncated degree sets of A. Initial algebras
/// are determined by their degree monoids, so equal truncated degree sets
/// mean equal truncated initial algebras.
FingerprintReport fingerprint_orders(const Construction& c,
                                     const std::vector<TermOrder>& orders, const Rational& D);

/// An order of the form w - lambda * omega_face (completed to full rank)
/// with lambda escalated until targets[face] is strictly largest among the
/// targets. Default targets: lex-leading exponents of the embedded first
/// generator, one per face.
TermOrder face_biased_order(const Construction& c, int face, const QVector& base_weight,
                            const std::vector<ExponentVector>& targets = {});

} // namespace inialg

#endif
