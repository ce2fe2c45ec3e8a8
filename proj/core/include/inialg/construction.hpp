#ifndef INIALG_CONSTRUCTION_HPP
#define INIALG_CONSTRUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "inialg/cones.hpp"
#include "inialg/laurent.hpp"

namespace inialg {

/// Input data for the subalgebra construction:
///
///   - a source algebra R = k + I presented by nonconstant generators
///     r_1..r_N (I is the span of the nonconstant monomials in the r_j),
///   - embeddings phi_1..phi_r of the source into the Laurent ring, given
///     by the images of the source variables, one list per embedding,
///   - a cone with r distinguished faces such that supp phi_i(r_j) lies in
///     the open region of face i, and a finite set U supported in the open
///     interior,
///   - a positive filtration functional rho, and optionally a grading
///     functional g making every phi_i(r_j), u and phi(r_j) homogeneous.
///
/// The input conditions are named (A1), (A2), (A3), (C-face) and
/// rho-positivity; validation reports which one failed.
///
/// Checking supports at generator level is enough for all of I: the open
/// face regions are closed under addition of cone points, and supports of
/// products and sums of the embedded generators lie in sumsets and unions
/// of the generator supports, so they cannot leave the region.
struct ConstructionSpec {
    std::string name;
    int source_dim = 0; // m
    int dim = 0;        // n
    std::vector<LaurentPoly> source_gens;
    std::vector<std::vector<LaurentPoly>> embeddings;
    ConeWithFaces cone;
    std::vector<LaurentPoly> U;
    QVector filtration;
    std::optional<QVector> grading;
};

/// The validated construction. Derived data:
///   b_gens      phi_i(r_j) for all i,j, followed by U  (generators of B)
///   j_gens      phi_{i1}(r_{j1}) * phi_{i2}(r_{j2}) for i1 < i2, and U
///   a_poly_gens phi(r_1)..phi(r_N), where phi = phi_1 + ... + phi_r
/// so that A = k[a_poly_gens] + J = k + phi(I) + J.
class Construction {
public:
    static Construction validate(ConstructionSpec spec);

    const ConstructionSpec& spec() const { return spec_; }
    const ConeWithFaces& cone() const { return spec_.cone; }
    int dim() const { return spec_.dim; }
    int source_dim() const { return spec_.source_dim; }
    int embedding_count() const { return static_cast<int>(spec_.embeddings.size()); }
    int source_gen_count() const { return static_cast<int>(spec_.source_gens.size()); }
    bool is_graded() const { return spec_.grading.has_value(); }

    const std::vector<LaurentPoly>& b_generators() const { return b_gens_; }
    const std::vector<LaurentPoly>& j_generators() const { return j_gens_; }
    const std::vector<LaurentPoly>& a_poly_generators() const { return a_poly_gens_; }
    const LaurentPoly& embedded_gen(int i, int j) const {
        return phi_images_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// phi_i applied to an arbitrary source polynomial.
    LaurentPoly psi_apply(int i, const LaurentPoly& p) const;
    /// phi = phi_1 + ... + phi_r (k-linear, not a ring map).
    LaurentPoly phi_apply(const LaurentPoly& p) const;

    /// max of rho over the support; 0 for the zero polynomial.
    Rational rho_degree(const LaurentPoly& f) const;
    /// the grading value of a homogeneous element when the instance is
    /// graded, else the rho-degree.
    Rational grade_of(const LaurentPoly& f) const;

    /// Smallest possible rho-degree of phi(r^m) per unit of m_j: used to
    /// bound monomial enumeration.
    const QVector& gen_min_grades() const { return gen_min_grades_; }

private:
    explicit Construction(ConstructionSpec spec) : spec_(std::move(spec)) {}

    ConstructionSpec spec_;
    std::vector<std::vector<LaurentPoly>> phi_images_; // [i][j] = phi_i(r_j)
    std::vector<LaurentPoly> b_gens_;
    std::vector<LaurentPoly> j_gens_;
    std::vector<LaurentPoly> a_poly_gens_;
    QVector gen_min_grades_; // per source generator
    std::vector<std::string> warnings_;
};

/// A source monomial r^m (m a nonzero multi-index) together with its value
/// in the source ring and its image under phi. The image is obtained by
/// forming the product in the source ring first and applying the k-linear
/// phi to the result; expanding phi(r)^m instead would be wrong.
struct SourceMonomial {
    std::vector<unsigned> multi;
    LaurentPoly source;
    LaurentPoly image;
};

/// All source monomials whose phi-image has rho-degree <= D, enumerated in
/// graded-lex order on the multi-indices.
std::vector<SourceMonomial> source_monomials(const Construction& c, const Rational& D);

/// Like source_monomials but for a single embedding: images under phi_i,
/// bounded by the rho-degree of the phi_i image.
std::vector<SourceMonomial> psi_source_monomials(const Construction& c, int i,
                                                 const Rational& D);

struct SpanningSets {
    std::vector<LaurentPoly> phiI; // phi(r^m), rho-degree <= D
    std::vector<LaurentPoly> J;    // j_gen * (product of b_gens), rho-degree <= D
    std::vector<LaurentPoly> B;    // products of b_gens incl. 1, rho-degree <= D
    std::vector<LaurentPoly> A;    // {1} + phiI + J
    bool exact = false;            // true iff the instance is graded
};

/// Filtered spanning sets of A, J and B up to rho-degree D. For graded
/// instances these are exact graded pieces; otherwise they are increasing
/// approximations and reports built on them carry a truncation flag.
SpanningSets filtered_spanning_sets(const Construction& c, const Rational& D);

} // namespace inialg

#endif
