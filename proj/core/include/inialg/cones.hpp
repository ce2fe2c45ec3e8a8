#ifndef INIALG_CONES_HPP
#define INIALG_CONES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "inialg/exponent.hpp"
#include "inialg/rational.hpp"

namespace inialg {

enum class Region {
    Origin,       // the zero vector, kept as its own label
    Interior,     // in C, all face normals strictly positive
    FaceInterior, // in C, exactly one face normal vanishes
    BoundaryOther,// in C, vanishing pattern matches no single face
    Outside
};

struct Classification {
    Region region;
    int face = -1; // set iff region == FaceInterior

    bool operator==(const Classification&) const = default;
};

std::string region_name(const Classification& c);

/// Homogeneous Fourier-Motzkin: inequality description {h : h.x >= 0} of
/// the cone spanned by the given generators. Exact rational arithmetic;
/// rows are normalized and deduplicated but not irredundant.
std::vector<QVector> cone_inequalities(const std::vector<QVector>& generators, int dim);

/// A rational polyhedral cone C given by generators, together with r >= 2
/// distinguished faces given by their normal vectors. Construction checks
/// that every normal is nonnegative on every generator and that each
/// relatively open face region is nonempty (equivalently, that no chosen
/// face is contained in another); the witness point found for face i is
/// kept as probe(i).
class ConeWithFaces {
public:
    ConeWithFaces(std::vector<QVector> generators, std::vector<QVector> face_normals);

    int dim() const { return dim_; }
    int face_count() const { return static_cast<int>(normals_.size()); }
    const std::vector<QVector>& generators() const { return generators_; }
    const std::vector<QVector>& face_normals() const { return normals_; }
    const std::vector<QVector>& inequalities() const { return inequalities_; }
    const QVector& probe(int face) const { return probes_.at(static_cast<std::size_t>(face)); }

    bool contains(const ExponentVector& a) const;
    Classification classify(const ExponentVector& a) const;

private:
    int dim_;
    std::vector<QVector> generators_;
    std::vector<QVector> normals_;
    std::vector<QVector> probes_;
    std::vector<QVector> inequalities_;
};

/// Cone spanned by a set of support exponents, with the given face
/// normals; rejects data where some normal is negative on some support.
ConeWithFaces cone_from_support(const std::vector<ExponentVector>& supports,
                                std::vector<QVector> normals);

struct ClosureCounterexample {
    ExponentVector a;
    ExponentVector b;
    std::string law; // "C1" or "C2"
};

struct ClosureReport {
    bool passed = true;
    long c1_cases = 0;
    long c2_cases = 0;
    std::uint64_t seed = 0;
    std::optional<ClosureCounterexample> counterexample;
};

/// Property-checks the closure laws on sampled lattice points:
///   (C1) a in C, b in C-interior        =>  a+b in C-interior
///   (C2) a in face i, b in face j, i!=j =>  a+b in C-interior
/// Sampling is deterministic in the seed. A failure means the face data
/// are invalid.
ClosureReport check_closure_laws(const ConeWithFaces& cone, int samples,
                                 std::uint64_t seed = 0);

struct GordanResult {
    std::vector<ExponentVector> generators;      // the a_i, echoed back
    std::vector<ExponentVector> residues;        // F: s with s - a_i outside S for all i
    bool all_decomposed = true;                  // every s in S reached from F by adding a_i
    std::vector<ExponentVector> flagged;         // F elements in the top grade band
    bool hypothesis_warning = false;             // F still growing near the bound
};

/// Decomposition S = sum Z>=0 a_i + F of a truncated monoid. S must be the
/// truncation of a monoid at `bound` w.r.t. the grade functional; every
/// a_i must lie in S and have positive grade. F elements whose grade is
/// within max grade(a_i) of the bound are flagged: if any exist, F may
/// still be growing and the finite-generation hypothesis is suspect.
GordanResult gordan_decompose(const std::set<ExponentVector>& S,
                              const std::vector<ExponentVector>& gens,
                              const QVector& grade, const Rational& bound);

} // namespace inialg

#endif
