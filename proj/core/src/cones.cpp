#include "inialg/cones.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "inialg/errors.hpp"

namespace inialg {

std::string region_name(const Classification& c) {
    switch (c.region) {
        case Region::Origin: return "origin";
        case Region::Interior: return "interior";
        case Region::FaceInterior: return "face_interior(" + std::to_string(c.face) + ")";
        case Region::BoundaryOther: return "boundary_other";
        case Region::Outside: return "outside";
    }
    return "?";
}

namespace {

// Divide by the gcd of numerators over the lcm of denominators so that
// proportional rows collapse to one representative.
QVector normalize_row(const QVector& row) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& e : row) {
        if (sign(e) == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), e.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return row; // zero row
    Rational scale = rat(den_lcm, num_gcd);
    QVector out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back(Rational(e * scale));
    return out;
}

bool is_zero_row(const QVector& row) {
    for (const auto& e : row)
        if (sign(e) != 0) return false;
    return true;
}

} // namespace

std::vector<QVector> cone_inequalities(const std::vector<QVector>& generators, int dim) {
    // Variables: (lambda_1..lambda_s, x_1..x_n). Constraints, all ">= 0":
    //   lambda_i >= 0
    //   sum_i lambda_i g_i[j] - x_j >= 0  and its negation (the equality)
    // Eliminating the lambdas leaves the inequality description in x.
    const int s = static_cast<int>(generators.size());
    const int total = s + dim;
    std::vector<QVector> rows;
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(generators[static_cast<std::size_t>(i)].size()) != dim)
            throw DimensionError("cone generator of wrong dimension");
        QVector row(static_cast<std::size_t>(total), Rational(0));
        row[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(row));
    }
    for (int j = 0; j < dim; ++j) {
        QVector row(static_cast<std::size_t>(total), Rational(0));
        for (int i = 0; i < s; ++i)
            row[static_cast<std::size_t>(i)] = generators[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(s) + static_cast<std::size_t>(j)] = -1;
        QVector neg(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) neg[k] = -row[k];
        rows.push_back(std::move(row));
        rows.push_back(std::move(neg));
    }

    for (int var = 0; var < s; ++var) {
        std::vector<QVector> pos, neg, zero;
        for (auto& row : rows) {
            int sg = sign(row[static_cast<std::size_t>(var)]);
            if (sg > 0)
                pos.push_back(std::move(row));
            else if (sg < 0)
                neg.push_back(std::move(row));
            else
                zero.push_back(std::move(row));
        }
        std::vector<QVector> next = std::move(zero);
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                // p + |n_var/p_var| * ... combined so the var cancels
                Rational a = p[static_cast<std::size_t>(var)];
                Rational b = -n[static_cast<std::size_t>(var)];
                QVector comb(p.size());
                for (std::size_t k = 0; k < p.size(); ++k)
                    comb[k] = Rational(b * p[k] + a * n[k]);
                if (!is_zero_row(comb)) next.push_back(normalize_row(comb));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rows = std::move(next);
    }

    std::vector<QVector> result;
    for (const auto& row : rows) {
        QVector x_part(row.begin() + s, row.end());
        if (is_zero_row(x_part)) continue;
        result.push_back(normalize_row(x_part));
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

ConeWithFaces::ConeWithFaces(std::vector<QVector> generators, std::vector<QVector> face_normals)
    : generators_(std::move(generators)), normals_(std::move(face_normals)) {
    if (generators_.empty()) throw Error("cone needs at least one generator");
    dim_ = static_cast<int>(generators_[0].size());
    for (const auto& g : generators_)
        if (static_cast<int>(g.size()) != dim_)
            throw DimensionError("cone generators of mixed dimensions");
    if (normals_.size() < 2)
        throw Error("cone needs r >= 2 distinguished faces");
    for (const auto& w : normals_)
        if (static_cast<int>(w.size()) != dim_)
            throw DimensionError("face normal of wrong dimension");

    // Each normal must be nonnegative on the cone.
    for (std::size_t i = 0; i < normals_.size(); ++i)
        for (const auto& g : generators_)
            if (sign(dot(normals_[i], g)) < 0)
                throw Error("face normal " + std::to_string(i) +
                            " is negative on a cone generator");

    // A face of a finitely generated cone is spanned by the generators it
    // contains, so the sum of those generators witnesses nonemptiness of
    // the open face region (and hence pairwise incomparability of faces).
    for (std::size_t i = 0; i < normals_.size(); ++i) {
        QVector probe(static_cast<std::size_t>(dim_), Rational(0));
        for (const auto& g : generators_) {
            if (sign(dot(normals_[i], g)) != 0) continue;
            for (std::size_t k = 0; k < probe.size(); ++k) probe[k] += g[k];
        }
        for (std::size_t j = 0; j < normals_.size(); ++j) {
            if (j == i) continue;
            if (sign(dot(normals_[j], probe)) <= 0)
                throw Error("face " + std::to_string(i) +
                            " has empty open region (contained in face " +
                            std::to_string(j) + ")");
        }
        probes_.push_back(std::move(probe));
    }

    inequalities_ = cone_inequalities(generators_, dim_);
}

bool ConeWithFaces::contains(const ExponentVector& a) const {
    if (a.dim() != dim_) throw DimensionError("classify: point of wrong dimension");
    for (const auto& h : inequalities_)
        if (sign(dot(h, a)) < 0) return false;
    return true;
}

Classification ConeWithFaces::classify(const ExponentVector& a) const {
    if (a.dim() != dim_) throw DimensionError("classify: point of wrong dimension");
    if (a.is_zero()) return {Region::Origin};
    if (!contains(a)) return {Region::Outside};
    int vanishing = -1;
    int vanish_count = 0;
    for (int i = 0; i < face_count(); ++i) {
        if (sign(dot(normals_[static_cast<std::size_t>(i)], a)) == 0) {
            ++vanish_count;
            vanishing = i;
        }
    }
    if (vanish_count == 0) return {Region::Interior};
    if (vanish_count == 1) return {Region::FaceInterior, vanishing};
    return {Region::BoundaryOther};
}

ConeWithFaces cone_from_support(const std::vector<ExponentVector>& supports,
                                std::vector<QVector> normals) {
    if (supports.empty()) throw Error("cone_from_support: empty support set");
    std::vector<QVector> gens;
    for (const auto& s : supports) {
        QVector g;
        g.reserve(static_cast<std::size_t>(s.dim()));
        for (int i = 0; i < s.dim(); ++i) g.emplace_back(static_cast<long>(s[i]));
        gens.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (const auto& s : supports)
            if (sign(dot(normals[i], s)) < 0)
                throw Error("support point " + s.to_string() +
                            " violates face normal " + std::to_string(i));
    return ConeWithFaces(std::move(gens), std::move(normals));
}

namespace {

// Integer direction of a rational vector (clears denominators).
ExponentVector integer_direction(const QVector& v) {
    Integer den_lcm = 1;
    for (const auto& e : v)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.get_den().get_mpz_t());
    std::vector<std::int64_t> coords;
    for (const auto& e : v) {
        Integer z = e.get_num() * (den_lcm / e.get_den());
        if (!z.fits_slong_p()) throw Error("cone generator entry too large for lattice sampling");
        coords.push_back(z.get_si());
    }
    return ExponentVector(std::move(coords));
}

} // namespace

ClosureReport check_closure_laws(const ConeWithFaces& cone, int samples, std::uint64_t seed) {
    ClosureReport report;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(0, 4);

    std::vector<ExponentVector> gen_dirs;
    for (const auto& g : cone.generators()) gen_dirs.push_back(integer_direction(g));
    const int dim = cone.dim();

    auto random_cone_point = [&]() {
        ExponentVector p = ExponentVector::zero(dim);
        for (const auto& g : gen_dirs) p = p + g * coef(rng);
        return p;
    };
    auto random_face_point = [&](int face) {
        // probe + combination of generators on the face stays in the open
        // face region.
        ExponentVector p = integer_direction(cone.probe(face));
        for (const auto& g : gen_dirs)
            if (sign(dot(cone.face_normals()[static_cast<std::size_t>(face)], g)) == 0)
                p = p + g * coef(rng);
        return p;
    };

    for (int iter = 0; iter < samples; ++iter) {
        // (C1): a in C, b in the interior.
        ExponentVector a = random_cone_point();
        ExponentVector b = random_cone_point() + random_face_point(iter % cone.face_count()) +
                           random_face_point((iter + 1) % cone.face_count());
        if (cone.classify(b).region == Region::Interior) {
            ++report.c1_cases;
            if (cone.classify(a + b).region != Region::Interior) {
                report.passed = false;
                report.counterexample = ClosureCounterexample{a, b, "C1"};
                return report;
            }
        }
        // (C2): face i + face j, i != j.
        int i = iter % cone.face_count();
        int j = (i + 1 + (iter / cone.face_count()) % (cone.face_count() - 1)) % cone.face_count();
        ExponentVector fa = random_face_point(i);
        ExponentVector fb = random_face_point(j);
        ++report.c2_cases;
        if (cone.classify(fa + fb).region != Region::Interior) {
            report.passed = false;
            report.counterexample = ClosureCounterexample{fa, fb, "C2"};
            return report;
        }
    }
    return report;
}

GordanResult gordan_decompose(const std::set<ExponentVector>& S,
                              const std::vector<ExponentVector>& gens,
                              const QVector& grade, const Rational& bound) {
    if (gens.empty()) throw Error("gordan_decompose: no cone generators");
    GordanResult result;
    result.generators = gens;
    Rational max_gen_grade(0);
    for (const auto& a : gens) {
        if (!S.count(a))
            throw Error("cone generator " + a.to_string() + " is not in the monoid truncation");
        Rational g = dot(grade, a);
        if (sign(g) <= 0)
            throw Error("cone generator " + a.to_string() + " has nonpositive grade");
        if (g > max_gen_grade) max_gen_grade = g;
    }

    for (const auto& s : S) {
        bool residue = true;
        for (const auto& a : gens) {
            if (S.count(s - a)) {
                residue = false;
                break;
            }
        }
        if (residue) result.residues.push_back(s);
    }

    // Every S element must be reachable from F by adding generators while
    // staying inside the truncation.
    std::set<ExponentVector> reached(result.residues.begin(), result.residues.end());
    std::vector<ExponentVector> queue = result.residues;
    while (!queue.empty()) {
        ExponentVector t = queue.back();
        queue.pop_back();
        for (const auto& a : gens) {
            ExponentVector u = t + a;
            if (S.count(u) && !reached.count(u)) {
                reached.insert(u);
                queue.push_back(u);
            }
        }
    }
    result.all_decomposed = reached.size() == S.size();

    Rational band = bound - max_gen_grade;
    for (const auto& f : result.residues)
        if (dot(grade, f) > band) result.flagged.push_back(f);
    result.hypothesis_warning = !result.flagged.empty();
    return result;
}

} // namespace inialg
