#include "inialg/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "inialg/errors.hpp"

namespace inialg {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CompleteConsistent: return "complete-consistent";
        case Verdict::IncompleteWitnessed: return "incomplete-witnessed";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

int classify_I(const Construction& c, const LaurentPoly& p, const TermOrder& order) {
    if (p.is_zero()) throw Error("classify_I: zero polynomial");
    if (p.dim() != c.source_dim()) throw DimensionError("classify_I: wrong source dimension");
    if (sign(p.coeff(ExponentVector::zero(p.dim()))) != 0)
        throw Error("classify_I: polynomial has a constant term, not in I");

    int best = -1;
    ExponentVector best_deg = ExponentVector::zero(c.dim());
    LaurentPoly total(c.dim());
    for (int i = 0; i < c.embedding_count(); ++i) {
        LaurentPoly img = c.psi_apply(i, p);
        if (img.is_zero())
            throw Error("classify_I: psi_" + std::to_string(i) +
                        "(p) vanishes; the injectivity assumption is violated");
        ExponentVector d = img.leading(order).first;
        if (best < 0 || order.greater(d, best_deg)) {
            best = i;
            best_deg = d;
        }
        total = total + img;
    }
    // deg psi(p) = deg psi_i(p) for the winning slice (disjoint supports)
    if (total.leading(order).first != best_deg)
        throw Error("classify_I: deg psi(p) differs from the dominant slice degree");
    return best;
}

namespace {

// Echelon over the psi-images with the source combination carried along,
// so each pivot degree comes with a source-space witness.
struct AugmentedRow {
    LaurentPoly image;
    LaurentPoly source;
};

class AugmentedEchelon {
public:
    explicit AugmentedEchelon(const TermOrder& order) : order_(&order) {}

    void insert(LaurentPoly image, LaurentPoly source) {
        while (!image.is_zero()) {
            auto [a, coeff] = image.leading(*order_);
            auto it = find_pivot(a);
            if (it == rows_.end()) break;
            image = image - it->second.image.scaled(coeff);
            source = source - it->second.source.scaled(coeff);
        }
        if (image.is_zero()) return;
        auto [a, coeff] = image.leading(*order_);
        Rational inv = rat(coeff.get_den(), coeff.get_num());
        rows_.emplace(a, AugmentedRow{image.scaled(inv), source.scaled(inv)});
    }

    const std::map<ExponentVector, AugmentedRow>& rows() const { return rows_; }

    std::vector<ExponentVector> pivots_ascending() const {
        std::vector<ExponentVector> ps;
        for (const auto& [a, row] : rows_) ps.push_back(a);
        std::sort(ps.begin(), ps.end(),
                  [&](const ExponentVector& x, const ExponentVector& y) {
                      return order_->less(x, y);
                  });
        return ps;
    }

private:
    std::map<ExponentVector, AugmentedRow>::iterator find_pivot(const ExponentVector& a) {
        return rows_.find(a);
    }

    const TermOrder* order_;
    std::map<ExponentVector, AugmentedRow> rows_; // keyed by pivot (lex map; order used for sorting)
};

std::set<ExponentVector> phiI_pivots_at(const Construction& c, const TermOrder& order,
                                        const Rational& D) {
    SpanningSets sets = filtered_spanning_sets(c, D);
    return echelon_pivots(sets.phiI, order).pivots;
}

std::set<ExponentVector> psi_pivots_at(const Construction& c, int i, const TermOrder& order,
                                       const Rational& D) {
    std::vector<LaurentPoly> images;
    for (auto& sm : psi_source_monomials(c, i, D)) images.push_back(std::move(sm.image));
    return echelon_pivots(images, order).pivots;
}

} // namespace

MuReport mu_map(const Construction& c, const TermOrder& order, const Rational& D,
                AnalysisRoles roles) {
    if (roles.psi1 == roles.psi2 || roles.psi1 < 0 || roles.psi2 < 0 ||
        roles.psi1 >= c.embedding_count() || roles.psi2 >= c.embedding_count())
        throw Error("mu_map: roles must name two distinct embeddings");

    MuReport report;
    report.roles = roles;
    report.bound = D;
    report.claim = "minima of the psi1-degree over fixed-psi2-degree families avoid the "
                   "truncated degree set of psi(I), injectively";

    AugmentedEchelon psi_ech(order);
    for (auto& sm : source_monomials(c, D)) psi_ech.insert(sm.image, sm.source);

    std::set<ExponentVector> psi_deg_set;
    for (const auto& [a, row] : psi_ech.rows()) psi_deg_set.insert(a);

    // smallest grade a phi-image can carry; families with a close to the
    // bound may be missing members
    Rational min_gen_grade = c.gen_min_grades().empty() ? Rational(1) : c.gen_min_grades()[0];
    for (const auto& g : c.gen_min_grades())
        if (g < min_gen_grade) min_gen_grade = g;

    std::vector<ExponentVector> face2_pivots;
    for (const auto& a : psi_ech.pivots_ascending()) {
        Classification cls = c.cone().classify(a);
        if (cls.region == Region::FaceInterior && cls.face == roles.psi2)
            face2_pivots.push_back(a);
    }

    std::set<ExponentVector> seen_mu;
    for (const auto& a : face2_pivots) {
        const AugmentedRow& head = psi_ech.rows().at(a);

        // psi1-echelon of the strictly-lower part of the filtration
        EchelonResult lower;
        {
            std::vector<LaurentPoly> images;
            for (const auto& [pivot, row] : psi_ech.rows())
                if (order.less(pivot, a)) images.push_back(c.psi_apply(roles.psi1, row.source));
            lower = echelon_pivots(images, order);
        }

        LaurentPoly p1 = c.psi_apply(roles.psi1, head.source);
        while (!p1.is_zero()) {
            auto [b, coeff] = p1.leading(order);
            if (!lower.pivots.count(b)) break;
            for (const auto& row : lower.basis)
                if (row.leading(order).first == b) {
                    p1 = p1 - row.scaled(coeff);
                    break;
                }
        }
        if (p1.is_zero())
            throw Error("mu_map: a family member has zero psi1-image; the injectivity "
                        "assumption is violated");

        MuRecord rec{a, {}, p1.leading(order).first, false, false};
        rec.M.push_back(rec.mu);
        for (const auto& piv : lower.pivots)
            if (order.greater(piv, rec.mu)) rec.M.push_back(piv);
        std::sort(rec.M.begin(), rec.M.end(),
                  [&](const ExponentVector& x, const ExponentVector& y) {
                      return order.less(x, y);
                  });
        for (const auto& b : rec.M)
            if (!order.less(b, a))
                throw Error("mu_map: reachable psi1-degree not below a; inconsistent data");
        rec.in_deg_psi_I = psi_deg_set.count(rec.mu) > 0;
        // a larger bound can change the record when the family head is near
        // the bound or when the minimizing witness itself uses elements
        // near the bound (the reduction could then descend further)
        rec.truncated = dot(c.spec().filtration, a) > D - min_gen_grade ||
                        c.rho_degree(p1) > D - min_gen_grade;
        if (!seen_mu.insert(rec.mu).second) report.mu_injective = false;
        report.records.push_back(std::move(rec));
    }
    return report;
}

namespace {

bool cone_contains_points(const std::vector<ExponentVector>& gens,
                          const std::vector<ExponentVector>& points, int dim) {
    if (points.empty()) return true;
    if (gens.empty()) return false; // nonzero points vs the zero cone
    std::vector<QVector> qgens;
    for (const auto& g : gens) {
        QVector q;
        for (int i = 0; i < dim; ++i) q.emplace_back(static_cast<long>(g[i]));
        qgens.push_back(std::move(q));
    }
    auto ineqs = cone_inequalities(qgens, dim);
    for (const auto& p : points)
        for (const auto& h : ineqs)
            if (sign(dot(h, p)) < 0) return false;
    return true;
}

bool cones_equal(const std::vector<ExponentVector>& a, const std::vector<ExponentVector>& b,
                 int dim) {
    return cone_contains_points(a, b, dim) && cone_contains_points(b, a, dim);
}

struct FaceSlice {
    std::vector<ExponentVector> part;   // truncated deg psi(I) on this face
    std::vector<ExponentVector> target; // truncated deg psi_i(I)
};

std::vector<FaceSlice> face_slices(const Construction& c, const TermOrder& order,
                                   const Rational& D) {
    std::vector<FaceSlice> slices(static_cast<std::size_t>(c.embedding_count()));
    for (const auto& a : phiI_pivots_at(c, order, D)) {
        Classification cls = c.cone().classify(a);
        if (cls.region == Region::FaceInterior)
            slices[static_cast<std::size_t>(cls.face)].part.push_back(a);
    }
    for (int i = 0; i < c.embedding_count(); ++i)
        for (const auto& a : psi_pivots_at(c, i, order, D))
            slices[static_cast<std::size_t>(i)].target.push_back(a);
    return slices;
}

} // namespace

CompletenessReport completeness_report(const Construction& c, const TermOrder& order,
                                       const Rational& D) {
    CompletenessReport report;
    report.bound = D;
    Rational step = D / 2;
    if (step < 1) step = 1;
    report.second_bound = D + step;
    report.claim = "every face cone of the dominant slice matches the cone of the embedding's "
                   "degrees, stably under the bound";

    auto at_d = face_slices(c, order, D);
    auto at_d2 = face_slices(c, order, report.second_bound);
    const int dim = c.dim();

    bool any_incomplete = false;
    bool all_complete = true;
    for (int i = 0; i < c.embedding_count(); ++i) {
        const FaceSlice& s1 = at_d[static_cast<std::size_t>(i)];
        const FaceSlice& s2 = at_d2[static_cast<std::size_t>(i)];
        FaceCompleteness fc;
        fc.face = i;
        fc.face_part = s1.part;
        fc.target = s1.target;

        fc.part_empty = s1.part.empty() && s2.part.empty() && !s2.target.empty();
        bool eq1 = cones_equal(s1.part, s1.target, dim);
        bool eq2 = cones_equal(s2.part, s2.target, dim);
        fc.cones_equal = eq1 && eq2;
        bool part_stable = cones_equal(s1.part, s2.part, dim);
        bool target_stable = cones_equal(s1.target, s2.target, dim);
        fc.proper_stable = !eq1 && !eq2 && part_stable && target_stable;

        if (fc.part_empty || fc.proper_stable) {
            fc.verdict = Verdict::IncompleteWitnessed;
            any_incomplete = true;
            all_complete = false;
        } else if (fc.cones_equal) {
            fc.verdict = Verdict::CompleteConsistent;
        } else {
            fc.verdict = Verdict::Inconclusive;
            all_complete = false;
        }
        report.faces.push_back(std::move(fc));
    }
    report.verdict = any_incomplete ? Verdict::IncompleteWitnessed
                     : all_complete ? Verdict::CompleteConsistent
                                    : Verdict::Inconclusive;
    return report;
}

ComplementReport complement_scan(const Construction& c, const TermOrder& order, const Rational& D,
                                 AnalysisRoles roles) {
    ComplementReport report;
    report.roles = roles;
    report.bound = D;
    report.claim = "cumulative growth of deg psi1(R) \\ deg psi(I): strict growth signals an "
                   "infinite complement, stabilization a finite one";

    auto psi1_degs = psi_pivots_at(c, roles.psi1, order, D);
    auto phi_degs = phiI_pivots_at(c, order, D);

    std::map<Rational, long> per_grade; // grade -> complement count at that grade
    for (const auto& a : psi1_degs) {
        Rational g = dot(c.spec().filtration, a);
        per_grade.try_emplace(g, 0);
        if (!phi_degs.count(a)) ++per_grade[g];
    }
    long cumulative = 0;
    for (const auto& [g, cnt] : per_grade) {
        cumulative += cnt;
        report.rows.push_back(ComplementRow{g, cumulative});
    }
    report.strictly_increasing = report.rows.size() >= 2;
    for (std::size_t k = 1; k < report.rows.size(); ++k)
        if (report.rows[k].count <= report.rows[k - 1].count) report.strictly_increasing = false;
    report.stabilized = report.rows.size() >= 2 &&
                        report.rows.back().count == report.rows[report.rows.size() - 2].count;
    return report;
}

HypothesisReport check_main_hypothesis(const Construction& c, const TermOrder& order) {
    HypothesisReport report;
    report.claim = "an embedding whose degrees stay above the origin forces a non-finitely "
                   "generated truncated degree monoid";

    bool monomial = order.is_monomial_order();
    for (int i = 0; i < c.embedding_count(); ++i) {
        EmbeddingHypothesis eh;
        eh.embedding = i;

        bool polynomial_images = true;
        bool all_above_zero = true;
        std::optional<int> below_witness;
        for (int j = 0; j < c.source_gen_count(); ++j) {
            const LaurentPoly& img = c.embedded_gen(i, j);
            for (const auto& e : img.support()) {
                for (int k = 0; k < e.dim(); ++k)
                    if (e[k] < 0) polynomial_images = false;
                if (order.compare(ExponentVector::zero(e.dim()), e) != Ordering::Less)
                    all_above_zero = false;
            }
            if (!below_witness &&
                order.less(img.leading(order).first, ExponentVector::zero(c.dim())))
                below_witness = j;
        }

        if (monomial && polynomial_images) {
            eh.verdict = HypothesisVerdict::Holds;
            eh.monomial_fast_path = true;
        } else if (all_above_zero) {
            eh.verdict = HypothesisVerdict::Holds;
        } else if (below_witness) {
            eh.verdict = HypothesisVerdict::Fails;
            eh.witness_gen = below_witness;
        } else {
            eh.verdict = HypothesisVerdict::Inconclusive;
        }
        if (eh.verdict == HypothesisVerdict::Holds) report.any_holds = true;
        report.embeddings.push_back(eh);
    }
    return report;
}

FingerprintReport fingerprint_orders(const Construction& c, const std::vector<TermOrder>& orders,
                                     const Rational& D) {
    FingerprintReport report;
    report.bound = D;
    report.claim = "orders sharing a truncated degree set share the truncated initial algebra";

    std::vector<std::vector<ExponentVector>> prints;
    for (const auto& ord : orders) prints.push_back(degree_monoid(c, ord, D).degrees);

    for (int idx = 0; idx < static_cast<int>(prints.size()); ++idx) {
        bool placed = false;
        for (auto& cls : report.classes) {
            if (prints[static_cast<std::size_t>(cls.members[0])] ==
                prints[static_cast<std::size_t>(idx)]) {
                cls.members.push_back(idx);
                placed = true;
                break;
            }
        }
        if (!placed)
            report.classes.push_back(
                FingerprintClass{{idx}, prints[static_cast<std::size_t>(idx)]});
    }
    return report;
}

TermOrder face_biased_order(const Construction& c, int face, const QVector& base_weight,
                            const std::vector<ExponentVector>& targets) {
    if (face < 0 || face >= c.embedding_count()) throw Error("face_biased_order: bad face index");
    if (static_cast<int>(base_weight.size()) != c.dim())
        throw DimensionError("face_biased_order: base weight of wrong dimension");

    std::vector<ExponentVector> tg = targets;
    if (tg.empty()) {
        TermOrder probe = TermOrder::lex(c.dim());
        tg.reserve(static_cast<std::size_t>(c.embedding_count()));
        for (int i = 0; i < c.embedding_count(); ++i)
            tg.push_back(c.embedded_gen(i, 0).leading(probe).first);
    }
    if (static_cast<int>(tg.size()) != c.embedding_count())
        throw Error("face_biased_order: one target per face required");

    const QVector& omega = c.cone().face_normals()[static_cast<std::size_t>(face)];
    Rational lambda(1);
    for (int attempt = 0; attempt < 200; ++attempt) {
        QVector w(base_weight.size());
        for (std::size_t k = 0; k < w.size(); ++k)
            w[k] = base_weight[k] - lambda * omega[k];
        bool nonzero = false;
        for (const auto& e : w)
            if (sign(e) != 0) nonzero = true;
        if (nonzero) {
            TermOrder ord = TermOrder::from_weights({w});
            bool dominant = true;
            for (int j = 0; j < c.embedding_count(); ++j) {
                if (j == face) continue;
                if (!ord.greater(tg[static_cast<std::size_t>(face)],
                                 tg[static_cast<std::size_t>(j)]))
                    dominant = false;
            }
            if (dominant) return ord;
        }
        lambda *= 2;
    }
    throw Error("face_biased_order: escalation failed; are the targets in the open face "
                "regions?");
}

} // namespace inialg
