#include "inialg/sagbi.hpp"

#include <algorithm>

#include "inialg/errors.hpp"

namespace inialg {

namespace {

struct OrderGreater {
    const TermOrder* order;
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return order->greater(a, b);
    }
};

// Sparse reduced row echelon over the term order: rows are monic
// polynomials with pairwise distinct leading exponents, kept in normal
// form (no pivot exponent occurs in any other row).
class PolyEchelon {
public:
    explicit PolyEchelon(const TermOrder& order) : order_(&order), rows_(OrderGreater{&order}) {}

    // Splits f into (reducible part, normal form): pivot leading terms are
    // cancelled, non-pivot leading terms move to the normal form.
    LaurentPoly normal_form(LaurentPoly f) const {
        LaurentPoly rest(f.dim());
        while (!f.is_zero()) {
            auto [a, c] = f.leading(*order_);
            auto it = rows_.find(a);
            if (it != rows_.end()) {
                f = f - it->second.scaled(c);
            } else {
                LaurentPoly term = LaurentPoly::monomial(a, c);
                rest = rest + term;
                f = f - term;
            }
        }
        return rest;
    }

    // Returns true (and stores the monic normal form) if f was independent.
    bool insert(const LaurentPoly& f) {
        LaurentPoly nf = normal_form(f);
        if (nf.is_zero()) return false;
        auto [a, c] = nf.leading(*order_);
        nf = nf.scaled(rat(c.get_den(), c.get_num()));
        for (auto& [pivot, row] : rows_) {
            Rational occ = row.coeff(a);
            if (sign(occ) != 0) row = row - nf.scaled(occ);
        }
        rows_.emplace(a, std::move(nf));
        return true;
    }

    bool contains(const LaurentPoly& f) const { return normal_form(f).is_zero(); }

    std::set<ExponentVector> pivot_set() const {
        std::set<ExponentVector> s;
        for (const auto& [a, row] : rows_) s.insert(a);
        return s;
    }

    std::vector<LaurentPoly> basis() const {
        std::vector<LaurentPoly> b;
        b.reserve(rows_.size());
        for (const auto& [a, row] : rows_) b.push_back(row);
        return b;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    const TermOrder* order_;
    std::map<ExponentVector, LaurentPoly, OrderGreater> rows_;
};

} // namespace

EchelonResult echelon_pivots(const std::vector<LaurentPoly>& polys, const TermOrder& order) {
    PolyEchelon ech(order);
    for (const auto& p : polys) ech.insert(p);
    return EchelonResult{ech.pivot_set(), ech.basis()};
}

LaurentPoly reduce_against(LaurentPoly f, const EchelonResult& echelon, const TermOrder& order) {
    PolyEchelon ech(order);
    for (const auto& row : echelon.basis) ech.insert(row);
    return ech.normal_form(std::move(f));
}

namespace {

struct GradedPiece {
    std::vector<LaurentPoly> phiI;
    std::vector<LaurentPoly> J;
};

// Span elements grouped by grade (ascending). Non-graded instances get a
// single group keyed by the bound.
std::map<Rational, GradedPiece> group_by_grade(const Construction& c, const SpanningSets& sets,
                                               const Rational& D) {
    std::map<Rational, GradedPiece> groups;
    if (c.is_graded()) {
        for (const auto& f : sets.phiI) groups[c.grade_of(f)].phiI.push_back(f);
        for (const auto& f : sets.J) groups[c.grade_of(f)].J.push_back(f);
    } else {
        groups[D].phiI = sets.phiI;
        groups[D].J = sets.J;
    }
    return groups;
}

// Multi-indices over the chosen generator grades summing exactly to the
// target; deterministic DFS order.
void exact_grade_multis(const std::vector<Rational>& grades, const Rational& target,
                        std::vector<std::vector<unsigned>>& out) {
    std::vector<unsigned> current(grades.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, const Rational& remaining) -> void {
        if (k == grades.size()) {
            if (sign(remaining) == 0) out.push_back(current);
            return;
        }
        Rational left = remaining;
        unsigned e = 0;
        while (true) {
            current[k] = e;
            self(self, k + 1, left);
            if (left < grades[k]) break;
            left -= grades[k];
            ++e;
        }
        current[k] = 0;
    };
    rec(rec, 0, target);
}

std::vector<GradeGenerators> generator_scan(const Construction& c, const TermOrder& order,
                                            const Rational& D) {
    SpanningSets sets = filtered_spanning_sets(c, D);
    auto groups = group_by_grade(c, sets, D);

    std::vector<LaurentPoly> chosen;
    std::vector<Rational> chosen_grades;
    std::vector<GradeGenerators> out;

    for (const auto& [grade, piece] : groups) {
        // candidates: reduced basis of the graded piece, order-smallest pivot first
        PolyEchelon piece_ech(order);
        for (const auto& f : piece.phiI) piece_ech.insert(f);
        for (const auto& f : piece.J) piece_ech.insert(f);
        std::vector<LaurentPoly> candidates = piece_ech.basis();
        std::reverse(candidates.begin(), candidates.end());

        // span of products of previously chosen generators at this grade
        std::vector<std::vector<unsigned>> multis;
        exact_grade_multis(chosen_grades, grade, multis);
        PolyEchelon work(order);
        for (const auto& m : multis) {
            LaurentPoly prod = LaurentPoly::constant(c.dim(), 1);
            for (std::size_t k = 0; k < m.size(); ++k)
                if (m[k] != 0) prod = prod * chosen[k].pow(m[k]);
            work.insert(prod);
        }

        GradeGenerators gg{grade, 0, {}};
        for (const auto& cand : candidates) {
            LaurentPoly nf = work.normal_form(cand);
            if (nf.is_zero()) continue;
            auto [a, coeff] = nf.leading(order);
            nf = nf.scaled(rat(coeff.get_den(), coeff.get_num()));
            work.insert(nf);
            gg.representatives.push_back(nf);
            chosen.push_back(nf);
            chosen_grades.push_back(grade);
            ++gg.count;
        }
        out.push_back(std::move(gg));
    }
    return out;
}

} // namespace

DegreeReport degree_monoid(const Construction& c, const TermOrder& order, const Rational& D) {
    SpanningSets sets = filtered_spanning_sets(c, D);
    auto groups = group_by_grade(c, sets, D);

    DegreeReport rep;
    rep.order_rows = order.rows();
    rep.bound = D;
    rep.truncated = !sets.exact;

    std::set<ExponentVector> phiI_pivots, j_pivots;
    for (const auto& [grade, piece] : groups) {
        EchelonResult ep = echelon_pivots(piece.phiI, order);
        phiI_pivots.insert(ep.pivots.begin(), ep.pivots.end());
        EchelonResult ej = echelon_pivots(piece.J, order);
        j_pivots.insert(ej.pivots.begin(), ej.pivots.end());
    }

    ExponentVector origin = ExponentVector::zero(c.dim());
    rep.partition[origin] = DegreeOrigin::Origin;
    for (const auto& a : phiI_pivots) {
        if (a.is_zero() || j_pivots.count(a))
            throw Error("degree partition is not disjoint; construction data are inconsistent");
        rep.partition[a] = DegreeOrigin::PhiI;
    }
    for (const auto& a : j_pivots) {
        if (a.is_zero())
            throw Error("degree partition is not disjoint; construction data are inconsistent");
        rep.partition[a] = DegreeOrigin::J;
    }
    for (const auto& [a, origin_tag] : rep.partition) rep.degrees.push_back(a);

    // minimal generators of the truncated monoid: not a sum of two nonzero
    // truncated degrees
    std::set<ExponentVector> degree_set(rep.degrees.begin(), rep.degrees.end());
    for (const auto& d : rep.degrees) {
        if (d.is_zero()) continue;
        bool decomposable = false;
        for (const auto& u : degree_set) {
            if (u.is_zero() || u == d) continue;
            ExponentVector v = d - u;
            if (!v.is_zero() && degree_set.count(v)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) rep.monoid_min_gens.push_back(d);
    }

    if (c.is_graded()) rep.algebra_new_gens = generator_scan(c, order, D);
    return rep;
}

std::vector<GradeGenerators> algebra_min_generators(const Construction& c,
                                                    const TermOrder& order, const Rational& D) {
    if (!c.is_graded())
        throw Error("algebra_min_generators needs a graded instance; use the truncated "
                    "degree_monoid report for filtered ones");
    return generator_scan(c, order, D);
}

namespace {

// Bounded search for deg f = sum e_s * deg(s_k). When every generator
// degree is componentwise nonnegative the coordinate bounds make the
// search exact; otherwise each exponent is capped by the l1-norm of the
// target plus a slack, an honest bounded search.
bool find_decomposition(const ExponentVector& target, const std::vector<ExponentVector>& degs,
                        std::vector<unsigned>& out) {
    bool all_nonneg = true;
    for (const auto& d : degs) {
        for (int i = 0; i < d.dim(); ++i)
            if (d[i] < 0) all_nonneg = false;
    }
    std::int64_t cap = target.l1_norm() + 8;
    out.assign(degs.size(), 0);

    auto rec = [&](auto&& self, std::size_t k, const ExponentVector& remaining) -> bool {
        if (k == degs.size()) return remaining.is_zero();
        if (all_nonneg) {
            for (int i = 0; i < remaining.dim(); ++i)
                if (remaining[i] < 0) return false;
        }
        const ExponentVector& d = degs[k];
        std::int64_t max_e = cap;
        if (all_nonneg) {
            for (int i = 0; i < d.dim(); ++i)
                if (d[i] > 0) max_e = std::min(max_e, remaining[i] / d[i]);
            if (max_e < 0) max_e = 0;
        }
        ExponentVector rem = remaining;
        for (std::int64_t e = 0; e <= max_e; ++e) {
            out[k] = static_cast<unsigned>(e);
            if (self(self, k + 1, rem)) return true;
            rem = rem - d;
        }
        out[k] = 0;
        return false;
    };
    return rec(rec, 0, target);
}

} // namespace

SubductionResult subduce(const LaurentPoly& f, const std::vector<LaurentPoly>& S,
                         const TermOrder& order, std::optional<long> step_limit) {
    for (const auto& s : S)
        if (s.is_zero()) throw Error("subduce: zero polynomial in the candidate set");

    SubductionResult result{f, {}, false};
    if (f.is_zero()) return result;

    long limit = step_limit.value_or(10 * static_cast<long>(std::max<std::size_t>(1, f.term_count())));
    std::vector<ExponentVector> degs;
    degs.reserve(S.size());
    for (const auto& s : S) degs.push_back(s.leading(order).first);

    long steps = 0;
    std::vector<unsigned> e;
    while (!result.remainder.is_zero()) {
        auto [a, c] = result.remainder.leading(order);
        if (!find_decomposition(a, degs, e)) break;
        LaurentPoly prod = LaurentPoly::constant(f.dim(), 1);
        for (std::size_t k = 0; k < S.size(); ++k)
            if (e[k] != 0) prod = prod * S[k].pow(e[k]);
        Rational lc = prod.leading(order).second;
        Rational scale = c / lc;
        result.remainder = result.remainder - prod.scaled(scale);
        result.certificate.push_back(SubductionStep{scale, e});
        if (++steps >= limit) {
            result.step_limit_hit = !result.remainder.is_zero();
            break;
        }
    }
    return result;
}

LaurentPoly certificate_value(const std::vector<LaurentPoly>& S,
                              const std::vector<SubductionStep>& certificate, int dim) {
    LaurentPoly acc(dim);
    for (const auto& step : certificate) {
        LaurentPoly prod = LaurentPoly::constant(dim, 1);
        for (std::size_t k = 0; k < S.size(); ++k)
            if (step.exponents[k] != 0) prod = prod * S[k].pow(step.exponents[k]);
        acc = acc + prod.scaled(step.coeff);
    }
    return acc;
}

} // namespace inialg
