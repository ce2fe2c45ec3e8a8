#include "inialg/construction.hpp"

#include <algorithm>
#include <set>

#include "inialg/errors.hpp"

namespace inialg {

namespace {

// Multi-indices e >= 0 with sum e_k * weights_k <= bound, in graded-lex
// order (total degree first, then lexicographic). All weights must be
// positive, which makes the enumeration finite.
std::vector<std::vector<unsigned>> bounded_multis(const QVector& weights,
                                                  const Rational& bound) {
    for (const auto& w : weights)
        if (sign(w) <= 0) throw Error("enumeration weight must be positive");
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current(weights.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, const Rational& remaining) -> void {
        if (k == weights.size()) {
            out.push_back(current);
            return;
        }
        Rational left = remaining;
        unsigned e = 0;
        while (true) {
            current[k] = e;
            self(self, k + 1, left);
            if (left < weights[k]) break;
            left -= weights[k];
            ++e;
        }
        current[k] = 0;
    };
    if (sign(bound) >= 0) rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        unsigned long sa = 0, sb = 0;
        for (auto x : a) sa += x;
        for (auto x : b) sb += x;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

bool is_nonzero_multi(const std::vector<unsigned>& m) {
    for (auto x : m)
        if (x != 0) return true;
    return false;
}

// Power tables so products of generator powers are built once per exponent.
class PowerTable {
public:
    explicit PowerTable(std::vector<LaurentPoly> bases) : bases_(std::move(bases)) {
        for (const auto& b : bases_) powers_.push_back({LaurentPoly::constant(b.dim(), 1)});
    }

    const LaurentPoly& get(std::size_t j, unsigned e) {
        auto& col = powers_[j];
        while (col.size() <= e) col.push_back(col.back() * bases_[j]);
        return col[e];
    }

    LaurentPoly product(const std::vector<unsigned>& multi) {
        LaurentPoly acc = LaurentPoly::constant(bases_[0].dim(), 1);
        for (std::size_t j = 0; j < multi.size(); ++j)
            if (multi[j] != 0) acc = acc * get(j, multi[j]);
        return acc;
    }

private:
    std::vector<LaurentPoly> bases_;
    std::vector<std::vector<LaurentPoly>> powers_;
};

void dedup_keep_first(std::vector<LaurentPoly>& polys) {
    std::set<LaurentPoly> seen;
    std::vector<LaurentPoly> out;
    for (auto& p : polys)
        if (seen.insert(p).second) out.push_back(std::move(p));
    polys = std::move(out);
}

} // namespace

Construction Construction::validate(ConstructionSpec spec) {
    const int m = spec.source_dim;
    const int n = spec.dim;
    const int N = static_cast<int>(spec.source_gens.size());
    const int r = static_cast<int>(spec.embeddings.size());

    if (m < 1 || n < 1) throw ValidationError("A1", "source and target dimensions must be >= 1");
    if (N < 1) throw ValidationError("A1", "need at least one source generator");
    if (r < 2) throw ValidationError("A2", "need r >= 2 embeddings");
    if (spec.cone.dim() != n) throw ValidationError("C-face", "cone dimension differs from n");
    if (spec.cone.face_count() != r)
        throw ValidationError("C-face", "cone must carry exactly one face per embedding");
    if (static_cast<int>(spec.filtration.size()) != n)
        throw ValidationError("rho-positivity", "filtration vector has wrong dimension");
    if (spec.grading && static_cast<int>(spec.grading->size()) != n)
        throw ValidationError("A1", "grading vector has wrong dimension");

    for (const auto& rj : spec.source_gens) {
        if (rj.dim() != m) throw ValidationError("A1", "source generator of wrong dimension");
        if (rj.is_zero()) throw ValidationError("A1", "source generator is zero (I would vanish)");
        if (sign(rj.coeff(ExponentVector::zero(m))) != 0)
            throw ValidationError("A1", "source generator has a nonzero constant term; R = k + I "
                                        "forces generators of I to be constant-free");
    }
    for (const auto& emb : spec.embeddings) {
        if (static_cast<int>(emb.size()) != m)
            throw ValidationError("A2", "embedding must list one image per source variable");
        for (const auto& img : emb)
            if (img.dim() != n) throw ValidationError("A2", "embedding image of wrong dimension");
    }

    Construction c(std::move(spec));
    const ConstructionSpec& s = c.spec_;

    for (int i = 0; i < r; ++i) {
        std::vector<LaurentPoly> images;
        for (int j = 0; j < N; ++j) {
            LaurentPoly img = substitute(s.source_gens[static_cast<std::size_t>(j)],
                                         s.embeddings[static_cast<std::size_t>(i)]);
            if (img.is_zero())
                throw ValidationError("A2", "phi_" + std::to_string(i) + "(r_" +
                                                std::to_string(j) +
                                                ") is zero; phi_i cannot be injective");
            for (const auto& e : img.support()) {
                Classification cls = s.cone.classify(e);
                if (!(cls.region == Region::FaceInterior && cls.face == i))
                    throw ValidationError(
                        "A2", "supp phi_" + std::to_string(i) + "(r_" + std::to_string(j) +
                                  ") contains " + e.to_string() + " which is " +
                                  region_name(cls) + ", not in the open region of face " +
                                  std::to_string(i));
            }
            images.push_back(std::move(img));
        }
        c.phi_images_.push_back(std::move(images));
    }

    for (const auto& u : s.U) {
        if (u.dim() != n) throw ValidationError("A3", "U element of wrong dimension");
        if (u.is_zero()) throw ValidationError("A3", "U contains the zero polynomial");
        for (const auto& e : u.support()) {
            Classification cls = s.cone.classify(e);
            if (cls.region != Region::Interior)
                throw ValidationError("A3", "supp U contains " + e.to_string() + " which is " +
                                                region_name(cls) + ", not interior");
        }
    }

    auto check_rho = [&](const LaurentPoly& f, const std::string& what) {
        for (const auto& e : f.support())
            if (sign(dot(s.filtration, e)) <= 0)
                throw ValidationError("rho-positivity", "filtration is not positive on " +
                                                            e.to_string() + " in " + what);
    };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < N; ++j)
            check_rho(c.embedded_gen(i, j),
                      "phi_" + std::to_string(i) + "(r_" + std::to_string(j) + ")");
    for (const auto& u : s.U) check_rho(u, "U");

    if (s.grading) {
        auto is_homogeneous = [&](const LaurentPoly& f) {
            bool first = true;
            Rational v(0);
            for (const auto& e : f.support()) {
                Rational g = dot(*s.grading, e);
                if (first) {
                    v = g;
                    first = false;
                } else if (g != v) {
                    return false;
                }
            }
            return true;
        };
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < N; ++j)
                if (!is_homogeneous(c.embedded_gen(i, j)))
                    throw ValidationError("A1", "grading does not make phi_" + std::to_string(i) +
                                                    "(r_" + std::to_string(j) + ") homogeneous");
        for (const auto& u : s.U)
            if (!is_homogeneous(u))
                throw ValidationError("A3", "grading does not make a U element homogeneous");
        for (int j = 0; j < N; ++j) {
            LaurentPoly total(n);
            for (int i = 0; i < r; ++i) total = total + c.embedded_gen(i, j);
            if (!is_homogeneous(total))
                throw ValidationError("A1", "grading does not make phi(r_" + std::to_string(j) +
                                                ") homogeneous (embedding grades differ)");
        }
        if (*s.grading != s.filtration)
            c.warnings_.push_back("grading differs from the filtration functional; graded "
                                  "pieces may be cut by the filtration bound");
    }

    // Derived generator sets.
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < N; ++j) c.b_gens_.push_back(c.embedded_gen(i, j));
    for (const auto& u : s.U) c.b_gens_.push_back(u);

    for (int i1 = 0; i1 < r; ++i1)
        for (int i2 = i1 + 1; i2 < r; ++i2)
            for (int j1 = 0; j1 < N; ++j1)
                for (int j2 = 0; j2 < N; ++j2)
                    c.j_gens_.push_back(c.embedded_gen(i1, j1) * c.embedded_gen(i2, j2));
    for (const auto& u : s.U) c.j_gens_.push_back(u);
    dedup_keep_first(c.j_gens_);

    for (int j = 0; j < N; ++j) {
        LaurentPoly total(n);
        for (int i = 0; i < r; ++i) total = total + c.embedded_gen(i, j);
        c.a_poly_gens_.push_back(std::move(total));
    }

    // Consistency of the derived sets with the face geometry: products of
    // generators from two different faces land in the interior, and the
    // phi images stay in the union of the open face regions.
    for (const auto& g : c.j_gens_)
        for (const auto& e : g.support())
            if (s.cone.classify(e).region != Region::Interior)
                throw ValidationError("C-face", "derived J generator has support point " +
                                                    e.to_string() + " outside the cone interior");
    for (const auto& g : c.a_poly_gens_)
        for (const auto& e : g.support())
            if (s.cone.classify(e).region != Region::FaceInterior)
                throw ValidationError("C-face", "phi(r_j) has support point " + e.to_string() +
                                                    " outside the open face regions");

    for (int j = 0; j < N; ++j) {
        Rational min_grade;
        bool first = true;
        for (int i = 0; i < r; ++i) {
            Rational g = c.rho_degree(c.embedded_gen(i, j));
            if (first || g < min_grade) {
                min_grade = g;
                first = false;
            }
        }
        c.gen_min_grades_.push_back(min_grade);
    }

    c.warnings_.push_back("injectivity of the embeddings is assumed, not verified");
    TermOrder probe = TermOrder::lex(n);
    for (int i = 0; i < r; ++i) {
        std::set<ExponentVector> leads;
        for (int j = 0; j < N; ++j) leads.insert(c.embedded_gen(i, j).leading(probe).first);
        if (static_cast<int>(leads.size()) != N)
            c.warnings_.push_back("embedding " + std::to_string(i) +
                                  " images share leading exponents at low degree; injectivity "
                                  "looks doubtful");
    }

    return c;
}

LaurentPoly Construction::psi_apply(int i, const LaurentPoly& p) const {
    return substitute(p, spec_.embeddings.at(static_cast<std::size_t>(i)));
}

LaurentPoly Construction::phi_apply(const LaurentPoly& p) const {
    LaurentPoly acc(spec_.dim);
    for (int i = 0; i < embedding_count(); ++i) acc = acc + psi_apply(i, p);
    return acc;
}

Rational Construction::rho_degree(const LaurentPoly& f) const {
    Rational best(0);
    bool first = true;
    for (const auto& [e, coeff] : f.terms()) {
        Rational v = dot(spec_.filtration, e);
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

Rational Construction::grade_of(const LaurentPoly& f) const {
    if (spec_.grading && !f.is_zero())
        return dot(*spec_.grading, f.terms().begin()->first);
    return rho_degree(f);
}

std::vector<SourceMonomial> source_monomials(const Construction& c, const Rational& D) {
    auto multis = bounded_multis(c.gen_min_grades(), D);
    PowerTable sources(c.spec().source_gens);
    std::vector<SourceMonomial> out;
    for (const auto& m : multis) {
        if (!is_nonzero_multi(m)) continue;
        LaurentPoly src = sources.product(m);
        LaurentPoly img = c.phi_apply(src);
        if (c.rho_degree(img) > D) continue;
        out.push_back(SourceMonomial{m, std::move(src), std::move(img)});
    }
    return out;
}

std::vector<SourceMonomial> psi_source_monomials(const Construction& c, int i,
                                                 const Rational& D) {
    QVector weights;
    for (int j = 0; j < c.source_gen_count(); ++j)
        weights.push_back(c.rho_degree(c.embedded_gen(i, j)));
    auto multis = bounded_multis(weights, D);
    PowerTable sources(c.spec().source_gens);
    std::vector<SourceMonomial> out;
    for (const auto& m : multis) {
        if (!is_nonzero_multi(m)) continue;
        LaurentPoly src = sources.product(m);
        LaurentPoly img = c.psi_apply(i, src);
        if (c.rho_degree(img) > D) continue;
        out.push_back(SourceMonomial{m, std::move(src), std::move(img)});
    }
    return out;
}

SpanningSets filtered_spanning_sets(const Construction& c, const Rational& D) {
    SpanningSets sets;
    sets.exact = c.is_graded();
    const int n = c.dim();

    for (auto& sm : source_monomials(c, D)) sets.phiI.push_back(std::move(sm.image));
    dedup_keep_first(sets.phiI);

    // Products of B generators. The rho-degree of a product is the sum of
    // the factors' rho-degrees (leading terms multiply over a domain), so
    // the weight bookkeeping below is exact rather than an estimate.
    QVector b_weights;
    for (const auto& b : c.b_generators()) b_weights.push_back(c.rho_degree(b));
    auto b_multis = bounded_multis(b_weights, D);
    PowerTable b_table(c.b_generators());
    std::vector<Rational> b_product_weight;
    std::vector<LaurentPoly> b_products;
    for (const auto& m : b_multis) {
        Rational w(0);
        for (std::size_t k = 0; k < m.size(); ++k)
            w += Rational(static_cast<long>(m[k])) * b_weights[k];
        b_products.push_back(b_table.product(m));
        b_product_weight.push_back(w);
    }

    for (const auto& g : c.j_generators()) {
        Rational wg = c.rho_degree(g);
        for (std::size_t k = 0; k < b_products.size(); ++k) {
            if (wg + b_product_weight[k] > D) continue;
            sets.J.push_back(g * b_products[k]);
        }
    }
    dedup_keep_first(sets.J);

    sets.B = b_products;
    dedup_keep_first(sets.B);

    sets.A.push_back(LaurentPoly::constant(n, 1));
    sets.A.insert(sets.A.end(), sets.phiI.begin(), sets.phiI.end());
    sets.A.insert(sets.A.end(), sets.J.begin(), sets.J.end());
    dedup_keep_first(sets.A);
    return sets;
}

} // namespace inialg
