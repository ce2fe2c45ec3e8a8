#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "inialg/orders.hpp"

using namespace inialg;

namespace {

// Reference comparator: evaluates the weight rows directly with rational
// arithmetic, independent of TermOrder::compare's loop structure.
Ordering oracle_compare(const std::vector<QVector>& rows, const ExponentVector& a,
                        const ExponentVector& b) {
    for (const auto& r : rows) {
        Rational da = dot(r, a), db = dot(r, b);
        if (da < db) return Ordering::Less;
        if (da > db) return Ordering::Greater;
    }
    return Ordering::Equal;
}

ExponentVector random_vector(std::mt19937_64& rng, int dim, int span = 6) {
    std::uniform_int_distribution<std::int64_t> d(-span, span);
    std::vector<std::int64_t> v(static_cast<std::size_t>(dim));
    for (auto& c : v) c = d(rng);
    return ExponentVector(std::move(v));
}

TermOrder random_order(std::mt19937_64& rng, int dim) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<QVector> rows;
    int nrows = 1 + static_cast<int>(rng() % static_cast<unsigned>(dim));
    for (int i = 0; i < nrows; ++i) {
        QVector row;
        for (int j = 0; j < dim; ++j) row.push_back(rat(num(rng), den(rng)));
        rows.push_back(std::move(row));
    }
    return TermOrder::from_weights(std::move(rows));
}

} // namespace

TEST_CASE("compare under lex") {
    TermOrder lex = TermOrder::lex(2);
    CHECK(lex.compare({1, 0}, {0, 1}) == Ordering::Greater);
    CHECK(lex.compare({3, -2}, {3, -2}) == Ordering::Equal);
}

TEST_CASE("compare under a negative weight order") {
    // rows (-2,-3),(1,0): the weight side of o(-w) for w=(2,3).
    TermOrder ord({qvec({-2, -3}), qvec({1, 0})});
    // dot products: -2 for (1,0) vs 0 for (0,0)
    CHECK(oracle_compare(ord.rows(), {1, 0}, {0, 0}) == Ordering::Less);
    CHECK(ord.compare({1, 0}, {0, 0}) == Ordering::Less);
}

TEST_CASE("compare rejects dimension mismatch") {
    TermOrder lex = TermOrder::lex(2);
    CHECK_THROWS_AS(lex.compare({1, 0, 0}, {0, 1, 0}), DimensionError);
}

TEST_CASE("rank-deficient rows are rejected") {
    CHECK_THROWS_AS(TermOrder({qvec({1, 1}), qvec({2, 2})}), Error);
}

TEST_CASE("extreme_of_set") {
    TermOrder lex = TermOrder::lex(2);
    std::vector<ExponentVector> s{{1, 0}, {0, 1}, {1, 1}};
    CHECK(extreme_of_set(lex, s, Extreme::Max) == ExponentVector{1, 1});

    std::vector<ExponentVector> single{{0, 0}};
    CHECK(extreme_of_set(lex, single, Extreme::Min) == ExponentVector{0, 0});

    TermOrder ord({qvec({-2, -3}), qvec({1, 0})});
    std::vector<ExponentVector> t{{1, 0}, {0, 1}};
    // -2 > -3, verified by the direct dot products
    REQUIRE(oracle_compare(ord.rows(), {0, 1}, {1, 0}) == Ordering::Less);
    CHECK(extreme_of_set(ord, t, Extreme::Max) == ExponentVector{1, 0});

    CHECK_THROWS_AS(extreme_of_set(lex, std::span<const ExponentVector>{}, Extreme::Max), Error);
}

TEST_CASE("is_monomial_order") {
    CHECK(TermOrder::lex(3).is_monomial_order());

    TermOrder neg({qvec({-2, -3}), qvec({1, 0})});
    CHECK_FALSE(neg.is_monomial_order());
    // cross-check by sampling (Z>=0)^2: some point must compare below 0
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> d(0, 6);
    bool found_below_zero = false;
    for (int i = 0; i < 1000; ++i) {
        ExponentVector p({d(rng), d(rng)});
        if (neg.compare(p, ExponentVector::zero(2)) == Ordering::Less) found_below_zero = true;
    }
    CHECK(found_below_zero);

    // weight row (1,0,0,lambda) with lambda=2, completed: a monomial order
    TermOrder lam = TermOrder::from_weights({{rat(1), rat(0), rat(0), rat(2)}});
    CHECK(lam.is_monomial_order());
}

TEST_CASE("monomial orders put (Z>=0)^n above the origin") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> d(0, 9);
    for (int dim = 2; dim <= 4; ++dim) {
        for (int t = 0; t < 20; ++t) {
            TermOrder ord = random_order(rng, dim);
            if (!ord.is_monomial_order()) continue;
            for (int i = 0; i < dim; ++i)
                CHECK(ord.compare(ExponentVector::zero(dim), ExponentVector::unit(dim, i)) ==
                      Ordering::Less);
            for (int i = 0; i < 50; ++i) {
                std::vector<std::int64_t> v(static_cast<std::size_t>(dim));
                for (auto& c : v) c = d(rng);
                auto cmp = ord.compare(ExponentVector::zero(dim), ExponentVector(std::move(v)));
                CHECK(cmp != Ordering::Greater);
            }
        }
    }
}

TEST_CASE("order_from_weights") {
    TermOrder ident = TermOrder::from_weights({qvec({1, 0}), qvec({0, 1})});
    CHECK(ident == TermOrder::lex(2));

    TermOrder w23 = TermOrder::from_weights({qvec({2, 3})});
    CHECK(w23.compare({0, 1}, {1, 0}) == Ordering::Greater); // 3 > 2

    // lambda-family weight: x1*x2 below y1*y2 on exponents (1,1,0,0) vs (0,0,1,1)
    TermOrder lam = TermOrder::from_weights({{rat(1), rat(0), rat(0), rat(2)}});
    CHECK(lam.compare({1, 1, 0, 0}, {0, 0, 1, 1}) == Ordering::Less);

    CHECK_THROWS_AS(TermOrder::from_weights({qvec({1, 0}), qvec({1, 0, 0})}), DimensionError);
}

TEST_CASE("order axioms on random data") {
    std::mt19937_64 rng(2024);
    for (int dim = 1; dim <= 4; ++dim) {
        for (int t = 0; t < 40; ++t) {
            TermOrder ord = random_order(rng, dim);
            for (int i = 0; i < 25; ++i) {
                ExponentVector a = random_vector(rng, dim);
                ExponentVector b = random_vector(rng, dim);
                ExponentVector c = random_vector(rng, dim);
                // totality: exactly one of <,>,= and = only for a == b
                Ordering ab = ord.compare(a, b);
                Ordering ba = ord.compare(b, a);
                if (a == b) {
                    CHECK(ab == Ordering::Equal);
                } else {
                    CHECK(ab != Ordering::Equal);
                    CHECK((ab == Ordering::Less) == (ba == Ordering::Greater));
                }
                // translation invariance
                CHECK(ord.compare(a + c, b + c) == ab);
                // agreement with the direct-evaluation oracle
                CHECK(oracle_compare(ord.rows(), a, b) == ab);
                // transitivity
                if (ord.compare(a, b) != Ordering::Greater &&
                    ord.compare(b, c) != Ordering::Greater)
                    CHECK(ord.compare(a, c) != Ordering::Greater);
            }
        }
    }
}

TEST_CASE("find_generic_weight agreement") {
    TermOrder lex = TermOrder::lex(2);
    std::vector<ExponentVector> F{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    QVector w = find_generic_weight(F, lex);
    for (const auto& a : F)
        for (const auto& b : F) {
            if (a == b) continue;
            CHECK((lex.compare(a, b) == Ordering::Less) == (dot(w, a) < dot(w, b)));
        }
    // expected chain under lex: (0,0) < (0,1) < (1,0) < (1,1)
    CHECK(dot(w, ExponentVector{0, 1}) < dot(w, ExponentVector{1, 0}));
    CHECK(dot(w, ExponentVector{1, 0}) < dot(w, ExponentVector{1, 1}));

    // singleton: vacuous, any w
    CHECK_NOTHROW(find_generic_weight({{0, 0}}, lex));

    // antipodal pair: w.a must be positive when a is above 0
    std::vector<ExponentVector> pair{{1, 2}, {-1, -2}};
    QVector w2 = find_generic_weight(pair, lex);
    CHECK(sign(dot(w2, ExponentVector{1, 2})) > 0);
}

TEST_CASE("find_generic_weight on random sets and orders") {
    std::mt19937_64 rng(99);
    for (int dim = 2; dim <= 4; ++dim) {
        for (int t = 0; t < 30; ++t) {
            TermOrder ord = random_order(rng, dim);
            std::vector<ExponentVector> F;
            for (int i = 0; i < 8; ++i) F.push_back(random_vector(rng, dim));
            QVector w = find_generic_weight(F, ord);
            for (const auto& a : F)
                for (const auto& b : F) {
                    if (a == b) continue;
                    CHECK((ord.compare(a, b) == Ordering::Less) == (dot(w, a) < dot(w, b)));
                }
        }
    }
}
