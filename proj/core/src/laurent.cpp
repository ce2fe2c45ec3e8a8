#include "inialg/laurent.hpp"

#include <algorithm>

namespace inialg {

void LaurentPoly::add_term(const ExponentVector& e, const Rational& c) {
    if (e.dim() != dim_) throw DimensionError("term of wrong dimension");
    if (sign(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sign(it->second) == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& exp, const Rational& coeff) {
    LaurentPoly p(exp.dim());
    p.add_term(exp, coeff);
    return p;
}

LaurentPoly LaurentPoly::constant(int dim, Rational value) {
    return monomial(ExponentVector::zero(dim), std::move(value));
}

LaurentPoly LaurentPoly::variable(int dim, int i) {
    return monomial(ExponentVector::unit(dim, i), Rational(1));
}

LaurentPoly LaurentPoly::from_terms(
    int dim, const std::vector<std::pair<ExponentVector, Rational>>& terms) {
    LaurentPoly p(dim);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

Rational LaurentPoly::coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (dim_ != o.dim_) throw DimensionError("adding polynomials of different dimensions");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (dim_ != o.dim_) throw DimensionError("multiplying polynomials of different dimensions");
    LaurentPoly r(dim_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(dim_);
    if (sign(c) == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
    LaurentPoly acc = constant(dim_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit_monomial()) throw Error("inverse of a non-monomial Laurent polynomial");
    const auto& [e, c] = *terms_.begin();
    return monomial(-e, rat(c.get_den(), c.get_num()));
}

std::vector<ExponentVector> LaurentPoly::support() const {
    std::vector<ExponentVector> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

std::pair<ExponentVector, Rational> LaurentPoly::leading(const TermOrder& order) const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        int c = cmp(a->second, b->second);
        if (c != 0) return c < 0;
    }
    return a == terms_.end() && b != o.terms_.end();
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Print in reverse key order so x1-dominant terms come first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational ac = abs(c);
        if (s.empty())
            s += sign(c) < 0 ? "-" : "";
        else
            s += sign(c) < 0 ? " - " : " + ";
        std::string mono;
        for (int i = 0; i < e.dim(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += inialg::to_string(ac);
        else if (ac == 1)
            s += mono;
        else
            s += inialg::to_string(ac) + "*" + mono;
    }
    return s;
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images) {
    if (static_cast<int>(images.size()) != p.dim())
        throw DimensionError("substitute: expected " + std::to_string(p.dim()) +
                             " images, got " + std::to_string(images.size()));
    if (images.empty()) throw Error("substitute with no images");
    int n = images[0].dim();
    for (const auto& im : images)
        if (im.dim() != n) throw DimensionError("substitute: images of mixed dimensions");

    LaurentPoly result(n);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(n, c);
        for (int j = 0; j < p.dim(); ++j) {
            std::int64_t k = e[j];
            if (k == 0) continue;
            if (k > 0) {
                term = term * images[static_cast<std::size_t>(j)].pow(static_cast<unsigned long>(k));
            } else {
                if (!images[static_cast<std::size_t>(j)].is_unit_monomial())
                    throw Error("negative source exponent with non-unit image");
                term = term * images[static_cast<std::size_t>(j)]
                                  .unit_inverse()
                                  .pow(static_cast<unsigned long>(-k));
            }
        }
        result = result + term;
    }
    return result;
}

} // namespace inialg
