#include "weightprop/polynomial.hpp"

#include <algorithm>

#include "weightprop/errors.hpp"

namespace weightprop {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    return term(Monomial(nvars), c);
}

Polynomial Polynomial::term(const Monomial& t, const Rational& c) {
    Polynomial p;
    if (c != 0) p.add_term(t, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    return term(Monomial::variable(nvars, i), 1);
}

Rational Polynomial::coefficient(const Monomial& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_coefficient() const {
    if (terms_.empty()) return 0;
    return coefficient(Monomial(terms_.begin()->first.nvars()));
}

void Polynomial::add_term(const Monomial& t, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Polynomial::add_multiple(const Rational& c, const Monomial& t, const Polynomial& p) {
    if (c == 0) return;
    for (const auto& [m, a] : p.terms_) add_term(t * m, c * a);
}

std::pair<Monomial, Rational> Polynomial::leading_term(TermOrder order) const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (cmp_monomials(order, it->first, best->first) > 0) best = it;
    return *best;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms(TermOrder order) const {
    std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [&](const auto& a, const auto& b) { return cmp_monomials(order, a.first, b.first) > 0; });
    return v;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [m, c] : a.terms_) r.add_multiple(c, m, b);
    return r;
}

std::optional<Multidegree> homogeneous_degree(const RingSpec& ring, const Polynomial& p) {
    if (p.is_zero()) throw DomainError("zero polynomial has no degree");
    auto it = p.terms().begin();
    Multidegree d = ring.degree_of(it->first);
    for (++it; it != p.terms().end(); ++it)
        if (ring.degree_of(it->first) != d) return std::nullopt;
    return d;
}

std::string to_string(const RingSpec& ring, const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms(ring.order())) {
        Rational a = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring.names()[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            s += to_string(a);
        else if (a == 1)
            s += mono;
        else
            s += to_string(a) + "*" + mono;
    }
    return s;
}

}  // namespace weightprop
