#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weightprop/rational.hpp"
#include "weightprop/ring.hpp"

namespace weightprop {

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial term(const Monomial& t, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of 1; zero when absent.
    Rational constant_coefficient() const;
    Rational coefficient(const Monomial& t) const;

    void add_term(const Monomial& t, const Rational& c);
    // this += c * t * p
    void add_multiple(const Rational& c, const Monomial& t, const Polynomial& p);

    // Maximal term under the given order; requires nonzero.
    std::pair<Monomial, Rational> leading_term(TermOrder order) const;
    // Terms sorted by decreasing term order.
    std::vector<std::pair<Monomial, Rational>> sorted_terms(TermOrder order) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial poly_scale(const Polynomial& p, const Rational& c) { return p * c; }

// Throws DomainError for the zero polynomial; nullopt when inhomogeneous.
std::optional<Multidegree> homogeneous_degree(const RingSpec& ring, const Polynomial& p);

// Canonical form: decreasing term order, explicit '*' and '^'.
std::string to_string(const RingSpec& ring, const Polynomial& p);

Polynomial parse_polynomial(const RingSpec& ring, const std::string& text);

}  // namespace weightprop
