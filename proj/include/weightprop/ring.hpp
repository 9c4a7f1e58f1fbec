#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "weightprop/zvector.hpp"

namespace weightprop {

enum class TermOrder { Lex, GrevLex };

TermOrder parse_term_order(const std::string& s);
std::string to_string(TermOrder o);

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
        Monomial m(nvars);
        m.e_[i] = power;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t total_degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    // Caller guarantees *this divides other.
    Monomial quotient_of(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Storage order only; term orders go through cmp_monomials.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> e_;
};

std::strong_ordering cmp_monomials(TermOrder order, const Monomial& a, const Monomial& b);

class RingSpec {
public:
    RingSpec(std::vector<std::string> names, std::vector<Multidegree> degrees,
             std::vector<Weight> weights, TermOrder order);

    // Standard grading, unit-vector weights.
    static RingSpec standard(std::vector<std::string> names, TermOrder order = TermOrder::GrevLex);

    std::size_t nvars() const { return names_.size(); }
    std::size_t grading_rank() const { return degrees_.front().size(); }
    std::size_t weight_rank() const { return weights_.front().size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Multidegree>& degrees() const { return degrees_; }
    const std::vector<Weight>& weights() const { return weights_; }
    TermOrder order() const { return order_; }

    // -1 when absent.
    int index_of(const std::string& name) const;

    Weight weight_of(const Monomial& t) const;
    Multidegree degree_of(const Monomial& t) const;
    Multidegree zero_degree() const { return Multidegree(grading_rank()); }
    Weight zero_weight() const { return Weight(weight_rank()); }

    // Total order on multidegrees compatible with multiplication by non-unit monomials.
    std::strong_ordering cmp_degrees(const Multidegree& a, const Multidegree& b) const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.names_ == b.names_ && a.degrees_ == b.degrees_ && a.weights_ == b.weights_ &&
               a.order_ == b.order_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Multidegree> degrees_;
    std::vector<Weight> weights_;
    TermOrder order_;
    bool sum_first_ = true;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline Weight weight_of_monomial(const RingSpec& ring, const Monomial& t) { return ring.weight_of(t); }
inline Multidegree multidegree_of_monomial(const RingSpec& ring, const Monomial& t) {
    return ring.degree_of(t);
}

// All monomials of multidegree d, in decreasing term order.
std::vector<Monomial> monomials_of_degree(const RingSpec& ring, const Multidegree& d);

}  // namespace weightprop
