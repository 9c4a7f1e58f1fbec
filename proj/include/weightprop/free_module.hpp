#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "weightprop/polynomial.hpp"
#include "weightprop/ring.hpp"

namespace weightprop {

class FreeModule {
public:
    FreeModule() = default;
    FreeModule(RingPtr ring, std::vector<Multidegree> degrees);
    static FreeModule free_of_rank(RingPtr ring, std::size_t rank);

    const RingSpec& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    std::size_t rank() const { return degrees_.size(); }
    const Multidegree& degree(std::size_t j) const { return degrees_[j]; }
    const std::vector<Multidegree>& degrees() const { return degrees_; }

    FreeModule negated() const;

    friend bool operator==(const FreeModule& a, const FreeModule& b) {
        return a.degrees_ == b.degrees_ && (a.ring_ == b.ring_ || (a.ring_ && b.ring_ && *a.ring_ == *b.ring_));
    }

private:
    RingPtr ring_;
    std::vector<Multidegree> degrees_;
};

struct ModuleTerm {
    Monomial monomial;
    std::size_t index = 0;
    friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

enum class ModuleOrderKind { TopUp, PotUp, TopDown, PotDown };

ModuleOrderKind parse_module_order(const std::string& s);
std::string to_string(ModuleOrderKind k);

struct ModuleOrder {
    TermOrder term = TermOrder::GrevLex;
    ModuleOrderKind kind = ModuleOrderKind::TopUp;

    static ModuleOrder on(const RingSpec& ring, ModuleOrderKind kind) { return {ring.order(), kind}; }
    bool position_up() const { return kind == ModuleOrderKind::TopUp || kind == ModuleOrderKind::PotUp; }
    // up <-> down, keeping term/position priority.
    ModuleOrder flipped() const;
};

std::strong_ordering cmp_module_terms(const ModuleOrder& order, const ModuleTerm& a, const ModuleTerm& b);

// Entry j is the coefficient of basis element j.
class ModuleElement {
public:
    ModuleElement() = default;
    explicit ModuleElement(std::size_t rank) : e_(rank) {}
    explicit ModuleElement(std::vector<Polynomial> entries) : e_(std::move(entries)) {}
    static ModuleElement unit(std::size_t rank, std::size_t nvars, std::size_t j);

    std::size_t rank() const { return e_.size(); }
    const Polynomial& operator[](std::size_t j) const { return e_[j]; }
    Polynomial& operator[](std::size_t j) { return e_[j]; }
    const std::vector<Polynomial>& entries() const { return e_; }
    bool is_zero() const;
    std::size_t term_count() const;

    // this += c * t * g
    void add_multiple(const Rational& c, const Monomial& t, const ModuleElement& g);
    ModuleElement& operator*=(const Rational& c);
    ModuleElement& operator+=(const ModuleElement& o);
    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

private:
    std::vector<Polynomial> e_;
};

struct LeadingTerm {
    ModuleTerm term;
    Rational coefficient;
};

// Throws DomainError on zero.
LeadingTerm leading_term(const ModuleOrder& order, const ModuleElement& e);

// Degree of a homogeneous element of F; nullopt when inhomogeneous. Throws on zero.
std::optional<Multidegree> element_degree(const FreeModule& f, const ModuleElement& e);

}  // namespace weightprop
