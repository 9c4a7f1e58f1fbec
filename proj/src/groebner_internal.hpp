#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "weightprop/free_module.hpp"

namespace weightprop::detail {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

inline bool lt_divides(const ModuleTerm& d, const ModuleTerm& t) {
    return d.index == t.index && d.monomial.divides(t.monomial);
}

// Reduces p completely. on_step(k, c, u) reports p -= c*u*g[k]. Divisor `skip` is ignored.
template <class OnStep>
ModuleElement reduce_full(ModuleElement p, const std::vector<ModuleElement>& g,
                          const std::vector<LeadingTerm>& lts, const ModuleOrder& order, OnStep&& on_step,
                          std::size_t skip = npos) {
    ModuleElement r(p.rank());
    while (!p.is_zero()) {
        LeadingTerm l = leading_term(order, p);
        std::size_t k = 0;
        while (k < g.size() && (k == skip || !lt_divides(lts[k].term, l.term))) ++k;
        if (k < g.size()) {
            Monomial u = lts[k].term.monomial.quotient_of(l.term.monomial);
            Rational c = l.coefficient / lts[k].coefficient;
            p.add_multiple(-c, u, g[k]);
            on_step(k, c, u);
        } else {
            r[l.term.index].add_term(l.term.monomial, l.coefficient);
            p[l.term.index].add_term(l.term.monomial, -l.coefficient);
        }
    }
    return r;
}

// Row-echelon set of vectors keyed by leading term; tests K-linear independence.
class EchelonSet {
public:
    explicit EchelonSet(ModuleOrder order) : order_(order) {}

    // Adds v when independent of the stored vectors; returns whether it was added.
    bool insert(ModuleElement v) {
        while (!v.is_zero()) {
            LeadingTerm l = leading_term(order_, v);
            std::size_t k = 0;
            while (k < rows_.size() && !(lts_[k].term == l.term)) ++k;
            if (k == rows_.size()) {
                lts_.push_back(l);
                rows_.push_back(std::move(v));
                return true;
            }
            v.add_multiple(-l.coefficient / lts_[k].coefficient, Monomial(l.term.monomial.nvars()), rows_[k]);
        }
        return false;
    }

private:
    ModuleOrder order_;
    std::vector<ModuleElement> rows_;
    std::vector<LeadingTerm> lts_;
};

}  // namespace weightprop::detail
