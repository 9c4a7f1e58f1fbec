#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weightprop/matrix.hpp"

namespace weightprop {

struct GroebnerBasis {
    FreeModule module;
    ModuleOrder order;
    std::vector<ModuleElement> elements;
    bool monic = true;

    std::vector<ModuleTerm> leading_terms() const;
    // Columns in stored order; domain degrees are the element degrees.
    PolyMatrix as_matrix() const;
};

// elements[k] = M * cofactors[k], with cofactors living in the domain of M.
struct TrackedBasis {
    GroebnerBasis basis;
    std::vector<ModuleElement> cofactors;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;
    ModuleElement remainder;
};

// Full reduction; at each step the first divisor in list order is used.
DivisionResult normal_form(const ModuleElement& e, const std::vector<ModuleElement>& divisors,
                           const ModuleOrder& order);

// Reduced monic basis of the column span. With a bound, S-pairs are processed in increasing
// degree and everything of degree above the bound (in RingSpec::cmp_degrees) is skipped.
TrackedBasis buchberger_tracked(const PolyMatrix& m, const ModuleOrder& order,
                                const std::optional<Multidegree>& bound = std::nullopt);
GroebnerBasis buchberger(const PolyMatrix& m, const ModuleOrder& order,
                         const std::optional<Multidegree>& bound = std::nullopt);

enum class SortDirection { Increasing, Decreasing };

PolyMatrix sort_gb_columns(const GroebnerBasis& g, SortDirection dir);

// Unique C with G = M * C. Throws DomainError when M has dependent columns or G leaves its span.
ScalarMatrix change_of_basis(const PolyMatrix& m, const PolyMatrix& g);

// Minimal generators of the syzygy module of the columns of M.
PolyMatrix syzygies(const PolyMatrix& m, const ModuleOrder& order);

struct Resolution {
    FreeModule f0;
    std::vector<PolyMatrix> differentials;  // differentials[i] is d_{i+1}: F_{i+1} -> F_i

    std::size_t length() const { return differentials.size(); }
    std::vector<std::size_t> ranks() const;
    const FreeModule& module(std::size_t i) const { return i == 0 ? f0 : differentials[i - 1].domain(); }
};

Resolution minimal_resolution(const PolyMatrix& m, const ModuleOrder& order, std::size_t max_length = 64);

// All t*f_j of degree d in decreasing module order.
std::vector<ModuleTerm> enumerate_terms(const FreeModule& f, const Multidegree& d, const ModuleOrder& order);

// Terms of degree d not divisible by any leading term of g, decreasing.
std::vector<ModuleTerm> standard_monomials(const GroebnerBasis& g, const Multidegree& d, const FreeModule& f);

// Columns are minimal generators of the image (Nakayama test, degree by degree).
bool is_minimal_map(const PolyMatrix& m);

// Minimal differential in the local sense: no entry has a nonzero constant term.
inline bool has_no_unit_entries(const PolyMatrix& m) { return !m.has_unit_entry(); }

}  // namespace weightprop
