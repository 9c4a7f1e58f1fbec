#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weightprop/groebner.hpp"

namespace weightprop {

// One weight per basis element of a free module.
using WeightList = std::vector<Weight>;

struct PropagationResult {
    ScalarMatrix change_of_basis;  // C
    WeightList weights;            // V
    PolyMatrix basis_matrix;       // G = M*C; for forward steps, the matrix of the dual step
};

PropagationResult propagate_single_degree(const PolyMatrix& m, const WeightList& w, const ModuleOrder& order);
PropagationResult propagate(const PolyMatrix& m, const WeightList& w, const ModuleOrder& order);
// Weights of the codomain from the weights of the domain, through the dual map.
PropagationResult propagate_forward(const PolyMatrix& m, const WeightList& v, const ModuleOrder& order);

struct ResolutionStep {
    std::size_t module = 0;  // index i of the F_i whose weights this step produced
    bool forward = false;
    PolyMatrix input;
    PropagationResult result;
};

struct ResolutionWeights {
    std::vector<std::optional<WeightList>> per_module;  // V_0 ... V_m
    std::vector<std::optional<ScalarMatrix>> change_of_basis;
    std::vector<ResolutionStep> steps;
    std::vector<std::string> errors;

    bool complete() const { return errors.empty(); }
};

// Differentials d_1..d_m as diffs[0..m-1]; weights V_c of F_c are given. Failing steps are
// reported in `errors` and leave the affected lists empty.
ResolutionWeights propagate_resolution(const std::vector<PolyMatrix>& diffs, std::size_t c, const WeightList& vc,
                                       const ModuleOrder& order);

// Weights of the degree-d component of coker M.
WeightList propagate_graded_components(const Multidegree& d, const PolyMatrix& m, const WeightList& w,
                                       const ModuleOrder& order,
                                       const std::optional<Multidegree>& gb_cap = std::nullopt);

}  // namespace weightprop
