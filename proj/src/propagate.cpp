#include "weightprop/propagate.hpp"

#include <spdlog/spdlog.h>

#include "weightprop/errors.hpp"

namespace weightprop {

namespace {

void check_weights(const RingSpec& ring, const WeightList& w, std::size_t rank, const char* what) {
    if (w.size() != rank)
        throw DomainError(std::string(what) + " has " + std::to_string(w.size()) + " weights, expected " +
                          std::to_string(rank));
    for (const auto& x : w)
        if (x.size() != ring.weight_rank()) throw DomainError(std::string(what) + " contains a weight of wrong length");
}

PropagationResult single_degree_unchecked(const PolyMatrix& m, const WeightList& w, const ModuleOrder& order) {
    if (m.cols() == 0) return {ScalarMatrix(0, 0), {}, m};
    const Multidegree d = m.domain().degree(0);
    GroebnerBasis gb = buchberger(m, order, d);
    std::vector<ModuleElement> keep;
    for (auto& e : gb.elements)
        if (element_degree(gb.module, e) == d) keep.push_back(std::move(e));
    gb.elements = std::move(keep);
    PolyMatrix g = sort_gb_columns(gb, order.position_up() ? SortDirection::Increasing : SortDirection::Decreasing);
    ScalarMatrix c = change_of_basis(m, g);
    WeightList v;
    for (const auto& col : g.columns()) {
        ModuleTerm lt = leading_term(order, col).term;
        v.push_back(m.ring().weight_of(lt.monomial) + w[lt.index]);
    }
    return {std::move(c), std::move(v), std::move(g)};
}

}  // namespace

PropagationResult propagate_single_degree(const PolyMatrix& m, const WeightList& w, const ModuleOrder& order) {
    check_weights(m.ring(), w, m.rows(), "codomain weight list");
    for (std::size_t j = 1; j < m.cols(); ++j)
        if (m.domain().degree(j) != m.domain().degree(0)) throw DomainError("columns have different degrees");
    if (!is_minimal_map(m)) throw DomainError("not a minimal map");
    return single_degree_unchecked(m, w, order);
}

PropagationResult propagate(const PolyMatrix& m, const WeightList& w, const ModuleOrder& order) {
    check_weights(m.ring(), w, m.rows(), "codomain weight list");
    if (!is_minimal_map(m)) throw DomainError("not a minimal map");
    ColumnSplit split = split_by_column_degree(m);
    std::vector<ScalarMatrix> cs;
    WeightList v;
    for (std::size_t b = 0; b < split.blocks.size(); ++b) {
        PropagationResult r = single_degree_unchecked(split.blocks[b], w, order);
        spdlog::debug("propagate: block {} of degree {} has {} columns", b, split.degrees[b].str(),
                      split.blocks[b].cols());
        cs.push_back(std::move(r.change_of_basis));
        v.insert(v.end(), r.weights.begin(), r.weights.end());
    }
    ScalarMatrix c = split.permutation * block_diagonal(cs);
    PolyMatrix g = mat_mul(m, c);
    return {std::move(c), std::move(v), std::move(g)};
}

PropagationResult propagate_forward(const PolyMatrix& m, const WeightList& v, const ModuleOrder& order) {
    check_weights(m.ring(), v, m.cols(), "domain weight list");
    PolyMatrix dual = dual_map(m);
    if (!is_minimal_map(dual)) throw DomainError("dual map is not minimal");
    WeightList neg;
    for (const auto& x : v) neg.push_back(-x);
    PropagationResult r = propagate(dual, neg, order.flipped());
    WeightList w;
    for (const auto& x : r.weights) w.push_back(-x);
    return {r.change_of_basis.transpose(), std::move(w), std::move(r.basis_matrix)};
}

ResolutionWeights propagate_resolution(const std::vector<PolyMatrix>& diffs, std::size_t c, const WeightList& vc,
                                       const ModuleOrder& order) {
    const std::size_t len = diffs.size();
    if (c > len) throw InputError("start index beyond the length of the resolution");
    for (std::size_t i = 1; i < len; ++i)
        if (!(diffs[i].codomain() == diffs[i - 1].domain()))
            throw DomainError("differential d" + std::to_string(i + 1) + " does not compose with d" +
                              std::to_string(i));
    auto rank_of = [&](std::size_t i) { return i == 0 ? diffs[0].rows() : diffs[i - 1].cols(); };

    ResolutionWeights out;
    out.per_module.resize(len + 1);
    out.change_of_basis.resize(len + 1);
    if (len == 0) {
        out.per_module[0] = vc;
        out.change_of_basis[0] = ScalarMatrix::identity(vc.size());
        return out;
    }
    check_weights(diffs[0].ring(), vc, rank_of(c), "starting weight list");
    out.per_module[c] = vc;
    out.change_of_basis[c] = ScalarMatrix::identity(rank_of(c));

    for (std::size_t k = c + 1; k <= len; ++k) {
        try {
            PolyMatrix in = mat_mul(scalar_inverse(*out.change_of_basis[k - 1]), diffs[k - 1]);
            PropagationResult r = propagate(in, *out.per_module[k - 1], order);
            out.per_module[k] = r.weights;
            out.change_of_basis[k] = r.change_of_basis;
            out.steps.push_back({k, false, std::move(in), std::move(r)});
        } catch (const Error& e) {
            out.errors.push_back("step to F" + std::to_string(k) + ": " + e.what());
            spdlog::warn("resolution step to F{} failed: {}", k, e.what());
            break;
        }
    }
    for (std::size_t k = c; k-- > 0;) {
        try {
            PolyMatrix in = mat_mul(diffs[k], scalar_inverse(*out.change_of_basis[k + 1]));
            PropagationResult r = propagate_forward(in, *out.per_module[k + 1], order);
            out.per_module[k] = r.weights;
            out.change_of_basis[k] = r.change_of_basis;
            out.steps.push_back({k, true, std::move(in), std::move(r)});
        } catch (const Error& e) {
            out.errors.push_back("step to F" + std::to_string(k) + ": " + e.what());
            spdlog::warn("resolution step to F{} failed: {}", k, e.what());
            break;
        }
    }
    return out;
}

WeightList propagate_graded_components(const Multidegree& d, const PolyMatrix& m, const WeightList& w,
                                       const ModuleOrder& order, const std::optional<Multidegree>& gb_cap) {
    check_weights(m.ring(), w, m.rows(), "weight list");
    GroebnerBasis gb = buchberger(m, order, gb_cap);
    std::vector<ModuleTerm> terms = standard_monomials(gb, d, m.codomain());
    if (terms.empty()) return {};
    std::vector<ModuleElement> cols;
    for (const auto& t : terms) {
        ModuleElement e(m.rows());
        e[t.index].add_term(t.monomial, 1);
        cols.push_back(std::move(e));
    }
    FreeModule dom(m.codomain().ring_ptr(), std::vector<Multidegree>(terms.size(), d));
    return propagate(PolyMatrix(m.codomain(), std::move(dom), std::move(cols)), w, order).weights;
}

}  // namespace weightprop
