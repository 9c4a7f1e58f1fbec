#include <algorithm>
#include <numeric>

#include <spdlog/spdlog.h>

#include "groebner_internal.hpp"
#include "weightprop/errors.hpp"
#include "weightprop/groebner.hpp"

namespace weightprop {

namespace {

// Keeps the candidates that are not in the span of the previously kept ones, degree by degree.
std::vector<std::size_t> minimal_subset(const FreeModule& f, const std::vector<ModuleElement>& cand,
                                        const std::vector<Multidegree>& deg, const ModuleOrder& order) {
    const RingSpec& ring = f.ring();
    std::vector<std::size_t> idx(cand.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return ring.cmp_degrees(deg[a], deg[b]) < 0; });
    std::vector<std::size_t> kept;
    std::size_t i = 0;
    while (i < idx.size()) {
        const Multidegree& d = deg[idx[i]];
        std::size_t end = i;
        while (end < idx.size() && deg[idx[end]] == d) ++end;
        std::vector<ModuleElement> gb;
        if (!kept.empty()) {
            std::vector<ModuleElement> cols;
            std::vector<Multidegree> cd;
            for (auto k : kept) {
                cols.push_back(cand[k]);
                cd.push_back(deg[k]);
            }
            gb = buchberger(PolyMatrix(f, FreeModule(f.ring_ptr(), cd), cols), order, d).elements;
        }
        detail::EchelonSet ech(order);
        for (std::size_t k = i; k < end; ++k)
            if (ech.insert(normal_form(cand[idx[k]], gb, order).remainder)) kept.push_back(idx[k]);
        i = end;
    }
    return kept;
}

}  // namespace

PolyMatrix syzygies(const PolyMatrix& m, const ModuleOrder& order) {
    const FreeModule& e = m.domain();
    const std::size_t nv = m.ring().nvars();
    TrackedBasis tb = buchberger_tracked(m, order);
    const auto& g = tb.basis.elements;
    std::vector<LeadingTerm> lts;
    for (const auto& x : g) lts.push_back(leading_term(order, x));

    // Lifts a relation among the basis elements to one among the columns of M.
    auto lift = [&](const std::vector<Polynomial>& coeffs) {
        ModuleElement s(m.cols());
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            for (const auto& [u, c] : coeffs[k].terms()) s.add_multiple(c, u, tb.cofactors[k]);
        return s;
    };

    std::vector<ModuleElement> cand;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            if (lts[a].term.index != lts[b].term.index) continue;
            Monomial l = lts[a].term.monomial.lcm(lts[b].term.monomial);
            Monomial ua = lts[a].term.monomial.quotient_of(l);
            Monomial ub = lts[b].term.monomial.quotient_of(l);
            ModuleElement s(m.rows());
            s.add_multiple(1, ua, g[a]);
            s.add_multiple(-1, ub, g[b]);
            DivisionResult dr = normal_form(s, g, order);
            if (!dr.remainder.is_zero()) throw Error("internal: S-pair does not reduce to zero");
            std::vector<Polynomial> coeffs(g.size());
            for (std::size_t k = 0; k < g.size(); ++k) coeffs[k] = -dr.quotients[k];
            coeffs[a].add_term(ua, 1);
            coeffs[b].add_term(ub, -1);
            cand.push_back(lift(coeffs));
        }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        DivisionResult dr = normal_form(m.column(j), g, order);
        if (!dr.remainder.is_zero()) throw Error("internal: column does not reduce to zero");
        ModuleElement s = lift(dr.quotients);
        s *= -1;
        s[j].add_term(Monomial(nv), 1);
        cand.push_back(std::move(s));
    }

    std::vector<ModuleElement> nonzero;
    std::vector<Multidegree> deg;
    for (auto& c : cand) {
        if (c.is_zero()) continue;
        auto d = element_degree(e, c);
        if (!d) throw Error("internal: inhomogeneous syzygy");
        deg.push_back(*d);
        nonzero.push_back(std::move(c));
    }
    std::vector<std::size_t> kept = minimal_subset(e, nonzero, deg, order);
    std::vector<ModuleElement> cols;
    std::vector<Multidegree> cd;
    for (auto k : kept) {
        cols.push_back(nonzero[k]);
        cd.push_back(deg[k]);
    }
    spdlog::debug("syzygies: {} candidates, {} minimal generators", nonzero.size(), cols.size());
    return PolyMatrix(e, FreeModule(e.ring_ptr(), std::move(cd)), std::move(cols));
}

std::vector<std::size_t> Resolution::ranks() const {
    std::vector<std::size_t> r{f0.rank()};
    for (const auto& d : differentials) r.push_back(d.cols());
    return r;
}

Resolution minimal_resolution(const PolyMatrix& m, const ModuleOrder& order, std::size_t max_length) {
    if (!is_minimal_map(m)) throw DomainError("presentation is not a minimal map");
    Resolution res{m.codomain(), {}};
    if (m.cols() == 0 || max_length == 0) return res;
    res.differentials.push_back(m);
    while (res.differentials.size() < max_length) {
        PolyMatrix s = syzygies(res.differentials.back(), order);
        if (s.cols() == 0) break;
        res.differentials.push_back(std::move(s));
    }
    return res;
}

bool is_minimal_map(const PolyMatrix& m) {
    ModuleOrder order = ModuleOrder::on(m.ring(), ModuleOrderKind::TopUp);
    std::vector<Multidegree> seen;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.column(j).is_zero()) return false;
        const Multidegree& d = m.domain().degree(j);
        if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
        seen.push_back(d);
        std::vector<std::size_t> other, same;
        for (std::size_t k = 0; k < m.cols(); ++k) (m.domain().degree(k) == d ? same : other).push_back(k);
        std::vector<ModuleElement> gb;
        if (!other.empty()) gb = buchberger(m.select_columns(other), order, d).elements;
        detail::EchelonSet ech(order);
        for (auto k : same)
            if (!ech.insert(normal_form(m.column(k), gb, order).remainder)) return false;
    }
    return true;
}

std::vector<ModuleTerm> enumerate_terms(const FreeModule& f, const Multidegree& d, const ModuleOrder& order) {
    std::vector<ModuleTerm> out;
    for (std::size_t j = 0; j < f.rank(); ++j)
        for (auto& t : monomials_of_degree(f.ring(), d - f.degree(j))) out.push_back(ModuleTerm{std::move(t), j});
    std::sort(out.begin(), out.end(),
              [&](const ModuleTerm& a, const ModuleTerm& b) { return cmp_module_terms(order, a, b) > 0; });
    return out;
}

std::vector<ModuleTerm> standard_monomials(const GroebnerBasis& g, const Multidegree& d, const FreeModule& f) {
    std::vector<ModuleTerm> lts = g.leading_terms();
    std::vector<ModuleTerm> out;
    for (auto& t : enumerate_terms(f, d, g.order))
        if (std::none_of(lts.begin(), lts.end(), [&](const ModuleTerm& l) { return detail::lt_divides(l, t); }))
            out.push_back(std::move(t));
    return out;
}

}  // namespace weightprop
