#include "weightprop/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <spdlog/spdlog.h>

#include "groebner_internal.hpp"
#include "weightprop/errors.hpp"

namespace weightprop {

using detail::reduce_full;

std::vector<ModuleTerm> GroebnerBasis::leading_terms() const {
    std::vector<ModuleTerm> v;
    for (const auto& e : elements) v.push_back(leading_term(order, e).term);
    return v;
}

PolyMatrix GroebnerBasis::as_matrix() const {
    std::vector<Multidegree> deg;
    for (const auto& e : elements) {
        auto d = element_degree(module, e);
        if (!d) throw DomainError("inhomogeneous basis element");
        deg.push_back(*d);
    }
    return PolyMatrix(module, FreeModule(module.ring_ptr(), std::move(deg)), elements);
}

DivisionResult normal_form(const ModuleElement& e, const std::vector<ModuleElement>& divisors,
                           const ModuleOrder& order) {
    std::vector<LeadingTerm> lts;
    for (const auto& g : divisors) lts.push_back(leading_term(order, g));
    DivisionResult res;
    res.quotients.resize(divisors.size());
    res.remainder = reduce_full(e, divisors, lts, order, [&](std::size_t k, const Rational& c, const Monomial& u) {
        res.quotients[k].add_term(u, c);
    });
    return res;
}

namespace {

struct Element {
    ModuleElement g;
    ModuleElement cof;
    LeadingTerm lt;
    Multidegree deg;
};

struct Pair {
    std::size_t a, b;
    Monomial lcm;
    std::size_t index;
    Multidegree deg;
};

class Buchberger {
public:
    Buchberger(const PolyMatrix& m, const ModuleOrder& order, const std::optional<Multidegree>& bound)
        : m_(m), order_(order), bound_(bound), ring_(m.ring()) {}

    TrackedBasis run() {
        std::vector<std::size_t> gens(m_.cols());
        std::iota(gens.begin(), gens.end(), 0);
        std::stable_sort(gens.begin(), gens.end(), [&](std::size_t a, std::size_t b) {
            return ring_.cmp_degrees(m_.domain().degree(a), m_.domain().degree(b)) < 0;
        });
        std::size_t gi = 0;
        while (true) {
            std::size_t best = best_pair();
            bool take_gen = gi < gens.size() &&
                            (best == detail::npos ||
                             ring_.cmp_degrees(m_.domain().degree(gens[gi]), pairs_[best].deg) <= 0);
            if (!take_gen && best == detail::npos) break;
            const Multidegree& d = take_gen ? m_.domain().degree(gens[gi]) : pairs_[best].deg;
            if (bound_ && ring_.cmp_degrees(d, *bound_) > 0) break;
            if (take_gen) {
                std::size_t j = gens[gi++];
                process(m_.column(j), ModuleElement::unit(m_.cols(), ring_.nvars(), j), m_.domain().degree(j));
            } else {
                Pair p = pairs_[best];
                pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
                pending_.erase({p.a, p.b});
                process_pair(p);
            }
        }
        interreduce();
        TrackedBasis out;
        out.basis.module = m_.codomain();
        out.basis.order = order_;
        for (auto& e : elems_) {
            out.basis.elements.push_back(std::move(e.g));
            out.cofactors.push_back(std::move(e.cof));
        }
        spdlog::debug("buchberger: {} generators -> {} basis elements, {} pairs reduced", m_.cols(),
                      out.basis.elements.size(), reduced_pairs_);
        return out;
    }

private:
    const PolyMatrix& m_;
    ModuleOrder order_;
    std::optional<Multidegree> bound_;
    const RingSpec& ring_;
    std::vector<Element> elems_;
    std::vector<ModuleElement> gs_;
    std::vector<LeadingTerm> lts_;
    std::vector<Pair> pairs_;
    std::set<std::pair<std::size_t, std::size_t>> pending_;
    std::size_t reduced_pairs_ = 0;

    std::size_t best_pair() const {
        std::size_t best = detail::npos;
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if (best == detail::npos) {
                best = i;
                continue;
            }
            const Pair& p = pairs_[i];
            const Pair& q = pairs_[best];
            auto c = ring_.cmp_degrees(p.deg, q.deg);
            if (c == 0) c = cmp_module_terms(order_, {p.lcm, p.index}, {q.lcm, q.index});
            if (c == 0) c = std::pair(p.a, p.b) <=> std::pair(q.a, q.b);
            if (c < 0) best = i;
        }
        return best;
    }

    void process(ModuleElement h, ModuleElement cof, const Multidegree& deg) {
        h = reduce_full(std::move(h), gs_, lts_, order_, [&](std::size_t k, const Rational& c, const Monomial& u) {
            cof.add_multiple(-c, u, elems_[k].cof);
        });
        if (h.is_zero()) return;
        LeadingTerm lt = leading_term(order_, h);
        Rational inv = 1 / lt.coefficient;
        h *= inv;
        cof *= inv;
        lt.coefficient = 1;
        add(Element{std::move(h), std::move(cof), std::move(lt), deg});
    }

    void add(Element e) {
        const std::size_t k = elems_.size();
        for (std::size_t a = 0; a < k; ++a) {
            if (lts_[a].term.index != e.lt.term.index) continue;
            Monomial l = lts_[a].term.monomial.lcm(e.lt.term.monomial);
            Multidegree d = ring_.degree_of(l) + m_.codomain().degree(e.lt.term.index);
            pairs_.push_back(Pair{a, k, std::move(l), e.lt.term.index, std::move(d)});
            pending_.insert({a, k});
        }
        gs_.push_back(e.g);
        lts_.push_back(e.lt);
        elems_.push_back(std::move(e));
    }

    bool is_pending(std::size_t a, std::size_t b) const { return pending_.count({std::min(a, b), std::max(a, b)}) > 0; }

    bool skip_pair(const Pair& p) const {
        const Monomial& ma = lts_[p.a].term.monomial;
        const Monomial& mb = lts_[p.b].term.monomial;
        // Product criterion holds for ideals only.
        if (m_.rows() == 1 && ma.coprime(mb)) return true;
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            if (k == p.a || k == p.b) continue;
            if (!detail::lt_divides(lts_[k].term, ModuleTerm{p.lcm, p.index})) continue;
            if (!is_pending(p.a, k) && !is_pending(p.b, k)) return true;
        }
        return false;
    }

    void process_pair(const Pair& p) {
        if (skip_pair(p)) return;
        ++reduced_pairs_;
        const Element& ea = elems_[p.a];
        const Element& eb = elems_[p.b];
        Monomial ua = ea.lt.term.monomial.quotient_of(p.lcm);
        Monomial ub = eb.lt.term.monomial.quotient_of(p.lcm);
        ModuleElement s(m_.rows()), cof(m_.cols());
        s.add_multiple(1, ua, ea.g);
        s.add_multiple(-1, ub, eb.g);
        cof.add_multiple(1, ua, ea.cof);
        cof.add_multiple(-1, ub, eb.cof);
        process(std::move(s), std::move(cof), p.deg);
    }

    void interreduce() {
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            ModuleElement& cof = elems_[i].cof;
            ModuleElement r = reduce_full(
                elems_[i].g, gs_, lts_, order_,
                [&](std::size_t k, const Rational& c, const Monomial& u) { cof.add_multiple(-c, u, elems_[k].cof); },
                i);
            elems_[i].g = r;
            gs_[i] = std::move(r);
        }
    }
};

}  // namespace

TrackedBasis buchberger_tracked(const PolyMatrix& m, const ModuleOrder& order, const std::optional<Multidegree>& bound) {
    if (bound && bound->size() != m.ring().grading_rank()) throw InputError("bound has wrong length");
    return Buchberger(m, order, bound).run();
}

GroebnerBasis buchberger(const PolyMatrix& m, const ModuleOrder& order, const std::optional<Multidegree>& bound) {
    return buchberger_tracked(m, order, bound).basis;
}

PolyMatrix sort_gb_columns(const GroebnerBasis& g, SortDirection dir) {
    std::vector<LeadingTerm> lts;
    for (const auto& e : g.elements) lts.push_back(leading_term(g.order, e));
    std::vector<std::size_t> idx(g.elements.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        auto c = cmp_module_terms(g.order, lts[a].term, lts[b].term);
        return dir == SortDirection::Increasing ? c < 0 : c > 0;
    });
    return g.as_matrix().select_columns(idx);
}

namespace {

using TermKey = std::pair<std::size_t, Monomial>;

void collect_terms(const PolyMatrix& m, std::map<TermKey, std::size_t>& keys) {
    for (const auto& col : m.columns())
        for (std::size_t i = 0; i < col.rank(); ++i)
            for (const auto& kv : col[i].terms()) keys.try_emplace(TermKey{i, kv.first}, 0);
}

ScalarMatrix coefficient_matrix(const PolyMatrix& m, const std::map<TermKey, std::size_t>& keys) {
    ScalarMatrix a(keys.size(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (const auto& [mono, c] : m(i, j).terms()) a(keys.at(TermKey{i, mono}), j) = c;
    return a;
}

}  // namespace

ScalarMatrix change_of_basis(const PolyMatrix& m, const PolyMatrix& g) {
    if (m.rows() != g.rows()) throw InputError("change of basis between different codomains");
    std::map<TermKey, std::size_t> keys;
    collect_terms(m, keys);
    collect_terms(g, keys);
    std::size_t n = 0;
    for (auto& kv : keys) kv.second = n++;
    auto x = solve_unique(coefficient_matrix(m, keys), coefficient_matrix(g, keys));
    if (!x) throw DomainError("not a minimal map: columns are linearly dependent or the bases span different spaces");
    return *x;
}

}  // namespace weightprop
