#include "weightprop/free_module.hpp"

#include <algorithm>
#include <cctype>

#include "weightprop/errors.hpp"

namespace weightprop {

FreeModule::FreeModule(RingPtr ring, std::vector<Multidegree> degrees)
    : ring_(std::move(ring)), degrees_(std::move(degrees)) {
    if (!ring_) throw InputError("free module without a ring");
    for (const auto& d : degrees_)
        if (d.size() != ring_->grading_rank()) throw InputError("basis degree has wrong length");
}

FreeModule FreeModule::free_of_rank(RingPtr ring, std::size_t rank) {
    Multidegree z = ring->zero_degree();
    return FreeModule(ring, std::vector<Multidegree>(rank, z));
}

FreeModule FreeModule::negated() const {
    std::vector<Multidegree> d;
    d.reserve(degrees_.size());
    for (const auto& x : degrees_) d.push_back(-x);
    return FreeModule(ring_, std::move(d));
}

ModuleOrderKind parse_module_order(const std::string& s) {
    std::string l;
    for (char ch : s) l += ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (l == "top-up") return ModuleOrderKind::TopUp;
    if (l == "pot-up") return ModuleOrderKind::PotUp;
    if (l == "top-down") return ModuleOrderKind::TopDown;
    if (l == "pot-down") return ModuleOrderKind::PotDown;
    throw InputError("unknown module order '" + s + "'");
}

std::string to_string(ModuleOrderKind k) {
    switch (k) {
        case ModuleOrderKind::TopUp: return "top-up";
        case ModuleOrderKind::PotUp: return "pot-up";
        case ModuleOrderKind::TopDown: return "top-down";
        case ModuleOrderKind::PotDown: return "pot-down";
    }
    return "?";
}

ModuleOrder ModuleOrder::flipped() const {
    switch (kind) {
        case ModuleOrderKind::TopUp: return {term, ModuleOrderKind::TopDown};
        case ModuleOrderKind::PotUp: return {term, ModuleOrderKind::PotDown};
        case ModuleOrderKind::TopDown: return {term, ModuleOrderKind::TopUp};
        case ModuleOrderKind::PotDown: return {term, ModuleOrderKind::PotUp};
    }
    return *this;
}

std::strong_ordering cmp_module_terms(const ModuleOrder& order, const ModuleTerm& a, const ModuleTerm& b) {
    const bool up = order.position_up();
    auto by_index = up ? (a.index <=> b.index) : (b.index <=> a.index);
    if (order.kind == ModuleOrderKind::PotUp || order.kind == ModuleOrderKind::PotDown) {
        if (by_index != 0) return by_index;
        return cmp_monomials(order.term, a.monomial, b.monomial);
    }
    auto by_mono = cmp_monomials(order.term, a.monomial, b.monomial);
    if (by_mono != 0) return by_mono;
    return by_index;
}

ModuleElement ModuleElement::unit(std::size_t rank, std::size_t nvars, std::size_t j) {
    ModuleElement e(rank);
    e.e_[j] = Polynomial::constant(nvars, 1);
    return e;
}

bool ModuleElement::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::size_t ModuleElement::term_count() const {
    std::size_t n = 0;
    for (const auto& p : e_) n += p.size();
    return n;
}

void ModuleElement::add_multiple(const Rational& c, const Monomial& t, const ModuleElement& g) {
    for (std::size_t j = 0; j < e_.size(); ++j)
        if (!g.e_[j].is_zero()) e_[j].add_multiple(c, t, g.e_[j]);
}

ModuleElement& ModuleElement::operator*=(const Rational& c) {
    for (auto& p : e_) p *= c;
    return *this;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
    for (std::size_t j = 0; j < e_.size(); ++j) e_[j] += o.e_[j];
    return *this;
}

LeadingTerm leading_term(const ModuleOrder& order, const ModuleElement& e) {
    std::optional<LeadingTerm> best;
    for (std::size_t j = 0; j < e.rank(); ++j) {
        if (e[j].is_zero()) continue;
        auto [m, c] = e[j].leading_term(order.term);
        ModuleTerm t{std::move(m), j};
        if (!best || cmp_module_terms(order, t, best->term) > 0) best = LeadingTerm{std::move(t), c};
    }
    if (!best) throw DomainError("leading term of zero element");
    return *best;
}

std::optional<Multidegree> element_degree(const FreeModule& f, const ModuleElement& e) {
    std::optional<Multidegree> d;
    for (std::size_t j = 0; j < e.rank(); ++j)
        for (const auto& kv : e[j].terms()) {
            Multidegree dj = f.ring().degree_of(kv.first) + f.degree(j);
            if (!d)
                d = dj;
            else if (*d != dj)
                return std::nullopt;
        }
    if (!d) throw DomainError("zero element has no degree");
    return d;
}

}  // namespace weightprop
