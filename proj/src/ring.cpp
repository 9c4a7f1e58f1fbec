#include "weightprop/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "weightprop/errors.hpp"
#include "weightprop/scalar_matrix.hpp"

namespace weightprop {

TermOrder parse_term_order(const std::string& s) {
    std::string l;
    for (char ch : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (l == "lex") return TermOrder::Lex;
    if (l == "grevlex" || l == "degrevlex") return TermOrder::GrevLex;
    throw InputError("unknown term order '" + s + "'");
}

std::string to_string(TermOrder o) {
    return o == TermOrder::Lex ? "lex" : "grevlex";
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t s = 0;
    for (auto x : e_) s += x;
    return s;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial q(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) q.e_[i] = o.e_[i] - e_[i];
    return q;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial q(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) q.e_[i] = std::max(e_[i], o.e_[i]);
    return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial q(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) q.e_[i] = a.e_[i] + b.e_[i];
    return q;
}

std::strong_ordering cmp_monomials(TermOrder order, const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw InputError("monomials over different rings");
    const std::size_t n = a.nvars();
    if (order == TermOrder::Lex) {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da <=> db;
    for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

RingSpec::RingSpec(std::vector<std::string> names, std::vector<Multidegree> degrees,
                   std::vector<Weight> weights, TermOrder order)
    : names_(std::move(names)), degrees_(std::move(degrees)), weights_(std::move(weights)), order_(order) {
    const std::size_t n = names_.size();
    if (n == 0) throw InputError("ring needs at least one variable");
    if (degrees_.size() != n) throw InputError("one degree per variable required");
    if (weights_.size() != n) throw InputError("one weight per variable required");
    std::set<std::string> seen;
    for (const auto& s : names_) {
        if (!is_identifier(s)) throw InputError("invalid variable name '" + s + "'");
        if (!seen.insert(s).second) throw InputError("duplicate variable name '" + s + "'");
    }
    const std::size_t m = degrees_[0].size();
    if (m == 0) throw InputError("degree vectors must be nonempty");
    for (std::size_t i = 0; i < n; ++i) {
        if (degrees_[i].size() != m) throw InputError("degree vectors differ in length");
        if (weights_[i].size() != weights_[0].size()) throw InputError("weight vectors differ in length");
        const auto& d = degrees_[i].values();
        auto nz = std::find_if(d.begin(), d.end(), [](auto x) { return x != 0; });
        if (nz == d.end() || *nz < 0)
            throw InputError("degree of '" + names_[i] + "' is not positive");
    }
    ScalarMatrix dm(m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) dm(k, i) = Rational(static_cast<long>(degrees_[i][k]));
    if (dm.rank() != m) throw InputError("variable degrees have dependent rows");

    for (const auto& d : degrees_) {
        std::int64_t s = 0;
        for (auto x : d.values()) s += x;
        if (s <= 0) sum_first_ = false;
    }
}

RingSpec RingSpec::standard(std::vector<std::string> names, TermOrder order) {
    const std::size_t n = names.size();
    std::vector<Multidegree> deg(n, Multidegree{1});
    std::vector<Weight> w;
    for (std::size_t i = 0; i < n; ++i) {
        Weight e(n);
        e[i] = 1;
        w.push_back(e);
    }
    return RingSpec(std::move(names), std::move(deg), std::move(w), order);
}

int RingSpec::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Weight RingSpec::weight_of(const Monomial& t) const {
    Weight w = zero_weight();
    for (std::size_t i = 0; i < t.nvars(); ++i)
        if (t[i]) w.scale_add(t[i], weights_[i]);
    return w;
}

Multidegree RingSpec::degree_of(const Monomial& t) const {
    Multidegree d = zero_degree();
    for (std::size_t i = 0; i < t.nvars(); ++i)
        if (t[i]) d.scale_add(t[i], degrees_[i]);
    return d;
}

std::strong_ordering RingSpec::cmp_degrees(const Multidegree& a, const Multidegree& b) const {
    if (sum_first_) {
        std::int64_t sa = 0, sb = 0;
        for (auto x : a.values()) sa += x;
        for (auto x : b.values()) sb += x;
        if (sa != sb) return sa <=> sb;
    }
    return a <=> b;
}

namespace {

struct TermEnumerator {
    const RingSpec& ring;
    std::vector<std::vector<std::size_t>> groups;  // variables by first nonzero degree component
    std::vector<Monomial> out;

    void run_group(std::size_t k, Multidegree rem, Monomial cur) {
        if (k == groups.size()) {
            if (rem.is_zero()) out.push_back(cur);
            return;
        }
        if (rem[k] < 0) return;
        choose(k, 0, rem, cur);
    }

    // Fill variables of group k so that component k of rem reaches exactly zero.
    void choose(std::size_t k, std::size_t pos, Multidegree rem, Monomial cur) {
        const auto& g = groups[k];
        if (pos == g.size()) {
            if (rem[k] == 0) run_group(k + 1, rem, cur);
            return;
        }
        const std::size_t v = g[pos];
        const auto& dv = ring.degrees()[v];
        while (true) {
            choose(k, pos + 1, rem, Monomial(cur));
            rem -= dv;
            if (rem[k] < 0) break;
            cur = cur * Monomial::variable(ring.nvars(), v);
        }
    }
};

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, const Multidegree& d) {
    if (d.size() != ring.grading_rank()) throw InputError("multidegree has wrong length");
    TermEnumerator en{ring, std::vector<std::vector<std::size_t>>(ring.grading_rank()), {}};
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        const auto& dv = ring.degrees()[i].values();
        std::size_t k = std::find_if(dv.begin(), dv.end(), [](auto x) { return x != 0; }) - dv.begin();
        en.groups[k].push_back(i);
    }
    en.run_group(0, d, Monomial(ring.nvars()));
    std::sort(en.out.begin(), en.out.end(), [&](const Monomial& a, const Monomial& b) {
        return cmp_monomials(ring.order(), a, b) > 0;
    });
    return en.out;
}

}  // namespace weightprop
