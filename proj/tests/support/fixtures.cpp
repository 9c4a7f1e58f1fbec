#include "fixtures.hpp"

#include <algorithm>
#include <memory>

namespace fixtures {

namespace {

std::vector<Weight> unit_weights(std::size_t n) {
    std::vector<Weight> w;
    for (std::size_t i = 0; i < n; ++i) {
        Weight e(n);
        e[i] = 1;
        w.push_back(e);
    }
    return w;
}

const char* kPlucker[] = {"p12", "p13", "p23", "p14", "p24", "p34", "p15", "p25", "p35", "p45"};

}  // namespace

RingPtr koszul_ring() {
    static RingPtr r = std::make_shared<const RingSpec>(RingSpec::standard({"x1", "x2", "x3"}));
    return r;
}

RingPtr bigraded_ring() {
    static RingPtr r = std::make_shared<const RingSpec>(
        std::vector<std::string>{"x1", "x2", "y1", "y2"},
        std::vector<Multidegree>{{1, 0}, {1, 0}, {0, 1}, {0, 1}}, unit_weights(4), TermOrder::GrevLex);
    return r;
}

RingPtr plucker_ring() {
    static RingPtr r = [] {
        std::vector<std::string> names;
        std::vector<Multidegree> deg;
        std::vector<Weight> w;
        for (const char* s : kPlucker) {
            names.emplace_back(s);
            deg.push_back(Multidegree{1});
            Weight x(5);
            x[s[1] - '1'] += 1;
            x[s[2] - '1'] += 1;
            w.push_back(x);
        }
        return std::make_shared<const RingSpec>(names, deg, w, TermOrder::GrevLex);
    }();
    return r;
}

RingPtr univariate_ring() {
    static RingPtr r = std::make_shared<const RingSpec>(RingSpec::standard({"x"}));
    return r;
}

RingPtr two_var_ring() {
    static RingPtr r = std::make_shared<const RingSpec>(RingSpec::standard({"x", "y"}));
    return r;
}

PolyMatrix mat(const RingPtr& r, const std::vector<Multidegree>& rows,
               const std::vector<std::vector<std::string>>& entries) {
    return PolyMatrix::parse(FreeModule(r, rows), entries);
}

PolyMatrix mat0(const RingPtr& r, const std::vector<std::vector<std::string>>& entries) {
    return PolyMatrix::parse(FreeModule::free_of_rank(r, entries.size()), entries);
}

ScalarMatrix smat(const std::vector<std::vector<long>>& rows) {
    ScalarMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

WeightList wl(const std::vector<std::vector<std::int64_t>>& ws) {
    WeightList out;
    for (const auto& w : ws) out.emplace_back(w);
    return out;
}

std::vector<std::vector<std::int64_t>> raw(const WeightList& w) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& x : w) out.push_back(x.values());
    return out;
}

std::vector<std::vector<std::int64_t>> sorted_raw(const WeightList& w) {
    auto out = raw(w);
    std::sort(out.begin(), out.end());
    return out;
}

ModuleOrder order(const RingPtr& r, ModuleOrderKind k) {
    return ModuleOrder::on(*r, k);
}

std::vector<std::vector<std::int64_t>> schur22_weights() {
    std::vector<std::vector<std::int64_t>> out;
    // Rows (a b) over (c d): rows weakly increasing, columns strictly increasing.
    for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 5; ++b)
            for (int c = a + 1; c <= 5; ++c)
                for (int d = c; d <= 5; ++d) {
                    if (d <= b) continue;
                    std::vector<std::int64_t> w(5, 0);
                    for (int e : {a, b, c, d}) w[e - 1] += 1;
                    out.push_back(w);
                }
    std::sort(out.begin(), out.end());
    return out;
}

PolyMatrix koszul_d1() {
    return mat0(koszul_ring(), {{"x1", "x1+x2", "x1+x3"}});
}

PolyMatrix koszul_d2() {
    FreeModule f1(koszul_ring(), {Multidegree{1}, Multidegree{1}, Multidegree{1}});
    return PolyMatrix::parse(f1, {{"-x1-x2", "-x1-x3", "0"}, {"x1", "0", "-x1-x3"}, {"0", "x1", "x1+x2"}});
}

PolyMatrix koszul_d3() {
    FreeModule f2(koszul_ring(), {Multidegree{2}, Multidegree{2}, Multidegree{2}});
    return PolyMatrix::parse(f2, {{"x1+x3"}, {"-x1-x2"}, {"x1"}});
}

PolyMatrix bigraded_presentation() {
    return mat0(bigraded_ring(), {{"x1", "x2", "y1^2", "y1*y2", "y2^2"}});
}

namespace {

const char* f1234 = "p23*p14 - p13*p24 + p12*p34";
const char* f1235 = "p23*p15 - p13*p25 + p12*p35";
const char* f1245 = "p24*p15 - p14*p25 + p12*p45";
const char* f1345 = "p34*p15 - p14*p35 + p13*p45";
const char* f2345 = "p34*p25 - p24*p35 + p23*p45";

std::string neg(const char* s) {
    return std::string("-(") + s + ")";
}

}  // namespace

PolyMatrix plucker_d1() {
    return mat0(plucker_ring(), {{f1234, f1235, f1245, f1345, f2345}});
}

PolyMatrix plucker_d2() {
    FreeModule f1(plucker_ring(), std::vector<Multidegree>(5, Multidegree{2}));
    return PolyMatrix::parse(f1, {{"-p15", "p25", "p35", "p45", "0"},
                                  {"p14", "-p24", "-p34", "0", "-p45"},
                                  {"-p13", "p23", "0", "-p34", "p35"},
                                  {"p12", "0", "p23", "p24", "-p25"},
                                  {"0", "-p12", "-p13", "-p14", "p15"}});
}

PolyMatrix plucker_d3() {
    FreeModule f2(plucker_ring(), std::vector<Multidegree>(5, Multidegree{3}));
    return PolyMatrix::parse(f2, {{neg(f2345)}, {neg(f1345)}, {f1245}, {neg(f1235)}, {neg(f1234)}});
}

bool same_image(const PolyMatrix& a, const PolyMatrix& b, const ModuleOrder& order) {
    auto ga = buchberger(a, order).elements;
    auto gb = buchberger(b, order).elements;
    for (const auto& c : b.columns())
        if (!normal_form(c, ga, order).remainder.is_zero()) return false;
    for (const auto& c : a.columns())
        if (!normal_form(c, gb, order).remainder.is_zero()) return false;
    return true;
}

}  // namespace fixtures

namespace fixtures {

namespace {

std::vector<Multidegree> degs(std::initializer_list<std::pair<Multidegree, int>> runs) {
    std::vector<Multidegree> out;
    for (const auto& [d, n] : runs)
        for (int k = 0; k < n; ++k) out.push_back(d);
    return out;
}

}  // namespace

PolyMatrix bigraded_step2_input() {
    return mat(bigraded_ring(), degs({{{1, 0}, 2}, {{0, 2}, 3}}),
               {{"x1", "0", "-y1^2", "0", "-y1*y2", "0", "0", "-y2^2", "0"},
                {"-x2", "-y1^2", "0", "-y1*y2", "0", "0", "-y2^2", "0", "0"},
                {"0", "0", "0", "0", "0", "0", "x1", "x2", "y1"},
                {"0", "0", "0", "x1", "x2", "y1", "0", "0", "-y2"},
                {"0", "x1", "x2", "0", "0", "-y2", "0", "0", "0"}});
}

ScalarMatrix bigraded_step2_c() {
    ScalarMatrix c(9, 9);
    const int nz[][3] = {{1, 1, 1},  {2, 7, -1}, {3, 6, -1}, {4, 5, -1}, {5, 4, -1},
                         {6, 9, 1},  {7, 3, -1}, {8, 2, -1}, {9, 8, 1}};
    for (const auto& e : nz) c(e[0] - 1, e[1] - 1) = e[2];
    return c;
}

WeightList bigraded_v1() {
    return wl({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 1}, {0, 0, 2, 0}});
}

WeightList bigraded_v2() {
    return wl({{1, 1, 0, 0}, {0, 1, 0, 2}, {1, 0, 0, 2}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 1, 2, 0}, {1, 0, 2, 0},
               {0, 0, 1, 2}, {0, 0, 2, 1}});
}

PolyMatrix bigraded_step3_input() {
    return mat(bigraded_ring(), degs({{{2, 0}, 1}, {{1, 2}, 6}, {{0, 3}, 2}}),
               {{"y1^2", "y1*y2", "0", "0", "y2^2", "0", "0"},
                {"0", "0", "0", "0", "-x1", "0", "y1"},
                {"0", "0", "0", "0", "x2", "y1", "0"},
                {"0", "-x1", "0", "y1", "0", "0", "-y2"},
                {"0", "x2", "y1", "0", "0", "-y2", "0"},
                {"-x1", "0", "0", "-y2", "0", "0", "0"},
                {"x2", "0", "-y2", "0", "0", "0", "0"},
                {"0", "0", "0", "0", "0", "x1", "x2"},
                {"0", "0", "x1", "x2", "0", "0", "0"}});
}

ScalarMatrix bigraded_step3_c() {
    return smat({{0, 0, 1, 0, 0, 0, 0},
                 {0, 1, 0, 0, 0, 0, 0},
                 {0, 0, 0, 0, 0, 0, 1},
                 {0, 0, 0, 0, 1, 0, 0},
                 {1, 0, 0, 0, 0, 0, 0},
                 {0, 0, 0, 0, 0, 1, 0},
                 {0, 0, 0, 1, 0, 0, 0}});
}

WeightList bigraded_v3() {
    return wl({{1, 1, 0, 2}, {1, 1, 1, 1}, {1, 1, 2, 0}, {0, 1, 1, 2}, {0, 1, 2, 1}, {1, 0, 1, 2}, {1, 0, 2, 1}});
}

PolyMatrix bigraded_step4_input() {
    return mat(bigraded_ring(), degs({{{2, 2}, 3}, {{1, 3}, 4}}),
               {{"0", "y1"}, {"y1", "-y2"}, {"-y2", "0"}, {"0", "x1"}, {"x1", "0"}, {"0", "-x2"}, {"-x2", "0"}});
}

PolyMatrix bigraded_step4_g() {
    return mat(bigraded_ring(), degs({{{2, 2}, 3}, {{1, 3}, 4}}),
               {{"y1", "0"}, {"-y2", "y1"}, {"0", "-y2"}, {"x1", "0"}, {"0", "x1"}, {"-x2", "0"}, {"0", "-x2"}});
}

WeightList bigraded_v4() {
    return wl({{1, 1, 1, 2}, {1, 1, 2, 1}});
}

PolyMatrix koszul_m2() {
    return mat(koszul_ring(), degs({{{1}, 3}}), {{"0", "x1", "x1+x2"}, {"x1", "0", "-x1-x3"}, {"-x2", "-x3", "x2-x3"}});
}

PolyMatrix koszul_g2() {
    return mat(koszul_ring(), degs({{{1}, 3}}), {{"x2", "x1", "0"}, {"-x3", "0", "x1"}, {"0", "-x3", "-x2"}});
}

ScalarMatrix koszul_c1() {
    return smat({{-1, -1, 1}, {0, 1, 0}, {1, 0, 0}});
}

ScalarMatrix koszul_c2() {
    return smat({{1, 0, 1}, {-1, 1, 0}, {1, 0, 0}});
}

PolyMatrix plucker_step2_dual_input() {
    return mat(plucker_ring(), degs({{{-3}, 5}}), {{"0", "p45", "-p35", "p25", "-p15"},
                                                   {"-p45", "0", "p34", "-p24", "p14"},
                                                   {"p35", "-p34", "0", "p23", "-p13"},
                                                   {"-p25", "p24", "-p23", "0", "p12"},
                                                   {"p15", "-p14", "p13", "-p12", "0"}});
}

PolyMatrix plucker_step2_g() {
    return mat(plucker_ring(), degs({{{-3}, 5}}), {{"-p15", "-p25", "-p35", "-p45", "0"},
                                                   {"p14", "p24", "p34", "0", "-p45"},
                                                   {"-p13", "-p23", "0", "p34", "p35"},
                                                   {"p12", "0", "-p23", "-p24", "-p25"},
                                                   {"0", "p12", "p13", "p14", "p15"}});
}

ScalarMatrix plucker_k1() {
    return smat({{0, 0, 0, 0, -1}, {0, 0, 0, -1, 0}, {0, 0, 1, 0, 0}, {0, -1, 0, 0, 0}, {-1, 0, 0, 0, 0}});
}

ScalarMatrix plucker_k2() {
    return smat({{0, 0, 0, 0, 1}, {0, 0, 0, -1, 0}, {0, 0, 1, 0, 0}, {0, -1, 0, 0, 0}, {1, 0, 0, 0, 0}});
}

PolyMatrix plucker_step3_dual_input() {
    return mat(plucker_ring(), degs({{{-2}, 5}}), {{f2345}, {neg(f1345)}, {f1245}, {neg(f1235)}, {f1234}});
}

WeightList plucker_v2() {
    return wl({{1, 1, 1, 1, 2}, {1, 1, 1, 2, 1}, {1, 1, 2, 1, 1}, {1, 2, 1, 1, 1}, {2, 1, 1, 1, 1}});
}

WeightList plucker_v1() {
    return wl({{0, 1, 1, 1, 1}, {1, 0, 1, 1, 1}, {1, 1, 0, 1, 1}, {1, 1, 1, 0, 1}, {1, 1, 1, 1, 0}});
}

}  // namespace fixtures

namespace fixtures {

PolyMatrix koszul_m3() {
    return mat(koszul_ring(), degs({{{2}, 3}}), {{"x1"}, {"-x2"}, {"x3"}});
}

PolyMatrix plucker_step1_g() {
    return mat(plucker_ring(), degs({{{-5}, 1}}), {{f1234, f1235, f1245, f1345, f2345}});
}

PolyMatrix bigraded_syzygies() {
    ScalarMatrix c(5, 5);
    for (auto [i, j] : {std::pair{0, 1}, {1, 0}, {2, 4}, {3, 3}, {4, 2}}) c(i, j) = 1;
    return mat_mul(c, bigraded_step2_input());
}

}  // namespace fixtures
