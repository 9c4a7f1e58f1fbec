#pragma once

#include <string>
#include <vector>

#include "weightprop/propagate.hpp"

namespace fixtures {

using namespace weightprop;

RingPtr koszul_ring();          // x1,x2,x3 standard grading, unit weights, grevlex
RingPtr bigraded_ring();        // x1,x2 of degree (1,0), y1,y2 of degree (0,1), unit weights in Z^4
RingPtr plucker_ring();         // p12 > p13 > p23 > p14 > p24 > p34 > p15 > p25 > p35 > p45
RingPtr univariate_ring();      // x
RingPtr two_var_ring();         // x > y, standard grading

// Matrix with codomain degrees `rows` and domain degrees inferred from the entries.
PolyMatrix mat(const RingPtr& r, const std::vector<Multidegree>& rows,
               const std::vector<std::vector<std::string>>& entries);
// Codomain of rank n in degree zero.
PolyMatrix mat0(const RingPtr& r, const std::vector<std::vector<std::string>>& entries);
ScalarMatrix smat(const std::vector<std::vector<long>>& rows);
WeightList wl(const std::vector<std::vector<std::int64_t>>& ws);
std::vector<std::vector<std::int64_t>> raw(const WeightList& w);
std::vector<std::vector<std::int64_t>> sorted_raw(const WeightList& w);
ModuleOrder order(const RingPtr& r, ModuleOrderKind k = ModuleOrderKind::TopUp);

// Sorted contents of the semistandard tableaux of shape (2,2) with entries 1..5.
std::vector<std::vector<std::int64_t>> schur22_weights();

// Koszul resolution data in the original bases.
PolyMatrix koszul_d1();
PolyMatrix koszul_d2();
PolyMatrix koszul_d3();

PolyMatrix bigraded_presentation();  // (x1 x2 y1^2 y1y2 y2^2)
PolyMatrix plucker_d1();
PolyMatrix plucker_d2();
PolyMatrix plucker_d3();

// Single propagation steps of the bigraded resolution, written in the bases the previous step produced.
PolyMatrix bigraded_step2_input();  // 5x9
// Second differential in the original basis of F1.
PolyMatrix bigraded_syzygies();
ScalarMatrix bigraded_step2_c();
WeightList bigraded_v1();
WeightList bigraded_v2();
PolyMatrix bigraded_step3_input();  // 9x7
ScalarMatrix bigraded_step3_c();
WeightList bigraded_v3();
PolyMatrix bigraded_step4_input();  // 7x2
PolyMatrix bigraded_step4_g();
WeightList bigraded_v4();

// Koszul second step.
PolyMatrix koszul_m2();
PolyMatrix koszul_g2();
ScalarMatrix koszul_c1();
ScalarMatrix koszul_c2();
PolyMatrix koszul_m3();

// Pluecker forward steps: transposed inputs, dual bases and change-of-basis matrices of the dual steps.
PolyMatrix plucker_step1_g();
PolyMatrix plucker_step2_dual_input();
PolyMatrix plucker_step2_g();
ScalarMatrix plucker_k1();
ScalarMatrix plucker_k2();
PolyMatrix plucker_step3_dual_input();
WeightList plucker_v2();
WeightList plucker_v1();

// Mutual normal-form test: both column spans generate the same submodule.
bool same_image(const PolyMatrix& a, const PolyMatrix& b, const ModuleOrder& order);

}  // namespace fixtures
