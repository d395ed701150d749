#ifndef DP4A13_CONSTANTS_HPP
#define DP4A13_CONSTANTS_HPP

#include <vector>

#include "dp4a13/boundary.hpp"
#include "dp4a13/polytope.hpp"

namespace dp4a13 {

// Rational factor attached to a maximal Clemens face A of case i: the
// volume of the slice of the dual effective cone of the associated open
// subvariety at log-anticanonical pairing 1, computed from the Picard
// data by expressing the log-anticanonical class and [E_{j0}] in the basis
// of the other negative curves and eliminating one face variable.
Rat alpha(int case_i, const std::vector<int>& face);

// Sum over maximal faces of alpha times the archimedean volume of the
// corresponding boundary stratum (8 for the one-vertex complex of case 1,
// 4 = c_R^2 for every edge). Equals 13/4320, 1/32, 1/8, 2, 7/24, 7/24.
Rat c_infinity(int case_i);

// Numeric certification of the archimedean volumes: the boundary-curve
// volume integral(dy / max(1, y^2)) = 4, normalized by c_R = 2 to give 8.
struct ArchVolumeCheck {
    double line_integral; // ~4, quadrature error < 1e-9
    double normalized;    // c_R * line_integral ~ 8
    double point_mass;    // c_R^2 = 4, no integration
};
ArchVolumeCheck tau_infinity_detail();
double tau_infinity_check(); // the normalized value ~8

// p-adic Tamagawa volume of the integral points of case i:
// 1 + (6-#D_i)/p, except 1 + 2/p - 1/p^2 for case 3.
Rat tau_p(int case_i, i64 p);

// Euler factor (1-1/p)^(rk Pic U_i) * tau_p from the torsor count.
Rat local_factor(int case_i, i64 p);

struct EulerProduct {
    double value;      // product of local factors over p <= prime_bound
    double tail_bound; // certified bound on |true value - value|
    i64 prime_bound;
};
EulerProduct c_finite(int case_i, i64 prime_bound);

// b_i = rk Pic U_i - rk(units/Q^x) + dim Clemens complex + 1; the unit
// rank is 0 for every case here. Values 6,5,4,3,4,4.
int exponent_b(int case_i);

// c_infinity * c_finite * B * (log B)^(b-1).
double predicted_count(int case_i, double bound, i64 prime_bound);

struct PredictedConstant {
    int case_i;
    Rat c_inf;
    int b;
    double c_fin;
    double tail_bound;
    i64 prime_bound;
};
PredictedConstant predicted_constant(int case_i, i64 prime_bound);

} // namespace dp4a13

#endif
