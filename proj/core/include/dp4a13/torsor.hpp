#ifndef DP4A13_TORSOR_HPP
#define DP4A13_TORSOR_HPP

#include <array>
#include <functional>
#include <utility>

#include "dp4a13/rational.hpp"
#include "dp4a13/surface.hpp"

namespace dp4a13 {

// Integer point of the universal torsor: (eta1,...,eta9) subject to
//   eta1*eta9 + eta2*eta8 + eta4*eta5^3*eta6^2*eta7 = 0
// with coprimality along the non-edges of the dual graph.
struct TorsorPoint {
    std::array<i64, 9> v{};

    i64 eta(int j) const { return v[static_cast<size_t>(j - 1)]; }
    i64& eta(int j) { return v[static_cast<size_t>(j - 1)]; }

    friend bool operator==(const TorsorPoint&, const TorsorPoint&) = default;
    friend auto operator<=>(const TorsorPoint&, const TorsorPoint&) = default;
};

// Whether Ei and Ej (1-based, 1..9) meet in the dual graph.
bool curves_adjacent(int i, int j);

i64 torsor_form(const TorsorPoint& t); // eta1*eta9 + eta2*eta8 + eta4*eta5^3*eta6^2*eta7
inline bool on_torsor(const TorsorPoint& t) { return torsor_form(t) == 0; }

// gcd(eta_i, eta_j) = 1 for all 25 non-adjacent pairs.
bool coprimality_ok(const TorsorPoint& t);

// eta9 = -(eta2*eta8 + eta4*eta5^3*eta6^2*eta7)/eta1 when the division is exact.
i64 solve_eta9(const std::array<i64, 8>& eta1to8);

// Image on the surface under the anticanonical sections, normalized.
SurfacePoint project(const TorsorPoint& t);

// Height of case i in Cox coordinates; requires |eta_j| = 1 on the
// boundary components of the case. Agrees with height(i, project(t)).
i64 cox_height(int case_i, const TorsorPoint& t);

// gcd of the monomial set certifying base-point-freeness of the case's
// log-anticanonical bundle; equals 1 on every integral torsor point.
// Defined for i in {1,2,4,5}.
i64 monomial_gcd(int case_i, const TorsorPoint& t);

// Degree-0 chart (x, y) = (eta7*eta5^2*eta6/(eta1*eta2*eta3),
// eta8/(eta1*eta3*eta4*eta5*eta6)); defined when eta1..eta7 != 0.
std::pair<Rat, Rat> chart_xy(const TorsorPoint& t);

struct TorsorEnumOptions {
    int workers = 1;
    // Called for every raw torsor point (before dividing by the sign-orbit
    // size); forces sequential execution.
    std::function<void(const TorsorPoint&)> on_point;
};

struct TorsorTally {
    i64 raw;   // lattice points with eta_j = 1 on the boundary components
    i64 count; // raw / 2^(6 - #D_i) = N_i(B)
};

TorsorTally enumerate_torsor_detail(int case_i, i64 bound,
                                    const TorsorEnumOptions& opts = {});

inline i64 enumerate_torsor(int case_i, i64 bound, const TorsorEnumOptions& opts = {}) {
    return enumerate_torsor_detail(case_i, bound, opts).count;
}

} // namespace dp4a13

#endif
