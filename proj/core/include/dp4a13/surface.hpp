#ifndef DP4A13_SURFACE_HPP
#define DP4A13_SURFACE_HPP

#include <array>
#include <functional>

#include "dp4a13/arith.hpp"
#include "dp4a13/boundary.hpp"

namespace dp4a13 {

// Primitive integer representative of a point on the quartic surface
//   x0^2 + x0*x3 + x2*x4 = 0,   x1*x3 - x2^2 = 0
// with x2 > 0 off the coordinate hyperplane x2 = 0 (there the first
// nonzero coordinate is positive instead).
struct SurfacePoint {
    std::array<i64, 5> x{};

    friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
    friend auto operator<=>(const SurfacePoint&, const SurfacePoint&) = default;
};

bool on_surface(const std::array<i64, 5>& x);

// Divide by the gcd and fix the sign; throws zero_vector / not_on_surface.
SurfacePoint normalize(const std::array<i64, 5>& x);

// The gcd condition cutting out the integral points of case i.
bool is_integral(int case_i, const SurfacePoint& p);

// Log-anticanonical heights H_1..H_6.
i64 height(int case_i, const SurfacePoint& p);

// x2 != 0, i.e. the point avoids the three lines.
bool in_V(const SurfacePoint& p);

// The involution (x0,...,x4) -> (x0+x3, -x1, x2, -x3, x4); exchanges the
// case-5 and case-6 counting problems.
SurfacePoint symmetry(const SurfacePoint& p);

struct EnumOptions {
    int workers = 1;
    // When set, called once per counted point (forces sequential execution).
    std::function<void(const SurfacePoint&, i64 /*height*/)> on_point;
};

// N_i(B) by looping x2 in [1,B], x3 over signed divisors of x2^2 (so
// x1 = x2^2/x3), and x0 through the solutions of x0(x0+x3) = 0 mod x2,
// with x4 determined. Intended as the slow reference path; B <= 1e5.
i64 enumerate_direct(int case_i, i64 bound, const EnumOptions& opts = {});

} // namespace dp4a13

#endif
