#ifndef DP4A13_ARITH_HPP
#define DP4A13_ARITH_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "dp4a13/errors.hpp"

namespace dp4a13 {

using i64 = long long;
using i128 = __int128;

inline i64 iabs(i64 a) { return a < 0 ? -a : a; }

inline i64 gcd64(i64 a, i64 b) { return std::gcd(iabs(a), iabs(b)); }

// Multiplication with overflow guard; enumeration bounds are chosen so this
// never fires on valid inputs, but user-supplied tuples can be arbitrary.
inline i64 mul_checked(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in product");
    return r;
}

inline i64 add_checked(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in sum");
    return r;
}

// Floor division (round toward -inf), b > 0.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

// a mod b in [0, b), b > 0.
inline i64 mod_nonneg(i64 a, i64 b) {
    i64 r = a % b;
    return r < 0 ? r + b : r;
}

// floor(sqrt(n)) for n >= 0.
inline i64 isqrt(i64 n) {
    if (n < 0) return -1;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// floor(n^(1/4)) for n >= 0.
inline i64 iroot4(i64 n) {
    i64 r = isqrt(isqrt(n));
    while (r > 0 && r * r * r * r > n) --r;
    while ((r + 1) * (r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return r;
}

// floor(n^(1/3)) for n >= 0.
inline i64 icbrt(i64 n) {
    if (n < 0) return -1;
    i64 r = static_cast<i64>(std::cbrt(static_cast<double>(n)));
    while (r > 0 && r * r * r > n) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Extended Euclid: returns g = gcd(a,b) and x with a*x = g (mod b).
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Inverse of a mod m (m >= 1, gcd(a,m) = 1). Returns value in [0, m).
inline i64 mod_inverse(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 x, y;
    i64 g = ext_gcd(mod_nonneg(a, m), m, x, y);
    if (g != 1) fail(Errc::bad_argument, "mod_inverse: arguments not coprime");
    return mod_nonneg(x, m);
}

// Count of x in [lo, hi] with x = r (mod m), m >= 1.
inline i64 count_in_progression(i64 lo, i64 hi, i64 r, i64 m) {
    if (lo > hi) return 0;
    return floor_div(hi - r, m) - floor_div(lo - 1 - r, m);
}

// Smallest x >= lo with x = r (mod m).
inline i64 first_in_progression(i64 lo, i64 r, i64 m) {
    return lo + mod_nonneg(r - lo, m);
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Primes up to n inclusive (simple sieve).
std::vector<i64> primes_up_to(i64 n);

// Prime factorization by trial division: list of (p, exponent), n >= 1.
std::vector<std::pair<i64, int>> factorize(i64 n);

// All positive divisors of n (unsorted), n >= 1.
std::vector<i64> divisors(i64 n);

} // namespace dp4a13

#endif
