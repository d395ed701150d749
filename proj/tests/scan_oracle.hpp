// Independent brute-force oracles for the counting functions. These stay
// deliberately dumb: no factorization, no congruence stepping, no reuse of
// the library's height or gcd helpers beyond std::gcd.
#ifndef DP4A13_TESTS_SCAN_ORACLE_HPP
#define DP4A13_TESTS_SCAN_ORACLE_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace scan_oracle {

using ll = long long;

inline ll absll(ll v) { return v < 0 ? -v : v; }

inline ll gcd2(ll a, ll b) { return std::gcd(absll(a), absll(b)); }

inline bool gcd_condition(int case_i, ll x0, ll x1, ll x2, ll x3, ll x4) {
    switch (case_i) {
        case 1: return gcd2(gcd2(x0, x2), gcd2(x3, x4)) == 1;
        case 2: return gcd2(gcd2(x0, x1), gcd2(x2, x3)) == 1;
        case 3:
            return gcd2(gcd2(x0, x2), gcd2(x3, x4)) == 1 &&
                   gcd2(gcd2(x0, x1), gcd2(x2, x3)) == 1;
        case 4: return gcd2(gcd2(x0, x2), x3) == 1;
        case 5: return gcd2(gcd2(x0, x1), x2) == 1;
        case 6: return gcd2(gcd2(x0 + x3, x1), x2) == 1;
    }
    return false;
}

inline ll height_of(int case_i, ll x0, ll x1, ll x2, ll x3, ll x4) {
    switch (case_i) {
        case 1: return std::max({absll(x0), absll(x2), absll(x3), absll(x4)});
        case 2: return std::max({absll(x0), absll(x1), absll(x2), absll(x3)});
        case 3:
            return std::max({absll(x0), absll(x2), absll(x3),
                             std::min(absll(x1), absll(x4))});
        case 4: return std::max({absll(x0), absll(x2), absll(x3)});
        case 5: return std::max({absll(x0), absll(x1), absll(x2)});
        case 6: return std::max({absll(x0 + x3), absll(x1), absll(x2)});
    }
    return 0;
}

inline bool accept(int case_i, ll B, ll x0, ll x1, ll x2, ll x3, ll x4) {
    if (x0 * x0 + x0 * x3 + x2 * x4 != 0) return false;
    if (x1 * x3 - x2 * x2 != 0) return false;
    ll g = gcd2(gcd2(gcd2(x0, x1), gcd2(x2, x3)), x4);
    if (g != 1) return false;
    if (!gcd_condition(case_i, x0, x1, x2, x3, x4)) return false;
    return height_of(case_i, x0, x1, x2, x3, x4) <= B;
}

// Scan over (x2, x3 or x1, x0 or x0+x3) boxes with the two dependent
// coordinates solved by direct divisibility checks.
inline ll count(int case_i, ll B) {
    ll n = 0;
    for (ll x2 = 1; x2 <= B; ++x2) {
        const ll sq = x2 * x2;
        if (case_i <= 4) {
            for (ll x3 = -B; x3 <= B; ++x3) {
                if (x3 == 0 || sq % x3 != 0) continue;
                const ll x1 = sq / x3;
                for (ll x0 = -B; x0 <= B; ++x0) {
                    const ll num = x0 * (x0 + x3);
                    if (num % x2 != 0) continue;
                    if (accept(case_i, B, x0, x1, x2, x3, -num / x2)) ++n;
                }
            }
        } else {
            for (ll x1 = -B; x1 <= B; ++x1) {
                if (x1 == 0 || sq % x1 != 0) continue;
                const ll x3 = sq / x1;
                // case 5 scans x0 directly, case 6 scans x0 + x3
                for (ll w = -B; w <= B; ++w) {
                    const ll x0 = (case_i == 5) ? w : w - x3;
                    const ll num = x0 * (x0 + x3);
                    if (num % x2 != 0) continue;
                    if (accept(case_i, B, x0, x1, x2, x3, -num / x2)) ++n;
                }
            }
        }
    }
    return n;
}

// Literal box scan over (x2, x3, x1, x0), both defining forms checked on
// the full box and x4 solved; only usable for very small B.
inline ll count_quintuple_box(int case_i, ll B) {
    const ll X1 = B * B;
    const ll X3 = (case_i >= 5) ? B * B : B;
    const ll X0 = (case_i == 6) ? B + B * B : B;
    ll n = 0;
    for (ll x2 = 1; x2 <= B; ++x2)
        for (ll x3 = -X3; x3 <= X3; ++x3)
            for (ll x1 = -X1; x1 <= X1; ++x1) {
                if (x1 * x3 != x2 * x2) continue;
                for (ll x0 = -X0; x0 <= X0; ++x0) {
                    const ll num = x0 * (x0 + x3);
                    if (num % x2 != 0) continue;
                    if (accept(case_i, B, x0, x1, x2, x3, -num / x2)) ++n;
                }
            }
    return n;
}

} // namespace scan_oracle

#endif
