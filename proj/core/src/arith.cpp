#include "dp4a13/arith.hpp"

namespace dp4a13 {

std::vector<i64> primes_up_to(i64 n) {
    std::vector<i64> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    for (i64 p = 2; p <= n; ++p) {
        if (composite[static_cast<size_t>(p)]) continue;
        out.push_back(p);
        for (i64 q = p * p; q <= n; q += p) composite[static_cast<size_t>(q)] = true;
    }
    return out;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) fail(Errc::bad_argument, "factorize expects n >= 1");
    std::vector<std::pair<i64, int>> f;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> d{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = d.size();
        i64 q = 1;
        for (int k = 1; k <= e; ++k) {
            q *= p;
            for (size_t i = 0; i < sz; ++i) d.push_back(d[i] * q);
        }
    }
    return d;
}

} // namespace dp4a13
