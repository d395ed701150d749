#include "dp4a13/surface.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dp4a13/errors.hpp"

namespace dp4a13 {

bool on_surface(const std::array<i64, 5>& x) {
    i64 q1 = add_checked(mul_checked(x[0], add_checked(x[0], x[3])), mul_checked(x[2], x[4]));
    i64 q2 = mul_checked(x[1], x[3]) - mul_checked(x[2], x[2]);
    return q1 == 0 && q2 == 0;
}

SurfacePoint normalize(const std::array<i64, 5>& x) {
    i64 g = 0;
    for (i64 v : x) g = gcd64(g, v);
    if (g == 0) fail(Errc::zero_vector, "normalize: zero vector");
    if (!on_surface(x)) fail(Errc::not_on_surface, "normalize: point not on the surface");
    SurfacePoint p;
    for (int k = 0; k < 5; ++k) p.x[k] = x[k] / g;
    int flip = 0;
    if (p.x[2] != 0) {
        flip = p.x[2] < 0;
    } else {
        for (i64 v : p.x)
            if (v != 0) { flip = v < 0; break; }
    }
    if (flip)
        for (auto& v : p.x) v = -v;
    return p;
}

bool is_integral(int case_i, const SurfacePoint& p) {
    const auto& x = p.x;
    switch (case_i) {
        case 1: return gcd64(gcd64(x[0], x[2]), gcd64(x[3], x[4])) == 1;
        case 2: return gcd64(gcd64(x[0], x[1]), gcd64(x[2], x[3])) == 1;
        case 3:
            return gcd64(gcd64(x[0], x[2]), gcd64(x[3], x[4])) == 1 &&
                   gcd64(gcd64(x[0], x[1]), gcd64(x[2], x[3])) == 1;
        case 4: return gcd64(gcd64(x[0], x[2]), x[3]) == 1;
        case 5: return gcd64(gcd64(x[0], x[1]), x[2]) == 1;
        case 6: return gcd64(gcd64(add_checked(x[0], x[3]), x[1]), x[2]) == 1;
        default: fail(Errc::bad_argument, "is_integral: case must be 1..6");
    }
}

i64 height(int case_i, const SurfacePoint& p) {
    const auto& x = p.x;
    switch (case_i) {
        case 1: return std::max({iabs(x[0]), iabs(x[2]), iabs(x[3]), iabs(x[4])});
        case 2: return std::max({iabs(x[0]), iabs(x[1]), iabs(x[2]), iabs(x[3])});
        case 3:
            return std::max({iabs(x[0]), iabs(x[2]), iabs(x[3]),
                             std::min(iabs(x[1]), iabs(x[4]))});
        case 4: return std::max({iabs(x[0]), iabs(x[2]), iabs(x[3])});
        case 5: return std::max({iabs(x[0]), iabs(x[1]), iabs(x[2])});
        case 6: return std::max({iabs(add_checked(x[0], x[3])), iabs(x[1]), iabs(x[2])});
        default: fail(Errc::bad_argument, "height: case must be 1..6");
    }
}

bool in_V(const SurfacePoint& p) { return p.x[2] != 0; }

SurfacePoint symmetry(const SurfacePoint& p) {
    const auto& x = p.x;
    return normalize({add_checked(x[0], x[3]), -x[1], x[2], -x[3], x[4]});
}

namespace {

// Solutions of x(x+t) = 0 mod p^k, as residues modulo p^m stepping to p^k.
// Writing a = min(v_p(t), k), every solution lies in one of the two
// progressions x = 0 or x = -t modulo p^m with m = max(ceil(k/2), k-a).
struct LocalRoots {
    i64 step;              // p^m
    i64 r0, r1;            // base residues in [0, step); r1 = -1 if coincident
};

LocalRoots local_roots(i64 p, int k, i64 t) {
    i64 pk = 1;
    for (int e = 0; e < k; ++e) pk *= p;
    i64 tr = mod_nonneg(t, pk);
    int a = 0;
    if (tr == 0) {
        a = k;
    } else {
        i64 u = tr;
        while (u % p == 0) { u /= p; ++a; }
    }
    int m = std::max((k + 1) / 2, k - a);
    i64 pm = 1;
    for (int e = 0; e < m; ++e) pm *= p;
    LocalRoots lr;
    lr.step = pm;
    lr.r0 = 0;
    lr.r1 = mod_nonneg(-tr, pm);
    if (lr.r1 == lr.r0) lr.r1 = -1;
    return lr;
}

// All solutions of x(x+t) = 0 mod n, 1 <= n, as residues in [0, n).
std::vector<i64> congruence_roots(i64 n, i64 t) {
    std::vector<i64> roots{0};
    i64 modulus = 1;
    for (auto [p, k] : factorize(n)) {
        LocalRoots lr = local_roots(p, k, t);
        i64 pk = 1;
        for (int e = 0; e < k; ++e) pk *= p;
        std::vector<i64> local;
        for (i64 r = lr.r0; r < pk; r += lr.step) local.push_back(r);
        if (lr.r1 >= 0)
            for (i64 r = lr.r1; r < pk; r += lr.step) local.push_back(r);
        // CRT with the roots accumulated so far
        std::vector<i64> next;
        next.reserve(roots.size() * local.size());
        i64 minv = mod_inverse(modulus % pk, pk);
        for (i64 r : roots)
            for (i64 s : local) {
                i64 lift = mod_nonneg((s - r) % pk * minv % pk, pk);
                next.push_back(r + modulus * lift);
            }
        roots.swap(next);
        modulus *= pk;
    }
    return roots;
}

struct DirectCaseLimits {
    i64 x3_abs_max;   // cap on |x3|
    i64 x1_abs_max;   // cap on |x1| (x2^2/|x3|); 0 = unconstrained
};

DirectCaseLimits direct_limits(int case_i, i64 bound) {
    switch (case_i) {
        case 1:
        case 2:
        case 3:
        case 4: return {bound, 0};
        case 5:
        case 6: return {0, bound};
        default: fail(Errc::bad_argument, "enumerate_direct: case must be 1..6");
    }
}

i64 direct_count_for_x2(int case_i, i64 bound, i64 x2,
                        const std::function<void(const SurfacePoint&, i64)>& on_point) {
    i64 count = 0;
    const DirectCaseLimits lim = direct_limits(case_i, bound);
    const i64 sq = x2 * x2;
    for (i64 d : divisors(sq)) {
        if (lim.x3_abs_max && d > lim.x3_abs_max) continue;
        if (lim.x1_abs_max && sq / d > lim.x1_abs_max) continue;
        for (int sgn = 0; sgn < 2; ++sgn) {
            const i64 x3 = sgn ? -d : d;
            const i64 x1 = sq / x3;
            const auto roots = congruence_roots(x2, x3);
            i64 lo = -bound, hi = bound;
            if (case_i == 6) { lo = -x3 - bound; hi = -x3 + bound; }
            for (i64 r : roots) {
                for (i64 x0 = first_in_progression(lo, r, x2); x0 <= hi; x0 += x2) {
                    const i64 x4 = -(x0 * (x0 + x3)) / x2;
                    SurfacePoint p{{x0, x1, x2, x3, x4}};
                    i64 g = 0;
                    for (i64 v : p.x) g = gcd64(g, v);
                    if (g != 1) continue;
                    if (!is_integral(case_i, p)) continue;
                    if (height(case_i, p) > bound) continue;
                    ++count;
                    if (on_point) on_point(p, height(case_i, p));
                }
            }
        }
    }
    return count;
}

} // namespace

i64 enumerate_direct(int case_i, i64 bound, const EnumOptions& opts) {
    if (bound < 1) fail(Errc::bad_argument, "enumerate_direct: bound must be >= 1");
    if (bound > 100000) fail(Errc::bound_too_large, "enumerate_direct: bound exceeds 1e5 guard");
    direct_limits(case_i, bound); // validates the case index

    int workers = std::max(1, opts.workers);
    if (opts.on_point || bound < 64) workers = 1;

    if (workers == 1) {
        i64 total = 0;
        for (i64 x2 = 1; x2 <= bound; ++x2)
            total += direct_count_for_x2(case_i, bound, x2, opts.on_point);
        return total;
    }

    std::vector<i64> partial(static_cast<size_t>(workers), 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            i64 sum = 0;
            for (i64 x2 = w + 1; x2 <= bound; x2 += workers)
                sum += direct_count_for_x2(case_i, bound, x2, nullptr);
            partial[static_cast<size_t>(w)] = sum;
        });
    for (auto& t : pool) t.join();
    i64 total = 0;
    for (i64 s : partial) total += s;
    return total;
}

} // namespace dp4a13
