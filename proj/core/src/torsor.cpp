#include "dp4a13/torsor.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "dp4a13/errors.hpp"
#include "dp4a13/picard.hpp"

namespace dp4a13 {

bool curves_adjacent(int i, int j) {
    if (i == j) return false;
    return intersect(curve_class(i), curve_class(j)) > 0;
}

i64 torsor_form(const TorsorPoint& t) {
    i64 m = mul_checked(mul_checked(t.eta(4), t.eta(7)),
                        mul_checked(mul_checked(t.eta(5), t.eta(5)), t.eta(5)));
    m = mul_checked(m, mul_checked(t.eta(6), t.eta(6)));
    return add_checked(add_checked(mul_checked(t.eta(1), t.eta(9)),
                                   mul_checked(t.eta(2), t.eta(8))),
                       m);
}

bool coprimality_ok(const TorsorPoint& t) {
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j)
            if (!curves_adjacent(i, j) && gcd64(t.eta(i), t.eta(j)) != 1) return false;
    return true;
}

i64 solve_eta9(const std::array<i64, 8>& e) {
    if (e[0] == 0) fail(Errc::zero_leading_coefficient, "solve_eta9: eta1 = 0");
    i64 m = mul_checked(mul_checked(e[3], e[6]), mul_checked(mul_checked(e[4], e[4]), e[4]));
    m = mul_checked(m, mul_checked(e[5], e[5]));
    i64 num = add_checked(mul_checked(e[1], e[7]), m);
    if (num % e[0] != 0) fail(Errc::not_divisible, "solve_eta9: eta1 does not divide");
    return -num / e[0];
}

namespace {

i64 prod(std::initializer_list<i64> fs) {
    i64 r = 1;
    for (i64 f : fs) r = mul_checked(r, f);
    return r;
}

} // namespace

SurfacePoint project(const TorsorPoint& t) {
    const auto e = [&](int j) { return t.eta(j); };
    std::array<i64, 5> s;
    s[0] = prod({e(2), e(3), e(4), e(5), e(6), e(7), e(8)});
    s[1] = prod({e(1), e(1), e(2), e(2), e(3), e(3), e(3), e(4), e(4), e(6)});
    s[2] = prod({e(1), e(2), e(3), e(3), e(4), e(4), e(5), e(5), e(6), e(6), e(7)});
    s[3] = prod({e(3), e(4), e(4), e(5), e(5), e(5), e(5), e(6), e(6), e(6), e(7), e(7)});
    s[4] = prod({e(7), e(8), e(9)});
    if (s[0] == 0 && s[1] == 0 && s[2] == 0 && s[3] == 0 && s[4] == 0)
        fail(Errc::all_sections_zero, "project: all anticanonical sections vanish");
    return normalize(s);
}

i64 cox_height(int case_i, const TorsorPoint& t) {
    const auto& bc = boundary_case(case_i);
    for (int j = 1; j <= 7; ++j)
        if (set_contains(bc.components, j) && iabs(t.eta(j)) != 1)
            fail(Errc::boundary_not_unit, "cox_height: boundary coordinate not a unit");
    const auto e = [&](int j) { return t.eta(j); };
    switch (case_i) {
        case 1:
            return std::max({iabs(prod({e(2), e(3), e(4), e(5), e(6), e(8)})),
                             iabs(prod({e(1), e(2), e(3), e(3), e(4), e(4), e(5), e(5), e(6), e(6)})),
                             iabs(prod({e(3), e(4), e(4), e(5), e(5), e(5), e(5), e(6), e(6), e(6)})),
                             iabs(mul_checked(e(8), e(9)))});
        case 2:
            return std::max({iabs(prod({e(2), e(5), e(7), e(8)})),
                             iabs(prod({e(1), e(1), e(2), e(2)})),
                             iabs(prod({e(5), e(5), e(5), e(5), e(7), e(7)}))});
        case 3:
            return std::max({iabs(prod({e(2), e(5), e(8)})),
                             iabs(prod({e(1), e(2), e(5), e(5)})),
                             iabs(prod({e(5), e(5), e(5), e(5)})),
                             std::min(iabs(prod({e(1), e(1), e(2), e(2)})),
                                      iabs(mul_checked(e(8), e(9))))});
        case 4:
            return std::max({iabs(mul_checked(e(2), e(8))), iabs(mul_checked(e(1), e(2))),
                             i64{1}});
        case 5:
            return std::max({iabs(mul_checked(e(1), e(1))),
                             iabs(prod({e(1), e(5), e(5), e(7)})),
                             iabs(prod({e(5), e(7), e(8)}))});
        case 6: // case 5 composed with the swap eta1<->eta2, eta8<->eta9
            return std::max({iabs(mul_checked(e(2), e(2))),
                             iabs(prod({e(2), e(5), e(5), e(7)})),
                             iabs(prod({e(5), e(7), e(9)}))});
        default: fail(Errc::bad_argument, "cox_height: case must be 1..6");
    }
}

i64 monomial_gcd(int case_i, const TorsorPoint& t) {
    const auto e = [&](int j) { return t.eta(j); };
    std::vector<i64> vals;
    switch (case_i) {
        case 1:
            vals = {prod({e(2), e(3), e(4), e(5), e(6), e(8)}),
                    prod({e(1), e(2), e(3), e(3), e(4), e(4), e(5), e(5), e(6), e(6)}),
                    prod({e(3), e(4), e(4), e(5), e(5), e(5), e(5), e(6), e(6), e(6), e(7)}),
                    prod({e(8), e(9)})};
            break;
        case 2:
            vals = {prod({e(2), e(5), e(7), e(8)}),
                    prod({e(1), e(1), e(2), e(2), e(3), e(3), e(4)}),
                    prod({e(4), e(5), e(5), e(5), e(5), e(6), e(6), e(7), e(7)})};
            break;
        case 4:
            vals = {prod({e(2), e(8)}),
                    prod({e(1), e(2), e(3), e(4), e(5), e(6)}),
                    prod({e(4), e(5), e(5), e(5), e(6), e(6), e(7)})};
            break;
        case 5:
            vals = {prod({e(5), e(7), e(8)}),
                    prod({e(1), e(1), e(2), e(3), e(3), e(4)}),
                    prod({e(1), e(3), e(4), e(5), e(5), e(6), e(7)})};
            break;
        default:
            fail(Errc::bad_argument, "monomial_gcd: defined for cases 1, 2, 4, 5");
    }
    i64 g = 0;
    for (i64 v : vals) g = gcd64(g, v);
    return g;
}

std::pair<Rat, Rat> chart_xy(const TorsorPoint& t) {
    for (int j = 1; j <= 7; ++j)
        if (t.eta(j) == 0) fail(Errc::bad_argument, "chart_xy: eta1..eta7 must be nonzero");
    const auto e = [&](int j) { return t.eta(j); };
    Rat x = Rat(prod({e(7), e(5), e(5), e(6)}), prod({e(1), e(2), e(3)}));
    Rat y = Rat(e(8), prod({e(1), e(3), e(4), e(5), e(6)}));
    return {x, y};
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

// Integer solutions of |x*(a*x + b)| <= U within |x| <= X, as at most two
// closed intervals. Bounds are widened by a safety margin; callers filter
// each candidate with the exact height condition anyway.
struct Intervals {
    int n = 0;
    std::array<std::pair<i64, i64>, 2> iv;

    void add(i64 lo, i64 hi) {
        if (lo > hi) return;
        iv[static_cast<size_t>(n++)] = {lo, hi};
    }
};

Intervals quad_intervals(i64 a, i64 b, i64 U, i64 X) {
    if (a < 0) { a = -a; b = -b; } // |q| is unchanged under global sign flip
    const double da = double(a), db = double(b), dU = double(U);
    // outer interval: a x^2 + b x <= U
    const double disc_out = db * db + 4.0 * da * dU;
    const double sq_out = std::sqrt(std::max(0.0, disc_out));
    i64 lo = std::max<i64>(-X, i64(std::floor((-db - sq_out) / (2 * da))) - 2);
    i64 hi = std::min<i64>(X, i64(std::ceil((-db + sq_out) / (2 * da))) + 2);
    Intervals out;
    const double disc_in = db * db - 4.0 * da * dU;
    if (disc_in <= 0) {
        out.add(lo, hi);
        return out;
    }
    // a x^2 + b x >= -U fails on a middle gap (s_lo, s_hi)
    const double sq_in = std::sqrt(disc_in);
    i64 gap_lo = i64(std::floor((-db - sq_in) / (2 * da))) + 2;
    i64 gap_hi = i64(std::ceil((-db + sq_in) / (2 * da))) - 2;
    if (gap_lo > gap_hi) {
        out.add(lo, hi);
        return out;
    }
    out.add(lo, std::min(hi, gap_lo));
    out.add(std::max(lo, gap_hi), hi);
    return out;
}

struct Sink {
    i64 raw = 0;
    const std::function<void(const TorsorPoint&)>* cb = nullptr;

    void hit(const TorsorPoint& t) {
        ++raw;
        if (cb && *cb) (*cb)(t);
    }
};

// Signed values 1,-1,2,-2,... up to |v| <= cap.
template <typename F>
void for_signed(i64 cap, F&& body) {
    for (i64 m = 1; m <= cap; ++m) {
        body(m);
        body(-m);
    }
}

// case 1: boundary {E7}; free (eta1,...,eta6). The box on the free block
// comes from the second and third height terms with the remaining
// variables at their minimum absolute value 1.
void scan_case1_eta1(i64 B, i64 e1, Sink& sink) {
    const i64 a1 = iabs(e1);
    const i64 cap_b = B / a1; // |eta2 (eta3 eta4 eta5 eta6)^2| <= B/|eta1|
    for_signed(std::min(isqrt(cap_b), iroot4(B)), [&](i64 e5) {
        if (gcd64(e1, e5) != 1) return;
        const i64 e5sq = e5 * e5, e5q = e5sq * e5sq;
        for_signed(std::min(isqrt(cap_b / e5sq), icbrt(B / e5q)), [&](i64 e6) {
            if (gcd64(e1, e6) != 1) return;
            const i64 a6 = iabs(e6);
            const i64 q56 = e5sq * e6 * e6;     // (eta5 eta6)^2
            const i64 c56 = e5q * a6 * a6 * a6; // eta5^4 |eta6|^3
            for_signed(std::min(isqrt(cap_b / q56), isqrt(B / c56)), [&](i64 e4) {
                if (gcd64(e1, e4) != 1 || gcd64(e4, e5) != 1) return;
                const i64 a4 = iabs(e4);
                const i64 q456 = a4 * a4 * q56;
                const i64 c456 = a4 * a4 * c56;
                for_signed(std::min(isqrt(cap_b / q456), B / c456), [&](i64 e3) {
                    if (gcd64(e3, e5) != 1 || gcd64(e3, e6) != 1) return;
                    const i64 a3 = iabs(e3);
                    const i64 q3456 = a3 * a3 * q456;
                    for_signed(cap_b / q3456, [&](i64 e2) {
                        if (gcd64(e1, e2) != 1 || gcd64(e2, e4) != 1 ||
                            gcd64(e2, e5) != 1 || gcd64(e2, e6) != 1)
                            return;
                        const i64 c = e4 * e5sq * e5 * e6 * e6; // eta4 eta5^3 eta6^2
                        const i64 P = iabs(e2 * e3 * e4 * e5 * e6);
                        const i64 X = B / P;
                        const i64 r =
                            mod_nonneg(-mod_nonneg(c, a1) * mod_inverse(e2, a1), a1);
                        const i64 h2 = iabs(e1 * e2) * q3456; // second height term
                        const i64 h3 = a3 * c456;             // third height term
                        Intervals ivs = quad_intervals(e2, c, B * a1, X);
                        for (int k = 0; k < ivs.n; ++k) {
                            for (i64 e8 = first_in_progression(ivs.iv[k].first, r, a1);
                                 e8 <= ivs.iv[k].second; e8 += a1) {
                                const i64 num = e2 * e8 + c;
                                const i64 e9 = -num / e1;
                                // gcd(eta8,eta1) and gcd(eta9,eta2) hold automatically:
                                // a common divisor would divide c, coprime to eta1 resp. eta2.
                                if (gcd64(e8, e3) != 1 || gcd64(e8, e4) != 1 ||
                                    gcd64(e8, e5) != 1 || gcd64(e8, e6) != 1)
                                    continue;
                                if (gcd64(e9, e3) != 1 || gcd64(e9, e4) != 1 ||
                                    gcd64(e9, e5) != 1 || gcd64(e9, e6) != 1)
                                    continue;
                                if (std::max({P * iabs(e8), h2, h3, iabs(e8 * e9)}) > B)
                                    continue;
                                sink.hit({{e1, e2, e3, e4, e5, e6, 1, e8, e9}});
                            }
                        }
                    });
                });
            });
        });
    });
}

// case 2: boundary {E3,E4,E6}; free (eta1,eta2,eta5,eta7).
void scan_case2_eta1(i64 B, i64 e1, Sink& sink) {
    const i64 a1 = iabs(e1);
    const i64 sqB = isqrt(B);
    for_signed(sqB / a1, [&](i64 e2) {
        if (gcd64(e1, e2) != 1) return;
        const i64 h12 = e1 * e2 * e1 * e2; // (eta1 eta2)^2
        for_signed(iroot4(B), [&](i64 e5) {
            if (gcd64(e1, e5) != 1 || gcd64(e2, e5) != 1) return;
            const i64 e5q = e5 * e5 * e5 * e5;
            for_signed(isqrt(B / e5q), [&](i64 e7) {
                if (gcd64(e1, e7) != 1 || gcd64(e2, e7) != 1) return;
                const i64 h57 = e5q * e7 * e7;
                const i64 c = e5 * e5 * e5 * e7;
                const i64 P = iabs(e2 * e5 * e7);
                const i64 X = B / P;
                const i64 r = mod_nonneg(-mod_nonneg(c, a1) * mod_inverse(e2, a1), a1);
                for (i64 e8 = first_in_progression(-X, r, a1); e8 <= X; e8 += a1) {
                    const i64 e9 = -(e2 * e8 + c) / e1;
                    if (gcd64(e8, e5) != 1 || gcd64(e9, e5) != 1) continue;
                    if (std::max({P * iabs(e8), h12, h57}) > B) continue;
                    sink.hit({{e1, e2, 1, 1, e5, 1, e7, e8, e9}});
                }
            });
        });
    });
}

// case 3: boundary {E3,E4,E6,E7}; free (eta1,eta2,eta5).
void scan_case3_eta1(i64 B, i64 e1, Sink& sink) {
    const i64 a1 = iabs(e1);
    for_signed(B / a1, [&](i64 e2) {
        if (gcd64(e1, e2) != 1) return;
        const i64 p12 = iabs(e1 * e2);
        for_signed(std::min(iroot4(B), isqrt(B / p12)), [&](i64 e5) {
            if (gcd64(e1, e5) != 1 || gcd64(e2, e5) != 1) return;
            const i64 e5q = e5 * e5 * e5 * e5;
            const i64 c = e5 * e5 * e5;
            const i64 P = iabs(e2 * e5);
            const i64 X = B / P;
            const i64 r = mod_nonneg(-mod_nonneg(c, a1) * mod_inverse(e2, a1), a1);
            Intervals ivs;
            if (p12 * p12 <= B)
                ivs.add(-X, X); // min-term already below B via |eta1^2 eta2^2|
            else
                ivs = quad_intervals(e2, c, B * a1, X);
            const i64 h2 = p12 * e5 * e5;
            for (int k = 0; k < ivs.n; ++k) {
                for (i64 e8 = first_in_progression(ivs.iv[k].first, r, a1);
                     e8 <= ivs.iv[k].second; e8 += a1) {
                    const i64 num = e2 * e8 + c;
                    const i64 e9 = -num / e1;
                    if (gcd64(e8, e5) != 1 || gcd64(e9, e5) != 1) continue;
                    const i64 min_term = std::min(p12 * p12, iabs(e8 * e9));
                    if (std::max({P * iabs(e8), h2, e5q, min_term}) > B) continue;
                    sink.hit({{e1, e2, 1, 1, e5, 1, 1, e8, e9}});
                }
            }
        });
    });
}

// case 4: boundary {E3,...,E7}; free (eta1,eta2). When not streaming, the
// eta8 progression is counted in closed form (no per-point condition is
// left: both remaining gcds are implied by eta2*eta8 = -1 mod eta1).
void scan_case4_eta1(i64 B, i64 e1, Sink& sink, bool closed_form) {
    const i64 a1 = iabs(e1);
    for_signed(B / a1, [&](i64 e2) {
        if (gcd64(e1, e2) != 1) return;
        const i64 X = B / iabs(e2);
        const i64 r = mod_nonneg(-mod_inverse(e2, a1), a1);
        if (closed_form) {
            sink.raw += count_in_progression(-X, X, r, a1);
            return;
        }
        for (i64 e8 = first_in_progression(-X, r, a1); e8 <= X; e8 += a1) {
            const i64 e9 = -(e2 * e8 + 1) / e1;
            sink.hit({{e1, e2, 1, 1, 1, 1, 1, e8, e9}});
        }
    });
}

// cases 5 and 6 are mirror images under eta1<->eta2, eta8<->eta9 (a graph
// automorphism); `swap` switches between them.
void scan_case56_outer(i64 B, i64 outer, bool swapped, Sink& sink) {
    const i64 a = iabs(outer);
    if (a * a > B) return;
    for_signed(isqrt(B / a), [&](i64 e5) {
        if (gcd64(outer, e5) != 1) return;
        const i64 q5 = e5 * e5;
        for_signed(B / (a * q5), [&](i64 e7) {
            if (gcd64(outer, e7) != 1) return;
            const i64 c = q5 * e5 * e7;
            const i64 P = iabs(e5 * e7);
            const i64 X = B / P;
            const i64 r = mod_nonneg(-c, a);
            for (i64 dep = first_in_progression(-X, r, a); dep <= X; dep += a) {
                const i64 other = -(dep + c) / outer;
                if (gcd64(dep, e5) != 1 || gcd64(other, e5) != 1) continue;
                TorsorPoint t;
                if (!swapped)
                    t = {{outer, 1, 1, 1, e5, 1, e7, dep, other}};
                else
                    t = {{1, outer, 1, 1, e5, 1, e7, other, dep}};
                sink.hit(t);
            }
        });
    });
}

void scan_outer(int case_i, i64 B, i64 e_out, Sink& sink, bool stream) {
    switch (case_i) {
        case 1: scan_case1_eta1(B, e_out, sink); break;
        case 2: scan_case2_eta1(B, e_out, sink); break;
        case 3: scan_case3_eta1(B, e_out, sink); break;
        case 4: scan_case4_eta1(B, e_out, sink, !stream); break;
        case 5: scan_case56_outer(B, e_out, false, sink); break;
        case 6: scan_case56_outer(B, e_out, true, sink); break;
        default: fail(Errc::bad_argument, "enumerate_torsor: case must be 1..6");
    }
}

i64 outer_cap(int case_i, i64 B) {
    switch (case_i) {
        case 2:
        case 5:
        case 6: return isqrt(B);
        default: return B;
    }
}

} // namespace

TorsorTally enumerate_torsor_detail(int case_i, i64 bound, const TorsorEnumOptions& opts) {
    if (bound < 1) fail(Errc::bad_argument, "enumerate_torsor: bound must be >= 1");
    if (bound > 100000000) fail(Errc::bound_too_large, "enumerate_torsor: bound exceeds 1e8 guard");
    const auto& bc = boundary_case(case_i);

    const i64 cap = outer_cap(case_i, bound);
    const bool stream = static_cast<bool>(opts.on_point);
    int workers = std::max(1, opts.workers);
    if (stream || cap < 32) workers = 1;

    i64 raw = 0;
    if (workers == 1) {
        Sink sink;
        sink.cb = &opts.on_point;
        for (i64 m = 1; m <= cap; ++m) {
            scan_outer(case_i, bound, m, sink, stream);
            scan_outer(case_i, bound, -m, sink, stream);
        }
        raw = sink.raw;
    } else {
        std::vector<i64> partial(static_cast<size_t>(workers), 0);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                Sink sink;
                for (i64 m = w + 1; m <= cap; m += workers) {
                    scan_outer(case_i, bound, m, sink, false);
                    scan_outer(case_i, bound, -m, sink, false);
                }
                partial[static_cast<size_t>(w)] = sink.raw;
            });
        for (auto& t : pool) t.join();
        for (i64 s : partial) raw += s;
    }

    const int orbit_log = 6 - bc.size();
    if (raw % (i64(1) << orbit_log) != 0)
        fail(Errc::internal_mismatch, "enumerate_torsor: raw tally not divisible by sign-orbit size");
    return {raw, raw >> orbit_log};
}

} // namespace dp4a13
