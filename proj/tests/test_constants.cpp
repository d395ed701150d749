#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dp4a13/constants.hpp"

using namespace dp4a13;

namespace {

RationalPolytope make_poly(int dim, std::vector<LinearConstraint> cons, bool nonneg = true) {
    RationalPolytope p;
    p.dim = dim;
    p.constraints = std::move(cons);
    p.nonneg = nonneg;
    return p;
}

LinearConstraint le(std::vector<Rat> c, Rat rhs) { return {std::move(c), Rel::le, rhs}; }
LinearConstraint ge(std::vector<Rat> c, Rat rhs) { return {std::move(c), Rel::ge, rhs}; }

// one polytope per case; its scaled volume is the archimedean constant
RationalPolytope case_polytope(int i) {
    switch (i) {
        case 1:
            return make_poly(5, {le({1, 2, 2, 2, 2}, 1), le({0, 1, 2, 4, 3}, 1)});
        case 2:
            return make_poly(4, {le({2, 2, 0, 0}, 1), le({0, 0, 4, 2}, 1)});
        case 3:
            return make_poly(3, {le({2, 2, 0}, 1), le({0, 0, 4}, 1)});
        case 4:
            return make_poly(2, {le({1, 1}, 1)});
        default:
            return make_poly(3, {le({2, 0, 0}, 1), le({1, 2, 1}, 1)});
    }
}

} // namespace

TEST_CASE("polytope volumes: basic shapes") {
    CHECK(polytope_volume(make_poly(2, {le({1, 1}, 1)})) == Rat(1, 2));
    CHECK(polytope_volume(make_poly(3, {le({1, 1, -2}, 0), le({0, 0, 4}, 1)})) == Rat(1, 96));
    CHECK(polytope_volume(case_polytope(1)) == Rat(13, 34560));
    CHECK(polytope_volume(case_polytope(2)) == Rat(1, 128));
    CHECK(polytope_volume(case_polytope(3)) == Rat(1, 32));
    CHECK(polytope_volume(case_polytope(4)) == Rat(1, 2));
    CHECK(polytope_volume(case_polytope(5)) == Rat(7, 96));
}

TEST_CASE("polytope volume: degenerate and empty input") {
    // equality slice has measure zero in the ambient space
    CHECK(polytope_volume(make_poly(2, {{{Rat(1), Rat(0)}, Rel::eq, Rat(1)},
                                        le({0, 1}, 1)})) == Rat(0));
    // infeasible
    CHECK(polytope_volume(make_poly(2, {le({1, 1}, -1)})) == Rat(0));
    // a single point
    CHECK(polytope_volume(make_poly(2, {le({1, 1}, 0)})) == Rat(0));
}

TEST_CASE("polytope volume: unbounded input throws") {
    try {
        polytope_volume(make_poly(2, {le({1, -1}, 0)}));
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.code() == Errc::unbounded_polytope);
    }
    // bounded without implicit nonnegativity: a box
    CHECK(polytope_volume(make_poly(2,
                                    {le({1, 0}, 1), ge({1, 0}, -1), le({0, 1}, 2), ge({0, 1}, 0)},
                                    false)) == Rat(4));
    // same constraints minus one: unbounded
    CHECK_THROWS_AS(polytope_volume(make_poly(2, {le({1, 0}, 1), ge({1, 0}, -1), le({0, 1}, 2)},
                                              false)),
                    DomainError);
}

TEST_CASE("polytope volume invariances") {
    // permutation of variables
    CHECK(polytope_volume(make_poly(5, {le({2, 2, 2, 1, 2}, 1), le({1, 2, 4, 0, 3}, 1)})) ==
          Rat(13, 34560));

    // unimodular shear t1 -> t1 + 2*t3 applied to explicit constraints of a box
    auto box = make_poly(3, {le({1, 0, 0}, 1), ge({1, 0, 0}, 0), le({0, 1, 0}, 1),
                             ge({0, 1, 0}, 0), le({0, 0, 1}, 1), ge({0, 0, 1}, 0)},
                         false);
    auto sheared = make_poly(3, {le({1, 0, 2}, 1), ge({1, 0, 2}, 0), le({0, 1, 0}, 1),
                                 ge({0, 1, 0}, 0), le({0, 0, 1}, 1), ge({0, 0, 1}, 0)},
                             false);
    CHECK(polytope_volume(box) == Rat(1));
    CHECK(polytope_volume(sheared) == Rat(1));

    // image of the simplex under the shear (t1,t2,t3) -> (t1,t2,t3+t1)
    auto simplex = make_poly(3, {le({1, 1, 1}, 1), ge({1, 0, 0}, 0), ge({0, 1, 0}, 0),
                                 ge({0, 0, 1}, 0)},
                             false);
    auto simplex_sh = make_poly(3, {ge({1, 0, 0}, 0), ge({0, 1, 0}, 0), ge({-1, 0, 1}, 0),
                                    le({0, 1, 1}, 1)},
                                false);
    CHECK(polytope_volume(simplex) == Rat(1, 6));
    CHECK(polytope_volume(simplex_sh) == Rat(1, 6));
}

TEST_CASE("slicing a polytope is additive") {
    // slice the case-5 polytope by the hyperplane separating its faces
    auto whole = case_polytope(5);
    auto lo = whole, hi = whole;
    lo.constraints.push_back(le({1, -2, -1}, 0)); // t1 <= 2 t5 + t7
    hi.constraints.push_back(ge({1, -2, -1}, 0));
    CHECK(polytope_volume(lo) + polytope_volume(hi) == polytope_volume(whole));

    // the three alpha polytopes of case 5 tile the case-5 polytope
    CHECK(alpha(5, {3, 4}) + alpha(5, {4, 6}) + alpha(5, {2, 3}) == polytope_volume(whole));

    // a generic slice of the big 5-dimensional polytope
    auto a = case_polytope(1), b = case_polytope(1);
    a.constraints.push_back(le({3, -1, 2, 0, -5}, Rat(1, 7)));
    b.constraints.push_back(ge({3, -1, 2, 0, -5}, Rat(1, 7)));
    CHECK(polytope_volume(a) + polytope_volume(b) == Rat(13, 34560));
}

TEST_CASE("alpha table") {
    CHECK(alpha(1, {7}) == Rat(13, 34560));
    CHECK(alpha(2, {3, 4}) == Rat(1, 256));
    CHECK(alpha(2, {4, 6}) == Rat(1, 256));
    CHECK(alpha(3, {3, 4}) == Rat(1, 96));
    CHECK(alpha(3, {4, 6}) == Rat(1, 48));
    CHECK(alpha(4, {3, 4}) == Rat(0));
    CHECK(alpha(4, {4, 6}) == Rat(1, 8));
    CHECK(alpha(4, {5, 6}) == Rat(7, 72));
    CHECK(alpha(4, {7, 5}) == Rat(5, 18));
    CHECK(alpha(5, {3, 4}) == Rat(1, 48));
    CHECK(alpha(5, {4, 6}) == Rat(1, 96));
    CHECK(alpha(5, {2, 3}) == Rat(1, 24));
    // case 6 mirrors case 5
    CHECK(alpha(6, {3, 4}) == Rat(1, 48));
    CHECK(alpha(6, {4, 6}) == Rat(1, 96));
    CHECK(alpha(6, {1, 3}) == Rat(1, 24));
}

TEST_CASE("archimedean constants") {
    CHECK(c_infinity(1) == Rat(13, 4320));
    CHECK(c_infinity(2) == Rat(1, 32));
    CHECK(c_infinity(3) == Rat(1, 8));
    CHECK(c_infinity(4) == Rat(2));
    CHECK(c_infinity(5) == Rat(7, 24));
    CHECK(c_infinity(6) == Rat(7, 24));

    // the alpha pieces tile the per-case polytope
    CHECK(c_infinity(3) == Rat(4) * polytope_volume(case_polytope(3)));
    CHECK(c_infinity(5) == Rat(4) * polytope_volume(case_polytope(5)));
    CHECK(c_infinity(1) == Rat(8) * polytope_volume(case_polytope(1)));
}

TEST_CASE("tau_infinity quadrature") {
    const auto detail = tau_infinity_detail();
    CHECK(std::abs(detail.normalized - 8.0) < 1e-8);
    CHECK(std::abs(detail.line_integral - 4.0) < 1e-8);
    CHECK(detail.point_mass == 4.0);
    CHECK(std::abs(tau_infinity_check() - 8.0) < 1e-8);
}

TEST_CASE("tau_p and local factors") {
    CHECK(tau_p(1, 2) == Rat(7, 2));
    CHECK(tau_p(3, 3) == Rat(14, 9));
    CHECK(tau_p(5, 5) == Rat(7, 5));
    CHECK(local_factor(1, 2) == Rat(7, 64));
    CHECK(local_factor(3, 3) == Rat(56, 81));
    for (i64 p : {2, 3, 5, 7, 97})
        CHECK(local_factor(4, p) == Rat(1) - Rat(1, p * p));
    CHECK_THROWS_AS(tau_p(1, 4), DomainError);
    CHECK_THROWS_AS(local_factor(1, 1), DomainError);
}

TEST_CASE("local factor identity and log envelope") {
    for (int i = 1; i <= 6; ++i) {
        const int k = 6 - boundary_case(i).size();
        for (i64 p : primes_up_to(200)) {
            Rat conv(1);
            for (int e = 0; e < k; ++e) conv *= Rat(p - 1, p);
            CHECK(local_factor(i, p) == conv * tau_p(i, p));
            // per-factor envelope |log f| <= (k^2 + k)/p^2; summed over p > P
            // this still lands below the k^2/(P-1) tail bound used by c_finite
            const double keff = (i == 3) ? 3.0 : double(k);
            CHECK(std::abs(std::log(local_factor(i, p).to_double())) <=
                  (keff * keff + keff) / double(p * p));
        }
    }
}

TEST_CASE("tail bound covers the omitted factors") {
    // compare truncation at P with a much longer product
    for (int i = 1; i <= 6; ++i) {
        const auto coarse = c_finite(i, 300);
        const auto fine = c_finite(i, 200000);
        CHECK(std::abs(coarse.value - fine.value) <=
              coarse.tail_bound + fine.tail_bound);
    }
}

TEST_CASE("Euler products") {
    // independent zeta(2) via the series with an Euler-Maclaurin tail
    const i64 N = 2000000;
    double zeta2 = 0.0;
    for (i64 n = N; n >= 1; --n) zeta2 += 1.0 / (double(n) * double(n));
    zeta2 += 1.0 / N - 1.0 / (2.0 * double(N) * N) + 1.0 / (6.0 * double(N) * N * N);
    const double inv_zeta2 = 1.0 / zeta2;

    const auto ep = c_finite(4, 10000);
    CHECK(std::abs(ep.value - inv_zeta2) <= ep.tail_bound);

    CHECK(c_finite(1, 1000).value > c_finite(1, 10000).value);
    CHECK(c_finite(2, 2).value == doctest::Approx(local_factor(2, 2).to_double()).epsilon(1e-14));
    CHECK_THROWS_AS(c_finite(1, 1), DomainError);
}

TEST_CASE("exponents") {
    const int expected[7] = {0, 6, 5, 4, 3, 4, 4};
    for (int i = 1; i <= 6; ++i) CHECK(exponent_b(i) == expected[i]);
}

TEST_CASE("predicted counts") {
    // 2 * 6/pi^2 = 1.21585...
    const double coeff = predicted_count(4, 1e6, 100000) / 1e6 /
                         std::pow(std::log(1e6), 2);
    CHECK(coeff == doctest::Approx(1.21585).epsilon(1e-3));
    CHECK(predicted_count(1, 3, 2) > 0.0);
    CHECK(predicted_count(2, 1000, 1000) > 0.0);
}
