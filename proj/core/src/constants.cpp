#include "dp4a13/constants.hpp"

#include <algorithm>
#include <cmath>

#include "dp4a13/errors.hpp"
#include "dp4a13/picard.hpp"
#include "linalg.hpp"

namespace dp4a13 {

namespace {

// Indices j for which the classes {[E_k] : k != j} form a basis of Pic.
bool basis_complement_ok(int j) { return j == 1 || j == 2 || j == 3 || j == 6 || j == 7; }

// Coefficients of `target` in the basis {[E_k] : k in 1..7, k != j0},
// indexed by k (position k-1; entry for j0 unused).
std::array<Rat, 8> express(const DivisorClass& target, int j0) {
    RatMat m(6, RatVec(6));
    std::vector<int> cols;
    for (int k = 1; k <= 7; ++k)
        if (k != j0) cols.push_back(k);
    for (int row = 0; row < 6; ++row)
        for (int col = 0; col < 6; ++col)
            m[static_cast<size_t>(row)][static_cast<size_t>(col)] =
                Rat(curve_class(cols[static_cast<size_t>(col)]).c[static_cast<size_t>(row)]);
    RatVec rhs(6);
    for (int row = 0; row < 6; ++row) rhs[static_cast<size_t>(row)] = Rat(target.c[static_cast<size_t>(row)]);
    auto sol = solve_square(m, rhs);
    if (!sol) fail(Errc::internal_mismatch, "negative-curve classes do not span");
    std::array<Rat, 8> out{};
    for (size_t col = 0; col < 6; ++col) out[static_cast<size_t>(cols[col])] = (*sol)[col];
    return out;
}

} // namespace

Rat alpha(int case_i, const std::vector<int>& face) {
    const auto& bc = boundary_case(case_i);
    for (int j : face)
        if (!set_contains(bc.components, j))
            fail(Errc::bad_argument, "alpha: face is not part of the boundary");

    int j0 = 0;
    for (int j : face)
        if (basis_complement_ok(j) && (j == 3 || j == 6 || j == 7)) j0 = j;
    if (j0 == 0) fail(Errc::bad_argument, "alpha: face misses the basis-complement indices");

    const auto a = express(log_anticanonical(bc.components), j0);
    const auto b = express(curve_class(j0), j0);

    // J: boundary components outside the face; J': everything else but j0.
    std::vector<int> jprime;
    for (int j = 1; j <= 7; ++j) {
        if (j == j0) continue;
        const bool in_face = std::find(face.begin(), face.end(), j) != face.end();
        if (set_contains(bc.components, j) && !in_face) continue;
        jprime.push_back(j);
    }

    // Eliminated variable: the second face component, or the first index
    // with unit coefficient for the vertex face.
    int elim = 0;
    if (face.size() == 2) {
        for (int j : face)
            if (j != j0) elim = j;
    } else {
        for (int j : jprime)
            if (a[static_cast<size_t>(j)].abs() == Rat(1)) { elim = j; break; }
    }
    if (elim == 0 || a[static_cast<size_t>(elim)].abs() != Rat(1))
        fail(Errc::internal_mismatch, "alpha: no unit coefficient to eliminate");
    const Rat ae = a[static_cast<size_t>(elim)];
    const Rat be = b[static_cast<size_t>(elim)];

    std::vector<int> rest;
    for (int j : jprime)
        if (j != elim) rest.push_back(j);

    // After substituting t_elim = (1 - sum a_j t_j)/a_elim:
    //   b-inequality  sum (b_j - b_e a_j / a_e) t_j >= -b_e / a_e
    //   t_elim >= 0   sum (a_j / a_e) t_j <= 1 / a_e
    RationalPolytope poly;
    poly.dim = static_cast<int>(rest.size());
    LinearConstraint ineq_b, ineq_e;
    for (int j : rest) {
        const Rat aj = a[static_cast<size_t>(j)], bj = b[static_cast<size_t>(j)];
        ineq_b.coeff.push_back(bj - be * aj / ae);
        ineq_e.coeff.push_back(aj / ae);
    }
    ineq_b.rel = Rel::ge;
    ineq_b.rhs = -be / ae;
    ineq_e.rel = Rel::le; // dividing by a_e flips the sign exactly when a_e < 0
    ineq_e.rhs = Rat(1) / ae;
    poly.constraints = {ineq_b, ineq_e};
    return polytope_volume(poly);
}

Rat c_infinity(int case_i) {
    const auto& bc = boundary_case(case_i);
    Rat sum(0);
    for (const auto& face : bc.faces) {
        const i64 tau = face.size() == 1 ? 8 : 4;
        sum += Rat(tau) * alpha(case_i, face);
    }
    return sum;
}

namespace {

double arch_integrand(double y) { return 1.0 / std::max(1.0, y * y); }

double adaptive_simpson(double a, double b, double fa, double fb, double fm, double whole,
                        double eps, int depth) {
    if (depth > 48)
        fail(Errc::quadrature_non_convergence, "adaptive quadrature did not converge");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = arch_integrand(lm), frm = arch_integrand(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (std::abs(left + right - whole) <= 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(a, m, fa, fm, flm, left, eps / 2.0, depth + 1) +
           adaptive_simpson(m, b, fm, fb, frm, right, eps / 2.0, depth + 1);
}

double integrate(double a, double b, double eps) {
    const double fa = arch_integrand(a), fb = arch_integrand(b);
    const double m = 0.5 * (a + b), fm = arch_integrand(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(a, b, fa, fb, fm, whole, eps, 0);
}

} // namespace

ArchVolumeCheck tau_infinity_detail() {
    const double T = 1e5; // tail integral(|y|>T) dy/y^2 = 2/T, added exactly
    const double eps = 1e-12;
    const double inner = integrate(-1.0, 1.0, eps) + integrate(1.0, T, eps) +
                         integrate(-T, -1.0, eps) + 2.0 / T;
    return {inner, 2.0 * inner, 4.0};
}

double tau_infinity_check() { return tau_infinity_detail().normalized; }

Rat tau_p(int case_i, i64 p) {
    if (!is_prime(p)) fail(Errc::not_prime, "tau_p: p must be prime");
    const auto& bc = boundary_case(case_i);
    if (case_i == 3) return Rat(p * p + 2 * p - 1, p * p);
    return Rat(p + bc.picard_rank_u(), p);
}

// For the record: the Euler factors below arise from per-prime densities
// of the coprimality conditions on the free Cox coordinates. Writing I for
// the set of indices j with p | eta_j, the density theta_p(I) is
//   1        for I = {}, {1}, {2}, {7},
//   1 - 1/p  for I = {4}, {5}, {6}, {1,3}, {2,3}, {3,4}, {4,6}, {5,6}, {5,7},
//   1 - 2/p  for I = {3},
//   0        otherwise,
// and summing theta over the divisibility patterns of a case's free tuple
// yields the closed forms implemented here.
Rat local_factor(int case_i, i64 p) {
    if (!is_prime(p)) fail(Errc::not_prime, "local_factor: p must be prime");
    const int k = boundary_case(case_i).picard_rank_u();
    i64 num = 1, den = 1;
    for (int e = 0; e < k; ++e) {
        num = mul_checked(num, p - 1);
        den = mul_checked(den, p);
    }
    if (case_i == 3)
        return Rat(mul_checked(num, p * p + 2 * p - 1), mul_checked(den, p * p));
    return Rat(mul_checked(num, p + k), mul_checked(den, p));
}

EulerProduct c_finite(int case_i, i64 prime_bound) {
    if (prime_bound < 2) fail(Errc::bad_argument, "c_finite: prime bound must be >= 2");
    const int k = boundary_case(case_i).picard_rank_u();
    double value = 1.0;
    for (i64 p : primes_up_to(prime_bound)) {
        const double u = 1.0 / double(p);
        double f = 1.0;
        for (int e = 0; e < k; ++e) f *= 1.0 - u;
        f *= (case_i == 3) ? 1.0 + 2.0 * u - u * u : 1.0 + k * u;
        value *= f;
    }
    // |log of the omitted tail| <= sum_{p > P} keff^2/p^2 <= keff^2/(P-1)
    const double keff = (case_i == 3) ? 3.0 : double(k);
    const double t = keff * keff / double(prime_bound - 1);
    return {value, value * std::expm1(t), prime_bound};
}

int exponent_b(int case_i) {
    const auto& bc = boundary_case(case_i);
    constexpr int unit_rank = 0; // Q[U_i]^x = Q^x for every case
    return bc.picard_rank_u() - unit_rank + bc.clemens_dim() + 1;
}

double predicted_count(int case_i, double bound, i64 prime_bound) {
    const double c_inf = c_infinity(case_i).to_double();
    const double c_fin = c_finite(case_i, prime_bound).value;
    const int b = exponent_b(case_i);
    return c_inf * c_fin * bound * std::pow(std::log(bound), b - 1);
}

PredictedConstant predicted_constant(int case_i, i64 prime_bound) {
    const auto ep = c_finite(case_i, prime_bound);
    return {case_i, c_infinity(case_i), exponent_b(case_i), ep.value, ep.tail_bound,
            prime_bound};
}

} // namespace dp4a13
