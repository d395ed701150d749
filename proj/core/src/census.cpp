#include "dp4a13/census.hpp"

#include "dp4a13/constants.hpp"
#include "dp4a13/errors.hpp"
#include "dp4a13/picard.hpp"

namespace dp4a13 {

i64 count_surface_fp(i64 p) {
    if (!is_prime(p)) fail(Errc::not_prime, "count_surface_fp: p must be prime");
    if (p > 50) fail(Errc::bound_too_large, "count_surface_fp: exhaustive scan budgeted for p <= 50");
    i64 count = 0;
    // projective representatives: leading coordinate 1, earlier ones 0
    for (int lead = 0; lead < 5; ++lead) {
        i64 reps = 1;
        for (int j = lead + 1; j < 5; ++j) reps *= p;
        for (i64 code = 0; code < reps; ++code) {
            i64 x[5] = {0, 0, 0, 0, 0};
            x[lead] = 1;
            i64 c = code;
            for (int j = lead + 1; j < 5; ++j) {
                x[j] = c % p;
                c /= p;
            }
            const i64 f1 = mod_nonneg(x[0] * x[0] + x[0] * x[3] + x[2] * x[4], p);
            const i64 f2 = mod_nonneg(x[1] * x[3] - x[2] * x[2], p);
            if (f1 == 0 && f2 == 0) ++count;
        }
    }
    return count;
}

i64 count_resolution_fp(i64 p) {
    if (!is_prime(p)) fail(Errc::not_prime, "count_resolution_fp: p must be prime");
    const i64 combinatorial = p * p + 6 * p + 1; // P^2 plus five rational blow-ups
    // fiber bookkeeping: the A1 point becomes a line (+p), the A3 point a
    // chain of three lines (+3p)
    const i64 via_scan = count_surface_fp(p) + p + 3 * p;
    if (combinatorial != via_scan)
        fail(Errc::internal_mismatch, "count_resolution_fp: blow-up count disagrees with scan");
    return combinatorial;
}

i64 count_U_fp(int case_i, i64 p) {
    if (!is_prime(p)) fail(Errc::not_prime, "count_U_fp: p must be prime");
    const auto& bc = boundary_case(case_i);
    const i64 boundary_points = bc.size() * (p + 1) - edges_within(bc.components);
    return count_resolution_fp(p) - boundary_points;
}

std::vector<CensusRow> census_table(const std::vector<int>& cases,
                                    const std::vector<i64>& primes) {
    std::vector<CensusRow> rows;
    for (i64 p : primes)
        for (int i : cases) {
            CensusRow row;
            row.p = p;
            row.case_i = i;
            row.surface = count_surface_fp(p);
            row.resolution = count_resolution_fp(p);
            row.u_points = count_U_fp(i, p);
            row.p2_tau = Rat(p * p) * tau_p(i, p);
            row.match = Rat(row.u_points) == row.p2_tau;
            rows.push_back(row);
        }
    return rows;
}

} // namespace dp4a13
