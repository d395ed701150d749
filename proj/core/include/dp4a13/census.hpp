#ifndef DP4A13_CENSUS_HPP
#define DP4A13_CENSUS_HPP

#include <vector>

#include "dp4a13/boundary.hpp"
#include "dp4a13/rational.hpp"

namespace dp4a13 {

// #S(F_p): exhaustive scan of P^4(F_p) against the two defining forms.
// Budgeted for p <= 50; equals (p+1)^2 for these split fibers.
i64 count_surface_fp(i64 p);

// #S~(F_p) on the desingularization, computed two ways and cross-checked:
// p^2 + 6p + 1 from the blow-up structure, and the surface scan plus p
// points over the A1 fiber and 3p over the A3 chain.
i64 count_resolution_fp(i64 p);

// #U~_i(F_p) = #S~(F_p) minus the F_p-points of the boundary divisor D_i,
// which has |D_i|(p+1) points minus one per internal dual-graph edge.
i64 count_U_fp(int case_i, i64 p);

struct CensusRow {
    i64 p;
    int case_i;
    i64 surface;     // #S(F_p)
    i64 resolution;  // #S~(F_p)
    i64 u_points;    // #U~_i(F_p)
    Rat p2_tau;      // p^2 * tau_p(i, p)
    bool match;      // u_points == p2_tau
};

std::vector<CensusRow> census_table(const std::vector<int>& cases,
                                    const std::vector<i64>& primes);

} // namespace dp4a13

#endif
