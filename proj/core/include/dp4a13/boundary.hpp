#ifndef DP4A13_BOUNDARY_HPP
#define DP4A13_BOUNDARY_HPP

#include <vector>

#include "dp4a13/picard.hpp"

namespace dp4a13 {

// One of the six admissible boundaries on the desingularized surface,
// together with the combinatorial data the counting and constants code
// keys on. Cases 1-3 remove the preimages of the two singular points
// (A1, A3, and both), cases 4-6 remove the divisors above the three lines.
struct BoundaryCase {
    int index;                           // 1..6
    CurveSet components;                 // components of D_i among E1..E7
    std::vector<std::vector<int>> faces; // maximal faces of the Clemens complex

    int size() const { return set_size(components); }           // #D_i
    int picard_rank_u() const { return 6 - size(); }            // rk Pic of the complement
    int clemens_dim() const {
        int m = 0;
        for (const auto& f : faces) m = std::max<int>(m, int(f.size()) - 1);
        return m;
    }
};

const BoundaryCase& boundary_case(int i);

} // namespace dp4a13

#endif
