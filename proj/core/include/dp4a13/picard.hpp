#ifndef DP4A13_PICARD_HPP
#define DP4A13_PICARD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dp4a13/arith.hpp"

namespace dp4a13 {

// Class in Pic of the minimal desingularization, written in the standard
// basis l0,...,l5 coming from the presentation as a blow-up of P^2.
// Intersection form: l0^2 = 1, li^2 = -1 (i >= 1), li.lj = 0.
struct DivisorClass {
    std::array<i64, 6> c{};

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
        for (int k = 0; k < 6; ++k) a.c[k] += b.c[k];
        return a;
    }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
        for (int k = 0; k < 6; ++k) a.c[k] -= b.c[k];
        return a;
    }
    friend DivisorClass operator*(i64 s, DivisorClass a) {
        for (int k = 0; k < 6; ++k) a.c[k] *= s;
        return a;
    }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

i64 intersect(const DivisorClass& a, const DivisorClass& b);

// Classes of the nine Cox-ring generators E1..E9 (1-based index).
// E1, E2, E5 are (-1)-curves, E3, E4, E6, E7 are (-2)-curves; E8, E9 are
// the two extra generators with self-intersection 0.
const DivisorClass& curve_class(int j);

// Self-intersection tag of a negative curve, j in 1..7: -1 or -2.
int curve_type(int j);

DivisorClass anticanonical();

// Subsets of the seven negative curves E1..E7 as bitmasks (bit j-1 <-> Ej).
using CurveSet = std::uint32_t;

inline bool set_contains(CurveSet s, int j) { return (s >> (j - 1)) & 1u; }
inline int set_size(CurveSet s) { return __builtin_popcount(s); }
std::string set_str(CurveSet s); // "{}", "{E3,E4,E6}", ...

DivisorClass boundary_class(CurveSet d);          // sum of [Ej], j in d
DivisorClass log_anticanonical(CurveSet d);       // -K - boundary_class(d)

bool is_nef(const DivisorClass& L);
bool is_big_nef(const DivisorClass& L);

// Combinatorial nef test for -K - D, D a reduced union of negative curves:
//  (i)  a (-2)-curve met by D must lie in D,
//  (ii) a negative curve meeting D with total multiplicity >= 2 must lie in D,
//  (iii) no negative curve meets the rest of D with multiplicity > 2.
bool nef_criterion(CurveSet d);

// (-K - D)^2 from the dual graph: 4 + 2(e - v) - N1 with v = |D|, e the
// number of graph edges inside D, N1 the number of (-1)-curves in D.
i64 self_intersection_via_graph(CurveSet d);

// Number of dual-graph edges with both endpoints in d (within E1..E7).
int edges_within(CurveSet d);

// All D subsets of {E1..E7} with -K - D big and nef, sorted by mask.
std::vector<CurveSet> classify_boundaries();

} // namespace dp4a13

#endif
