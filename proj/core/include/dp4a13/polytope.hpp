#ifndef DP4A13_POLYTOPE_HPP
#define DP4A13_POLYTOPE_HPP

#include <vector>

#include "dp4a13/rational.hpp"

namespace dp4a13 {

enum class Rel { le, eq, ge };

struct LinearConstraint {
    std::vector<Rat> coeff; // length = dimension
    Rel rel = Rel::le;
    Rat rhs;
};

// Rational H-polytope; variables are nonnegative by default.
struct RationalPolytope {
    int dim = 0;
    std::vector<LinearConstraint> constraints;
    bool nonneg = true;
};

// Exact Lebesgue volume in R^dim: vertices are enumerated as intersections
// of dim-subsets of the constraint hyperplanes, then the hull is cut into
// simplices by recursing over facets from the lexicographically smallest
// vertex. Degenerate (lower-dimensional or empty) input yields 0; an
// unbounded recession cone raises unbounded_polytope.
Rat polytope_volume(const RationalPolytope& poly);

} // namespace dp4a13

#endif
