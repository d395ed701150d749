#include "dp4a13/boundary.hpp"

#include <algorithm>

#include "dp4a13/errors.hpp"

namespace dp4a13 {

namespace {

CurveSet mask(std::initializer_list<int> js) {
    CurveSet m = 0;
    for (int j : js) m |= 1u << (j - 1);
    return m;
}

const std::vector<BoundaryCase>& table() {
    // Faces named A1..A6 in the dual graph: A1={E3,E4}, A2={E4,E6},
    // A3={E5,E6}, A4={E7,E5}, A5={E2,E3}, A6={E1,E3}.
    static const std::vector<BoundaryCase> t = {
        {1, mask({7}), {{7}}},
        {2, mask({3, 4, 6}), {{3, 4}, {4, 6}}},
        {3, mask({3, 4, 6, 7}), {{3, 4}, {4, 6}}},
        {4, mask({3, 4, 5, 6, 7}), {{3, 4}, {4, 6}, {5, 6}, {7, 5}}},
        {5, mask({2, 3, 4, 6}), {{3, 4}, {4, 6}, {2, 3}}},
        {6, mask({1, 3, 4, 6}), {{3, 4}, {4, 6}, {1, 3}}},
    };
    return t;
}

} // namespace

const BoundaryCase& boundary_case(int i) {
    if (i < 1 || i > 6) fail(Errc::bad_argument, "boundary case index must be 1..6");
    return table()[static_cast<size_t>(i - 1)];
}

} // namespace dp4a13
