#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp4a13/boundary.hpp"
#include "dp4a13/picard.hpp"

using namespace dp4a13;

namespace {

CurveSet mask(std::initializer_list<int> js) {
    CurveSet m = 0;
    for (int j : js) m |= 1u << (j - 1);
    return m;
}

// dual graph of E1..E9: the eleven intersecting pairs
const std::vector<std::pair<int, int>> kEdges = {
    {8, 9}, {7, 8}, {7, 9}, {1, 9}, {2, 8}, {1, 3},
    {2, 3}, {5, 7}, {5, 6}, {4, 6}, {3, 4}};

bool is_edge(int i, int j) {
    for (auto [a, b] : kEdges)
        if ((a == i && b == j) || (a == j && b == i)) return true;
    return false;
}

} // namespace

TEST_CASE("intersection form") {
    DivisorClass l0{{1, 0, 0, 0, 0, 0}};
    CHECK(intersect(l0, l0) == 1);
    CHECK(intersect(curve_class(3), curve_class(4)) == 1);
    CHECK(intersect(anticanonical(), anticanonical()) == 4);
    // symmetry of the pairing on all generator pairs
    for (int i = 1; i <= 9; ++i)
        for (int j = 1; j <= 9; ++j)
            CHECK(intersect(curve_class(i), curve_class(j)) ==
                  intersect(curve_class(j), curve_class(i)));
}

TEST_CASE("negative curve table") {
    for (int j = 1; j <= 7; ++j)
        CHECK(intersect(curve_class(j), curve_class(j)) == curve_type(j));
    CHECK(intersect(curve_class(8), curve_class(8)) == 0);
    CHECK(intersect(curve_class(9), curve_class(9)) == 0);

    // Gram matrix reproduces the dual graph exactly
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j)
            CHECK(intersect(curve_class(i), curve_class(j)) == (is_edge(i, j) ? 1 : 0));

    // E1 + E2 + E3 - 2 E5 - E6 - E7 is principal
    DivisorClass rel = curve_class(1) + curve_class(2) + curve_class(3) -
                       2 * curve_class(5) - curve_class(6) - curve_class(7);
    CHECK(rel == DivisorClass{});
}

TEST_CASE("anticanonical pairings") {
    CHECK(intersect(anticanonical(), curve_class(7)) == 0);
    CHECK(intersect(anticanonical(), curve_class(5)) == 1);
    for (int j = 1; j <= 7; ++j)
        CHECK(intersect(anticanonical(), curve_class(j)) == (curve_type(j) == -1 ? 1 : 0));
}

TEST_CASE("is_nef / is_big_nef") {
    CHECK(is_nef(anticanonical()));
    CHECK(is_big_nef(anticanonical()));

    CurveSet all_minus_two = mask({3, 4, 6, 7});
    CHECK(!is_nef(log_anticanonical(all_minus_two)));
    CHECK(!is_big_nef(log_anticanonical(all_minus_two)));
    CHECK(intersect(log_anticanonical(all_minus_two), curve_class(5)) == -1);

    CHECK(is_nef(log_anticanonical(mask({7}))));
    CHECK(is_big_nef(log_anticanonical(mask({7}))));
}

TEST_CASE("nef_criterion matches the intersection test on all 128 subsets") {
    for (CurveSet d = 0; d < (1u << 7); ++d)
        CHECK(nef_criterion(d) == is_nef(log_anticanonical(d)));
}

TEST_CASE("nef_criterion spot checks") {
    CHECK(nef_criterion(mask({7})));
    CHECK(!nef_criterion(mask({3}))); // E4 is a (-2)-curve meeting E3
    CHECK(nef_criterion(0));
}

TEST_CASE("graph self-intersection matches the bilinear form on all subsets") {
    for (CurveSet d = 0; d < (1u << 7); ++d) {
        DivisorClass L = log_anticanonical(d);
        CHECK(self_intersection_via_graph(d) == intersect(L, L));
    }
    CHECK(self_intersection_via_graph(mask({7})) == 2);
    CHECK(self_intersection_via_graph(mask({3, 4, 6})) == 2);
    CHECK(self_intersection_via_graph(0) == 4);
}

TEST_CASE("boundary case data") {
    const int sizes[7] = {0, 1, 3, 4, 5, 4, 4};
    const size_t n_faces[7] = {0, 1, 2, 2, 4, 3, 3};
    for (int i = 1; i <= 6; ++i) {
        const auto& bc = dp4a13::boundary_case(i);
        CHECK(bc.size() == sizes[i]);
        CHECK(bc.faces.size() == n_faces[i]);
        CHECK(bc.clemens_dim() == (i == 1 ? 0 : 1));
        for (const auto& face : bc.faces) {
            // faces are cliques of boundary components
            for (int j : face) CHECK(set_contains(bc.components, j));
            for (size_t a = 0; a < face.size(); ++a)
                for (size_t b = a + 1; b < face.size(); ++b)
                    CHECK(intersect(curve_class(face[a]), curve_class(face[b])) == 1);
        }
    }
    CHECK_THROWS_AS(dp4a13::boundary_case(0), dp4a13::DomainError);
    CHECK_THROWS_AS(dp4a13::boundary_case(7), dp4a13::DomainError);
}

TEST_CASE("classification of admissible boundaries") {
    const std::vector<CurveSet> expected = {
        0,
        mask({7}),
        mask({3, 4, 6}),
        mask({3, 4, 5, 6, 7}),
        mask({2, 3, 4, 6}),
        mask({1, 3, 4, 6}),
    };
    auto sorted_expected = expected;
    std::sort(sorted_expected.begin(), sorted_expected.end());
    CHECK(classify_boundaries() == sorted_expected);
}
