#include "dp4a13/picard.hpp"

#include "dp4a13/errors.hpp"

namespace dp4a13 {

namespace {

// Degrees of the Cox generators eta1..eta9 in the basis l0..l5.
constexpr std::array<std::array<i64, 6>, 9> kGenerators = {{
    {0, 0, 0, 0, 0, 1},    // E1 = l5
    {0, 0, 0, 0, 1, 0},    // E2 = l4
    {1, -1, 0, 0, -1, -1}, // E3 = l0-l1-l4-l5
    {0, 1, -1, 0, 0, 0},   // E4 = l1-l2
    {0, 0, 0, 1, 0, 0},    // E5 = l3
    {0, 0, 1, -1, 0, 0},   // E6 = l2-l3
    {1, -1, -1, -1, 0, 0}, // E7 = l0-l1-l2-l3
    {1, 0, 0, 0, -1, 0},   // E8 = l0-l4
    {1, 0, 0, 0, 0, -1},   // E9 = l0-l5
}};

const std::array<DivisorClass, 9>& generator_classes() {
    static const std::array<DivisorClass, 9> tbl = [] {
        std::array<DivisorClass, 9> t{};
        for (int j = 0; j < 9; ++j) t[j].c = kGenerators[j];
        return t;
    }();
    return tbl;
}

} // namespace

i64 intersect(const DivisorClass& a, const DivisorClass& b) {
    i64 s = a.c[0] * b.c[0];
    for (int k = 1; k < 6; ++k) s -= a.c[k] * b.c[k];
    return s;
}

const DivisorClass& curve_class(int j) {
    if (j < 1 || j > 9) fail(Errc::bad_argument, "curve index out of range");
    return generator_classes()[j - 1];
}

int curve_type(int j) {
    if (j < 1 || j > 7) fail(Errc::bad_argument, "negative-curve index out of range");
    return (j == 1 || j == 2 || j == 5) ? -1 : -2;
}

DivisorClass anticanonical() {
    return DivisorClass{{3, -1, -1, -1, -1, -1}};
}

std::string set_str(CurveSet s) {
    std::string out = "{";
    bool first = true;
    for (int j = 1; j <= 7; ++j)
        if (set_contains(s, j)) {
            if (!first) out += ",";
            out += "E" + std::to_string(j);
            first = false;
        }
    return out + "}";
}

DivisorClass boundary_class(CurveSet d) {
    DivisorClass s{};
    for (int j = 1; j <= 7; ++j)
        if (set_contains(d, j)) s = s + curve_class(j);
    return s;
}

DivisorClass log_anticanonical(CurveSet d) {
    return anticanonical() - boundary_class(d);
}

bool is_nef(const DivisorClass& L) {
    for (int j = 1; j <= 7; ++j)
        if (intersect(L, curve_class(j)) < 0) return false;
    return true;
}

bool is_big_nef(const DivisorClass& L) {
    return is_nef(L) && intersect(L, L) > 0;
}

bool nef_criterion(CurveSet d) {
    for (int j = 1; j <= 7; ++j) {
        i64 met = 0; // total intersection of Ej with the components of D other than Ej
        for (int k = 1; k <= 7; ++k)
            if (k != j && set_contains(d, k)) met += intersect(curve_class(k), curve_class(j));
        if (met > 2) return false;                                      // (iii)
        if (!set_contains(d, j)) {
            if (curve_type(j) == -2 && met > 0) return false;           // (i)
            if (met >= 2) return false;                                 // (ii)
        }
    }
    return true;
}

int edges_within(CurveSet d) {
    int e = 0;
    for (int j = 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k)
            if (set_contains(d, j) && set_contains(d, k) &&
                intersect(curve_class(j), curve_class(k)) > 0)
                ++e;
    return e;
}

i64 self_intersection_via_graph(CurveSet d) {
    int v = set_size(d);
    int e = edges_within(d);
    int n1 = 0;
    for (int j = 1; j <= 7; ++j)
        if (set_contains(d, j) && curve_type(j) == -1) ++n1;
    return 4 + 2 * (i64(e) - v) - n1;
}

std::vector<CurveSet> classify_boundaries() {
    std::vector<CurveSet> out;
    for (CurveSet d = 0; d < (1u << 7); ++d)
        if (is_big_nef(log_anticanonical(d))) out.push_back(d);
    return out;
}

} // namespace dp4a13
