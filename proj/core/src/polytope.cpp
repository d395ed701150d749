#include "dp4a13/polytope.hpp"

#include <algorithm>
#include <set>

#include "dp4a13/errors.hpp"
#include "linalg.hpp"

namespace dp4a13 {

namespace {

// Half-space c . t <= d.
struct Row {
    RatVec c;
    Rat d;
};

std::vector<Row> normalized_rows(const RationalPolytope& poly) {
    std::vector<Row> rows;
    for (const auto& con : poly.constraints) {
        if (static_cast<int>(con.coeff.size()) != poly.dim)
            fail(Errc::bad_argument, "constraint arity does not match polytope dimension");
        Row r{con.coeff, con.rhs};
        if (con.rel == Rel::ge || con.rel == Rel::eq) {
            Row neg;
            neg.c.reserve(con.coeff.size());
            for (const Rat& v : con.coeff) neg.c.push_back(-v);
            neg.d = -con.rhs;
            rows.push_back(neg);
        }
        if (con.rel == Rel::le || con.rel == Rel::eq) rows.push_back(r);
    }
    if (poly.nonneg)
        for (int j = 0; j < poly.dim; ++j) {
            Row r;
            r.c.assign(static_cast<size_t>(poly.dim), Rat(0));
            r.c[static_cast<size_t>(j)] = Rat(-1);
            r.d = Rat(0);
            rows.push_back(r);
        }
    return rows;
}

bool satisfies_all(const std::vector<Row>& rows, const RatVec& v) {
    for (const auto& row : rows) {
        Rat s(0);
        for (size_t j = 0; j < v.size(); ++j) s += row.c[j] * v[j];
        if (s > row.d) return false;
    }
    return true;
}

// Distinct boundary hyperplanes c . t = d, canonicalized by the first
// nonzero coefficient.
std::vector<Row> hyperplanes(const std::vector<Row>& rows) {
    std::set<std::vector<std::pair<long long, long long>>> seen;
    std::vector<Row> out;
    for (const auto& row : rows) {
        size_t lead = 0;
        while (lead < row.c.size() && row.c[lead].is_zero()) ++lead;
        if (lead == row.c.size()) continue; // trivial constraint
        Row canon = row;
        Rat scale = row.c[lead];
        for (auto& v : canon.c) v /= scale;
        canon.d /= scale;
        std::vector<std::pair<long long, long long>> key;
        for (const auto& v : canon.c) key.emplace_back(v.num(), v.den());
        key.emplace_back(canon.d.num(), canon.d.den());
        if (seen.insert(key).second) out.push_back(canon);
    }
    return out;
}

std::vector<RatVec> enumerate_vertices(int dim, const std::vector<Row>& rows,
                                       const std::vector<Row>& planes) {
    std::vector<RatVec> verts;
    const size_t m = planes.size();
    if (static_cast<int>(m) < dim) return verts;
    std::vector<size_t> pick(static_cast<size_t>(dim));
    // iterate over all dim-subsets of the hyperplanes
    std::vector<size_t> idx(static_cast<size_t>(dim));
    for (size_t j = 0; j < idx.size(); ++j) idx[j] = j;
    while (true) {
        RatMat a;
        RatVec b;
        for (size_t j : idx) {
            a.push_back(planes[j].c);
            b.push_back(planes[j].d);
        }
        if (auto x = solve_square(a, b); x && satisfies_all(rows, *x))
            verts.push_back(*x);
        // next combination
        int j = dim - 1;
        while (j >= 0 && idx[static_cast<size_t>(j)] == m - static_cast<size_t>(dim - j)) --j;
        if (j < 0) break;
        ++idx[static_cast<size_t>(j)];
        for (size_t k = static_cast<size_t>(j) + 1; k < idx.size(); ++k)
            idx[k] = idx[k - 1] + 1;
    }
    std::sort(verts.begin(), verts.end(),
              [](const RatVec& a, const RatVec& b) {
                  for (size_t j = 0; j < a.size(); ++j) {
                      if (a[j] < b[j]) return true;
                      if (b[j] < a[j]) return false;
                  }
                  return false;
              });
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

int affine_dim(const std::vector<RatVec>& pts, const std::vector<size_t>& sel) {
    if (sel.empty()) return -1;
    RatMat diffs;
    for (size_t k = 1; k < sel.size(); ++k) {
        RatVec d;
        for (size_t j = 0; j < pts[sel[0]].size(); ++j)
            d.push_back(pts[sel[k]][j] - pts[sel[0]][j]);
        diffs.push_back(std::move(d));
    }
    return diffs.empty() ? 0 : rank(diffs);
}

bool plane_active(const Row& plane, const RatVec& v) {
    Rat s(0);
    for (size_t j = 0; j < v.size(); ++j) s += plane.c[j] * v[j];
    return s == plane.d;
}

// Recursive cone triangulation from the lexicographically smallest vertex.
// `face` holds indices into `verts`, sorted; k is its affine dimension.
void triangulate(const std::vector<RatVec>& verts, const std::vector<Row>& planes,
                 const std::vector<size_t>& face, int k,
                 std::vector<std::vector<size_t>>& out) {
    if (static_cast<int>(face.size()) == k + 1) {
        out.push_back(face);
        return;
    }
    const size_t apex = face.front(); // verts are sorted lexicographically
    std::set<std::vector<size_t>> facets;
    for (const auto& plane : planes) {
        std::vector<size_t> sub;
        for (size_t v : face)
            if (plane_active(plane, verts[v])) sub.push_back(v);
        if (sub.size() == face.size() || sub.empty()) continue;
        if (affine_dim(verts, sub) == k - 1) facets.insert(sub);
    }
    for (const auto& facet : facets) {
        if (std::find(facet.begin(), facet.end(), apex) != facet.end()) continue;
        std::vector<std::vector<size_t>> sub_simplices;
        triangulate(verts, planes, facet, k - 1, sub_simplices);
        for (auto s : sub_simplices) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
}

void check_bounded(int dim, const std::vector<Row>& rows) {
    // The recession cone {c . t <= 0} is trivial iff its intersection with
    // the box [-1,1]^dim has no vertex besides the origin.
    std::vector<Row> cone;
    for (const auto& row : rows) cone.push_back({row.c, Rat(0)});
    for (int j = 0; j < dim; ++j)
        for (int s = 0; s < 2; ++s) {
            Row r;
            r.c.assign(static_cast<size_t>(dim), Rat(0));
            r.c[static_cast<size_t>(j)] = Rat(s ? 1 : -1);
            r.d = Rat(1);
            cone.push_back(r);
        }
    auto planes = hyperplanes(cone);
    for (const auto& v : enumerate_vertices(dim, cone, planes)) {
        bool zero = true;
        for (const auto& c : v)
            if (!c.is_zero()) zero = false;
        if (!zero)
            fail(Errc::unbounded_polytope, "polytope_volume: recession cone is nontrivial");
    }
}

} // namespace

Rat polytope_volume(const RationalPolytope& poly) {
    if (poly.dim < 1) fail(Errc::bad_argument, "polytope_volume: dimension must be >= 1");
    auto rows = normalized_rows(poly);
    check_bounded(poly.dim, rows);
    auto planes = hyperplanes(rows);
    auto verts = enumerate_vertices(poly.dim, rows, planes);
    if (static_cast<int>(verts.size()) < poly.dim + 1) return Rat(0);

    std::vector<size_t> all(verts.size());
    for (size_t k = 0; k < all.size(); ++k) all[k] = k;
    if (affine_dim(verts, all) < poly.dim) return Rat(0);

    std::vector<std::vector<size_t>> simplices;
    triangulate(verts, planes, all, poly.dim, simplices);

    Rat fact(1);
    for (int k = 2; k <= poly.dim; ++k) fact *= Rat(k);
    Rat vol(0);
    for (const auto& s : simplices) {
        RatMat m;
        for (size_t k = 1; k < s.size(); ++k) {
            RatVec d;
            for (size_t j = 0; j < verts[s[0]].size(); ++j)
                d.push_back(verts[s[k]][j] - verts[s[0]][j]);
            m.push_back(std::move(d));
        }
        vol += determinant(m).abs() / fact;
    }
    return vol;
}

} // namespace dp4a13
