#pragma once

// Exact rational convex polytopes in dimension <= 4, held in V-representation.
//
// Facets are found by enumerating affinely independent point subsets; a
// quickhull-style filter keeps the enumerated subset small. Lower-dimensional
// bodies are handled in an affine frame obtained by projecting onto pivot
// coordinates, which is a bijection on the affine hull.

#include <mixmul/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mixmul {

class RationalPoint {
public:
    RationalPoint() = default;
    explicit RationalPoint(std::size_t dim) : coords_(dim) {}
    explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    RationalPoint(std::initializer_list<Rational> coords) : coords_(coords) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    const Rational &operator[](std::size_t i) const noexcept { return coords_[i]; }
    Rational &operator[](std::size_t i) noexcept { return coords_[i]; }
    const std::vector<Rational> &coords() const noexcept { return coords_; }

    friend bool operator==(const RationalPoint &a, const RationalPoint &b) { return a.coords_ == b.coords_; }
    friend bool operator<(const RationalPoint &a, const RationalPoint &b)
    {
        return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
    }

    friend RationalPoint operator+(const RationalPoint &a, const RationalPoint &b)
    {
        RationalPoint out = a;
        for (std::size_t i = 0; i < a.dim(); ++i)
            out.coords_[i] += b.coords_[i];
        return out;
    }
    friend RationalPoint operator-(const RationalPoint &a, const RationalPoint &b)
    {
        RationalPoint out = a;
        for (std::size_t i = 0; i < a.dim(); ++i)
            out.coords_[i] -= b.coords_[i];
        return out;
    }
    friend RationalPoint operator*(const Rational &k, const RationalPoint &a)
    {
        RationalPoint out = a;
        for (auto &c : out.coords_)
            c *= k;
        return out;
    }

private:
    std::vector<Rational> coords_;
};

inline std::ostream &operator<<(std::ostream &os, const RationalPoint &p)
{
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i)
        os << (i ? "," : "") << to_string(p[i]);
    return os << ')';
}

// Region normal . x <= bound.
struct Halfspace {
    std::vector<Rational> normal;
    Rational bound;

    Rational evaluate(const RationalPoint &x) const
    {
        Rational s = 0;
        for (std::size_t i = 0; i < normal.size(); ++i)
            s += normal[i] * x[i];
        return s;
    }
    bool contains(const RationalPoint &x) const { return evaluate(x) <= bound; }

    // {x : x_1 + ... + x_d <= bound}
    static Halfspace total_degree_at_most(std::size_t dim, const Rational &bound)
    {
        return Halfspace{std::vector<Rational>(dim, Rational(1)), bound};
    }
};

class RationalPolytope;
RationalPolytope hull(std::vector<RationalPoint> points, std::size_t dim);

// Convex hull of finitely many rational points; the vertex list is
// irredundant and sorted lexicographically. May be empty.
class RationalPolytope {
public:
    RationalPolytope() = default;
    explicit RationalPolytope(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<RationalPoint> &vertices() const noexcept { return vertices_; }
    bool empty() const noexcept { return vertices_.empty(); }

    friend bool operator==(const RationalPolytope &a, const RationalPolytope &b)
    {
        return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
    }

private:
    friend RationalPolytope hull(std::vector<RationalPoint> points, std::size_t dim);

    std::size_t dim_ = 0;
    std::vector<RationalPoint> vertices_;
};

namespace detail {

using Vec = std::vector<Rational>;

inline Rational dot(const Vec &a, const Vec &b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(std::vector<Vec> &rows)
{
    std::vector<std::size_t> pivots;
    if (rows.empty())
        return pivots;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        const Rational inv = 1 / rows[r][c];
        for (auto &x : rows[r])
            x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const Rational f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

inline std::size_t rank_of(std::vector<Vec> rows) { return row_reduce(rows).size(); }

inline Rational determinant(std::vector<Vec> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0)
                continue;
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

// Affine hull of a point set, parameterized by the pivot coordinates.
struct AffineFrame {
    Vec origin;
    std::vector<Vec> basis; // RREF rows
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }

    Vec project(const Vec &x) const
    {
        Vec out(pivots.size());
        for (std::size_t j = 0; j < pivots.size(); ++j)
            out[j] = x[pivots[j]] - origin[pivots[j]];
        return out;
    }

    Vec lift(const Vec &coords) const
    {
        Vec out = origin;
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] += coords[j] * basis[j][i];
        return out;
    }

    bool spans(const Vec &x) const { return lift(project(x)) == x; }
};

inline AffineFrame affine_frame(std::span<const Vec> pts)
{
    AffineFrame f;
    f.origin = pts.front();
    std::vector<Vec> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Vec r = pts[i];
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] -= f.origin[j];
        rows.push_back(std::move(r));
    }
    f.pivots = row_reduce(rows);
    f.basis = std::move(rows);
    return f;
}

// Supporting hyperplane normal . x <= offset with the points lying on it.
struct Facet {
    Vec normal;
    Rational offset;
    std::vector<std::size_t> members;
};

using IVec = std::vector<Integer>;

inline Integer idot(const IVec &a, const IVec &b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Cofactor expansion; only used for minors of size <= 3.
inline Integer int_determinant(const std::vector<IVec> &m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    if (n == 2)
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Integer det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<IVec> minor;
        for (std::size_t r = 1; r < n; ++r) {
            IVec row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        const Integer term = m[0][c] * int_determinant(minor);
        det += (c % 2 == 0) ? term : Integer(-term);
    }
    return det;
}

// Points scaled by the common denominator of all coordinates.
inline std::vector<IVec> integerize(std::span<const Vec> pts, Integer &scale)
{
    scale = 1;
    for (const auto &p : pts)
        for (const auto &c : p)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    std::vector<IVec> out;
    out.reserve(pts.size());
    for (const auto &p : pts) {
        IVec v;
        v.reserve(p.size());
        for (const auto &c : p)
            v.push_back(c.get_num() * (scale / c.get_den()));
        out.push_back(std::move(v));
    }
    return out;
}

// Primitive integer normal of the hyperplane through k points of Z^k
// (generalized cross product), or nothing if they are affinely dependent.
inline std::optional<IVec> hyperplane_normal(std::span<const IVec> pts, std::span<const std::size_t> idx)
{
    const std::size_t k = pts.front().size();
    std::vector<IVec> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        IVec r = pts[idx[i]];
        for (std::size_t j = 0; j < k; ++j)
            r[j] -= pts[idx[0]][j];
        diffs.push_back(std::move(r));
    }
    IVec n(k);
    Integer g = 0;
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<IVec> minor;
        for (const auto &r : diffs) {
            IVec m;
            for (std::size_t j = 0; j < k; ++j)
                if (j != col)
                    m.push_back(r[j]);
            minor.push_back(std::move(m));
        }
        n[col] = int_determinant(minor);
        if (col % 2 == 1)
            n[col] = -n[col];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[col].get_mpz_t());
    }
    if (g == 0)
        return std::nullopt;
    for (auto &x : n)
        x /= g;
    return n;
}

struct IntFacet {
    IVec normal;
    Integer offset;
};

// Facets of conv(subset) for a full-dimensional subset of Z^k, k >= 3.
inline std::vector<IntFacet> enumerate_facets(std::span<const IVec> pts, const std::vector<std::size_t> &subset)
{
    const std::size_t k = pts.front().size();
    std::vector<IntFacet> out;
    std::vector<std::size_t> choose(k);
    const std::size_t n = subset.size();
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i)
        pos[i] = i;
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            choose[i] = subset[pos[i]];
        if (auto normal = hyperplane_normal(pts, choose)) {
            Integer offset = idot(*normal, pts[choose[0]]);
            bool above = false, below = false;
            for (auto s : subset) {
                const int sign = sgn(idot(*normal, pts[s]) - offset);
                above = above || sign > 0;
                below = below || sign < 0;
                if (above && below)
                    break;
            }
            if (!(above && below)) {
                if (above) {
                    for (auto &x : *normal)
                        x = -x;
                    offset = -offset;
                }
                const bool seen = std::any_of(out.begin(), out.end(), [&](const IntFacet &f) {
                    return f.offset == offset && f.normal == *normal;
                });
                if (!seen)
                    out.push_back(IntFacet{std::move(*normal), std::move(offset)});
            }
        }
        // next k-combination of positions
        std::size_t i = k;
        while (i > 0 && pos[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++pos[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pos[j] = pos[j - 1] + 1;
    }
    return out;
}

inline Rational cross2(const Vec &o, const Vec &a, const Vec &b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline void attach_members(std::span<const Vec> pts, std::vector<Facet> &facets)
{
    for (auto &f : facets) {
        f.members.clear();
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(f.normal, pts[i]) == f.offset)
                f.members.push_back(i);
    }
}

// Facets of conv(pts), pts full-dimensional in R^k and pairwise distinct.
inline std::vector<Facet> full_facets(std::span<const Vec> pts)
{
    const std::size_t k = pts.front().size();
    std::vector<Facet> facets;
    if (k == 1) {
        auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [](const Vec &a, const Vec &b) { return a[0] < b[0]; });
        facets.push_back(Facet{{Rational(-1)}, -(*lo)[0], {}});
        facets.push_back(Facet{{Rational(1)}, (*hi)[0], {}});
        attach_members(pts, facets);
        return facets;
    }
    if (k == 2) {
        std::vector<std::size_t> order(pts.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pts[a][0] != pts[b][0] ? pts[a][0] < pts[b][0] : pts[a][1] < pts[b][1];
        });
        std::vector<std::size_t> chain(2 * order.size());
        std::size_t m = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            while (m >= 2 && cross2(pts[chain[m - 2]], pts[chain[m - 1]], pts[order[i]]) <= 0)
                --m;
            chain[m++] = order[i];
        }
        for (std::size_t i = order.size() - 1, t = m + 1; i-- > 0;) {
            while (m >= t && cross2(pts[chain[m - 2]], pts[chain[m - 1]], pts[order[i]]) <= 0)
                --m;
            chain[m++] = order[i];
        }
        chain.resize(m - 1); // counter-clockwise, no repeats
        for (std::size_t i = 0; i < chain.size(); ++i) {
            const Vec &u = pts[chain[i]];
            const Vec &w = pts[chain[(i + 1) % chain.size()]];
            Vec normal{w[1] - u[1], u[0] - w[0]};
            const Rational offset = dot(normal, u);
            facets.push_back(Facet{std::move(normal), offset, {}});
        }
        attach_members(pts, facets);
        return facets;
    }

    // Seed with coordinate extremes, then grow until nothing lies outside.
    Integer scale;
    const auto ipts = integerize(pts, scale);
    std::set<std::size_t> seed;
    for (std::size_t axis = 0; axis < k; ++axis) {
        auto [lo, hi] = std::minmax_element(ipts.begin(), ipts.end(), [axis](const IVec &a, const IVec &b) {
            return a[axis] != b[axis] ? a[axis] < b[axis] : a < b;
        });
        seed.insert(static_cast<std::size_t>(lo - ipts.begin()));
        seed.insert(static_cast<std::size_t>(hi - ipts.begin()));
    }
    auto affine_rank = [&](const std::set<std::size_t> &s) {
        std::vector<Vec> rows;
        const Vec &o = pts[*s.begin()];
        for (auto i : s) {
            Vec r = pts[i];
            for (std::size_t j = 0; j < k; ++j)
                r[j] -= o[j];
            rows.push_back(std::move(r));
        }
        return rank_of(std::move(rows));
    };
    for (std::size_t i = 0; i < pts.size() && affine_rank(seed) < k; ++i) {
        auto trial = seed;
        trial.insert(i);
        if (affine_rank(trial) > affine_rank(seed))
            seed = std::move(trial);
    }
    std::vector<std::size_t> subset(seed.begin(), seed.end());
    std::vector<IntFacet> found;
    while (true) {
        found = enumerate_facets(ipts, subset);
        std::set<std::size_t> additions;
        for (const auto &f : found) {
            std::optional<std::size_t> far;
            Integer best = 0;
            for (std::size_t i = 0; i < ipts.size(); ++i) {
                const Integer v = idot(f.normal, ipts[i]) - f.offset;
                if (v > best) {
                    best = v;
                    far = i;
                }
            }
            if (far)
                additions.insert(*far);
        }
        if (additions.empty())
            break;
        for (auto i : additions)
            if (std::find(subset.begin(), subset.end(), i) == subset.end())
                subset.push_back(i);
        std::sort(subset.begin(), subset.end());
    }
    for (auto &f : found) {
        Facet out{Vec(k), make_rational(f.offset, scale), {}};
        for (std::size_t j = 0; j < k; ++j)
            out.normal[j] = Rational(f.normal[j]);
        for (std::size_t i = 0; i < ipts.size(); ++i)
            if (idot(f.normal, ipts[i]) == f.offset)
                out.members.push_back(i);
        facets.push_back(std::move(out));
    }
    return facets;
}

// Indices of extreme points among pts (full-dimensional in R^k).
inline std::vector<std::size_t> extreme_indices(std::span<const Vec> pts, const std::vector<Facet> &facets)
{
    const std::size_t k = pts.front().size();
    std::vector<std::vector<Vec>> incident(pts.size());
    for (const auto &f : facets)
        for (auto i : f.members)
            incident[i].push_back(f.normal);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (incident[i].size() >= k && rank_of(incident[i]) == k)
            out.push_back(i);
    return out;
}

inline std::vector<Vec> to_vecs(const std::vector<RationalPoint> &pts)
{
    std::vector<Vec> out;
    out.reserve(pts.size());
    for (const auto &p : pts)
        out.push_back(p.coords());
    return out;
}

// Projection of a facet's members onto R^{k-1}, dropping a coordinate along
// which the facet normal is nonzero.
inline std::vector<Vec> facet_chart(std::span<const Vec> pts, const Facet &f)
{
    std::size_t drop = 0;
    while (f.normal[drop] == 0)
        ++drop;
    std::vector<Vec> out;
    for (auto i : f.members) {
        Vec v;
        for (std::size_t j = 0; j < pts[i].size(); ++j)
            if (j != drop)
                v.push_back(pts[i][j]);
        out.push_back(std::move(v));
    }
    return out;
}

// Triangulation of conv(pts) (full-dimensional, distinct points) by coning
// from the lexicographically least vertex over the facets avoiding it.
// Returns simplices as index lists into pts.
inline std::vector<std::vector<std::size_t>> triangulate(std::span<const Vec> pts)
{
    const std::size_t k = pts.front().size();
    if (k == 0 || pts.size() == 1)
        return {{0}};
    const auto facets = full_facets(pts);
    const auto apex = static_cast<std::size_t>(std::min_element(pts.begin(), pts.end()) - pts.begin());
    std::vector<std::vector<std::size_t>> out;
    for (const auto &f : facets) {
        if (std::find(f.members.begin(), f.members.end(), apex) != f.members.end())
            continue;
        const auto chart = facet_chart(pts, f);
        std::vector<std::size_t> keep;
        std::vector<Vec> verts;
        if (k - 1 == 0) {
            keep = {0};
            verts = chart;
        } else {
            const auto sub_facets = full_facets(chart);
            keep = extreme_indices(chart, sub_facets);
            for (auto i : keep)
                verts.push_back(chart[i]);
        }
        for (auto s : triangulate(verts)) {
            std::vector<std::size_t> simplex;
            for (auto j : s)
                simplex.push_back(f.members[keep[j]]);
            simplex.push_back(apex);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

// Affine frame, projected vertex coordinates and facets of a polytope.
struct HDescription {
    AffineFrame frame;
    std::vector<Vec> chart;
    std::vector<Facet> facets;
};

inline HDescription describe(const RationalPolytope &P)
{
    HDescription h;
    const auto pts = to_vecs(P.vertices());
    h.frame = affine_frame(pts);
    for (const auto &p : pts)
        h.chart.push_back(h.frame.project(p));
    if (h.frame.rank() > 0)
        h.facets = full_facets(h.chart);
    return h;
}

inline bool described_contains(const HDescription &h, const Vec &q)
{
    if (!h.frame.spans(q))
        return false;
    if (h.frame.rank() == 0)
        return true;
    const Vec c = h.frame.project(q);
    return std::all_of(h.facets.begin(), h.facets.end(), [&](const Facet &f) { return dot(f.normal, c) <= f.offset; });
}

} // namespace detail

// Extreme points of conv(points).
inline RationalPolytope hull(std::vector<RationalPoint> points, std::size_t dim)
{
    for (const auto &p : points)
        if (p.dim() != dim)
            throw Error("dimension mismatch: " + std::to_string(dim) + " vs " + std::to_string(p.dim()));
    RationalPolytope P(dim);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 1) {
        P.vertices_ = std::move(points);
        return P;
    }
    const auto pts = detail::to_vecs(points);
    const auto frame = detail::affine_frame(pts);
    if (frame.rank() == 0) {
        P.vertices_ = {points.front()};
        return P;
    }
    std::vector<detail::Vec> chart;
    for (const auto &p : pts)
        chart.push_back(frame.project(p));
    const auto facets = detail::full_facets(chart);
    for (auto i : detail::extreme_indices(chart, facets))
        P.vertices_.push_back(points[i]);
    std::sort(P.vertices_.begin(), P.vertices_.end());
    return P;
}

// Lebesgue volume; zero for empty or lower-dimensional bodies.
inline Rational volume(const RationalPolytope &P)
{
    const std::size_t d = P.dim();
    if (P.vertices().size() <= d)
        return 0;
    const auto pts = detail::to_vecs(P.vertices());
    if (detail::affine_frame(pts).rank() < d)
        return 0;
    Rational total = 0;
    for (const auto &simplex : detail::triangulate(pts)) {
        std::vector<detail::Vec> m;
        const auto &apex = pts[simplex.back()];
        for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
            detail::Vec r = pts[simplex[i]];
            for (std::size_t j = 0; j < d; ++j)
                r[j] -= apex[j];
            m.push_back(std::move(r));
        }
        total += abs_of(detail::determinant(std::move(m)));
    }
    return total / Rational(factorial(static_cast<unsigned>(d)));
}

inline RationalPolytope minkowski_sum(const RationalPolytope &A, const RationalPolytope &B)
{
    if (A.dim() != B.dim())
        throw Error("dimension mismatch: " + std::to_string(A.dim()) + " vs " + std::to_string(B.dim()));
    std::vector<RationalPoint> sums;
    sums.reserve(A.vertices().size() * B.vertices().size());
    for (const auto &a : A.vertices())
        for (const auto &b : B.vertices())
            sums.push_back(a + b);
    return hull(std::move(sums), A.dim());
}

// P intersected with H. Vertices of the result are the vertices of P inside H
// together with the crossings of P's edges with the boundary of H.
inline RationalPolytope clip(const RationalPolytope &P, const Halfspace &H)
{
    if (P.empty())
        return P;
    const auto h = detail::describe(P);
    const auto &V = P.vertices();
    std::vector<RationalPoint> keep;
    std::vector<Rational> value;
    for (const auto &v : V) {
        value.push_back(H.evaluate(v));
        if (value.back() <= H.bound)
            keep.push_back(v);
    }
    const std::size_t r = h.frame.rank();
    for (std::size_t a = 0; a < V.size(); ++a)
        for (std::size_t b = a + 1; b < V.size(); ++b) {
            const bool crosses = (value[a] < H.bound && value[b] > H.bound) || (value[a] > H.bound && value[b] < H.bound);
            if (!crosses)
                continue;
            std::vector<detail::Vec> shared;
            for (const auto &f : h.facets) {
                const bool has_a = std::find(f.members.begin(), f.members.end(), a) != f.members.end();
                const bool has_b = std::find(f.members.begin(), f.members.end(), b) != f.members.end();
                if (has_a && has_b)
                    shared.push_back(f.normal);
            }
            const std::size_t rank = shared.empty() ? 0 : detail::rank_of(shared);
            if (rank + 1 != r)
                continue; // not an edge
            const Rational t = (H.bound - value[a]) / (value[b] - value[a]);
            keep.push_back(V[a] + t * (V[b] - V[a]));
        }
    return hull(std::move(keep), P.dim());
}

inline bool contains_point(const RationalPolytope &P, const RationalPoint &q)
{
    if (P.dim() != q.dim())
        throw Error("dimension mismatch: " + std::to_string(P.dim()) + " vs " + std::to_string(q.dim()));
    if (P.empty())
        return false;
    return detail::described_contains(detail::describe(P), q.coords());
}

// B is a subset of A.
inline bool contains_body(const RationalPolytope &A, const RationalPolytope &B)
{
    if (A.dim() != B.dim())
        throw Error("dimension mismatch: " + std::to_string(A.dim()) + " vs " + std::to_string(B.dim()));
    if (B.empty())
        return true;
    if (A.empty())
        return false;
    const auto h = detail::describe(A);
    return std::all_of(B.vertices().begin(), B.vertices().end(),
                       [&](const RationalPoint &v) { return detail::described_contains(h, v.coords()); });
}

// The simplex {x >= 0, x_1 + ... + x_d <= c}.
inline RationalPolytope simplex(std::size_t dim, const Rational &c)
{
    std::vector<RationalPoint> pts{RationalPoint(std::vector<Rational>(dim, Rational(0)))};
    for (std::size_t i = 0; i < dim; ++i) {
        RationalPoint p(std::vector<Rational>(dim, Rational(0)));
        p[i] = c;
        pts.push_back(std::move(p));
    }
    return hull(std::move(pts), dim);
}

// Axis-aligned cube [-r, r]^d.
inline RationalPolytope cube(std::size_t dim, const Rational &r)
{
    std::vector<RationalPoint> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        RationalPoint p(dim);
        for (std::size_t i = 0; i < dim; ++i)
            p[i] = (mask >> i & 1) ? r : Rational(-r);
        pts.push_back(std::move(p));
    }
    return hull(std::move(pts), dim);
}

// Every point of A lies within sup-norm distance tol of B.
inline bool within_linf(const RationalPolytope &A, const RationalPolytope &B, const Rational &tol)
{
    if (A.empty())
        return true;
    if (B.empty())
        return false;
    return contains_body(minkowski_sum(B, cube(B.dim(), tol)), A);
}

inline RationalPolytope scale(const RationalPolytope &P, const Rational &k)
{
    std::vector<RationalPoint> pts;
    for (const auto &v : P.vertices())
        pts.push_back(k * v);
    return hull(std::move(pts), P.dim());
}

inline RationalPolytope translate(const RationalPolytope &P, const RationalPoint &t)
{
    std::vector<RationalPoint> pts;
    for (const auto &v : P.vertices())
        pts.push_back(v + t);
    return hull(std::move(pts), P.dim());
}

} // namespace mixmul
