#pragma once

// Newton polyhedra NP(I) = conv(exponents of I) + positive orthant, and the
// covolume of the bounded region between NP(I) and the coordinate planes.

#include <mixmul/monomial_ideal.hpp>
#include <mixmul/polytope.hpp>

#include <algorithm>
#include <vector>

namespace mixmul {

// Vertex set of a Newton polyhedron; the recession cone is always the orthant.
struct NewtonPolyhedron {
    std::size_t dim = 0;
    std::vector<Exponent> vertices; // sorted lexicographically

    friend bool operator==(const NewtonPolyhedron &, const NewtonPolyhedron &) = default;
};

namespace detail {

inline RationalPoint to_point(const Exponent &a)
{
    RationalPoint p(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        p[i] = Rational(static_cast<long>(a[i]));
    return p;
}

// Corners of the truncation of conv(points) + orthant by the box [0, top]^d.
inline std::vector<RationalPoint> boxed_points(const std::vector<Exponent> &points, std::size_t d, std::int64_t top)
{
    std::vector<RationalPoint> out;
    for (const auto &g : points)
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
            Exponent raised = g;
            for (std::size_t i = 0; i < d; ++i)
                if (mask >> i & 1)
                    raised[i] = top;
            out.push_back(to_point(raised));
        }
    return out;
}

inline std::int64_t box_top(const std::vector<Exponent> &points)
{
    std::int64_t top = 0;
    for (const auto &g : points)
        for (std::size_t i = 0; i < g.dim(); ++i)
            top = std::max(top, g[i]);
    return top + 1;
}

inline NewtonPolyhedron newton_vertices(std::vector<Exponent> points, std::size_t d)
{
    auto minimal = minimalize(std::move(points), d).generators();
    NewtonPolyhedron np{d, {}};
    if (minimal.size() == 1 || d == 1) {
        np.vertices = minimal;
        return np;
    }
    const std::int64_t top = box_top(minimal);
    const auto body = hull(boxed_points(minimal, d, top), d);
    for (const auto &g : minimal)
        if (std::binary_search(body.vertices().begin(), body.vertices().end(), to_point(g)))
            np.vertices.push_back(g);
    return np;
}

} // namespace detail

inline NewtonPolyhedron newton_polyhedron(const MonomialIdeal &I)
{
    return detail::newton_vertices(I.generators(), I.dim());
}

// NP(I) + NP(J); equals NP(IJ).
inline NewtonPolyhedron minkowski_sum(const NewtonPolyhedron &A, const NewtonPolyhedron &B)
{
    detail::check_dims(A.dim, B.dim);
    std::vector<Exponent> sums;
    for (const auto &a : A.vertices)
        for (const auto &b : B.vertices)
            sums.push_back(a + b);
    return detail::newton_vertices(std::move(sums), A.dim);
}

// k * NP(I); equals NP(I^k).
inline NewtonPolyhedron dilate(const NewtonPolyhedron &A, std::int64_t k)
{
    if (k < 0)
        throw Error("negative dilation");
    NewtonPolyhedron out = A;
    if (k == 0) {
        out.vertices = {Exponent(A.dim)};
        return out;
    }
    for (auto &v : out.vertices)
        for (std::size_t i = 0; i < v.dim(); ++i)
            v[i] *= k;
    return out;
}

// True when NP meets every coordinate axis, i.e. the covolume is finite.
inline bool meets_every_axis(const NewtonPolyhedron &np)
{
    for (std::size_t i = 0; i < np.dim; ++i) {
        const bool found = std::any_of(np.vertices.begin(), np.vertices.end(), [&](const Exponent &v) {
            for (std::size_t j = 0; j < np.dim; ++j)
                if (j != i && v[j] != 0)
                    return false;
            return true;
        });
        if (!found)
            return false;
    }
    return true;
}

// Volume of {x >= 0} \ NP.
inline Rational covolume(const NewtonPolyhedron &np)
{
    if (!meets_every_axis(np))
        throw Error("infinite colength");
    const std::size_t d = np.dim;
    if (np.vertices.size() == 1 && np.vertices.front().degree() == 0)
        return 0;
    if (d == 1)
        return Rational(static_cast<long>(np.vertices.front()[0]));
    if (d == 2) {
        // Vertices sorted by x have strictly decreasing y: sum the trapezoids.
        Rational area = 0;
        const auto &v = np.vertices;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            area += make_rational(static_cast<long>((v[i + 1][0] - v[i][0]) * (v[i][1] + v[i + 1][1])), 2);
        return area;
    }
    const std::int64_t top = detail::box_top(np.vertices);
    const Rational box = pow_of(Rational(static_cast<long>(top)), static_cast<unsigned>(d));
    return box - volume(hull(detail::boxed_points(np.vertices, d, top), d));
}

inline Rational covolume(const MonomialIdeal &I)
{
    if (!is_primary(I))
        throw Error("infinite colength");
    return covolume(newton_polyhedron(I));
}

// Newton polyhedron as a bounded polytope: its truncation by the box
// [0, top]^d. Useful for plotting and hull comparisons.
inline RationalPolytope truncated_newton_body(const NewtonPolyhedron &np, std::int64_t top)
{
    return hull(detail::boxed_points(np.vertices, np.dim, top), np.dim);
}

} // namespace mixmul
