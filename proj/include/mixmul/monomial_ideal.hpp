#pragma once

// Monomial ideals of the power series ring k[[x_1,...,x_d]], stored as the
// antichain of their minimal generators.

#include <mixmul/rational.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace mixmul {

// Largest ambient dimension supported by the exact kernels.
inline constexpr std::size_t max_dim = 4;

inline void require_dim(std::size_t d)
{
    if (d < 1 || d > max_dim)
        throw Error("dimension " + std::to_string(d) + " outside supported range 1.." + std::to_string(max_dim));
}

// Exponent vector of a monomial x^a.
class Exponent {
public:
    using value_type = std::int64_t;

    Exponent() = default;

    explicit Exponent(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim)) { require_dim(dim); }

    Exponent(std::initializer_list<value_type> coords) : dim_(static_cast<std::uint8_t>(coords.size()))
    {
        require_dim(coords.size());
        std::size_t i = 0;
        for (auto c : coords) {
            if (c < 0)
                throw Error("negative exponent");
            c_[i++] = c;
        }
    }

    explicit Exponent(std::span<const value_type> coords) : dim_(static_cast<std::uint8_t>(coords.size()))
    {
        require_dim(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] < 0)
                throw Error("negative exponent");
            c_[i] = coords[i];
        }
    }

    std::size_t dim() const noexcept { return dim_; }
    value_type operator[](std::size_t i) const noexcept { return c_[i]; }
    value_type &operator[](std::size_t i) noexcept { return c_[i]; }
    std::span<const value_type> coords() const noexcept { return {c_.data(), dim_}; }

    value_type degree() const noexcept { return std::accumulate(c_.begin(), c_.begin() + dim_, value_type{0}); }

    // Componentwise a <= b, i.e. x^a divides x^b.
    bool divides(const Exponent &b) const noexcept
    {
        for (std::size_t i = 0; i < dim_; ++i)
            if (c_[i] > b.c_[i])
                return false;
        return true;
    }

    friend Exponent operator+(const Exponent &a, const Exponent &b) noexcept
    {
        Exponent out = a;
        for (std::size_t i = 0; i < a.dim_; ++i)
            out.c_[i] += b.c_[i];
        return out;
    }

    friend bool operator==(const Exponent &a, const Exponent &b) noexcept
    {
        return a.dim_ == b.dim_ && std::equal(a.c_.begin(), a.c_.begin() + a.dim_, b.c_.begin());
    }

    // Lexicographic on coordinates.
    friend std::strong_ordering operator<=>(const Exponent &a, const Exponent &b) noexcept
    {
        if (auto c = a.dim_ <=> b.dim_; c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.begin() + a.dim_, b.c_.begin(),
                                                      b.c_.begin() + b.dim_);
    }

    static Exponent unit_vector(std::size_t dim, std::size_t axis, value_type power = 1)
    {
        Exponent e(dim);
        e.c_[axis] = power;
        return e;
    }

private:
    std::array<value_type, max_dim> c_{};
    std::uint8_t dim_ = 0;
};

inline std::ostream &operator<<(std::ostream &os, const Exponent &a)
{
    os << '(';
    for (std::size_t i = 0; i < a.dim(); ++i)
        os << (i ? "," : "") << a[i];
    return os << ')';
}

class MonomialIdeal;
MonomialIdeal minimalize(std::vector<Exponent> gens, std::size_t dim);

// Nonzero monomial ideal; immutable once built.
class MonomialIdeal {
public:
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Exponent> &generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().degree() == 0; }

    static MonomialIdeal unit(std::size_t dim) { return minimalize({Exponent(dim)}, dim); }

    // The maximal ideal (x_1,...,x_d).
    static MonomialIdeal maximal(std::size_t dim)
    {
        require_dim(dim);
        std::vector<Exponent> g;
        for (std::size_t i = 0; i < dim; ++i)
            g.push_back(Exponent::unit_vector(dim, i));
        return minimalize(std::move(g), dim);
    }

    friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;

private:
    friend MonomialIdeal minimalize(std::vector<Exponent> gens, std::size_t dim);
    MonomialIdeal(std::size_t dim, std::vector<Exponent> gens) : dim_(dim), gens_(std::move(gens)) {}

    std::size_t dim_ = 0;
    std::vector<Exponent> gens_; // sorted lexicographically
};

inline std::ostream &operator<<(std::ostream &os, const MonomialIdeal &I)
{
    os << '[';
    for (std::size_t i = 0; i < I.size(); ++i)
        os << (i ? " " : "") << I.generators()[i];
    return os << ']';
}

namespace detail {

inline constexpr std::int64_t infinite_height = std::numeric_limits<std::int64_t>::max();

// Dense table h(p) = min{ a_d : x^a in I, prefix(a) <= p } over the box of
// prefixes (first d-1 coordinates). Cells beyond the box clamp to its edge.
class Staircase {
public:
    // Box sizes above this fall back to pairwise minimalization.
    static constexpr std::size_t max_cells = std::size_t{1} << 22;

    Staircase(std::size_t dim, const std::array<std::int64_t, max_dim - 1> &extent) : dim_(dim), extent_(extent)
    {
        std::size_t cells = 1;
        for (std::size_t i = 0; i + 1 < dim_; ++i)
            cells *= static_cast<std::size_t>(extent_[i]);
        std::size_t stride = 1;
        for (std::size_t i = dim_ - 1; i-- > 0;) {
            stride_[i] = stride;
            stride *= static_cast<std::size_t>(extent_[i]);
        }
        h_.assign(cells, infinite_height);
    }

    static bool fits(std::size_t dim, const std::array<std::int64_t, max_dim - 1> &extent)
    {
        std::size_t cells = 1;
        for (std::size_t i = 0; i + 1 < dim; ++i) {
            cells *= static_cast<std::size_t>(extent[i]);
            if (cells > max_cells)
                return false;
        }
        return true;
    }

    // Prefix coordinates must lie inside the box.
    void add(const Exponent &a) noexcept
    {
        auto &cell = h_[index(a)];
        cell = std::min(cell, a[dim_ - 1]);
    }

    void add_sum(const Exponent &a, const Exponent &b) noexcept
    {
        std::size_t idx = 0;
        for (std::size_t i = 0; i + 1 < dim_; ++i)
            idx += static_cast<std::size_t>(a[i] + b[i]) * stride_[i];
        auto &cell = h_[idx];
        cell = std::min(cell, a[dim_ - 1] + b[dim_ - 1]);
    }

    // Propagates minima upward along every prefix axis.
    void close() noexcept
    {
        for (std::size_t axis = 0; axis + 1 < dim_; ++axis) {
            const std::size_t stride = stride_[axis];
            const std::size_t period = stride * static_cast<std::size_t>(extent_[axis]);
            for (std::size_t c = 0; c < h_.size(); ++c)
                if (c % period >= stride)
                    h_[c] = std::min(h_[c], h_[c - stride]);
        }
    }

    std::int64_t height(const Exponent &a) const noexcept
    {
        std::size_t idx = 0;
        for (std::size_t i = 0; i + 1 < dim_; ++i)
            idx += static_cast<std::size_t>(std::min(a[i], extent_[i] - 1)) * stride_[i];
        return h_[idx];
    }

    bool contains(const Exponent &a) const noexcept
    {
        const auto h = height(a);
        return h != infinite_height && a[dim_ - 1] >= h;
    }

    // Minimal generators, in lexicographic order. Requires close().
    std::vector<Exponent> minimal_points() const
    {
        std::vector<Exponent> out;
        Exponent p(dim_);
        for (std::size_t c = 0; c < h_.size(); ++c) {
            std::size_t rem = c;
            for (std::size_t i = 0; i + 1 < dim_; ++i) {
                p[i] = static_cast<std::int64_t>(rem / stride_[i]);
                rem %= stride_[i];
            }
            const auto h = h_[c];
            if (h == infinite_height)
                continue;
            bool minimal = true;
            for (std::size_t i = 0; i + 1 < dim_ && minimal; ++i)
                if (p[i] > 0 && h_[c - stride_[i]] <= h)
                    minimal = false;
            if (minimal) {
                p[dim_ - 1] = h;
                out.push_back(p);
            }
        }
        return out;
    }

private:
    std::size_t index(const Exponent &a) const noexcept
    {
        std::size_t idx = 0;
        for (std::size_t i = 0; i + 1 < dim_; ++i)
            idx += static_cast<std::size_t>(a[i]) * stride_[i];
        return idx;
    }

    std::size_t dim_;
    std::array<std::int64_t, max_dim - 1> extent_{};
    std::array<std::size_t, max_dim - 1> stride_{};
    std::vector<std::int64_t> h_;
};

inline std::array<std::int64_t, max_dim - 1> prefix_extent(std::span<const Exponent> gens, std::size_t dim)
{
    std::array<std::int64_t, max_dim - 1> ext{1, 1, 1};
    for (const auto &g : gens)
        for (std::size_t i = 0; i + 1 < dim; ++i)
            ext[i] = std::max(ext[i], g[i] + 1);
    return ext;
}

// Quadratic fallback for huge boxes.
inline std::vector<Exponent> minimal_pairwise(std::vector<Exponent> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Exponent &a, const Exponent &b) {
        const auto da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> kept;
    for (const auto &g : gens) {
        const bool divisible = std::any_of(kept.begin(), kept.end(), [&](const Exponent &k) { return k.divides(g); });
        if (!divisible)
            kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

inline void check_dims(std::size_t expected, std::size_t actual)
{
    if (expected != actual)
        throw Error("dimension mismatch: " + std::to_string(expected) + " vs " + std::to_string(actual));
}

} // namespace detail

// Antichain of <=-minimal elements of gens.
inline MonomialIdeal minimalize(std::vector<Exponent> gens, std::size_t dim)
{
    require_dim(dim);
    if (gens.empty())
        throw Error("zero ideal unsupported");
    for (const auto &g : gens)
        detail::check_dims(dim, g.dim());

    if (dim == 1) {
        auto best = *std::min_element(gens.begin(), gens.end());
        return MonomialIdeal(dim, {best});
    }
    const auto ext = detail::prefix_extent(gens, dim);
    if (!detail::Staircase::fits(dim, ext))
        return MonomialIdeal(dim, detail::minimal_pairwise(std::move(gens)));
    detail::Staircase table(dim, ext);
    for (const auto &g : gens)
        table.add(g);
    table.close();
    return MonomialIdeal(dim, table.minimal_points());
}

inline MonomialIdeal make_ideal(std::size_t dim, std::initializer_list<Exponent> gens)
{
    return minimalize(std::vector<Exponent>(gens), dim);
}

inline bool contains(const MonomialIdeal &I, const Exponent &a)
{
    detail::check_dims(I.dim(), a.dim());
    return std::any_of(I.generators().begin(), I.generators().end(), [&](const Exponent &g) { return g.divides(a); });
}

// I is contained in J.
inline bool is_subset(const MonomialIdeal &I, const MonomialIdeal &J)
{
    detail::check_dims(I.dim(), J.dim());
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [&](const Exponent &g) { return contains(J, g); });
}

inline MonomialIdeal sum(const MonomialIdeal &I, const MonomialIdeal &J)
{
    detail::check_dims(I.dim(), J.dim());
    std::vector<Exponent> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return minimalize(std::move(gens), I.dim());
}

inline MonomialIdeal product(const MonomialIdeal &I, const MonomialIdeal &J)
{
    detail::check_dims(I.dim(), J.dim());
    const std::size_t d = I.dim();
    if (I.is_unit())
        return J;
    if (J.is_unit())
        return I;
    if (d == 1)
        return minimalize({I.generators().front() + J.generators().front()}, d);

    const auto ea = detail::prefix_extent(I.generators(), d);
    const auto eb = detail::prefix_extent(J.generators(), d);
    std::array<std::int64_t, max_dim - 1> ext{1, 1, 1};
    for (std::size_t i = 0; i + 1 < d; ++i)
        ext[i] = ea[i] + eb[i] - 1;
    if (!detail::Staircase::fits(d, ext)) {
        std::vector<Exponent> sums;
        sums.reserve(I.size() * J.size());
        for (const auto &a : I.generators())
            for (const auto &b : J.generators())
                sums.push_back(a + b);
        return minimalize(std::move(sums), d);
    }
    detail::Staircase table(d, ext);
    for (const auto &a : I.generators())
        for (const auto &b : J.generators())
            table.add_sum(a, b);
    table.close();
    return minimalize(table.minimal_points(), d);
}

inline MonomialIdeal power(const MonomialIdeal &I, std::int64_t k)
{
    if (k < 0)
        throw Error("negative ideal power");
    MonomialIdeal result = MonomialIdeal::unit(I.dim());
    MonomialIdeal base = I;
    while (k > 0) {
        if (k & 1)
            result = product(result, base);
        k >>= 1;
        if (k > 0)
            base = product(base, base);
    }
    return result;
}

// m-primary: a pure power of every variable is among the generators.
inline bool is_primary(const MonomialIdeal &I)
{
    const std::size_t d = I.dim();
    for (std::size_t i = 0; i < d; ++i) {
        const bool found = std::any_of(I.generators().begin(), I.generators().end(), [&](const Exponent &g) {
            for (std::size_t j = 0; j < d; ++j)
                if (j != i && g[j] != 0)
                    return false;
            return true;
        });
        if (!found)
            return false;
    }
    return true;
}

// Exponent of the pure power of x_axis among the generators.
inline std::int64_t pure_power_exponent(const MonomialIdeal &I, std::size_t axis)
{
    std::int64_t best = detail::infinite_height;
    for (const auto &g : I.generators()) {
        bool pure = true;
        for (std::size_t j = 0; j < I.dim(); ++j)
            if (j != axis && g[j] != 0)
                pure = false;
        if (pure)
            best = std::min(best, g[axis]);
    }
    if (best == detail::infinite_height)
        throw Error("infinite colength");
    return best;
}

namespace detail {

// Count of standard monomials of a primary ideal given by minimal generators
// in the first k coordinates. Slices on the last coordinate; equal slices are
// counted once and weighted by their multiplicity.
inline Integer colength_sliced(std::vector<Exponent> gens, std::size_t k)
{
    if (k == 1) {
        std::int64_t best = infinite_height;
        for (const auto &g : gens)
            best = std::min(best, g[0]);
        return Integer(static_cast<long>(best));
    }
    if (k == 2) {
        std::sort(gens.begin(), gens.end());
        Integer total = 0;
        for (std::size_t j = 0; j + 1 < gens.size(); ++j) {
            const Integer width(static_cast<long>(gens[j + 1][0] - gens[j][0]));
            total += width * Integer(static_cast<long>(gens[j][1]));
        }
        return total;
    }

    std::sort(gens.begin(), gens.end(), [k](const Exponent &a, const Exponent &b) { return a[k - 1] < b[k - 1]; });
    Integer total = 0;
    std::vector<Exponent> slice;
    std::size_t pos = 0;
    while (pos < gens.size()) {
        const std::int64_t level = gens[pos][k - 1];
        while (pos < gens.size() && gens[pos][k - 1] == level) {
            Exponent prefix(k - 1);
            for (std::size_t i = 0; i + 1 < k; ++i)
                prefix[i] = gens[pos][i];
            slice.push_back(prefix);
            ++pos;
        }
        slice = minimalize(std::move(slice), k - 1).generators();
        if (slice.size() == 1 && slice.front().degree() == 0)
            break;
        if (pos == gens.size())
            throw Error("infinite colength");
        const std::int64_t next = gens[pos][k - 1];
        total += colength_sliced(slice, k - 1) * Integer(static_cast<long>(next - level));
    }
    return total;
}

} // namespace detail

// l(R/I): the number of monomials outside I.
inline Integer colength(const MonomialIdeal &I)
{
    if (!is_primary(I))
        throw Error("infinite colength");
    if (I.is_unit())
        return 0;
    return detail::colength_sliced(I.generators(), I.dim());
}

} // namespace mixmul
