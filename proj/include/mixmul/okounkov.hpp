#pragma once

// Semigroups Gamma_sigma = {(a, i) : x^a in prod_j I(j)_{i sigma_j}, |a|_1 <= beta i}
// and their Newton-Okounkov bodies, computed from below at a finite level
// cutoff. The monomial valuation has Q-linearly independent weights, so a
// value determines its exponent and membership is plain monomial membership;
// the weights are kept only as labels.

#include <mixmul/multiplicity.hpp>
#include <mixmul/polytope.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mixmul {

// Formal weights 1 + sqrt(p_i) for distinct primes p_i. Never evaluated.
struct MonomialValuation {
    std::vector<int> prime_tags;

    static MonomialValuation standard(std::size_t dim)
    {
        static constexpr int primes[] = {2, 3, 5, 7, 11, 13};
        require_dim(dim);
        return {std::vector<int>(primes, primes + dim)};
    }

    std::string weight_label(std::size_t i) const { return "1+sqrt(" + std::to_string(prime_tags.at(i)) + ")"; }
};

namespace detail {

inline MonomialIdeal sigma_product(const std::vector<Filtration> &Fs, const Levels &sigma, std::int64_t i)
{
    if (sigma.size() != Fs.size())
        throw Error("sigma length differs from the number of filtrations");
    MonomialIdeal P = MonomialIdeal::unit(common_dim(Fs));
    for (std::size_t j = 0; j < Fs.size(); ++j) {
        if (sigma[j] < 0)
            throw Error("negative sigma entry");
        if (sigma[j] != 0)
            P = product(P, Fs[j].ideal_at(i * sigma[j]));
    }
    return P;
}

inline std::int64_t min_degree(const MonomialIdeal &I)
{
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto &g : I.generators())
        best = std::min(best, g.degree());
    return best;
}

} // namespace detail

// Smallest c with m^c inside prod_j I(j)_{sigma_j}; 1 when sigma = 0.
inline std::int64_t beta_for(const std::vector<Filtration> &Fs, const Levels &sigma)
{
    const auto P = detail::sigma_product(Fs, sigma, 1);
    if (P.is_unit())
        return 1;
    if (!is_primary(P))
        throw Error("not m-primary");
    const auto m = MonomialIdeal::maximal(P.dim());
    std::int64_t c = 1;
    MonomialIdeal mc = m;
    while (!is_subset(mc, P)) {
        mc = product(mc, m);
        ++c;
    }
    return c;
}

// Twice the largest beta_for over the given sigmas.
inline std::int64_t common_beta(const std::vector<Filtration> &Fs, const std::vector<Levels> &sigmas)
{
    std::int64_t b = 1;
    for (const auto &s : sigmas)
        b = std::max(b, beta_for(Fs, s));
    return 2 * b;
}

class GammaSemigroup {
public:
    // One column of level-i points: fixed prefix, last coordinate in [low, high].
    struct Column {
        Exponent prefix; // last coordinate zero
        std::int64_t low = 0;
        std::int64_t high = 0;
    };

    GammaSemigroup(const std::vector<Filtration> &Fs, Levels sigma, std::int64_t beta, std::int64_t cutoff)
        : sigma_(std::move(sigma)), beta_(beta), cutoff_(cutoff), dim_(detail::common_dim(Fs))
    {
        if (beta < 1)
            throw Error("beta must be positive");
        if (cutoff < 1)
            throw Error("cutoff must be positive");
        for (std::int64_t i = 1; i <= cutoff; ++i)
            levels_.push_back(detail::sigma_product(Fs, sigma_, i));
    }

    const Levels &sigma() const noexcept { return sigma_; }
    std::int64_t beta() const noexcept { return beta_; }
    std::int64_t cutoff() const noexcept { return cutoff_; }
    std::size_t dim() const noexcept { return dim_; }
    const MonomialIdeal &level_ideal(std::int64_t i) const { return levels_.at(static_cast<std::size_t>(i - 1)); }

    bool contains(const Exponent &a, std::int64_t i) const
    {
        if (i < 1 || i > cutoff_)
            return false;
        return a.degree() <= beta_ * i && mixmul::contains(level_ideal(i), a);
    }

    std::vector<Column> columns(std::int64_t i) const
    {
        const auto &P = level_ideal(i);
        const std::int64_t cap = beta_ * i;
        std::vector<Column> out;
        Exponent p(dim_);
        while (true) {
            const std::int64_t used = p.degree();
            if (used <= cap) {
                std::int64_t low = detail::infinite_height;
                for (const auto &g : P.generators()) {
                    bool fits = true;
                    for (std::size_t k = 0; k + 1 < dim_ && fits; ++k)
                        fits = g[k] <= p[k];
                    if (fits)
                        low = std::min(low, g[dim_ - 1]);
                }
                if (low != detail::infinite_height && low <= cap - used)
                    out.push_back({p, low, cap - used});
            }
            std::size_t k = 0;
            while (k + 1 < dim_ && ++p[k] > cap)
                p[k++] = 0;
            if (k + 1 >= dim_)
                break;
        }
        return out;
    }

    Integer count(std::int64_t i) const
    {
        Integer n = 0;
        for (const auto &c : columns(i))
            n += c.high - c.low + 1;
        return n;
    }

    // Uniform level, then a uniform column point.
    std::optional<std::pair<Exponent, std::int64_t>> sample(std::mt19937 &rng, std::int64_t max_level) const
    {
        std::uniform_int_distribution<std::int64_t> level(1, std::min(max_level, cutoff_));
        const auto i = level(rng);
        const auto cols = columns(i);
        if (cols.empty())
            return std::nullopt;
        const auto &c = cols[std::uniform_int_distribution<std::size_t>(0, cols.size() - 1)(rng)];
        Exponent a = c.prefix;
        a[dim_ - 1] = std::uniform_int_distribution<std::int64_t>(c.low, c.high)(rng);
        return std::make_pair(a, i);
    }

    // Points whose hull is the hull of level i: minimal generators g with
    // |g| <= beta i and the corners g + (beta i - |g|) e_k on the top face.
    std::vector<Exponent> hull_candidates(std::int64_t i) const
    {
        std::vector<Exponent> out;
        const std::int64_t cap = beta_ * i;
        for (const auto &g : level_ideal(i).generators()) {
            const auto deg = g.degree();
            if (deg > cap)
                continue;
            out.push_back(g);
            for (std::size_t k = 0; k < dim_; ++k) {
                Exponent c = g;
                c[k] += cap - deg;
                out.push_back(c);
            }
        }
        return out;
    }

private:
    Levels sigma_;
    std::int64_t beta_;
    std::int64_t cutoff_;
    std::size_t dim_;
    std::vector<MonomialIdeal> levels_;
};

inline GammaSemigroup gamma(const std::vector<Filtration> &Fs, const Levels &sigma, std::int64_t beta, std::int64_t cutoff)
{
    return GammaSemigroup(Fs, sigma, beta, cutoff);
}

struct OkounkovBody {
    RationalPolytope body;
    Levels sigma;
    std::int64_t beta = 0;
    std::int64_t cutoff = 0;
    bool inner = true; // level-truncated approximation from inside
};

inline OkounkovBody body(const GammaSemigroup &G)
{
    std::vector<RationalPoint> pts;
    for (std::int64_t i = 1; i <= G.cutoff(); ++i)
        for (const auto &a : G.hull_candidates(i)) {
            RationalPoint p(G.dim());
            for (std::size_t k = 0; k < G.dim(); ++k)
                p[k] = make_rational(a[k], i);
            pts.push_back(std::move(p));
        }
    return {hull(std::move(pts), G.dim()), G.sigma(), G.beta(), G.cutoff(), true};
}

// Volume of the simplex {x >= 0, |x|_1 <= beta}, the body of Gamma_0.
inline Rational hat_volume(std::size_t d, std::int64_t beta)
{
    return pow_of(Rational(static_cast<long>(beta)), static_cast<unsigned>(d)) / Rational(factorial(static_cast<unsigned>(d)));
}

struct Theorem1Report {
    std::int64_t cutoff = 0;
    std::int64_t beta = 0;
    LimitEstimate estimate;  // independent length limit
    Rational limit;          // estimate.best()
    Rational vol_hat;
    Rational vol_body;
    Rational difference;     // vol_hat - vol_body
    Rational discrepancy;    // |limit - difference|
};

inline Theorem1Report theorem1_check(const Filtration &F, std::int64_t cutoff, const Levels &ladder = {32, 64, 128})
{
    Theorem1Report rep;
    rep.cutoff = cutoff;
    rep.beta = beta_for({F}, {1});
    rep.estimate = limit_estimate(length_sequence({F}, {1}, ladder));
    rep.limit = rep.estimate.best();
    rep.vol_hat = hat_volume(F.dim(), rep.beta);
    rep.vol_body = volume(body(gamma({F}, {1}, rep.beta, cutoff)).body);
    rep.difference = rep.vol_hat - rep.vol_body;
    rep.discrepancy = abs_of(rep.limit - rep.difference);
    return rep;
}

struct Prop1Report {
    std::int64_t cutoff = 0;
    std::int64_t beta = 0;
    Rational tol;
    bool triggered = false;
    std::optional<RationalPoint> witness;
    Rational difference; // vol of the Gamma_0 body minus vol of the body
    Rational epsilon;    // heuristic d beta^d / N
    bool passed = true;
    std::string note = "epsilon(N) = d beta^d / N is a heuristic tolerance";
};

inline Prop1Report prop1_check(const Filtration &F, std::int64_t cutoff, const Rational &tol)
{
    Prop1Report rep;
    rep.cutoff = cutoff;
    rep.tol = tol;
    rep.beta = beta_for({F}, {1});
    const std::size_t d = F.dim();
    const auto G = gamma({F}, {1}, rep.beta, cutoff);
    for (std::int64_t i = 1; i <= cutoff && !rep.triggered; ++i)
        for (const auto &g : G.level_ideal(i).generators()) {
            if (g.degree() > rep.beta * i)
                continue;
            RationalPoint p(d);
            bool small = true;
            for (std::size_t k = 0; k < d; ++k) {
                p[k] = make_rational(g[k], i);
                small = small && p[k] <= tol;
            }
            if (small) {
                rep.triggered = true;
                rep.witness = p;
                break;
            }
        }
    rep.difference = hat_volume(d, rep.beta) - volume(body(G).body);
    rep.epsilon = Rational(static_cast<long>(d)) * pow_of(Rational(static_cast<long>(rep.beta)), static_cast<unsigned>(d)) /
                  Rational(static_cast<long>(cutoff));
    rep.passed = !rep.triggered || rep.difference <= rep.epsilon;
    return rep;
}

struct Lemma1Report {
    bool precondition = false; // limit estimate above threshold
    bool found = false;
    std::int64_t b = 0;
    std::int64_t beta = 0;
    std::int64_t verified_bound = 0;
    Rational limit;
};

// Smallest b <= 64 with I_{i b beta} inside m^i for every i <= i_bound.
inline Lemma1Report lemma1_search(const Filtration &F, std::int64_t i_bound, double threshold = 1e-3,
                                  const Levels &ladder = {32, 64, 128})
{
    Lemma1Report rep;
    rep.beta = beta_for({F}, {1});
    rep.limit = limit_estimate(length_sequence({F}, {1}, ladder)).best();
    rep.precondition = to_double(rep.limit) > threshold;
    for (std::int64_t b = 1; b <= 64 && !rep.found; ++b) {
        bool ok = true;
        for (std::int64_t i = 1; i <= i_bound && ok; ++i)
            ok = detail::min_degree(F.ideal_at(i * b * rep.beta)) >= i;
        if (ok) {
            rep.found = true;
            rep.b = b;
            rep.verified_bound = i_bound;
        }
    }
    return rep;
}

struct MinkowskiReport {
    std::int64_t beta = 0;
    std::int64_t cutoff = 0;
    std::size_t vertices_checked = 0;
    std::size_t contained = 0;
    std::size_t unresolved = 0; // not inside the inner body at cutoff 2N; not a refutation
    bool lemma_x1_passed = false;
    Rational tol;
    bool prop_x2_triggered = false; // body_sigma within tol of the Gamma_0 body
    Rational vol_sigma_tau;
    Rational vol_tau;
    bool prop_x2_passed = true;
};

inline MinkowskiReport minkowski_checks(const std::vector<Filtration> &Fs, const Levels &sigma, const Levels &tau,
                                        std::int64_t beta, std::int64_t cutoff)
{
    if (sigma.size() != tau.size())
        throw Error("sigma and tau differ in length");
    MinkowskiReport rep;
    rep.beta = beta;
    rep.cutoff = cutoff;
    rep.tol = make_rational(1, cutoff);
    const std::size_t d = detail::common_dim(Fs);
    Levels sum(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j)
        sum[j] = sigma[j] + tau[j];

    const auto bs = body(gamma(Fs, sigma, beta, cutoff)).body;
    const auto bt = body(gamma(Fs, tau, beta, cutoff)).body;
    const auto bst = body(gamma(Fs, sum, beta, 2 * cutoff)).body;

    const auto clipped = clip(minkowski_sum(bs, bt), Halfspace::total_degree_at_most(d, Rational(static_cast<long>(beta))));
    for (const auto &v : clipped.vertices()) {
        ++rep.vertices_checked;
        if (contains_point(bst, v))
            ++rep.contained;
        else
            ++rep.unresolved;
    }
    rep.lemma_x1_passed = rep.unresolved == 0;

    const auto hat = simplex(d, Rational(static_cast<long>(beta)));
    rep.prop_x2_triggered = within_linf(bs, hat, rep.tol) && within_linf(hat, bs, rep.tol);
    rep.vol_sigma_tau = volume(bst);
    rep.vol_tau = volume(bt);
    if (rep.prop_x2_triggered)
        rep.prop_x2_passed = abs_of(rep.vol_sigma_tau - rep.vol_tau) <= rep.tol;
    return rep;
}

} // namespace mixmul
