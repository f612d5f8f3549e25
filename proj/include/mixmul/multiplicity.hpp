#pragma once

// Asymptotic lengths G(n) = lim_m l(R / prod_j I(j)_{m n_j}) / m^d, mixed
// multiplicities as normalized coefficients of the homogeneous polynomial G,
// truncation ladders and the positivity / vanishing harness.

#include <mixmul/filtration.hpp>
#include <mixmul/newton.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mixmul {

using Levels = std::vector<std::int64_t>;

enum class Backend { direct, truncation_exact };

inline std::string to_string(Backend b) { return b == Backend::direct ? "direct" : "truncation-exact"; }

inline Backend parse_backend(const std::string &s)
{
    if (s == "direct")
        return Backend::direct;
    if (s == "truncation-exact")
        return Backend::truncation_exact;
    throw Error("unknown backend: " + s);
}

struct SequenceTerm {
    std::int64_t m = 0;
    Integer length;
    Rational value; // length / m^d
};

namespace detail {

inline std::size_t common_dim(const std::vector<Filtration> &Fs)
{
    if (Fs.empty())
        throw Error("no filtrations given");
    for (const auto &F : Fs)
        check_dims(Fs.front().dim(), F.dim());
    return Fs.front().dim();
}

inline void check_levels(const std::vector<Filtration> &Fs, const Levels &n)
{
    if (n.size() != Fs.size())
        throw Error("level vector length differs from the number of filtrations");
    for (auto v : n)
        if (v < 0)
            throw Error("negative level");
}

inline Rational power_of_int(std::int64_t m, std::size_t d)
{
    return pow_of(Rational(static_cast<long>(m)), static_cast<unsigned>(d));
}

// Solves A x = b exactly; throws if A is singular.
inline std::vector<Rational> solve_exact(const std::vector<Vec> &A, const Vec &b)
{
    const std::size_t n = A.size();
    std::vector<Vec> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = A[i];
        rows[i].push_back(b[i]);
    }
    const auto pivots = row_reduce(rows);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        throw Error("singular sample matrix");
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = rows[i][n];
    return x;
}

} // namespace detail

inline MonomialIdeal product_at(const std::vector<Filtration> &Fs, const Levels &n, std::int64_t m)
{
    const std::size_t d = detail::common_dim(Fs);
    detail::check_levels(Fs, n);
    MonomialIdeal P = MonomialIdeal::unit(d);
    for (std::size_t j = 0; j < Fs.size(); ++j)
        if (n[j] != 0)
            P = product(P, Fs[j].ideal_at(m * n[j]));
    return P;
}

inline std::vector<SequenceTerm> length_sequence(const std::vector<Filtration> &Fs, const Levels &n, const Levels &ladder)
{
    const std::size_t d = detail::common_dim(Fs);
    detail::check_levels(Fs, n);
    for (std::size_t i = 0; i < ladder.size(); ++i)
        if (ladder[i] < 1 || (i > 0 && ladder[i] <= ladder[i - 1]))
            throw Error("ladder must be positive and strictly increasing");
    std::vector<SequenceTerm> out;
    for (auto m : ladder) {
        const Integer len = colength(product_at(Fs, n, m));
        out.push_back({m, len, Rational(len) / detail::power_of_int(m, d)});
    }
    return out;
}

struct LimitEstimate {
    enum class Method { direct_sequence, truncation_exact };

    Method method = Method::direct_sequence;
    Rational value;                   // last term, or the exact limit
    std::optional<Rational> refined;  // least-squares c0 of c0 + c1 / m over the last three terms
    Rational lower_evidence;          // last computed term
    std::vector<SequenceTerm> tail;
    std::string error_note;
    // Leading coefficient of a polynomial that reproduces the exact lengths
    // on every checked level.
    std::optional<Rational> certified;

    bool exact() const noexcept { return method == Method::truncation_exact; }
    bool exact_or_certified() const noexcept { return exact() || certified.has_value(); }
    Rational best() const
    {
        if (certified)
            return *certified;
        return refined ? *refined : value;
    }
};

inline std::string to_string(LimitEstimate::Method m)
{
    return m == LimitEstimate::Method::direct_sequence ? "direct-sequence" : "truncation-exact";
}

inline LimitEstimate limit_estimate(const std::vector<SequenceTerm> &seq)
{
    if (seq.size() < 3)
        throw Error("limit estimate needs at least 3 terms");
    LimitEstimate est;
    est.method = LimitEstimate::Method::direct_sequence;
    est.value = seq.back().value;
    est.lower_evidence = seq.back().value;
    est.tail.assign(seq.end() - 3, seq.end());
    Rational xbar = 0, ybar = 0;
    for (const auto &t : est.tail) {
        xbar += make_rational(1, t.m);
        ybar += t.value;
    }
    xbar /= 3;
    ybar /= 3;
    Rational sxy = 0, sxx = 0;
    for (const auto &t : est.tail) {
        const Rational dx = make_rational(1, t.m) - xbar;
        sxy += dx * (t.value - ybar);
        sxx += dx * dx;
    }
    est.refined = ybar - (sxy / sxx) * xbar;
    est.error_note = "no certified bound; last term and c0 + c1/m fit over m = " + std::to_string(est.tail[0].m) + "," +
                     std::to_string(est.tail[1].m) + "," + std::to_string(est.tail[2].m);
    return est;
}

struct PolynomialCertificate {
    Levels fit;     // levels used to fit
    Levels checked; // further levels where the fit matched exactly
    Rational leading;
};

// Fits ell(R / prod I_{m n_j}) by a degree-d polynomial in m through
// m = start..start+d and checks it at start+d+1, start+d+2 and 2 start.
// Returns nothing when some check fails. A passing check is evidence,
// not a proof, that the length is eventually polynomial.
inline std::optional<PolynomialCertificate> polynomial_certificate(const std::vector<Filtration> &Fs, const Levels &n,
                                                                   std::int64_t start)
{
    const std::size_t d = detail::common_dim(Fs);
    detail::check_levels(Fs, n);
    if (start < 1)
        throw Error("certificate start level must be positive");
    PolynomialCertificate cert;
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(d); ++k)
        cert.fit.push_back(start + k);
    cert.checked = {start + static_cast<std::int64_t>(d) + 1, start + static_cast<std::int64_t>(d) + 2};
    if (2 * start > cert.checked.back())
        cert.checked.push_back(2 * start);
    auto length = [&](std::int64_t m) { return Rational(colength(product_at(Fs, n, m))); };
    std::vector<detail::Vec> A;
    detail::Vec b;
    for (auto m : cert.fit) {
        detail::Vec row;
        for (std::size_t k = 0; k <= d; ++k)
            row.push_back(detail::power_of_int(m, k));
        A.push_back(std::move(row));
        b.push_back(length(m));
    }
    const auto c = detail::solve_exact(A, b);
    for (auto m : cert.checked) {
        Rational p = 0;
        for (std::size_t k = 0; k <= d; ++k)
            p += c[k] * detail::power_of_int(m, k);
        if (p != length(m))
            return std::nullopt;
    }
    cert.leading = c[d];
    return cert;
}

inline LimitEstimate exact_estimate(const Rational &value, const std::string &note)
{
    LimitEstimate est;
    est.method = LimitEstimate::Method::truncation_exact;
    est.value = value;
    est.lower_evidence = value;
    est.error_note = note;
    return est;
}

// Period s with I_{s i} = (I_s)^i verified for i <= check_bound. Truncations
// search the divisors of lcm(1..a); any other filtration must verify s = 1.
inline NoetherianPeriod verified_period(const Filtration &F, std::int64_t check_bound)
{
    if (F.is_truncation())
        return noetherian_period(F, check_bound);
    const auto I1 = F.ideal_at(1);
    MonomialIdeal P = I1;
    for (std::int64_t i = 2; i <= check_bound; ++i) {
        P = product(P, I1);
        if (!(F.ideal_at(i) == P))
            throw Error("unverified period for " + kind_name(F.spec()) +
                        " filtration; truncate it or raise check_bound");
    }
    return {1, check_bound};
}

// Exact G for Noetherian filtrations via Newton polyhedra of I(j)_s.
class ExactG {
public:
    ExactG(const std::vector<Filtration> &Fs, std::int64_t check_bound) : d_(detail::common_dim(Fs))
    {
        s_ = 1;
        for (const auto &F : Fs) {
            periods_.push_back(verified_period(F, check_bound).period);
            s_ = std::lcm(s_, periods_.back());
        }
        for (const auto &F : Fs)
            nps_.push_back(newton_polyhedron(F.ideal_at(s_)));
    }

    Rational operator()(const Levels &n) const
    {
        if (n.size() != nps_.size())
            throw Error("level vector length differs from the number of filtrations");
        std::optional<NewtonPolyhedron> total;
        for (std::size_t j = 0; j < n.size(); ++j) {
            if (n[j] < 0)
                throw Error("negative level");
            if (n[j] == 0)
                continue;
            auto part = dilate(nps_[j], n[j]);
            total = total ? minkowski_sum(*total, part) : part;
        }
        if (!total)
            return 0;
        return covolume(*total) / detail::power_of_int(s_, d_);
    }

    std::int64_t period() const noexcept { return s_; }
    const Levels &periods() const noexcept { return periods_; }

private:
    std::size_t d_;
    std::int64_t s_ = 1;
    Levels periods_;
    std::vector<NewtonPolyhedron> nps_;
};

inline Rational G_exact_truncated(const std::vector<Filtration> &Fs, const Levels &n, std::int64_t check_bound = 6)
{
    return ExactG(Fs, check_bound)(n);
}

struct MixedOptions {
    Backend backend = Backend::direct;
    std::int64_t truncation_level = 0; // 0: use the filtrations as given
    Levels ladder{8, 16, 32};
    std::int64_t check_bound = 6;
    unsigned threads = 1;
    bool certify = false; // direct backend: try a polynomial certificate from the last ladder level
};

struct Coefficient {
    std::vector<int> type; // (d_1, ..., d_r)
    Rational value;
    bool exact = false;
};

struct MixedMultiplicityReport {
    std::size_t r = 0;
    std::size_t d = 0;
    Backend backend = Backend::direct;
    std::vector<Coefficient> coeffs; // descending lexicographic type order
    std::vector<Levels> samples;
    std::vector<Rational> sample_values;
    std::optional<std::int64_t> truncation_level;
    std::optional<std::int64_t> period;
    Levels ladder;

    const Coefficient &at(const std::vector<int> &type) const
    {
        for (const auto &c : coeffs)
            if (c.type == type)
                return c;
        throw Error("no coefficient of that type");
    }
};

// All (d_1, ..., d_r) with sum d, in descending lexicographic order.
inline std::vector<std::vector<int>> type_vectors(std::size_t r, std::size_t d)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == r) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (r == 0)
        throw Error("no filtrations given");
    rec(0, static_cast<int>(d));
    return out;
}

namespace detail {

inline Vec monomial_row(const Levels &n, const std::vector<std::vector<int>> &types)
{
    Vec row;
    for (const auto &t : types) {
        Rational v = 1;
        for (std::size_t i = 0; i < n.size(); ++i)
            v *= pow_of(Rational(static_cast<long>(n[i])), static_cast<unsigned>(t[i]));
        row.push_back(v);
    }
    return row;
}

} // namespace detail

// Points n >= 1 with sum(n_i - 1) <= d, taken in order of total then
// lexicographically, keeping those that raise the Vandermonde rank.
inline std::vector<Levels> sample_points(std::size_t r, std::size_t d)
{
    const auto types = type_vectors(r, d);
    std::vector<Levels> candidates;
    for (std::size_t extra = 0; extra <= d; ++extra)
        for (const auto &t : type_vectors(r, extra)) {
            Levels n(r);
            for (std::size_t i = 0; i < r; ++i)
                n[i] = 1 + t[i];
            candidates.push_back(n);
        }
    std::vector<Levels> chosen;
    std::vector<detail::Vec> rows;
    for (const auto &n : candidates) {
        rows.push_back(detail::monomial_row(n, types));
        if (detail::rank_of(rows) == rows.size())
            chosen.push_back(n);
        else
            rows.pop_back();
        if (chosen.size() == types.size())
            return chosen;
    }
    throw Error("singular sample matrix");
}

// Fits the homogeneous degree-d polynomial through `sampler` values and
// returns e-coefficients (polynomial coefficients times d_1! ... d_r!).
inline std::vector<Coefficient> fit_mixed(std::size_t r, std::size_t d, const std::function<Rational(const Levels &)> &sampler,
                                          unsigned threads, bool exact, std::vector<Levels> *samples_out = nullptr,
                                          std::vector<Rational> *values_out = nullptr)
{
    const auto types = type_vectors(r, d);
    const auto points = sample_points(r, d);
    std::vector<Rational> values(points.size());
    if (threads > 1) {
        std::vector<std::future<void>> jobs;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < std::min<std::size_t>(threads, points.size()); ++t)
            jobs.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next++; i < points.size(); i = next++)
                    values[i] = sampler(points[i]);
            }));
        for (auto &j : jobs)
            j.get();
    } else {
        for (std::size_t i = 0; i < points.size(); ++i)
            values[i] = sampler(points[i]);
    }
    std::vector<detail::Vec> A;
    for (const auto &n : points)
        A.push_back(detail::monomial_row(n, types));
    const auto c = detail::solve_exact(A, values);
    std::vector<Coefficient> out;
    for (std::size_t k = 0; k < types.size(); ++k) {
        Rational norm = 1;
        for (int di : types[k])
            norm *= Rational(factorial(static_cast<unsigned>(di)));
        out.push_back({types[k], c[k] * norm, exact});
    }
    if (samples_out)
        *samples_out = points;
    if (values_out)
        *values_out = values;
    return out;
}

inline std::vector<Filtration> truncate_all(const std::vector<Filtration> &Fs, std::int64_t a)
{
    std::vector<Filtration> out;
    for (const auto &F : Fs)
        out.push_back(a > 0 ? truncate(F, a) : F);
    return out;
}

// G(n) under the chosen backend.
inline LimitEstimate G_estimate(const std::vector<Filtration> &Fs, const Levels &n, const MixedOptions &opt)
{
    if (opt.backend == Backend::truncation_exact) {
        const auto list = truncate_all(Fs, opt.truncation_level);
        ExactG g(list, opt.check_bound);
        return exact_estimate(g(n), "exact covolume at period " + std::to_string(g.period()));
    }
    auto est = limit_estimate(length_sequence(Fs, n, opt.ladder));
    if (opt.certify && !opt.ladder.empty())
        if (const auto cert = polynomial_certificate(Fs, n, opt.ladder.back())) {
            est.certified = cert->leading;
            est.error_note += "; lengths match a degree-" + std::to_string(Fs.front().dim()) +
                              " polynomial from m = " + std::to_string(cert->fit.front()) + " to " +
                              std::to_string(cert->checked.back());
        }
    return est;
}

inline MixedMultiplicityReport mixed_multiplicities(const std::vector<Filtration> &Fs, const MixedOptions &opt = {})
{
    MixedMultiplicityReport rep;
    rep.d = detail::common_dim(Fs);
    rep.r = Fs.size();
    rep.backend = opt.backend;
    std::function<Rational(const Levels &)> sampler;
    std::optional<ExactG> exact;
    std::atomic<bool> all_certified{true};
    if (opt.backend == Backend::truncation_exact) {
        exact.emplace(truncate_all(Fs, opt.truncation_level), opt.check_bound);
        rep.period = exact->period();
        if (opt.truncation_level > 0)
            rep.truncation_level = opt.truncation_level;
        sampler = [&](const Levels &n) { return (*exact)(n); };
    } else {
        rep.ladder = opt.ladder;
        sampler = [&](const Levels &n) {
            const auto est = G_estimate(Fs, n, opt);
            if (!est.certified)
                all_certified = false;
            return est.best();
        };
    }
    rep.coeffs = fit_mixed(rep.r, rep.d, sampler, opt.threads, exact.has_value(), &rep.samples, &rep.sample_values);
    if (!exact && opt.certify && all_certified)
        for (auto &c : rep.coeffs)
            c.exact = true;
    return rep;
}

struct LadderRow {
    std::int64_t level = 0;
    MixedMultiplicityReport report;
    std::vector<Rational> delta; // change per coefficient from the previous level
};

inline std::vector<LadderRow> truncation_ladder(const std::vector<Filtration> &Fs, const Levels &levels, MixedOptions opt)
{
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (levels[i] < 1 || (i > 0 && levels[i] <= levels[i - 1]))
            throw Error("truncation levels must be positive and increasing");
    std::vector<LadderRow> rows;
    for (auto a : levels) {
        opt.truncation_level = a;
        LadderRow row{a, mixed_multiplicities(Fs, opt), {}};
        if (!rows.empty())
            for (std::size_t k = 0; k < row.report.coeffs.size(); ++k)
                row.delta.push_back(row.report.coeffs[k].value - rows.back().report.coeffs[k].value);
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Assertion {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PositivityOptions {
    MixedOptions mixed;
    bool single_component = true;
    double zero_threshold = 1e-3; // direct backend only
    double tolerance = 1e-2;      // direct backend comparisons
};

struct PositivityReport {
    MixedMultiplicityReport mixed;
    std::vector<Rational> single_e;
    std::vector<bool> positive;
    std::size_t s = 0;               // number of positive single multiplicities
    std::vector<std::size_t> order;  // positive filtrations first
    double zero_threshold = 0;
    std::vector<Assertion> assertions;

    bool passed() const
    {
        return std::all_of(assertions.begin(), assertions.end(), [](const Assertion &a) { return a.passed; });
    }
};

namespace detail {

inline std::string type_key(const std::vector<int> &t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    return s;
}

} // namespace detail

inline PositivityReport positivity_report(const std::vector<Filtration> &Fs, const PositivityOptions &opt = {})
{
    PositivityReport rep;
    rep.zero_threshold = opt.zero_threshold;
    rep.mixed = mixed_multiplicities(Fs, opt.mixed);
    const bool exact = opt.mixed.backend == Backend::truncation_exact;
    const std::size_t r = Fs.size(), d = rep.mixed.d;
    auto is_zero = [&](const Rational &v) { return exact ? v == 0 : std::abs(to_double(v)) < opt.zero_threshold; };
    auto close = [&](const Rational &a, const Rational &b) {
        return exact ? a == b : std::abs(to_double(a - b)) <= opt.tolerance * std::max(1.0, std::abs(to_double(b)));
    };

    for (std::size_t j = 0; j < r; ++j) {
        rep.single_e.push_back(mixed_multiplicities({Fs[j]}, opt.mixed).coeffs.front().value);
        rep.positive.push_back(!is_zero(rep.single_e.back()));
    }
    for (std::size_t j = 0; j < r; ++j)
        if (rep.positive[j])
            rep.order.push_back(j);
    rep.s = rep.order.size();
    for (std::size_t j = 0; j < r; ++j)
        if (!rep.positive[j])
            rep.order.push_back(j);

    {
        Assertion a{"prop0-nonnegative", true, ""};
        for (const auto &c : rep.mixed.coeffs)
            if (exact ? c.value < 0 : to_double(c.value) < -opt.zero_threshold) {
                a.passed = false;
                a.detail = "coefficient " + detail::type_key(c.type) + " = " + to_string(c.value);
                break;
            }
        rep.assertions.push_back(a);
    }
    {
        Assertion a{"pure-coefficient", true, ""};
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<int> t(r, 0);
            t[j] = static_cast<int>(d);
            if (!close(rep.mixed.at(t).value, rep.single_e[j])) {
                a.passed = false;
                a.detail = "type " + detail::type_key(t) + ": " + to_string(rep.mixed.at(t).value) + " vs " +
                           to_string(rep.single_e[j]);
                break;
            }
        }
        rep.assertions.push_back(a);
    }
    if (!opt.single_component)
        return rep;

    if (rep.s == r) {
        Assertion a{"thm2-all-positive", true, ""};
        for (const auto &c : rep.mixed.coeffs)
            if (is_zero(c.value) || c.value < 0) {
                a.passed = false;
                a.detail = "coefficient " + detail::type_key(c.type) + " = " + to_string(c.value);
                break;
            }
        rep.assertions.push_back(a);
        return rep;
    }

    Assertion vanish{"thm3-vanishing", true, ""};
    for (const auto &c : rep.mixed.coeffs) {
        bool touches = false;
        for (std::size_t j = 0; j < r; ++j)
            touches = touches || (!rep.positive[j] && c.type[j] > 0);
        if (touches && !is_zero(c.value)) {
            vanish.passed = false;
            vanish.detail = "coefficient " + detail::type_key(c.type) + " = " + to_string(c.value);
            break;
        }
    }
    rep.assertions.push_back(vanish);
    if (rep.s == 0)
        return rep;

    std::vector<Filtration> reduced;
    for (std::size_t k = 0; k < rep.s; ++k)
        reduced.push_back(Fs[rep.order[k]]);
    const auto sub = mixed_multiplicities(reduced, opt.mixed);
    Assertion match{"thm3-reduced", true, ""};
    for (const auto &c : sub.coeffs) {
        std::vector<int> full(r, 0);
        for (std::size_t k = 0; k < rep.s; ++k)
            full[rep.order[k]] = c.type[k];
        const auto &mine = rep.mixed.at(full);
        if (!close(mine.value, c.value) || is_zero(c.value) || c.value < 0) {
            match.passed = false;
            match.detail = "type " + detail::type_key(full) + ": " + to_string(mine.value) + " vs reduced " +
                           to_string(c.value);
            break;
        }
    }
    rep.assertions.push_back(match);
    return rep;
}

} // namespace mixmul
