#pragma once

// Filtrations n -> I_n of monomial ideals: concrete kinds plus truncation and
// rescaling combinators.
//
// Thread safety: a Filtration is a cheap handle to shared state. ideal_at may
// be called concurrently from any number of threads; the memo table is
// guarded by a shared_mutex and each level is inserted once (a racing second
// computation of the same level is discarded).

#include <mixmul/monomial_ideal.hpp>
#include <mixmul/surd.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

namespace mixmul {

struct FiltrationSpec;
using SpecPtr = std::shared_ptr<const FiltrationSpec>;

struct AdicSpec {
    MonomialIdeal ideal;
};

struct FixedPlusAdicSpec {
    MonomialIdeal fixed;
    MonomialIdeal adic;
};

struct RoundedValuationSpec {
    std::vector<Rational> weights;
    SurdScalar scale;
};

struct TruncatedSpec {
    SpecPtr base;
    std::int64_t level;
};

struct RescaledSpec {
    SpecPtr base;
    std::int64_t factor;
};

struct FiltrationSpec {
    std::variant<AdicSpec, FixedPlusAdicSpec, RoundedValuationSpec, TruncatedSpec, RescaledSpec> kind;
    std::size_t dim = 0;
};

bool operator==(const FiltrationSpec &a, const FiltrationSpec &b);

inline bool operator==(const AdicSpec &a, const AdicSpec &b) { return a.ideal == b.ideal; }
inline bool operator==(const FixedPlusAdicSpec &a, const FixedPlusAdicSpec &b)
{
    return a.fixed == b.fixed && a.adic == b.adic;
}
inline bool operator==(const RoundedValuationSpec &a, const RoundedValuationSpec &b)
{
    return a.weights == b.weights && a.scale == b.scale;
}
inline bool operator==(const TruncatedSpec &a, const TruncatedSpec &b) { return a.level == b.level && *a.base == *b.base; }
inline bool operator==(const RescaledSpec &a, const RescaledSpec &b) { return a.factor == b.factor && *a.base == *b.base; }
inline bool operator==(const FiltrationSpec &a, const FiltrationSpec &b) { return a.dim == b.dim && a.kind == b.kind; }

inline std::string kind_name(const FiltrationSpec &spec)
{
    static constexpr const char *names[] = {"adic", "fixed-plus-adic", "rounded-valuation", "truncated", "rescaled"};
    return names[spec.kind.index()];
}

inline FiltrationSpec adic_spec(MonomialIdeal I)
{
    const auto d = I.dim();
    return {AdicSpec{std::move(I)}, d};
}

inline FiltrationSpec fixed_plus_adic_spec(MonomialIdeal F, MonomialIdeal J)
{
    const auto d = J.dim();
    return {FixedPlusAdicSpec{std::move(F), std::move(J)}, d};
}

inline FiltrationSpec rounded_valuation_spec(std::vector<Rational> weights, SurdScalar scale)
{
    const auto d = weights.size();
    return {RoundedValuationSpec{std::move(weights), std::move(scale)}, d};
}

// Diagnostics for a spec; empty when valid.
inline std::vector<std::string> spec_problems(const FiltrationSpec &spec)
{
    std::vector<std::string> out;
    std::visit(
        [&](const auto &k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, AdicSpec>) {
                if (k.ideal.dim() != spec.dim)
                    out.push_back("dimension mismatch");
                else if (!is_primary(k.ideal))
                    out.push_back("not m-primary");
            } else if constexpr (std::is_same_v<T, FixedPlusAdicSpec>) {
                if (k.fixed.dim() != spec.dim || k.adic.dim() != spec.dim)
                    out.push_back("dimension mismatch");
                else {
                    if (!is_primary(k.adic))
                        out.push_back("not m-primary");
                    if (k.fixed.is_unit())
                        out.push_back("fixed ideal must be proper");
                }
            } else if constexpr (std::is_same_v<T, RoundedValuationSpec>) {
                if (k.weights.size() != spec.dim)
                    out.push_back("dimension mismatch");
                if (spec.dim < 1 || spec.dim > max_dim)
                    out.push_back("unsupported dimension");
                for (const auto &w : k.weights)
                    if (w <= 0) {
                        out.push_back("weights must be positive");
                        break;
                    }
            } else {
                if (!k.base)
                    out.push_back("missing base filtration");
                else {
                    if (k.base->dim != spec.dim)
                        out.push_back("dimension mismatch");
                    auto inner = spec_problems(*k.base);
                    out.insert(out.end(), inner.begin(), inner.end());
                }
                if constexpr (std::is_same_v<T, TruncatedSpec>) {
                    if (k.level < 1)
                        out.push_back("truncation level must be positive");
                } else if (k.factor < 1)
                    out.push_back("rescale factor must be positive");
            }
        },
        spec.kind);
    return out;
}

namespace detail {

// Minimal exponents a with sum w_i a_i >= n * scale.
inline MonomialIdeal rounded_valuation_ideal(const RoundedValuationSpec &spec, std::int64_t n)
{
    const std::size_t d = spec.weights.size();
    const Integer N(static_cast<long>(n));
    const Rational &wlast = spec.weights.back();
    if (d == 1) {
        Exponent a(1);
        a[0] = to_int64(spec.scale.ceil_gap(0, wlast, N));
        return minimalize({a}, 1);
    }
    // Every minimal generator lies in the box a_i <= ceil(n * scale / w_i).
    std::vector<std::int64_t> bound(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i)
        bound[i] = to_int64(spec.scale.ceil_gap(0, spec.weights[i], N));
    std::vector<Exponent> gens;
    Exponent a(d);
    while (true) {
        Rational offset = 0;
        for (std::size_t i = 0; i + 1 < d; ++i)
            offset += spec.weights[i] * Rational(static_cast<long>(a[i]));
        a[d - 1] = to_int64(spec.scale.ceil_gap(offset, wlast, N));
        gens.push_back(a);
        std::size_t i = 0;
        while (i + 1 < d && ++a[i] > bound[i])
            a[i++] = 0;
        if (i + 1 == d)
            break;
    }
    return minimalize(std::move(gens), d);
}

} // namespace detail

class Filtration {
public:
    explicit Filtration(FiltrationSpec spec) : Filtration(std::make_shared<const FiltrationSpec>(std::move(spec))) {}

    explicit Filtration(SpecPtr spec)
    {
        validate(spec);
        std::shared_ptr<const Filtration> base;
        if (auto *t = std::get_if<TruncatedSpec>(&spec->kind))
            base = std::make_shared<const Filtration>(t->base);
        else if (auto *r = std::get_if<RescaledSpec>(&spec->kind))
            base = std::make_shared<const Filtration>(r->base);
        impl_ = std::make_shared<Impl>(std::move(spec), std::move(base));
    }

    // A truncation or rescaling of an existing handle, sharing its memo table.
    Filtration(FiltrationSpec spec, const Filtration &base)
    {
        auto ptr = std::make_shared<const FiltrationSpec>(std::move(spec));
        validate(ptr);
        if (!std::holds_alternative<TruncatedSpec>(ptr->kind) && !std::holds_alternative<RescaledSpec>(ptr->kind))
            throw Error("only truncations and rescalings take a base");
        impl_ = std::make_shared<Impl>(std::move(ptr), std::make_shared<const Filtration>(base));
    }

    const FiltrationSpec &spec() const noexcept { return *impl_->spec; }
    SpecPtr spec_ptr() const noexcept { return impl_->spec; }
    std::size_t dim() const noexcept { return impl_->spec->dim; }

    bool is_truncation() const noexcept { return std::holds_alternative<TruncatedSpec>(spec().kind); }
    std::int64_t truncation_level() const
    {
        if (!is_truncation())
            throw Error("not a truncated filtration");
        return std::get<TruncatedSpec>(spec().kind).level;
    }
    // Underlying filtration of a truncation or rescaling.
    const Filtration &base() const
    {
        if (!impl_->base)
            throw Error("filtration has no base");
        return *impl_->base;
    }

    MonomialIdeal ideal_at(std::int64_t n) const
    {
        if (n < 0)
            throw Error("negative filtration level");
        if (n == 0)
            return MonomialIdeal::unit(dim());
        if (auto hit = impl_->lookup(n))
            return *hit;
        if (is_truncation())
            return truncated_at(n);
        return impl_->store(n, compute(n));
    }

    std::size_t cached_levels() const
    {
        std::shared_lock lock(impl_->mutex);
        return impl_->memo.size();
    }

    friend bool operator==(const Filtration &a, const Filtration &b) { return a.spec() == b.spec(); }

private:
    static void validate(const SpecPtr &spec)
    {
        if (!spec)
            throw Error("missing filtration spec");
        const auto problems = spec_problems(*spec);
        if (!problems.empty())
            throw Error(problems.front());
    }

    struct Impl {
        Impl(SpecPtr s, std::shared_ptr<const Filtration> b) : spec(std::move(s)), base(std::move(b)) {}

        std::optional<MonomialIdeal> lookup(std::int64_t n) const
        {
            std::shared_lock lock(mutex);
            auto it = memo.find(n);
            if (it == memo.end())
                return std::nullopt;
            return it->second;
        }

        MonomialIdeal store(std::int64_t n, MonomialIdeal I)
        {
            std::unique_lock lock(mutex);
            return memo.emplace(n, std::move(I)).first->second;
        }

        SpecPtr spec;
        std::shared_ptr<const Filtration> base;
        mutable std::shared_mutex mutex;
        std::map<std::int64_t, MonomialIdeal> memo;
    };

    MonomialIdeal compute(std::int64_t n) const
    {
        return std::visit(
            [&](const auto &k) -> MonomialIdeal {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, AdicSpec>)
                    return power(k.ideal, n);
                else if constexpr (std::is_same_v<T, FixedPlusAdicSpec>)
                    return sum(k.fixed, power(k.adic, n));
                else if constexpr (std::is_same_v<T, RoundedValuationSpec>)
                    return detail::rounded_valuation_ideal(k, n);
                else if constexpr (std::is_same_v<T, RescaledSpec>)
                    return base().ideal_at(k.factor * n);
                else
                    throw Error("unreachable");
            },
            spec().kind);
    }

    // I_{a,n} = sum over 1 <= i <= min(a, n-1) of I_i I_{a,n-i}, filled
    // bottom-up from the first missing level so recursion depth stays flat.
    MonomialIdeal truncated_at(std::int64_t n) const
    {
        const std::int64_t a = truncation_level();
        if (n <= a)
            return impl_->store(n, base().ideal_at(n));
        std::int64_t start = n;
        while (start > a && !impl_->lookup(start - 1))
            --start;
        std::optional<MonomialIdeal> last;
        for (std::int64_t m = std::max(start, a + 1); m <= n; ++m) {
            if (auto hit = impl_->lookup(m)) {
                last = *hit;
                continue;
            }
            std::vector<Exponent> gens;
            for (std::int64_t i = 1; i <= std::min(a, m - 1); ++i) {
                const auto P = product(base().ideal_at(i), ideal_at(m - i));
                gens.insert(gens.end(), P.generators().begin(), P.generators().end());
            }
            last = impl_->store(m, minimalize(std::move(gens), dim()));
        }
        return *last;
    }

    std::shared_ptr<Impl> impl_;
};

inline Filtration adic(MonomialIdeal I) { return Filtration(adic_spec(std::move(I))); }
inline Filtration fixed_plus_adic(MonomialIdeal F, MonomialIdeal J)
{
    return Filtration(fixed_plus_adic_spec(std::move(F), std::move(J)));
}
inline Filtration rounded_valuation(std::vector<Rational> weights, SurdScalar scale)
{
    return Filtration(rounded_valuation_spec(std::move(weights), std::move(scale)));
}

// The a-th truncation. Shares the memo table of F.
inline Filtration truncate(const Filtration &F, std::int64_t a)
{
    if (a < 1)
        throw Error("truncation level must be positive");
    return Filtration(FiltrationSpec{TruncatedSpec{F.spec_ptr(), a}, F.dim()}, F);
}

// n -> I_{s n}. Shares the memo table of F.
inline Filtration rescale(const Filtration &F, std::int64_t s)
{
    if (s < 1)
        throw Error("rescale factor must be positive");
    return Filtration(FiltrationSpec{RescaledSpec{F.spec_ptr(), s}, F.dim()}, F);
}

struct NoetherianPeriod {
    std::int64_t period = 0;
    std::int64_t verified_bound = 0;
};

class PeriodNotFound : public Error {
public:
    PeriodNotFound(std::int64_t best, std::int64_t first_failure)
        : Error("no period verified; best candidate " + std::to_string(best) + " fails at i = " +
                std::to_string(first_failure)),
          best_candidate(best), first_failing_i(first_failure)
    {
    }
    std::int64_t best_candidate;
    std::int64_t first_failing_i;
};

namespace detail {

// s divides lcm(1..a) iff every prime power exactly dividing s is <= a.
inline bool divides_lcm_upto(std::int64_t s, std::int64_t a)
{
    for (std::int64_t p = 2; p * p <= s; ++p) {
        if (s % p != 0)
            continue;
        std::int64_t pk = 1;
        while (s % p == 0) {
            s /= p;
            pk *= p;
        }
        if (pk > a)
            return false;
    }
    return s <= a;
}

} // namespace detail

// Smallest divisor s of lcm(1..a), s <= max_candidate, with
// I_{a,s i} = (I_{a,s})^i for 1 <= i <= check_bound.
inline NoetherianPeriod noetherian_period(const Filtration &F, std::int64_t check_bound, std::int64_t max_candidate = 4096)
{
    if (check_bound < 1)
        throw Error("check bound must be positive");
    const std::int64_t a = F.truncation_level();
    std::int64_t best = 0, best_fail = 0;
    for (std::int64_t s = 1; s <= max_candidate; ++s) {
        if (!detail::divides_lcm_upto(s, a))
            continue;
        const auto Is = F.ideal_at(s);
        MonomialIdeal P = Is;
        std::int64_t fail = 0;
        for (std::int64_t i = 2; i <= check_bound; ++i) {
            P = product(P, Is);
            if (!(F.ideal_at(s * i) == P)) {
                fail = i;
                break;
            }
        }
        if (fail == 0)
            return {s, check_bound};
        if (fail > best_fail) {
            best = s;
            best_fail = fail;
        }
    }
    throw PeriodNotFound(best, best_fail);
}

struct SubmultiplicativityReport {
    bool ok = true;
    std::int64_t bound = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> violation;
};

// Checks I_i I_j within I_{i+j} for all i, j >= 1 with i + j <= bound.
// `levels` is any callable n -> MonomialIdeal.
template <class Levels>
SubmultiplicativityReport check_submultiplicative(const Levels &levels, std::int64_t bound)
{
    SubmultiplicativityReport report;
    report.bound = bound;
    for (std::int64_t total = 2; total <= bound; ++total)
        for (std::int64_t i = 1; i <= total / 2; ++i)
            if (!is_subset(product(levels(i), levels(total - i)), levels(total))) {
                report.ok = false;
                report.violation = {{i, total - i}};
                return report;
            }
    return report;
}

inline SubmultiplicativityReport check_submultiplicative(const Filtration &F, std::int64_t bound)
{
    return check_submultiplicative([&](std::int64_t n) { return F.ideal_at(n); }, bound);
}

} // namespace mixmul
