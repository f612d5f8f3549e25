#pragma once

// Positive scalars that are either rationals p/q or square roots sqrt(p/q).
// All comparisons against rationals are exact integer arithmetic.

#include <mixmul/rational.hpp>

#include <cmath>
#include <ostream>
#include <string>

namespace mixmul {

class SurdScalar {
public:
    enum class Kind { rational, sqrt };

    static SurdScalar rational(const Integer &p, const Integer &q = 1) { return SurdScalar(Kind::rational, p, q); }
    static SurdScalar sqrt(const Integer &p, const Integer &q = 1) { return SurdScalar(Kind::sqrt, p, q); }

    Kind kind() const noexcept { return kind_; }
    const Integer &p() const noexcept { return p_; }
    const Integer &q() const noexcept { return q_; }

    // p/q for rational kind, the radicand p/q for the sqrt kind.
    Rational ratio() const { return make_rational(p_, q_); }

    double approx() const
    {
        const double r = to_double(ratio());
        return kind_ == Kind::rational ? r : std::sqrt(r);
    }

    // x >= n * value, exactly.
    bool reached_by(const Rational &x, const Integer &n) const
    {
        if (kind_ == Kind::rational)
            return x >= n * ratio();
        if (n < 0)
            throw Error("negative multiple");
        if (x < 0)
            return false;
        return x * x * q_ >= n * n * p_;
    }

    // Smallest integer k >= 0 with offset + w k >= n * value, for w > 0.
    Integer ceil_gap(const Rational &offset, const Rational &w, const Integer &n) const
    {
        if (reached_by(offset, n))
            return 0;
        Integer k;
        if (kind_ == Kind::rational) {
            k = ceil_of((n * ratio() - offset) / w);
        } else {
            const double guess = (n.get_d() * approx() - to_double(offset)) / to_double(w);
            k = Integer(std::max(0.0, std::floor(guess)));
            while (k > 0 && reached_by(offset + w * Rational(k - 1), n))
                --k;
        }
        while (!reached_by(offset + w * Rational(k), n))
            ++k;
        while (k > 0 && reached_by(offset + w * Rational(k - 1), n))
            --k;
        return k;
    }

    // ceil(n * value).
    Integer ceil_multiple(const Integer &n) const { return ceil_gap(0, 1, n); }

    friend bool operator==(const SurdScalar &, const SurdScalar &) = default;

private:
    SurdScalar(Kind kind, Integer p, Integer q) : kind_(kind), p_(std::move(p)), q_(std::move(q))
    {
        if (q_ == 0)
            throw Error("surd denominator is zero");
        if (p_ <= 0 || q_ < 0)
            throw Error("surd must be positive");
        const Rational r = make_rational(p_, q_);
        p_ = r.get_num();
        q_ = r.get_den();
        if (kind_ == Kind::sqrt && mpz_perfect_square_p(p_.get_mpz_t()) && mpz_perfect_square_p(q_.get_mpz_t())) {
            kind_ = Kind::rational;
            p_ = ::sqrt(p_);
            q_ = ::sqrt(q_);
        }
    }

    Kind kind_;
    Integer p_;
    Integer q_;
};

inline std::string to_string(const SurdScalar &s)
{
    const std::string r = to_string(s.ratio());
    return s.kind() == SurdScalar::Kind::rational ? r : "sqrt(" + r + ")";
}

inline std::ostream &operator<<(std::ostream &os, const SurdScalar &s) { return os << to_string(s); }

} // namespace mixmul
