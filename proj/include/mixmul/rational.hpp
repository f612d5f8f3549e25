#pragma once

// Exact integer and rational scalars used throughout the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mixmul {

using Integer = mpz_class;
using Rational = mpq_class;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer &num, const Integer &den = 1)
{
    if (den == 0)
        throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational &r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer &z) { return z.get_str(); }

inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw Error("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw Error("malformed rational literal '" + s + "'");
    if (r.get_den() == 0)
        throw Error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline Integer floor_of(const Rational &r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer ceil_of(const Rational &r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline double to_double(const Rational &r) { return r.get_d(); }

inline Rational abs_of(const Rational &r) { return r < 0 ? Rational(-r) : r; }

inline Rational pow_of(const Rational &base, unsigned exp)
{
    Rational out(1);
    for (unsigned i = 0; i < exp; ++i)
        out *= base;
    return out;
}

inline Integer factorial(unsigned n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Integer binomial(unsigned n, unsigned k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline std::int64_t to_int64(const Integer &z)
{
    if (!z.fits_slong_p())
        throw Error("integer out of 64-bit range: " + z.get_str());
    return z.get_si();
}

} // namespace mixmul
