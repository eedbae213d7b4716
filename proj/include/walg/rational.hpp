#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace walg {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

// Always "p/q", integers included.
inline std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string_view text)
{
    Rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("malformed rational: " + std::string(text));
    q.canonicalize();
    return q;
}

// C(n, k) for any integer n and k >= 0; C(-1, k) = (-1)^k.
inline Rational binomial(long n, long k)
{
    if (k < 0)
        return Rational(0);
    Rational result(1);
    for (long i = 0; i < k; ++i) {
        result *= Rational(n - i);
        result /= Rational(i + 1);
    }
    return result;
}

inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace walg
