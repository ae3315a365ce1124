#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dzv {

/// Exact rational arithmetic, backed by GMP. Values are always canonical
/// (lowest terms, positive denominator) thanks to mpq_class.
using Rational = mpq_class;

/// Binomial coefficient C(n, k). Out-of-range k (k < 0 or k > n) yields 0;
/// several closed-form sums rely on that convention instead of indicator
/// functions.
Rational binomial(long n, long k);

/// Bernoulli number B_m with the convention B_1 = -1/2. Memoized; safe for
/// concurrent callers.
Rational bernoulli(long m);

/// b_n = zeta(2n) / zeta(2)^n, computed exactly from Bernoulli numbers.
/// This is the rational constant behind the shorthand f_{2n} = b_n f_2^n.
Rational even_zeta_ratio(long n);

/// n! as an exact integer.
mpz_class factorial(long n);

/// "p/q" (or just "p" when q = 1); never floating point.
std::string rational_str(const Rational& q);

Rational rational_from_str(std::string_view s);

}  // namespace dzv
