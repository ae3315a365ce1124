#pragma once

#include "dzv/integral_words.hpp"
#include "dzv/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dzv {

using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>>;

/// Sets the working precision for subsequently constructed BigReals.
void set_working_digits(int digits);

/// zeta(n) by Euler-Maclaurin summation, accurate to the requested digits.
BigReal zeta_single(int n, int digits);

/// I(0; w; 1) for an admissible word, by splitting the path at 1/2 and
/// convolving the two polylogarithm series (geometric 2^-k convergence).
/// For w = encode(n_1,...,n_r) this is zeta(n_1,...,n_r). Results are cached
/// on disk; set MZV_CACHE_DIR to relocate the cache.
BigReal mzv_numeric(const IntegralWord& w, int digits);

/// |zeta(a,b) - its single-zeta expression| for a, b of different parity.
BigReal verify_parity_relation(int a, int b, int digits);

/// Residual of the weight-N double-shuffle relation at split j.
BigReal verify_double_shuffle(int N, int j, int digits);

/// coef * (2 pi i)^k * prod zeta(n) * optional zeta(a,b); purely symbolic.
struct PeriodExpr {
    Rational coef;
    int two_pi_i_power = 0;
    std::vector<int> zeta_factors;
    std::optional<std::pair<int, int>> double_factor;

    bool is_zero() const { return coef == 0; }
    bool operator==(const PeriodExpr&) const = default;
    std::string str() const;
};

using PeriodMatrix = std::vector<std::vector<PeriodExpr>>;

PeriodMatrix period_matrix(int a, int b);

/// Complex value of each entry as a (real, imaginary) pair; the parity of the
/// (2 pi i) power decides the axis.
std::vector<std::vector<std::pair<BigReal, BigReal>>> numeric_instantiate(
    const PeriodMatrix& m, int digits);

}  // namespace dzv
