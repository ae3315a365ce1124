#pragma once

#include "dzv/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace dzv {

/// The three levels of the tower: full motivic, the intermediate quotient, and
/// the coefficient level where even zetas die.
enum class Level { m, a, L };

std::string level_str(Level lv);

/// The symbol I^level(left; interior; right) with a {0,1} interior string.
struct IntegralWord {
    int left = 0;
    std::vector<int> interior;  // bits
    int right = 1;
    Level level = Level::m;

    int weight() const { return static_cast<int>(interior.size()); }
    int depth() const;
    bool admissible() const;

    auto operator<=>(const IntegralWord&) const = default;
    std::string str() const;
};

/// coef * zeta^level(weight); weight 0 stands for the unit.
struct ZetaMultiple {
    Rational coef;
    int weight = 0;  // 0 = unit, otherwise >= 2
    Level level = Level::m;

    bool operator==(const ZetaMultiple&) const = default;
};

/// Word for zeta(n_1, ..., n_r): interior is the blocks 1 0^{n_i - 1},
/// boundaries (0, 1), level m. Depth signs are the caller's business.
IntegralWord encode(const std::vector<int>& n);

/// Canonical reduction of a depth <= 1 symbol to a multiple of a single zeta.
/// Throws UnsupportedDepthError at depth >= 2.
ZetaMultiple reduce_single(const IntegralWord& w);

/// Duality: complement and reverse the interior; returns the sign (-1)^weight.
/// Requires boundaries (0, 1).
std::pair<Rational, IntegralWord> dual(const IntegralWord& w);

}  // namespace dzv
