#pragma once

#include "dzv/f_alphabet.hpp"
#include "dzv/rational.hpp"

#include <optional>

namespace dzv {

/// D_r zeta(a,b) = q * zeta^L(r) (x) zeta^m(N-r).
struct CoactionResult {
    int r = 0;
    Rational q;

    bool operator==(const CoactionResult&) const = default;
};

/// The image of zeta(a,b) under the normalized comodule map, as an f-word
/// polynomial. For even a+b the pure f_2 coefficient is undetermined and the
/// result carries modulo_f2_power = (a+b)/2; for odd a+b the value is exact.
struct Decomposition {
    FPoly value;
    std::optional<int> modulo_f2_power;
    int a = 0;
    int b = 0;

    bool operator==(const Decomposition&) const = default;
};

/// Sum over cut positions of the weight-(r, N-r) part of the coaction,
/// reducing both tensor factors to single zetas.
CoactionResult coaction_brute(int a, int b, int r);

/// Four-case closed form for the same quantity.
CoactionResult coaction_closed(int a, int b, int r);

/// q with partial_r zeta(a,b) = q * zeta(N-r).
Rational derivation_coefficient(int a, int b, int r);

/// Image of a single zeta: f_w for odd w >= 3, the rational multiple of a
/// f_2 power for even w, f_3-free unit for w = 0.
FPoly phi_single(int w);

/// Full decomposition; computes both the coaction-derived and the direct
/// closed-form expressions and insists they agree.
Decomposition decompose(int a, int b);

}  // namespace dzv
