#pragma once

#include "dzv/coord_poly.hpp"
#include "dzv/rational.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace dzv {

/// A word in the odd cogenerators f_3, f_5, ... together with an f_2 power.
/// f_2 is central and group-like on the left, so it is carried as an exponent
/// rather than as a letter.
struct FWord {
    std::vector<int> letters;  // each odd, >= 3; order-sensitive
    int f2 = 0;

    FWord() = default;
    FWord(std::initializer_list<int> ls, int f2_exp = 0);

    int degree() const;
    auto operator<=>(const FWord&) const = default;
    std::string str() const;
};

/// Finite Q-linear combination of FWords in canonical form (no zero
/// coefficients).
class FPoly {
public:
    FPoly() = default;
    static FPoly one();
    static FPoly word(FWord w, Rational c = Rational(1));
    static FPoly letter(int r);
    static FPoly f2_power(int k, Rational c = Rational(1));

    const std::map<FWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const FWord& w) const;

    void add_term(const FWord& w, const Rational& c);
    FPoly& operator+=(const FPoly& o);
    FPoly& operator-=(const FPoly& o);
    friend FPoly operator+(FPoly a, const FPoly& b) { return a += b; }
    friend FPoly operator-(FPoly a, const FPoly& b) { return a -= b; }
    FPoly& operator*=(const Rational& c);
    friend FPoly operator*(const Rational& c, FPoly p) { return p *= c; }
    bool operator==(const FPoly&) const = default;

    /// Multiset of degrees present.
    std::vector<int> grading() const;

    std::string str() const;

private:
    std::map<FWord, Rational> terms_;
};

/// Element of U (x) U': left factor may carry f_2, the right factor never does.
class TensorPoly {
public:
    using Key = std::pair<FWord, FWord>;

    const std::map<Key, Rational>& terms() const { return terms_; }
    void add_term(const FWord& l, const FWord& r, const Rational& c);
    bool operator==(const TensorPoly&) const = default;

private:
    std::map<Key, Rational> terms_;
};

/// Shuffle product; bilinear, f_2 exponents add.
FPoly shuffle(const FPoly& x, const FPoly& y);

/// Deconcatenation coproduct including both trivial cuts. The f_2 power rides
/// entirely on the left tensor factor.
TensorPoly deconcat(const FPoly& x);

/// Strips a leading f_r; kills everything else (including pure f_2 powers).
FPoly derivation(int r, const FPoly& x);

/// Coefficient of the single-letter word f_r in a degree-r homogeneous input.
/// Throws NonHomogeneousError when the input mixes degrees != r.
Rational c_coefficient(int r, const FPoly& x);

/// Prepend f_r to every word of x (the f_r * partial_r term of the cofree
/// decomposition).
FPoly concat_letter(int r, const FPoly& x);

/// The word as a coordinate function on the unipotent group, written in the
/// independent coordinates lambda_u and mu_{u,v} (u < v). Only words of
/// odd-letter length <= 2 are supported; positive f_2 powers evaluate to 0.
CoordPoly evaluate_word(const FWord& w);

std::string latex(const FPoly& p);

}  // namespace dzv
