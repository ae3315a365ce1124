#include "dzv/coaction.hpp"

#include "dzv/errors.hpp"
#include "dzv/integral_words.hpp"

namespace dzv {

namespace {

void check_args(int a, int b, int r) {
    if (a < 1 || b < 2) throw OutOfRangeError("need a >= 1 and b >= 2");
    if (r % 2 == 0 || r < 3 || r > a + b - 2)
        throw OutOfRangeError("r must be odd and 3 <= r <= a+b-2");
}

}  // namespace

CoactionResult coaction_brute(int a, int b, int r) {
    check_args(a, b, r);
    int N = a + b;
    // eps[0..N+1]: boundaries plus the encoded interior.
    std::vector<int> eps;
    eps.push_back(0);
    IntegralWord full = encode({a, b});
    eps.insert(eps.end(), full.interior.begin(), full.interior.end());
    eps.push_back(1);

    Rational q(0);
    for (int p = 0; p + r + 1 <= N + 1; ++p) {
        IntegralWord left;
        left.left = eps[p];
        left.interior.assign(eps.begin() + p + 1, eps.begin() + p + r + 1);
        left.right = eps[p + r + 1];
        left.level = Level::L;

        IntegralWord right;
        right.interior.assign(eps.begin() + 1, eps.begin() + p + 1);
        right.interior.insert(right.interior.end(), eps.begin() + p + r + 1,
                              eps.end() - 1);
        right.level = Level::m;

        if (left.depth() >= 2) {
            // Both 1s sit in the subword, so the remaining word is all zeros
            // and its regularized value vanishes. Never drop this silently.
            if (reduce_single(right).coef != 0)
                throw Error("coaction_brute: depth-2 cut with nonzero cofactor");
            continue;
        }
        ZetaMultiple zl = reduce_single(left);
        if (zl.coef == 0) continue;
        ZetaMultiple zr = reduce_single(right);
        q += zl.coef * zr.coef;
    }
    return {r, q};
}

CoactionResult coaction_closed(int a, int b, int r) {
    check_args(a, b, r);
    Rational q(0);
    auto sgn = [](int k) { return k % 2 == 0 ? 1 : -1; };
    if (r == a) {  // r odd, so a odd here
        if (a >= b) q = Rational(sgn(b + 1)) * binomial(a - 1, b - 1);
    } else if (a < r) {
        if (b <= r) q = Rational(sgn(b + 1)) * binomial(r - 1, b - 1);
        q += Rational(sgn(a)) * binomial(r - 1, a - 1);
    } else {  // r < a
        if (b <= r) q = Rational(sgn(b + 1)) * binomial(r - 1, b - 1);
    }
    return {r, q};
}

Rational derivation_coefficient(int a, int b, int r) {
    return coaction_closed(a, b, r).q;
}

FPoly phi_single(int w) {
    if (w < 2) throw DomainError("phi_single: need weight >= 2");
    if (w % 2 == 1) return FPoly::letter(w);
    return FPoly::f2_power(w / 2, even_zeta_ratio(w / 2));
}

Decomposition decompose(int a, int b) {
    if (a < 1 || b < 2) throw OutOfRangeError("decompose: need a >= 1 and b >= 2");
    int N = a + b;

    // Coaction path: sum f_r times the derivation image, then the closed-form
    // top coefficient for odd weight (it is invisible to the coaction).
    FPoly from_coaction;
    for (int r = 3; r <= N - 2; r += 2) {
        Rational q = coaction_brute(a, b, r).q;
        if (q != 0) {
            FPoly term = concat_letter(r, phi_single(N - r));
            term *= q;
            from_coaction += term;
        }
    }
    if (N % 2 == 1) {
        Rational cN = binomial(N, a);
        cN = (a % 2 == 0) ? Rational(Rational(-1, 2) * (cN + 1))
                          : Rational(Rational(1, 2) * (cN - 1));
        from_coaction += FPoly::word(FWord{N}, cN);
    }

    // Direct closed form.
    FPoly direct;
    for (int r = 3; r <= N - 2; r += 2) {
        Rational cb = binomial(r - 1, b - 1);
        Rational ca = binomial(r - 1, a - 1);
        Rational coef;
        if (N % 2 == 0)
            coef = (a % 2 == 1) ? cb - ca : ca - cb;
        else
            coef = (a % 2 == 0) ? Rational(cb + ca) : Rational(-(cb + ca));
        if (coef == 0) continue;
        FPoly term = concat_letter(r, phi_single(N - r));
        term *= coef;
        direct += term;
    }
    if (a % 2 == 1 && a >= 3) direct += concat_letter(a, phi_single(b));
    if (N % 2 == 1) {
        Rational cN = binomial(N, a);
        cN = (a % 2 == 0) ? Rational(Rational(-1, 2) * (cN + 1))
                          : Rational(Rational(1, 2) * (cN - 1));
        direct += FPoly::word(FWord{N}, cN);
    }

    if (!(from_coaction == direct))
        throw Error("decompose: coaction path disagrees with closed form");

    Decomposition d;
    d.value = direct;
    d.a = a;
    d.b = b;
    if (N % 2 == 0) d.modulo_f2_power = N / 2;
    return d;
}

}  // namespace dzv
