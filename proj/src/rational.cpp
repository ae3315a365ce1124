#include "dzv/rational.hpp"

#include "dzv/errors.hpp"

#include <mutex>
#include <vector>

namespace dzv {

Rational binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial: n must be >= 0");
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(r);
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table;  // guarded by bernoulli_mutex

// Defining recurrence: sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
void extend_bernoulli(long m) {
    if (bernoulli_table.empty()) bernoulli_table.emplace_back(1);
    for (long j = static_cast<long>(bernoulli_table.size()); j <= m; ++j) {
        Rational acc(0);
        for (long k = 0; k < j; ++k) acc += binomial(j + 1, k) * bernoulli_table[k];
        bernoulli_table.emplace_back(-acc / Rational(j + 1));
    }
}

}  // namespace

Rational bernoulli(long m) {
    if (m < 0) throw DomainError("bernoulli: m must be >= 0");
    std::lock_guard lock(bernoulli_mutex);
    extend_bernoulli(m);
    return bernoulli_table[m];
}

Rational even_zeta_ratio(long n) {
    if (n < 1) throw DomainError("even_zeta_ratio: n must be >= 1");
    // zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!) and zeta(2) = pi^2/6,
    // so the pi powers cancel in the ratio:
    //   b_n = (-1)^{n+1} B_{2n} 2^{2n} 6^n / (2 (2n)!).
    mpz_class pow2, pow6, fact;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * n));
    mpz_ui_pow_ui(pow6.get_mpz_t(), 6, static_cast<unsigned long>(n));
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * n));
    Rational b = bernoulli(2 * n) * Rational(pow2 * pow6) / Rational(2 * fact);
    if (n % 2 == 0) b = -b;
    return b;
}

mpz_class factorial(long n) {
    if (n < 0) throw DomainError("factorial: n must be >= 0");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

Rational rational_from_str(std::string_view s) {
    Rational q;
    if (q.set_str(std::string(s), 10) != 0)
        throw DomainError("rational_from_str: malformed rational '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

}  // namespace dzv
