#include "dzv/numerics.hpp"

#include "dzv/coaction.hpp"
#include "dzv/errors.hpp"
#include "dzv/f_alphabet.hpp"
#include "dzv/galois.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace dzv {

namespace {

namespace fs = std::filesystem;

BigReal to_big(const Rational& q) {
    return BigReal(q.get_num().get_str()) / BigReal(q.get_den().get_str());
}

BigReal pow10_neg(int k) {
    return pow(BigReal(10), -k);
}

/// On-disk memo for expensive word evaluations; one JSON record per line.
class MzvCache {
public:
    static MzvCache& instance() {
        static MzvCache c;
        return c;
    }

    std::optional<std::string> lookup(const std::string& word, int digits) {
        std::lock_guard lock(mutex_);
        load();
        auto it = map_.find({word, digits});
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void store(const std::string& word, int digits, const std::string& value) {
        std::lock_guard lock(mutex_);
        load();
        map_[{word, digits}] = value;
        fs::path dir = cache_dir();
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) return;  // cache is best-effort
        fs::path tmp = dir / "cache.jsonl.tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            for (const auto& [key, val] : map_) {
                nlohmann::json rec{
                    {"word", key.first}, {"digits", key.second}, {"value", val}};
                out << rec.dump() << "\n";
            }
        }
        fs::rename(tmp, dir / "cache.jsonl", ec);
    }

private:
    static fs::path cache_dir() {
        if (const char* env = std::getenv("MZV_CACHE_DIR")) return fs::path(env);
        return fs::path(".mzv_cache");
    }

    void load() {
        if (loaded_) return;
        loaded_ = true;
        std::ifstream in(cache_dir() / "cache.jsonl");
        if (!in) return;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
            if (rec.is_discarded() || !rec.contains("word") || !rec.contains("digits") ||
                !rec.contains("value"))
                continue;
            map_[{rec["word"].get<std::string>(), rec["digits"].get<int>()}] =
                rec["value"].get<std::string>();
        }
    }

    std::mutex mutex_;
    bool loaded_ = false;
    std::map<std::pair<std::string, int>, std::string> map_;
};

std::string word_key(const IntegralWord& w) {
    std::string s;
    for (int b : w.interior) s += char('0' + b);
    return s;
}

}  // namespace

void set_working_digits(int digits) {
    BigReal::default_precision(digits);
}

BigReal zeta_single(int n, int digits) {
    if (n < 2) throw DomainError("zeta_single: need n >= 2");
    set_working_digits(digits + 15);
    long M = 2L * digits + 30;
    BigReal s(0);
    for (long k = 1; k < M; ++k) s += pow(BigReal(k), -n);
    BigReal Mr(M);
    s += pow(Mr, 1 - n) / (n - 1);
    s += pow(Mr, -n) / 2;
    // Correction terms B_{2j}/(2j)! * n(n+1)...(n+2j-2) * M^{-n-2j+1}.
    BigReal eps = pow10_neg(digits + 10);
    BigReal poch(n);                   // rising factorial with 2j-1 factors
    BigReal mpow = pow(Mr, -n - 1);    // M^{-n-2j+1}
    for (long j = 1; j <= 400; ++j) {
        BigReal term =
            to_big(bernoulli(2 * j) / Rational(factorial(2 * j))) * poch * mpow;
        s += term;
        if (abs(term) < eps) break;
        poch *= BigReal(n + 2 * j - 1) * BigReal(n + 2 * j);
        mpow /= Mr * Mr;
    }
    return s;
}

BigReal mzv_numeric(const IntegralWord& w, int digits) {
    if (!w.admissible()) throw NotAdmissibleError("mzv_numeric: word is not admissible");
    std::string key = word_key(w);
    if (auto hit = MzvCache::instance().lookup(key, digits)) {
        set_working_digits(digits + 15);
        return BigReal(*hit);
    }

    set_working_digits(digits + 15);
    int N = w.weight();
    int T = (digits + 12) * 10 / 3 + 48;  // 2^-T below the error budget
    BigReal half = BigReal(1) / 2;

    auto step = [&](std::vector<BigReal>& c, int bit) {
        std::vector<BigReal> next(c.size(), BigReal(0));
        if (bit == 0) {
            for (std::size_t n = 1; n < c.size(); ++n) next[n] = c[n] / (unsigned)n;
        } else {
            BigReal run(0);
            for (std::size_t n = 1; n < c.size(); ++n) {
                run += c[n - 1];
                next[n] = run / (unsigned)n;
            }
        }
        c = std::move(next);
    };
    auto eval = [&](const std::vector<BigReal>& c) {
        BigReal x(1), s(0);
        for (std::size_t n = 0; n < c.size(); ++n) {
            s += c[n] * x;
            x *= half;
        }
        return s;
    };

    // Prefix series I(0; w_1..w_i; 1/2).
    std::vector<BigReal> pref_vals(N + 1);
    {
        std::vector<BigReal> c(T + 1, BigReal(0));
        c[0] = 1;
        pref_vals[0] = 1;
        for (int i = 1; i <= N; ++i) {
            step(c, w.interior[i - 1]);
            pref_vals[i] = eval(c);
        }
    }
    // Suffix series I(1/2; w_{i+1}..w_N; 1) = I(0; tau; 1/2) with tau the
    // reversed complement of the suffix.
    std::vector<BigReal> suf_vals(N + 1);
    {
        std::vector<BigReal> c(T + 1, BigReal(0));
        c[0] = 1;
        suf_vals[N] = 1;
        for (int m = 1; m <= N; ++m) {
            step(c, 1 - w.interior[N - m]);
            suf_vals[N - m] = eval(c);
        }
    }

    BigReal total(0);
    for (int i = 0; i <= N; ++i) total += pref_vals[i] * suf_vals[i];

    MzvCache::instance().store(key, digits, total.str(digits + 12));
    return total;
}

namespace {

/// Period of a product-form f-word: zeta over each letter times zeta(2)^f2.
BigReal period_of_word(const FWord& w, int digits) {
    BigReal v(1);
    for (int l : w.letters) v *= zeta_single(l, digits);
    for (int k = 0; k < w.f2; ++k) v *= zeta_single(2, digits);
    return v;
}

}  // namespace

BigReal verify_parity_relation(int a, int b, int digits) {
    if ((a + b) % 2 == 0)
        throw ParityMismatchError("verify_parity_relation: need a, b of different parity");
    set_working_digits(digits + 15);
    Decomposition d = decompose(a, b);
    BigReal rhs(0);
    for (const auto& [word, coef] : d.value.terms())
        rhs += to_big(coef) * period_of_word(word, digits);
    BigReal lhs = mzv_numeric(encode({a, b}), digits);
    return abs(lhs - rhs);
}

BigReal verify_double_shuffle(int N, int j, int digits) {
    if (j < 2 || j > N - 2) throw OutOfRangeError("verify_double_shuffle: need 2 <= j <= N-2");
    set_working_digits(digits + 15);
    BigReal lhs = mzv_numeric(encode({j, N - j}), digits) +
                  mzv_numeric(encode({N - j, j}), digits) + zeta_single(N, digits);
    BigReal rhs(0);
    for (int k = 2; k <= N - 1; ++k) {
        Rational c = binomial(k - 1, j - 1) + binomial(k - 1, N - j - 1);
        if (c == 0) continue;
        rhs += to_big(c) * mzv_numeric(encode({N - k, k}), digits);
    }
    return abs(lhs - rhs);
}

std::string PeriodExpr::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool lead = true;
    if (coef != 1 || (two_pi_i_power == 0 && zeta_factors.empty() && !double_factor)) {
        os << rational_str(coef);
        lead = false;
    }
    auto sep = [&] {
        if (!lead) os << "*";
        lead = false;
    };
    if (two_pi_i_power > 0) {
        sep();
        os << "(2*pi*i)^" << two_pi_i_power;
    }
    for (int n : zeta_factors) {
        sep();
        os << "zeta(" << n << ")";
    }
    if (double_factor) {
        sep();
        os << "zeta(" << double_factor->first << "," << double_factor->second << ")";
    }
    return os.str();
}

PeriodMatrix period_matrix(int a, int b) {
    std::vector<BasisElement> basis = motive_basis(a, b);
    int n = static_cast<int>(basis.size());
    int N = a + b;
    PeriodMatrix P(n, std::vector<PeriodExpr>(n));

    auto zeta_expr = [](int w) {
        PeriodExpr e;
        e.coef = 1;
        e.zeta_factors = {w};
        return e;
    };

    for (int k = 0; k < n; ++k) {
        int w = basis[k].weight;
        P[k][k].coef = 1;
        P[k][k].two_pi_i_power = w;
        if (k == n - 1) continue;
        // Last-column entry of this row.
        PeriodExpr& e = P[k][n - 1];
        if (w == 0) {
            if (a == b || (N % 2 == 0)) {
                e.coef = 1;
                e.double_factor = {{a, b}};
            } else {
                e = zeta_expr(N);
            }
        } else {
            e = zeta_expr(N - w);
            e.two_pi_i_power = w;
        }
    }
    // First row of the same-parity matrix carries the single zetas.
    if (a == b ? (a % 2 == 1) : (N % 2 == 0)) {
        for (int k = 1; k + 1 < n; ++k) P[0][k] = zeta_expr(basis[k].weight);
    }
    // 1x1 case: the sole entry is zeta(a,a) itself.
    if (n == 1) {
        P[0][0] = PeriodExpr{};
        P[0][0].coef = 1;
        P[0][0].double_factor = {{a, b}};
    }
    return P;
}

std::vector<std::vector<std::pair<BigReal, BigReal>>> numeric_instantiate(
    const PeriodMatrix& m, int digits) {
    set_working_digits(digits + 15);
    BigReal pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    BigReal two_pi = 2 * pi;
    std::vector<std::vector<std::pair<BigReal, BigReal>>> out;
    for (const auto& row : m) {
        std::vector<std::pair<BigReal, BigReal>> orow;
        for (const PeriodExpr& e : row) {
            if (e.is_zero()) {
                orow.emplace_back(BigReal(0), BigReal(0));
                continue;
            }
            BigReal v = to_big(e.coef);
            for (int n : e.zeta_factors) v *= zeta_single(n, digits);
            if (e.double_factor)
                v *= mzv_numeric(encode({e.double_factor->first, e.double_factor->second}),
                                 digits);
            if (e.two_pi_i_power > 0) v *= pow(two_pi, e.two_pi_i_power);
            switch (e.two_pi_i_power % 4) {
                case 0: orow.emplace_back(v, BigReal(0)); break;
                case 1: orow.emplace_back(BigReal(0), v); break;
                case 2: orow.emplace_back(-v, BigReal(0)); break;
                default: orow.emplace_back(BigReal(0), -v); break;
            }
        }
        out.push_back(std::move(orow));
    }
    return out;
}

}  // namespace dzv
