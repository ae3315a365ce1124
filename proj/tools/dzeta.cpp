#include "dzv/coaction.hpp"
#include "dzv/errors.hpp"
#include "dzv/f_alphabet.hpp"
#include "dzv/galois.hpp"
#include "dzv/numerics.hpp"
#include "dzv/serialize.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iostream>
#include <random>

namespace {

using nlohmann::json;
using namespace dzv;

void print_decomposition(const Decomposition& d, bool as_json, bool as_latex) {
    if (as_json) {
        std::cout << to_json(d).dump(2) << "\n";
        return;
    }
    if (as_latex) {
        std::cout << latex(d.value);
        if (d.modulo_f2_power) std::cout << " \\pmod{f_2^{" << *d.modulo_f2_power << "}}";
        std::cout << "\n";
        return;
    }
    std::cout << "phi(zeta(" << d.a << "," << d.b << ")) = " << d.value.str();
    if (d.modulo_f2_power) std::cout << "  (mod f2^" << *d.modulo_f2_power << ")";
    std::cout << "\n";
}

void print_presentation(int a, int b, const GaloisPresentation& p, bool as_json,
                        unsigned long seed) {
    DimensionResult dim_ab = dimension(a, b, seed);
    if (as_json) {
        json j = to_json(p);
        j["dim_formula"] = dim_ab.formula;
        j["dim_rank"] = dim_ab.rank;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "G(" << a << "," << b << ") on weights";
    for (int w : p.basis_weights) std::cout << " " << w;
    std::cout << ":\n";
    for (const auto& row : p.entries) {
        std::cout << "  [";
        for (std::size_t k = 0; k < row.size(); ++k)
            std::cout << (k ? "  " : "") << row[k].str();
        std::cout << "]\n";
    }
    for (const auto& t : p.ties)
        std::cout << "tie: (" << t.first_cell.first << "," << t.first_cell.second
                  << ") and (" << t.later_cell.first << "," << t.later_cell.second
                  << "), ratio " << rational_str(t.ratio) << "\n";
    std::cout << "dim formula=" << dim_ab.formula << " rank=" << dim_ab.rank << "\n";
}

void print_period(int a, int b, int digits, bool numeric, bool as_json) {
    PeriodMatrix P = period_matrix(a, b);
    if (as_json) {
        json rows = json::array();
        for (const auto& row : P) {
            json jrow = json::array();
            for (const auto& e : row) jrow.push_back(e.str());
            rows.push_back(jrow);
        }
        json out{{"a", a}, {"b", b}, {"entries", rows}};
        if (numeric) {
            auto Pn = numeric_instantiate(P, digits);
            json nrows = json::array();
            for (const auto& row : Pn) {
                json jrow = json::array();
                for (const auto& z : row)
                    jrow.push_back({z.first.str(digits), z.second.str(digits)});
                nrows.push_back(jrow);
            }
            out["numeric"] = nrows;
        }
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (const auto& row : P) {
        std::cout << "[";
        for (std::size_t k = 0; k < row.size(); ++k)
            std::cout << (k ? "  " : "") << row[k].str();
        std::cout << "]\n";
    }
    if (numeric) {
        auto Pn = numeric_instantiate(P, digits);
        for (const auto& row : Pn) {
            std::cout << "[";
            for (std::size_t k = 0; k < row.size(); ++k) {
                const auto& z = row[k];
                std::cout << (k ? "  " : "") << "(" << z.first.str(digits) << ", "
                          << z.second.str(digits) << "i)";
            }
            std::cout << "]\n";
        }
    }
}

struct Report {
    bool all_pass = true;

    void emit(const std::string& check, const std::string& what, bool pass,
              const std::string& detail = "") {
        json line{{"check", check}, {"case", what}, {"pass", pass}};
        if (!detail.empty()) line["detail"] = detail;
        std::cout << line.dump() << "\n";
        if (!pass) all_pass = false;
    }
};

UnipotentElement random_element(int max_weight, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    auto draw = [&] {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        return v;
    };
    UnipotentElement u;
    for (int w = 3; w <= max_weight; w += 2) u.lambda[w] = draw();
    for (int w = 3; w <= max_weight; w += 2)
        for (int v = w + 2; v <= max_weight; v += 2) u.mu[{w, v}] = draw();
    return u;
}

int run_verify(int max_weight, int digits, unsigned long seed) {
    Report rep;
    // Coaction: brute force against the closed form.
    {
        bool ok = true;
        int cap = std::min(max_weight, 24);
        for (int N = 3; N <= cap && ok; ++N)
            for (int a = 1; a <= N - 2 && ok; ++a)
                for (int r = 3; r <= N - 2; r += 2)
                    if (!(coaction_brute(a, N - a, r) == coaction_closed(a, N - a, r))) {
                        ok = false;
                        break;
                    }
        rep.emit("coaction_brute_vs_closed", "N<=" + std::to_string(cap), ok);
    }
    // Decomposition golden cases.
    {
        FPoly g37;
        g37.add_term(FWord{5, 5}, -6);
        g37.add_term(FWord{7, 3}, -14);
        FPoly g34;
        g34.add_term(FWord{7}, 17);
        g34.add_term(FWord({5}, 1), -10);
        bool ok = decompose(3, 7).value == g37 && decompose(3, 4).value == g34 &&
                  decompose(1, 2).value == FPoly::letter(3);
        rep.emit("decomposition_goldens", "(3,7),(3,4),(1,2)", ok);
    }
    // Index set sweeps.
    {
        bool ok = true;
        int cap = std::min(max_weight, 60);
        for (int N = 3; N <= cap && ok; ++N)
            for (int a = 1; a <= N - 2; ++a) {
                IndexData ix = index_sets(a, N - a);
                if (d_closed_form(a, N - a) != ix.d) {
                    ok = false;
                    break;
                }
                if (a != N - a && N % 2 == 0) {
                    std::vector<int> inter;
                    std::set_intersection(ix.I.begin(), ix.I.end(), ix.J.begin(),
                                          ix.J.end(), std::back_inserter(inter));
                    bool direct = static_cast<int>(inter.size()) == 2;
                    if (ij_disjoint_criterion(a, N - a) != direct) {
                        ok = false;
                        break;
                    }
                }
            }
        rep.emit("index_sets", "N<=" + std::to_string(cap), ok);
    }
    // Dimension formula against Jacobian rank.
    {
        int cap = std::min(max_weight, 20);
        std::string bad;
        for (int N = 3; N <= cap; ++N)
            for (int a = 1; a <= N - 2; ++a) {
                DimensionResult d = dimension(a, N - a, seed);
                if (d.formula != d.rank)
                    bad += "(" + std::to_string(a) + "," + std::to_string(N - a) + ")";
            }
        rep.emit("dimension_formula_vs_rank", "N<=" + std::to_string(cap), bad.empty(),
                 bad.empty() ? "" : "mismatches: " + bad);
    }
    // Group law: closure, identity, torus conjugation.
    {
        bool ok = true;
        int cap = std::min(max_weight, 16);
        std::mt19937_64 rng(seed);
        for (int N = 3; N <= cap && ok; ++N)
            for (int a = 1; a <= N - 2 && ok; ++a) {
                int b = N - a;
                UnipotentElement g = random_element(N, rng), h = random_element(N, rng);
                RationalMatrix Mg = unipotent_action(a, b, g);
                RationalMatrix Mh = unipotent_action(a, b, h);
                RationalMatrix Mgh = unipotent_action(a, b, compose(g, h));
                int n = static_cast<int>(Mg.size());
                for (int i = 0; i < n && ok; ++i)
                    for (int j = 0; j < n; ++j) {
                        Rational s(0);
                        for (int k = 0; k < n; ++k) s += Mg[i][k] * Mh[k][j];
                        if (s != Mgh[i][j]) {
                            ok = false;
                            break;
                        }
                    }
            }
        rep.emit("group_law", "N<=" + std::to_string(cap), ok);
    }
    // Numeric identities.
    {
        bool ok = true;
        BigReal tol = pow(BigReal(10), -(digits - 5));
        int cap = std::min(max_weight, 13);
        for (int N = 3; N <= cap && ok; ++N)
            for (int a = 1; a <= N - 2 && ok; ++a)
                if (N % 2 == 1 && verify_parity_relation(a, N - a, digits) > tol)
                    ok = false;
        rep.emit("parity_relations", "N<=" + std::to_string(cap), ok);
        ok = true;
        int dcap = std::min(max_weight, 10);
        for (int N = 4; N <= dcap && ok; ++N)
            for (int j = 2; j <= N - 2 && ok; ++j)
                if (verify_double_shuffle(N, j, digits) > tol) ok = false;
        rep.emit("double_shuffle", "N<=" + std::to_string(dcap), ok);
        ok = true;
        for (int a = 2; a <= 6 && ok; ++a) {
            BigReal lhs = 2 * mzv_numeric(encode({a, a}), digits);
            BigReal rhs = zeta_single(a, digits) * zeta_single(a, digits) -
                          zeta_single(2 * a, digits);
            if (abs(lhs - rhs) > tol) ok = false;
        }
        rep.emit("zeta_aa_identity", "a<=6", ok);
    }
    return rep.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric computations around double zeta values"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json / --latex / --seed follow the subcommand

    bool as_json = false, as_latex = false, numeric = false;
    int a = 0, b = 0, r = 0, digits = 30, max_weight = 12;
    unsigned long seed = 12345;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--latex", as_latex, "LaTeX output");
    app.add_option("--seed", seed, "seed for randomized rank trials");

    auto add_ab = [&](CLI::App* cmd) {
        cmd->add_option("a", a, "first index (>= 1)")->required();
        cmd->add_option("b", b, "second index (>= 2)")->required();
    };
    CLI::App* cmd_dec = app.add_subcommand("decompose", "f-alphabet decomposition");
    add_ab(cmd_dec);
    CLI::App* cmd_coa = app.add_subcommand("coaction", "coaction coefficient D_r");
    add_ab(cmd_coa);
    cmd_coa->add_option("--r", r, "odd weight of the left factor")->required();
    CLI::App* cmd_gal = app.add_subcommand("galois", "Galois group presentation");
    add_ab(cmd_gal);
    CLI::App* cmd_dim = app.add_subcommand("dim", "group dimension, two ways");
    add_ab(cmd_dim);
    CLI::App* cmd_per = app.add_subcommand("period", "period matrix");
    add_ab(cmd_per);
    cmd_per->add_option("--digits", digits, "working precision");
    cmd_per->add_flag("--numeric", numeric, "also print numeric values");
    CLI::App* cmd_ver = app.add_subcommand("verify", "run the identity registry");
    cmd_ver->add_option("--max-weight", max_weight, "largest total weight swept");
    cmd_ver->add_option("--digits", digits, "working precision");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_dec) {
            if (a < 1 || b < 2) throw OutOfRangeError("need a >= 1 and b >= 2");
            print_decomposition(decompose(a, b), as_json, as_latex);
        } else if (*cmd_coa) {
            if (a < 1 || b < 2) throw OutOfRangeError("need a >= 1 and b >= 2");
            if (r % 2 == 0 || r < 3 || r > a + b - 2)
                throw OutOfRangeError("r must be odd and 3 <= r <= a+b-2");
            CoactionResult res = coaction_closed(a, b, r);
            if (as_json)
                std::cout << json{{"a", a}, {"b", b}, {"r", r},
                                  {"q", rational_str(res.q)}}
                                 .dump()
                          << "\n";
            else
                std::cout << "D_" << r << " zeta(" << a << "," << b
                          << ") = " << rational_str(res.q) << " * zeta_L(" << r
                          << ") (x) zeta(" << a + b - r << ")\n";
        } else if (*cmd_gal) {
            if (a < 1 || b < 2) throw OutOfRangeError("need a >= 1 and b >= 2");
            print_presentation(a, b, group_presentation(a, b), as_json, seed);
        } else if (*cmd_dim) {
            if (a < 1 || b < 2) throw OutOfRangeError("need a >= 1 and b >= 2");
            DimensionResult d = dimension(a, b, seed);
            if (as_json)
                std::cout << json{{"a", a}, {"b", b}, {"formula", d.formula},
                                  {"rank", d.rank}}
                                 .dump()
                          << "\n";
            else
                std::cout << "formula=" << d.formula << " rank=" << d.rank << "\n";
        } else if (*cmd_per) {
            if (a < 1 || b < 2) throw OutOfRangeError("need a >= 1 and b >= 2");
            print_period(a, b, digits, numeric, as_json);
        } else if (*cmd_ver) {
            if (max_weight < 5) throw OutOfRangeError("max-weight must be >= 5");
            return run_verify(max_weight, digits, seed);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
