#include "dzv/galois.hpp"

#include "dzv/coaction.hpp"
#include "dzv/errors.hpp"
#include "dzv/f_alphabet.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace dzv {

IndexData index_sets(int a, int b) {
    if (a < 1 || b < 2) throw OutOfRangeError("index_sets: need a >= 1 and b >= 2");
    IndexData out;
    out.N = a + b;
    std::set<int> I;
    if (a == b) {
        I = {0, a, 2 * a};
    } else {
        I.insert(0);
        I.insert(out.N);
        int lo = (b < a) ? b : a + 1;
        for (int i = lo; i <= out.N - 2; ++i)
            if (i % 2 == 1) I.insert(i);
    }
    out.I.assign(I.begin(), I.end());
    for (auto it = out.I.rbegin(); it != out.I.rend(); ++it)
        out.J.push_back(out.N - *it);
    out.d = static_cast<int>(out.I.size());
    return out;
}

int d_closed_form(int a, int b) {
    if (a < 1 || b < 2) throw OutOfRangeError("d_closed_form: need a >= 1 and b >= 2");
    if (a == b) return 3;
    if (b < a) {
        if (a % 2 == 1) return (a + 3) / 2;
        if (b % 2 == 0) return a / 2 + 1;
        return a / 2 + 2;
    }
    if (b % 2 == 0) return b / 2 + 1;
    if (a % 2 == 1) return (b + 1) / 2;
    return (b + 3) / 2;
}

bool ij_disjoint_criterion(int a, int b) {
    if (a == b || (a + b) % 2 != 0)
        throw ParityMismatchError("ij_disjoint_criterion: need a != b of the same parity");
    int N = a + b;
    return N % 4 == 0 && a == N / 2 - 1;
}

std::vector<BasisElement> motive_basis(int a, int b) {
    IndexData ix = index_sets(a, b);
    int N = ix.N;
    std::vector<int> weights;
    if (a == b)
        weights = (a % 2 == 0) ? std::vector<int>{2 * a} : std::vector<int>{0, a, 2 * a};
    else
        weights = ((a + b) % 2 == 0) ? ix.I : ix.J;
    std::vector<BasisElement> basis;
    for (int w : weights) {
        std::ostringstream label;
        if (w == 0)
            label << "1";
        else if (w == N)
            label << "zeta(" << a << "," << b << ")";
        else
            label << "zeta(" << w << ")";
        basis.push_back({w, label.str()});
    }
    return basis;
}

Rational UnipotentElement::lambda_at(int w) const {
    auto it = lambda.find(w);
    return it == lambda.end() ? Rational(0) : it->second;
}

Rational UnipotentElement::mu_at(int u, int v) const {
    auto it = mu.find({u, v});
    return it == mu.end() ? Rational(0) : it->second;
}

std::map<Coord, Rational> UnipotentElement::as_point() const {
    std::map<Coord, Rational> pt;
    for (const auto& [w, x] : lambda) pt[Coord::lambda(w)] = x;
    for (const auto& [uv, x] : mu) pt[Coord::mu(uv.first, uv.second)] = x;
    return pt;
}

UnipotentElement compose(const UnipotentElement& g, const UnipotentElement& h) {
    UnipotentElement out = g;
    for (const auto& [w, x] : h.lambda) out.lambda[w] += x;
    for (const auto& [uv, x] : h.mu) out.mu[uv] += x;
    // Deconcatenation convolution: the word f_u f_v picks up f_u(g) f_v(h).
    std::set<std::pair<int, int>> keys;
    for (const auto& [uv, x] : out.mu) keys.insert(uv);
    for (const auto& [w, x] : g.lambda)
        for (const auto& [w2, x2] : h.lambda)
            if (w < w2) keys.insert({w, w2});
    for (const auto& uv : keys)
        out.mu[uv] += g.lambda_at(uv.first) * h.lambda_at(uv.second);
    return out;
}

SymbolicMatrix unipotent_action_symbolic(int a, int b) {
    std::vector<BasisElement> basis = motive_basis(a, b);
    int n = static_cast<int>(basis.size());
    auto row_of = [&](int w) {
        for (int i = 0; i < n; ++i)
            if (basis[i].weight == w) return i;
        throw Error("unipotent_action: weight outside the motive basis");
    };

    SymbolicMatrix M(n, std::vector<CoordPoly>(n));
    for (int i = 0; i < n; ++i) M[i][i] = CoordPoly(Rational(1));

    // Columns of the single-zeta basis vectors: odd ones pick up lambda_w in
    // the unit coordinate, even ones are fixed.
    for (int j = 0; j + 1 < n; ++j) {
        int w = basis[j].weight;
        if (w >= 3 && w % 2 == 1)
            M[row_of(0)][j] += CoordPoly::var(Coord::lambda(w));
    }

    // Last column: deconcatenate the decomposition of zeta(a,b).
    TensorPoly dec = deconcat(decompose(a, b).value);
    for (const auto& [key, c] : dec.terms()) {
        const FWord& left = key.first;
        const FWord& right = key.second;
        if (right.letters.empty()) continue;  // the fixed part
        int w = left.degree();
        CoordPoly contrib = c * evaluate_word(right);
        if (left.letters.empty() && left.f2 > 0) {
            // Basis vector at even weight is zeta(2k), whose image is
            // even_zeta_ratio(k) * f_2^k; renormalize.
            contrib *= Rational(1) / even_zeta_ratio(left.f2);
        }
        M[row_of(w)][n - 1] += contrib;
    }
    return M;
}

RationalMatrix unipotent_action(int a, int b, const UnipotentElement& u) {
    SymbolicMatrix S = unipotent_action_symbolic(a, b);
    std::map<Coord, Rational> pt = u.as_point();
    RationalMatrix M(S.size(), std::vector<Rational>(S.size()));
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = 0; j < S.size(); ++j) M[i][j] = S[i][j].eval(pt);
    return M;
}

std::string EntryDescriptor::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Zero: os << "0"; break;
        case Kind::One: os << "1"; break;
        case Kind::TorusPower: os << "t^" << power; break;
        case Kind::FreeParam: os << name; break;
        case Kind::Scaled:
            if (c == -1)
                os << "-" << name;
            else
                os << rational_str(c) << "*" << name;
            break;
        case Kind::Square: os << rational_str(c) << "*" << name << "^2"; break;
    }
    return os.str();
}

GaloisPresentation group_presentation(int a, int b) {
    std::vector<BasisElement> basis = motive_basis(a, b);
    SymbolicMatrix S = unipotent_action_symbolic(a, b);
    int n = static_cast<int>(basis.size());

    GaloisPresentation p;
    for (const auto& e : basis) p.basis_weights.push_back(e.weight);
    p.entries.assign(n, std::vector<EntryDescriptor>(n));

    // First occurrence of each lambda coordinate, row-major.
    struct Seen {
        std::pair<int, int> cell;
        Rational coef;
    };
    std::map<std::string, Seen> seen;
    std::set<std::string> used_names;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            EntryDescriptor& e = p.entries[i][j];
            if (i == j) {
                int w = basis[i].weight;
                if (w == 0) {
                    e.kind = EntryDescriptor::Kind::One;
                } else {
                    e.kind = EntryDescriptor::Kind::TorusPower;
                    e.power = w;
                }
                continue;
            }
            if (i > j || S[i][j].is_zero()) {
                e.kind = EntryDescriptor::Kind::Zero;
                continue;
            }
            Rational c;
            Coord x;
            if (S[i][j].as_scaled_coord(c, x) && x.is_lambda()) {
                std::string name = "alpha_" + std::to_string(x.u);
                auto it = seen.find(name);
                if (it == seen.end()) {
                    e.kind = EntryDescriptor::Kind::FreeParam;
                    e.name = name;
                    seen[name] = {{i + 1, j + 1}, c};
                    used_names.insert(name);
                } else {
                    e.kind = EntryDescriptor::Kind::Scaled;
                    e.name = name;
                    e.c = c / it->second.coef;
                    p.ties.push_back({it->second.cell, {i + 1, j + 1}, e.c});
                }
                continue;
            }
            if (S[i][j].as_scaled_square(c, x) && x.is_lambda()) {
                e.kind = EntryDescriptor::Kind::Square;
                e.name = "alpha_" + std::to_string(x.u);
                e.c = c;
                continue;
            }
            // Mixed polynomial: an independent coordinate of the group.
            std::string name =
                "alpha_" + std::to_string(basis[j].weight - basis[i].weight);
            while (used_names.count(name)) name += "'";
            used_names.insert(name);
            e.kind = EntryDescriptor::Kind::FreeParam;
            e.name = name;
        }
    return p;
}

int presentation_dimension(const GaloisPresentation& p) {
    std::set<std::string> params;
    for (const auto& row : p.entries)
        for (const auto& e : row)
            if (e.kind == EntryDescriptor::Kind::FreeParam) params.insert(e.name);
    return 1 + static_cast<int>(params.size());
}

namespace {

int matrix_rank(std::vector<std::vector<Rational>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (int c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

DimensionResult dimension(int a, int b, unsigned long seed) {
    DimensionResult out;
    if (a == b) {
        out.formula = (a % 2 == 0) ? 1 : 2;
    } else if ((a + b) % 2 == 0) {
        IndexData ix = index_sets(a, b);
        std::vector<int> inter;
        std::set_intersection(ix.I.begin(), ix.I.end(), ix.J.begin(), ix.J.end(),
                              std::back_inserter(inter));
        out.formula = 2 * ix.d - static_cast<int>(inter.size());
    } else {
        out.formula = index_sets(a, b).d;
    }

    SymbolicMatrix S = unipotent_action_symbolic(a, b);
    int n = static_cast<int>(S.size());
    std::vector<CoordPoly> entries;
    std::set<Coord> coords;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (S[i][j].is_zero()) continue;
            entries.push_back(S[i][j]);
            for (const auto& [mono, c] : S[i][j].terms())
                for (const auto& [x, e] : mono) coords.insert(x);
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 10);
    int best = 0;
    for (int trial = 0; trial < 3; ++trial) {
        std::map<Coord, Rational> pt;
        for (const Coord& x : coords) {
            Rational v(num(rng), den(rng));
            v.canonicalize();
            pt[x] = v;
        }
        std::vector<std::vector<Rational>> jac;
        for (const CoordPoly& P : entries) {
            std::vector<Rational> row;
            for (const Coord& x : coords) row.push_back(P.derivative(x).eval(pt));
            jac.push_back(std::move(row));
        }
        best = std::max(best, matrix_rank(std::move(jac)));
    }
    out.rank = 1 + best;
    return out;
}

std::vector<std::pair<int, std::string>> weight_graded_pieces(int a, int b) {
    std::vector<std::pair<int, std::string>> out;
    for (const BasisElement& e : motive_basis(a, b))
        out.push_back({e.weight, "Q(-" + std::to_string(e.weight) + ")"});
    return out;
}

}  // namespace dzv
