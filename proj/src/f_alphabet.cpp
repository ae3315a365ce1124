#include "dzv/f_alphabet.hpp"

#include "dzv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dzv {

FWord::FWord(std::initializer_list<int> ls, int f2_exp) : letters(ls), f2(f2_exp) {
    for (int l : letters)
        if (l < 3 || l % 2 == 0) throw DomainError("FWord: letters must be odd and >= 3");
    if (f2 < 0) throw DomainError("FWord: f2 exponent must be >= 0");
}

int FWord::degree() const {
    return std::accumulate(letters.begin(), letters.end(), 0) + 2 * f2;
}

std::string FWord::str() const {
    if (letters.empty() && f2 == 0) return "1";
    std::ostringstream os;
    for (int l : letters) os << "f" << l;
    if (f2 == 1) os << "f2";
    if (f2 > 1) os << "f2^" << f2;
    return os.str();
}

FPoly FPoly::one() {
    return word(FWord{});
}

FPoly FPoly::word(FWord w, Rational c) {
    FPoly p;
    p.add_term(w, c);
    return p;
}

FPoly FPoly::letter(int r) {
    if (r < 3 || r % 2 == 0) throw DomainError("FPoly::letter: need odd r >= 3");
    FWord w;
    w.letters = {r};
    return word(w);
}

FPoly FPoly::f2_power(int k, Rational c) {
    FWord w;
    w.f2 = k;
    return word(w, std::move(c));
}

Rational FPoly::coefficient(const FWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FPoly::add_term(const FWord& w, const Rational& c) {
    if (c == 0) return;
    Rational& r = terms_[w];
    r += c;
    if (r == 0) terms_.erase(w);
}

FPoly& FPoly::operator+=(const FPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FPoly& FPoly::operator-=(const FPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FPoly& FPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, r] : terms_) r *= c;
    return *this;
}

std::vector<int> FPoly::grading() const {
    std::vector<int> degs;
    degs.reserve(terms_.size());
    for (const auto& [w, c] : terms_) degs.push_back(w.degree());
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    return degs;
}

std::string FPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (ac != 1 || (w.letters.empty() && w.f2 == 0)) os << rational_str(ac);
        if (!w.letters.empty() || w.f2 != 0) {
            if (ac != 1) os << "*";
            os << w.str();
        }
    }
    return os.str();
}

void TensorPoly::add_term(const FWord& l, const FWord& r, const Rational& c) {
    if (c == 0) return;
    if (r.f2 != 0) throw DomainError("TensorPoly: right factor cannot carry f_2");
    Key k{l, r};
    Rational& v = terms_[k];
    v += c;
    if (v == 0) terms_.erase(k);
}

namespace {

// All (r,s)-shuffles of two letter sequences, generated recursively.
void shuffle_words(const std::vector<int>& x, std::size_t i, const std::vector<int>& y,
                   std::size_t j, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (i == x.size() && j == y.size()) {
        out.push_back(acc);
        return;
    }
    if (i < x.size()) {
        acc.push_back(x[i]);
        shuffle_words(x, i + 1, y, j, acc, out);
        acc.pop_back();
    }
    if (j < y.size()) {
        acc.push_back(y[j]);
        shuffle_words(x, i, y, j + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

FPoly shuffle(const FPoly& x, const FPoly& y) {
    FPoly out;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            Rational c = cx * cy;
            std::vector<std::vector<int>> words;
            std::vector<int> acc;
            acc.reserve(wx.letters.size() + wy.letters.size());
            shuffle_words(wx.letters, 0, wy.letters, 0, acc, words);
            for (auto& ls : words) {
                FWord w;
                w.letters = std::move(ls);
                w.f2 = wx.f2 + wy.f2;
                out.add_term(w, c);
            }
        }
    return out;
}

TensorPoly deconcat(const FPoly& x) {
    TensorPoly out;
    for (const auto& [w, c] : x.terms()) {
        // All cuts of the odd-letter sequence; f_2 stays on the left.
        for (std::size_t k = 0; k <= w.letters.size(); ++k) {
            FWord l, r;
            l.letters.assign(w.letters.begin(), w.letters.begin() + k);
            l.f2 = w.f2;
            r.letters.assign(w.letters.begin() + k, w.letters.end());
            out.add_term(l, r, c);
        }
    }
    return out;
}

FPoly derivation(int r, const FPoly& x) {
    if (r < 3 || r % 2 == 0) throw DomainError("derivation: need odd r >= 3");
    FPoly out;
    for (const auto& [w, c] : x.terms()) {
        if (w.letters.empty() || w.letters.front() != r) continue;
        FWord rest;
        rest.letters.assign(w.letters.begin() + 1, w.letters.end());
        rest.f2 = w.f2;
        out.add_term(rest, c);
    }
    return out;
}

Rational c_coefficient(int r, const FPoly& x) {
    if (r < 3 || r % 2 == 0) throw DomainError("c_coefficient: need odd r >= 3");
    for (const auto& [w, c] : x.terms())
        if (w.degree() != r)
            throw NonHomogeneousError("c_coefficient: input not homogeneous of degree " +
                                      std::to_string(r));
    FWord single;
    single.letters = {r};
    return x.coefficient(single);
}

FPoly concat_letter(int r, const FPoly& x) {
    if (r < 3 || r % 2 == 0) throw DomainError("concat_letter: need odd r >= 3");
    FPoly out;
    for (const auto& [w, c] : x.terms()) {
        FWord nw;
        nw.letters.reserve(w.letters.size() + 1);
        nw.letters.push_back(r);
        nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.end());
        nw.f2 = w.f2;
        out.add_term(nw, c);
    }
    return out;
}

CoordPoly evaluate_word(const FWord& w) {
    if (w.f2 > 0) return CoordPoly();  // group-like f_2 vanishes on U
    switch (w.letters.size()) {
        case 0:
            return CoordPoly(Rational(1));
        case 1:
            return CoordPoly::var(Coord::lambda(w.letters[0]));
        case 2: {
            int u = w.letters[0], v = w.letters[1];
            if (u < v) return CoordPoly::var(Coord::mu(u, v));
            if (u == v) {
                CoordPoly l = CoordPoly::var(Coord::lambda(u));
                return Rational(1, 2) * (l * l);
            }
            // f_u f_v with u > v: rewrite via f_v shuffle f_u = f_vf_u + f_uf_v.
            CoordPoly lu = CoordPoly::var(Coord::lambda(u));
            CoordPoly lv = CoordPoly::var(Coord::lambda(v));
            return lu * lv - CoordPoly::var(Coord::mu(v, u));
        }
        default:
            throw UnsupportedDepthError("evaluate_word: words of length >= 3 unsupported");
    }
}

std::string latex(const FPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool trivial_word = w.letters.empty() && w.f2 == 0;
        if (ac != 1 || trivial_word) {
            if (ac.get_den() == 1)
                os << ac.get_num().get_str();
            else
                os << "\\frac{" << ac.get_num().get_str() << "}{" << ac.get_den().get_str()
                   << "}";
        }
        for (int l : w.letters) os << "f_{" << l << "}";
        if (w.f2 == 1) os << "f_{2}";
        if (w.f2 > 1) os << "f_{2}^{" << w.f2 << "}";
    }
    return os.str();
}

}  // namespace dzv
