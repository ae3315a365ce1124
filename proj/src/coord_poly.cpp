#include "dzv/coord_poly.hpp"

#include <sstream>

namespace dzv {

std::string Coord::str() const {
    std::ostringstream os;
    if (is_lambda())
        os << "lambda_" << u;
    else
        os << "mu_{" << u << "," << v << "}";
    return os.str();
}

CoordPoly::CoordPoly(Rational c) {
    if (c != 0) terms_[Monomial{}] = std::move(c);
}

CoordPoly CoordPoly::var(Coord x) {
    CoordPoly p;
    p.terms_[Monomial{{x, 1}}] = 1;
    return p;
}

CoordPoly& CoordPoly::operator+=(const CoordPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        Rational& r = terms_[m];
        r += c;
        if (r == 0) terms_.erase(m);
    }
    return *this;
}

CoordPoly& CoordPoly::operator-=(const CoordPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        Rational& r = terms_[m];
        r -= c;
        if (r == 0) terms_.erase(m);
    }
    return *this;
}

CoordPoly operator*(const CoordPoly& a, const CoordPoly& b) {
    CoordPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            CoordPoly::Monomial m = ma;
            for (const auto& [x, e] : mb) m[x] += e;
            Rational& r = out.terms_[m];
            r += ca * cb;
            if (r == 0) out.terms_.erase(m);
        }
    return out;
}

CoordPoly& CoordPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, r] : terms_) r *= c;
    return *this;
}

CoordPoly CoordPoly::derivative(Coord x) const {
    CoordPoly out;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(x);
        if (it == m.end()) continue;
        Monomial dm = m;
        int e = it->second;
        if (e == 1)
            dm.erase(x);
        else
            dm[x] = e - 1;
        Rational& r = out.terms_[dm];
        r += c * e;
        if (r == 0) out.terms_.erase(dm);
    }
    return out;
}

Rational CoordPoly::eval(const std::map<Coord, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [x, e] : m) {
            auto it = point.find(x);
            Rational base = it == point.end() ? Rational(0) : it->second;
            for (int i = 0; i < e; ++i) v *= base;
        }
        total += v;
    }
    return total;
}

bool CoordPoly::as_scaled_coord(Rational& c, Coord& x) const {
    if (terms_.size() != 1) return false;
    const auto& [m, coef] = *terms_.begin();
    if (m.size() != 1 || m.begin()->second != 1) return false;
    c = coef;
    x = m.begin()->first;
    return true;
}

bool CoordPoly::as_scaled_square(Rational& c, Coord& x) const {
    if (terms_.size() != 1) return false;
    const auto& [m, coef] = *terms_.begin();
    if (m.size() != 1 || m.begin()->second != 2) return false;
    c = coef;
    x = m.begin()->first;
    return true;
}

std::string CoordPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_str(c);
        for (const auto& [x, e] : m) {
            os << "*" << x.str();
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace dzv
