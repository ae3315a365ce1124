#include "dzv/integral_words.hpp"

#include "dzv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dzv {

std::string level_str(Level lv) {
    switch (lv) {
        case Level::m: return "m";
        case Level::a: return "a";
        case Level::L: return "L";
    }
    return "?";
}

int IntegralWord::depth() const {
    return static_cast<int>(std::count(interior.begin(), interior.end(), 1));
}

bool IntegralWord::admissible() const {
    return !interior.empty() && interior.front() == 1 && interior.back() == 0;
}

std::string IntegralWord::str() const {
    std::ostringstream os;
    os << "I^" << level_str(level) << "(" << left << ";";
    for (int b : interior) os << b;
    os << ";" << right << ")";
    return os.str();
}

IntegralWord encode(const std::vector<int>& n) {
    IntegralWord w;
    for (int ni : n) {
        if (ni < 1) throw DomainError("encode: indices must be >= 1");
        w.interior.push_back(1);
        for (int i = 1; i < ni; ++i) w.interior.push_back(0);
    }
    return w;
}

ZetaMultiple reduce_single(const IntegralWord& w) {
    ZetaMultiple z{Rational(0), 0, w.level};
    int N = w.weight();
    // I0: equal boundaries kill every positive-weight symbol.
    if (w.left == w.right && N >= 1) return z;
    // I1: length <= 1 symbols are scalars.
    if (N == 0) {
        z.coef = 1;
        return z;
    }
    if (N == 1) return z;  // I(0;eps;1) = 0 by regularization / I1 splitting
    std::vector<int> interior = w.interior;
    Rational sign(1);
    if (w.left == 1 && w.right == 0) {
        // I2 reversal back to (0, 1) boundaries.
        std::reverse(interior.begin(), interior.end());
        if (N % 2 != 0) sign = -1;
    }
    int depth = static_cast<int>(std::count(interior.begin(), interior.end(), 1));
    if (depth == 0) return z;  // regularized power of dx/x
    if (depth >= 2) throw UnsupportedDepthError("reduce_single: depth >= 2");
    int k = static_cast<int>(std::find(interior.begin(), interior.end(), 1) -
                             interior.begin());
    if (w.level == Level::L && N % 2 == 0) return z;  // zeta^L(even) = 0
    Rational c = binomial(N - 1, k);
    if (k % 2 == 0) c = -c;  // (-1)^{k+1}
    z.coef = sign * c;
    z.weight = N;
    return z;
}

std::pair<Rational, IntegralWord> dual(const IntegralWord& w) {
    if (w.left != 0 || w.right != 1)
        throw BoundaryMismatchError("dual: requires boundaries (0,1)");
    IntegralWord d = w;
    for (int& b : d.interior) b = 1 - b;
    std::reverse(d.interior.begin(), d.interior.end());
    Rational sign = (w.weight() % 2 == 0) ? 1 : -1;
    return {sign, d};
}

}  // namespace dzv
