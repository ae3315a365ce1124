#pragma once

#include "dzv/coord_poly.hpp"
#include "dzv/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dzv {

/// The weight sets I(a,b), J(a,b) = N - I(a,b) and d = |I|.
struct IndexData {
    std::vector<int> I;
    std::vector<int> J;
    int d = 0;
    int N = 0;

    bool operator==(const IndexData&) const = default;
};

IndexData index_sets(int a, int b);

/// Seven-case closed form for d(a,b).
int d_closed_form(int a, int b);

/// True iff (I cap J) minus {0, N} is empty; requires a != b of the same
/// parity. Closed form: 4 | N and a = N/2 - 1.
bool ij_disjoint_criterion(int a, int b);

struct BasisElement {
    int weight = 0;
    std::string label;

    bool operator==(const BasisElement&) const = default;
};

/// Ascending-weight basis of the minimal motive: unit, single zetas, and
/// zeta(a,b) on top.
std::vector<BasisElement> motive_basis(int a, int b);

/// A rational point of the prounipotent group in the lambda/mu coordinates.
struct UnipotentElement {
    std::map<int, Rational> lambda;                  // odd weight -> value
    std::map<std::pair<int, int>, Rational> mu;      // (u,v), u < v

    Rational lambda_at(int w) const;
    Rational mu_at(int u, int v) const;
    std::map<Coord, Rational> as_point() const;
};

/// Group law induced by deconcatenation: lambda adds, mu picks up the
/// cross term lambda_u * lambda'_v.
UnipotentElement compose(const UnipotentElement& g, const UnipotentElement& h);

using RationalMatrix = std::vector<std::vector<Rational>>;
using SymbolicMatrix = std::vector<std::vector<CoordPoly>>;

/// Matrix of the generic unipotent element on motive_basis(a,b); entry (i,j)
/// is the coefficient of basis vector i in the image of basis vector j.
SymbolicMatrix unipotent_action_symbolic(int a, int b);

/// The same matrix evaluated at a concrete element.
RationalMatrix unipotent_action(int a, int b, const UnipotentElement& u);

struct EntryDescriptor {
    enum class Kind { Zero, One, TorusPower, FreeParam, Scaled, Square };
    Kind kind = Kind::Zero;
    int power = 0;       // TorusPower
    Rational c;          // Scaled / Square prefactor
    std::string name;    // FreeParam / Scaled / Square parameter

    bool operator==(const EntryDescriptor&) const = default;
    std::string str() const;
};

struct Tie {
    std::pair<int, int> first_cell;  // 1-based (row, col)
    std::pair<int, int> later_cell;
    Rational ratio;

    bool operator==(const Tie&) const = default;
};

struct GaloisPresentation {
    std::vector<int> basis_weights;
    std::vector<std::vector<EntryDescriptor>> entries;
    std::vector<Tie> ties;

    bool operator==(const GaloisPresentation&) const = default;
};

GaloisPresentation group_presentation(int a, int b);

/// 1 (torus) plus the number of distinct free parameters.
int presentation_dimension(const GaloisPresentation& p);

struct DimensionResult {
    int formula = 0;
    int rank = 0;

    bool operator==(const DimensionResult&) const = default;
};

/// formula: closed form of the group dimension. rank: 1 plus the exact rank
/// of the Jacobian of the symbolic action entries, maximized over random
/// rational points drawn from the seed.
DimensionResult dimension(int a, int b, unsigned long seed = 12345);

std::vector<std::pair<int, std::string>> weight_graded_pieces(int a, int b);

}  // namespace dzv
