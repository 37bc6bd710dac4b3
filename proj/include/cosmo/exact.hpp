// Exact rational linear algebra: determinant signs, facet hyperplanes within
// the affine hull sum(x)=1, linear solves, and LP-based convex membership.
#pragma once

#include <optional>
#include <vector>

#include "cosmo/errors.hpp"
#include "cosmo/numeric.hpp"

namespace cosmo {

using QVector = std::vector<Rat>;
using QMatrix = std::vector<QVector>;  // row major

Rat dot(const QVector& a, const QVector& b);
Rat dot(const QVector& a, const std::vector<int>& b);

// Exact determinant by fraction-aware Gaussian elimination.
Rat determinant(QMatrix m);

// Sign of the determinant of the square matrix whose rows are the points;
// 0 iff the points are affinely dependent (points lie on sum(x)=1, so linear
// and affine dependence coincide).
int orientation_sign(const QMatrix& points);

struct Hyperplane {
    QVector normal;  // integral entries, content 1, first nonzero entry positive
    Rat offset;      // eval(x) = normal.x - offset

    Rat eval(const QVector& x) const { return dot(normal, x) - offset; }
    Rat eval(const std::vector<int>& x) const { return dot(normal, x) - offset; }

    bool operator==(const Hyperplane&) const = default;
};

// The hyperplane through d affinely independent points inside the hull
// sum(x)=1 of ambient dimension d+1.  The offset is folded to zero via the
// sum(x)=1 identity, which makes the representation canonical and lets
// facets be deduplicated by exact comparison.  Throws on dependent input.
Hyperplane facet_hyperplane(const QMatrix& points);

// Kernel vector of a matrix with nullity exactly one (up to scale); used by
// facet_hyperplane.  Throws when the nullity is not one.
QVector kernel_vector(QMatrix m, std::size_t cols);

// Exact solve of the square system a x = b; nullopt iff a is singular.
std::optional<QVector> solve_linear(QMatrix a, QVector b);

// True iff x lies in conv(generators).  Decided by an exact phase-1 simplex
// on { lambda >= 0, sum lambda = 1, G lambda = x } with Bland's rule, so
// termination is guaranteed on degenerate inputs.
bool lp_membership(const QVector& x, const QMatrix& generators);

}  // namespace cosmo
