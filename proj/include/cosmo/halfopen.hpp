// Half-open decomposition of a triangulation via a generic interior
// visibility point, and the three lattice-point counters cross-checked
// against each other.
#pragma once

#include "cosmo/polytope.hpp"

namespace cosmo {

struct HalfOpenCell {
    int cell = 0;                    // index into Triangulation::cells
    std::vector<int> removed_apexes;  // removed facet = cell minus this point id

    std::size_t removed_count() const { return removed_apexes.size(); }
};

struct HalfOpenDecomposition {
    QVector visibility_point;
    int retries = 0;  // perturbation halvings that were needed
    std::vector<HalfOpenCell> cells;  // parallel to the triangulation's cells
};

// Chooses q* = (1-delta) q + delta b with q the node-unit average and b the
// barycenter of the standard simplex, delta = 1/(8(n+m)).  A cell loses the
// facets whose hyperplanes strictly separate it from q*.  delta is halved
// (at most 64 times) until q* avoids every cell-facet hyperplane and every
// cell loses exactly its k(S) facets.
HalfOpenDecomposition half_open_decomposition(const Triangulation& t);

// L(j) = sum_i h*_i C(j + d - i, d) for a d-dimensional polytope.
Int ehrhart_from_hstar(const Poly& hstar, int d, long j);

// L(j) = sum_S C(j + d - |B(S)|, d) over the half-open cells.
Int ehrhart_from_halfopen(const Triangulation& t, const HalfOpenDecomposition& h, long j);

struct BruteLimits {
    int max_dim = 5;       // n + m
    long max_dilation = 4;
};

// Counts |jP ∩ Z^(n+m)| directly: integer vectors with coordinate sum j,
// node coordinates in [-j, 2j] and edge coordinates in [-j, j], membership
// decided by the exact LP.  Deliberately independent of the triangulation.
Int ehrhart_brute(const Multigraph& g, long j, const BruteLimits& limits = {});

// Membership backends for x with coordinate sum 1.
bool membership_lp(const QVector& x, const std::vector<LatticePoint>& pts);
bool membership_triangulation(const QVector& x, const Triangulation& t);

// h* read off a default placing triangulation; the geometric route.
Poly hstar_triangulation(const Multigraph& g);

}  // namespace cosmo
