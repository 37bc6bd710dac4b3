// The cosmological polytope of a multigraph: lattice points, placing
// triangulations seeded at the standard simplex, cell decorations, and the
// bijection between maximal cells and decorated graphs.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cosmo/exact.hpp"
#include "cosmo/multigraph.hpp"
#include "cosmo/polynomial.hpp"

namespace cosmo {

enum class PointKind { node_unit, edge_unit, squiggle, left_arrow, right_arrow };

struct LatticePoint {
    PointKind kind = PointKind::node_unit;
    int index = 0;            // node id for node_unit, edge id otherwise
    std::vector<int> coords;  // length n+m, entries in {-1,0,1,2}, sum 1

    // "v:<u>", "e:<f>", "sq:<f>", "la:<f>", "ra:<f>"
    std::string label() const;

    QVector rational_coords() const;
};

// All lattice points of the polytope: n node units, and per edge the edge
// unit and squiggle, plus the two arrows unless the edge is a loop (for a
// loop both arrows coincide with the edge unit and are stored once there).
// Ids 0..n-1 are node units, n..n+m-1 edge units, then all squiggles by edge
// index, all left arrows, all right arrows.
std::vector<LatticePoint> lattice_points(const Multigraph& g);

// A maximal cell is a sorted vector of point ids of size n+m.
using Simplex = std::vector<int>;

struct Triangulation {
    Multigraph graph;
    std::vector<LatticePoint> points;
    std::vector<Simplex> cells;  // cell 0 is the standard simplex
    std::vector<std::pair<int, int>> dual_edges;  // cells sharing a facet

    int ambient_dim() const { return graph.node_count() + graph.edge_count(); }
    int dim() const { return ambient_dim() - 1; }

    // Determinant of the point matrix of a cell; unimodular cells give +-1.
    Rat cell_determinant(int cell) const;
    bool contains_standard_simplex() const;
};

// Insertion orders list every non-seed point id exactly once.  The default
// order is squiggles by edge index, then left arrows, then right arrows.
std::vector<int> default_insertion_order(const Multigraph& g);
std::vector<int> random_insertion_order(const Multigraph& g, std::uint64_t seed);

// Incremental placing triangulation of the lattice points, seeded with the
// standard simplex: each point is coned over the boundary facets it strictly
// sees.  Deterministic for a fixed order.
Triangulation placing_triangulation(const Multigraph& g, const std::vector<int>& order);
Triangulation placing_triangulation(const Multigraph& g);

enum class EdgeStatus {
    squiggly,      // squiggle point in the cell
    selected,      // edge unit only
    left,          // left arrow only
    right,         // right arrow only
    double_left,   // edge unit + left arrow
    double_right,  // edge unit + right arrow
};

struct Decoration {
    std::vector<bool> selected_nodes;    // size n
    std::vector<EdgeStatus> edge_status;  // size m

    EdgeSubset squiggle_set() const;
    EdgeSubset double_set() const;
    EdgeSubset right_double_set() const;  // doubles oriented by the right arrow
    int selected_node_count() const;
    // Number of squiggly plus double edges; the cell's exponent in h*.
    int k() const;
};

// Reads the decoration off a maximal cell and validates its invariants:
// every edge carries exactly one admissible point pattern, the double set is
// acyclic, and each component of (V, doubles) holds exactly one selected
// node.  Violations throw internal_error (the triangulation is not good).
Decoration decoration_of(const Triangulation& t, int cell);

struct BijectionReport {
    bool ok = false;
    std::size_t cell_count = 0;
    std::size_t expected_count = 0;  // 2^m * #acyclic subsets
    std::string witness;             // first mismatch, empty when ok
};

// Checks that cell -> (squiggle set, oriented double set) is a bijection
// onto all pairs (Q, oriented acyclic loop-free H) with Q disjoint from H.
BijectionReport verify_main_bijection(const Triangulation& t);

struct AffineCoordinates {
    std::map<int, Rat> node_coefficient;  // keyed by selected node
    std::map<int, Rat> edge_coefficient;  // keyed by double edge, direction tail - head
};

// Writes e_w as sum lambda_u e_u over selected nodes plus
// sum lambda_f (e_tail - e_head) over double edges of the cell.
AffineCoordinates affine_coordinates(const Triangulation& t, int cell, int node);

// h* as the histogram of k(S) over the maximal cells.
Poly h_vector_from_triangulation(const Triangulation& t);

}  // namespace cosmo
