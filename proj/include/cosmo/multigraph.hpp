// Multigraph representation (loops and parallel edges allowed) and the
// edge-subset enumeration the counting formulas are built on.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cosmo/errors.hpp"

namespace cosmo {

// Bitmask over edge indices 0..m-1, bit e = edge e is in the subset.
using EdgeSubset = std::uint64_t;

struct Edge {
    int tail = 0;  // first endpoint as listed in the input
    int head = 0;
    bool operator==(const Edge&) const = default;
};

class Multigraph {
  public:
    Multigraph() = default;
    Multigraph(int node_count, std::vector<Edge> edges);

    // Text format: '#' comment lines, first significant line "nodes <n>",
    // then one "<u> <v>" edge per line; edge index = order of appearance.
    static Multigraph parse(const std::string& text);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    EdgeSubset full_subset() const;

    bool is_loop(int e) const;
    // Bridge of the full graph: deleting e increases the component count.
    bool is_bridge(int e) const;
    int loop_count() const;

    Multigraph delete_edge(int e) const;
    // Merges the endpoints of e (error if e is a loop); nodes are renumbered
    // densely and the relative order of the surviving edges is preserved.
    Multigraph contract_edge(int e) const;

    // Components of (V, h); isolated nodes count.
    int component_count(EdgeSubset h) const;
    int component_count() const { return component_count(full_subset()); }
    int rank() const { return node_count_ - component_count(); }

    // True iff (V, h) has no cycle; loops and parallel pairs are cycles.
    bool is_acyclic(EdgeSubset h) const;
    bool is_forest() const { return is_acyclic(full_subset()); }

    // Deterministic memoization key: equal keys imply isomorphic graphs.
    // Nodes are relabeled by iterated neighborhood-color refinement before
    // the edge multiset is serialized, so the key does not depend on the
    // order edges were listed in.
    std::string canonical_key() const;

    bool operator==(const Multigraph&) const = default;

  private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
};

// True iff some edge of the subgraph (V, h) is a bridge of (V, h).
// Loops are never bridges.
bool subset_has_bridge(const Multigraph& g, EdgeSubset h);

// Visits every acyclic subset exactly once, in ascending bitmask order.
// Union-find pruning: a branch is entered only if its fixed part is acyclic.
void for_each_acyclic_subset(const Multigraph& g,
                             const std::function<void(EdgeSubset)>& visit);

std::vector<EdgeSubset> acyclic_subsets(const Multigraph& g);

// All h with no bridge in (V, h), ascending bitmask order; always contains 0.
std::vector<EdgeSubset> bridge_free_subsets(const Multigraph& g);

inline int subset_size(EdgeSubset h) { return __builtin_popcountll(h); }

}  // namespace cosmo
