#include "cosmo/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace cosmo {

namespace {

struct UnionFind {
    std::vector<int> parent;
    std::vector<int> size;

    explicit UnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];  // path halving
            x = parent[x];
        }
        return x;
    }

    // Returns false when a and b were already connected (a cycle would close).
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

// Union-find without path compression so merges can be undone; used by the
// subset enumerator, which walks a search tree of prefix merges.
struct RollbackUnionFind {
    std::vector<int> parent;
    std::vector<int> size;
    std::vector<std::pair<int, int>> trail;  // (absorbed root, absorbing root)

    explicit RollbackUnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        trail.emplace_back(b, a);
        return true;
    }

    void undo() {
        auto [b, a] = trail.back();
        trail.pop_back();
        parent[b] = b;
        size[a] -= size[b];
    }
};

}  // namespace

Multigraph::Multigraph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ < 0) throw std::invalid_argument("negative node count");
    for (const Edge& e : edges_) {
        if (e.tail < 0 || e.tail >= node_count_ || e.head < 0 || e.head >= node_count_)
            throw std::invalid_argument("edge endpoint out of range");
    }
    if (edges_.size() > 63) throw size_error("more than 63 edges; subset masks would overflow");
}

Multigraph Multigraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    std::vector<Edge> edges;

    auto fail = [&](const std::string& what) {
        throw parse_error("line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        if (!have_header) {
            std::string keyword;
            fields >> keyword;
            if (keyword != "nodes") fail("expected 'nodes <n>' header before edges");
            long count = -1;
            if (!(fields >> count) || count < 0) fail("expected a non-negative node count");
            std::string extra;
            if (fields >> extra) fail("unexpected token '" + extra + "' after node count");
            n = static_cast<int>(count);
            have_header = true;
            continue;
        }

        long u = 0, v = 0;
        if (!(fields >> u >> v)) fail("expected an edge line '<u> <v>'");
        std::string extra;
        if (fields >> extra) fail("unexpected token '" + extra + "' after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("edge endpoint out of range 0.." + std::to_string(n - 1));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (!have_header) {
        ++line_no;
        fail("missing 'nodes <n>' header");
    }
    return Multigraph(n, std::move(edges));
}

EdgeSubset Multigraph::full_subset() const {
    const int m = edge_count();
    return m == 0 ? 0 : (~EdgeSubset{0} >> (64 - m));
}

bool Multigraph::is_loop(int e) const {
    const Edge& ed = edges_.at(static_cast<std::size_t>(e));
    return ed.tail == ed.head;
}

int Multigraph::loop_count() const {
    int c = 0;
    for (const Edge& e : edges_)
        if (e.tail == e.head) ++c;
    return c;
}

bool Multigraph::is_bridge(int e) const {
    if (is_loop(e)) return false;
    const EdgeSubset all = full_subset();
    return component_count(all & ~(EdgeSubset{1} << e)) > component_count(all);
}

Multigraph Multigraph::delete_edge(int e) const {
    std::vector<Edge> out = edges_;
    out.erase(out.begin() + e);
    return Multigraph(node_count_, std::move(out));
}

Multigraph Multigraph::contract_edge(int e) const {
    const Edge& ce = edges_.at(static_cast<std::size_t>(e));
    if (ce.tail == ce.head) throw std::invalid_argument("cannot contract a loop");
    const int a = std::min(ce.tail, ce.head);
    const int b = std::max(ce.tail, ce.head);
    auto remap = [a, b](int w) {
        if (w == b) return a;
        return w > b ? w - 1 : w;
    };
    std::vector<Edge> out;
    out.reserve(edges_.size() - 1);
    for (int i = 0; i < edge_count(); ++i) {
        if (i == e) continue;
        out.push_back({remap(edges_[i].tail), remap(edges_[i].head)});
    }
    return Multigraph(node_count_ - 1, std::move(out));
}

int Multigraph::component_count(EdgeSubset h) const {
    UnionFind uf(node_count_);
    int components = node_count_;
    for (int e = 0; e < edge_count(); ++e) {
        if (!(h >> e & 1)) continue;
        if (uf.unite(edges_[e].tail, edges_[e].head)) --components;
    }
    return components;
}

bool Multigraph::is_acyclic(EdgeSubset h) const {
    UnionFind uf(node_count_);
    for (int e = 0; e < edge_count(); ++e) {
        if (!(h >> e & 1)) continue;
        if (!uf.unite(edges_[e].tail, edges_[e].head)) return false;
    }
    return true;
}

std::string Multigraph::canonical_key() const {
    const int n = node_count_;
    // Color refinement: start from (degree, loop count), then repeatedly
    // augment each color with the sorted multiset of neighbor colors. The
    // result is edge-order independent; ties are broken by original index,
    // which can split isomorphic graphs into different keys but never
    // merges non-isomorphic ones.
    std::vector<int> deg(n, 0), loops_at(n, 0);
    for (const Edge& e : edges_) {
        if (e.tail == e.head) {
            deg[e.tail] += 2;
            ++loops_at[e.tail];
        } else {
            ++deg[e.tail];
            ++deg[e.head];
        }
    }
    std::vector<int> color(n);
    {
        std::map<std::pair<int, int>, int> ranks;
        for (int v = 0; v < n; ++v) ranks[{deg[v], loops_at[v]}] = 0;
        int next = 0;
        for (auto& [sig, r] : ranks) r = next++;
        for (int v = 0; v < n; ++v) color[v] = ranks[{deg[v], loops_at[v]}];
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) sig[v].first = color[v];
        for (const Edge& e : edges_) {
            if (e.tail == e.head) continue;
            sig[e.tail].second.push_back(color[e.head]);
            sig[e.head].second.push_back(color[e.tail]);
        }
        for (int v = 0; v < n; ++v) std::sort(sig[v].second.begin(), sig[v].second.end());
        std::map<std::pair<int, std::vector<int>>, int> ranks;
        for (int v = 0; v < n; ++v) ranks[sig[v]] = 0;
        int next = 0;
        for (auto& [s, r] : ranks) r = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            const int c = ranks[sig[v]];
            if (c != color[v]) changed = true;
            color[v] = c;
        }
        if (!changed) break;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(color[a], a) < std::pair(color[b], b);
    });
    std::vector<int> relabel(n);
    for (int i = 0; i < n; ++i) relabel[order[i]] = i;

    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges_.size());
    for (const Edge& e : edges_) {
        int u = relabel[e.tail], v = relabel[e.head];
        if (u > v) std::swap(u, v);
        normalized.emplace_back(u, v);
    }
    std::sort(normalized.begin(), normalized.end());

    std::string key = "n" + std::to_string(n) + ";";
    for (const auto& [u, v] : normalized)
        key += std::to_string(u) + "-" + std::to_string(v) + ";";
    return key;
}

bool subset_has_bridge(const Multigraph& g, EdgeSubset h) {
    const int n = g.node_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!(h >> e & 1) || g.is_loop(e)) continue;
        adj[g.edge(e).tail].emplace_back(g.edge(e).head, e);
        adj[g.edge(e).head].emplace_back(g.edge(e).tail, e);
    }
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    struct Frame {
        int node;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1 || adj[s].empty()) continue;
        disc[s] = low[s] = timer++;
        stack.push_back({s, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.node].size()) {
                const auto [w, eid] = adj[f.node][f.next++];
                if (eid == f.parent_edge) continue;  // skip only the tree edge itself
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, eid, 0});
                } else {
                    low[f.node] = std::min(low[f.node], disc[w]);
                }
            } else {
                const Frame done = stack.back();
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[p.node] = std::min(low[p.node], low[done.node]);
                    if (low[done.node] > disc[p.node]) return true;
                }
            }
        }
    }
    return false;
}

namespace {

void acyclic_rec(const Multigraph& g, int bits, EdgeSubset chosen, RollbackUnionFind& uf,
                 const std::function<void(EdgeSubset)>& visit) {
    if (bits == 0) {
        visit(chosen);
        return;
    }
    const int e = bits - 1;
    acyclic_rec(g, bits - 1, chosen, uf, visit);
    if (uf.unite(g.edge(e).tail, g.edge(e).head)) {
        acyclic_rec(g, bits - 1, chosen | (EdgeSubset{1} << e), uf, visit);
        uf.undo();
    }
}

}  // namespace

void for_each_acyclic_subset(const Multigraph& g,
                             const std::function<void(EdgeSubset)>& visit) {
    RollbackUnionFind uf(g.node_count());
    acyclic_rec(g, g.edge_count(), 0, uf, visit);
}

std::vector<EdgeSubset> acyclic_subsets(const Multigraph& g) {
    std::vector<EdgeSubset> out;
    for_each_acyclic_subset(g, [&](EdgeSubset h) { out.push_back(h); });
    return out;
}

std::vector<EdgeSubset> bridge_free_subsets(const Multigraph& g) {
    const int m = g.edge_count();
    if (m > 30) throw size_error("bridge-free enumeration over 2^" + std::to_string(m) + " subsets refused");
    std::vector<EdgeSubset> out;
    for (EdgeSubset h = 0;; ++h) {
        if (!subset_has_bridge(g, h)) out.push_back(h);
        if (h == g.full_subset()) break;
    }
    return out;
}

}  // namespace cosmo
