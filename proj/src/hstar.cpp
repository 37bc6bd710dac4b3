#include "cosmo/hstar.hpp"

#include <algorithm>
#include <unordered_map>

namespace cosmo {

namespace {

Poly one_plus_z() { return Poly(std::vector<Int>{1, 1}); }
Poly one_plus_3z() { return Poly(std::vector<Int>{1, 3}); }
Poly two_z() { return Poly(std::vector<Int>{0, 2}); }

}  // namespace

const char* to_string(HstarMethod m) {
    switch (m) {
        case HstarMethod::acyclic: return "acyclic";
        case HstarMethod::delcon: return "delcon";
        case HstarMethod::tutte: return "tutte";
        case HstarMethod::moebius: return "moebius";
        case HstarMethod::triangulation: return "triangulation";
    }
    return "?";
}

Poly hstar_acyclic(const Multigraph& g, const EnumLimits& limits) {
    const int m = g.edge_count();
    if (m > limits.max_subset_edges)
        throw size_error("hstar_acyclic: " + std::to_string(m) + " edges exceeds limit " +
                         std::to_string(limits.max_subset_edges));
    // Only |H| matters per subset, so bucket the acyclic sets by size.
    std::vector<Int> count_by_size(static_cast<std::size_t>(m) + 1);
    for_each_acyclic_subset(
        g, [&](EdgeSubset h) { count_by_size[static_cast<std::size_t>(subset_size(h))] += 1; });

    Poly result;
    for (int k = 0; k <= m; ++k) {
        const Int& c = count_by_size[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        result = result + (two_z().pow(static_cast<unsigned long>(k)) *
                           one_plus_z().pow(static_cast<unsigned long>(m - k)))
                              .scaled(c);
    }
    return result;
}

namespace {

struct EdgeClasses {
    int pivot = -1;
    int loops = 0;
    int bridges = 0;
};

EdgeClasses classify(const Multigraph& g) {
    EdgeClasses out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e))
            ++out.loops;
        else if (g.is_bridge(e))
            ++out.bridges;
        else if (out.pivot < 0)
            out.pivot = e;
    }
    return out;
}

using HstarMemo = std::unordered_map<std::string, Poly>;

Poly hstar_delcon_rec(const Multigraph& g, HstarMemo& memo, const EnumLimits& limits) {
    const EdgeClasses c = classify(g);
    if (c.pivot < 0)
        return one_plus_3z().pow(static_cast<unsigned long>(c.bridges)) *
               one_plus_z().pow(static_cast<unsigned long>(c.loops));

    const std::string key = g.canonical_key();
    if (const auto it = memo.find(key); it != memo.end()) return it->second;

    const Poly result = one_plus_z() * hstar_delcon_rec(g.delete_edge(c.pivot), memo, limits) +
                        two_z() * hstar_delcon_rec(g.contract_edge(c.pivot), memo, limits);
    if (memo.size() < limits.max_memo_entries) memo.emplace(key, result);
    return result;
}

}  // namespace

Poly hstar_delcon(const Multigraph& g, const EnumLimits& limits) {
    HstarMemo memo;
    return hstar_delcon_rec(g, memo, limits);
}

Poly hstar_tutte(const Multigraph& g, const EnumLimits& limits) {
    const Poly tx1 = tutte_delcon(g, limits).at_y_one();
    const int r = g.rank();
    const int m = g.edge_count();
    if (tx1.degree() > r) throw internal_error("T(x,1) degree exceeds graph rank");

    Poly sum;
    for (int k = 0; k <= tx1.degree(); ++k) {
        const Int c = tx1.coeff(k);
        if (c == 0) continue;
        sum = sum + (one_plus_3z().pow(static_cast<unsigned long>(k)) *
                     two_z().pow(static_cast<unsigned long>(r - k)))
                        .scaled(c);
    }
    return one_plus_z().pow(static_cast<unsigned long>(m - r)) * sum;
}

std::vector<std::pair<EdgeSubset, Int>> moebius_function(const Multigraph& g,
                                                         const EnumLimits& limits) {
    if (g.edge_count() > limits.max_subset_edges)
        throw size_error("moebius_function: " + std::to_string(g.edge_count()) +
                         " edges exceeds limit " + std::to_string(limits.max_subset_edges));
    const std::vector<EdgeSubset> poset = bridge_free_subsets(g);
    if (poset.size() > limits.max_poset_size)
        throw size_error("bridge-free poset has " + std::to_string(poset.size()) +
                         " elements, exceeding limit " + std::to_string(limits.max_poset_size));

    // poset is sorted ascending, and H' < H numerically whenever H' is a
    // strict submask, so a single left-to-right pass suffices.
    std::unordered_map<EdgeSubset, Int> mu;
    std::vector<std::pair<EdgeSubset, Int>> out;
    out.reserve(poset.size());
    for (const EdgeSubset h : poset) {
        Int value;
        if (h == 0) {
            value = 1;
        } else {
            Int below = 0;
            for (EdgeSubset s = (h - 1) & h;; s = (s - 1) & h) {
                if (const auto it = mu.find(s); it != mu.end()) below += it->second;
                if (s == 0) break;
            }
            value = -below;
        }
        mu.emplace(h, value);
        out.emplace_back(h, value);
    }
    return out;
}

Poly hstar_moebius(const Multigraph& g, const EnumLimits& limits) {
    const int m = g.edge_count();
    Poly result;
    for (const auto& [h, mu] : moebius_function(g, limits)) {
        if (mu == 0) continue;
        const int k = subset_size(h);
        result = result + (two_z().pow(static_cast<unsigned long>(k)) *
                           one_plus_3z().pow(static_cast<unsigned long>(m - k)))
                              .scaled(mu);
    }
    return result;
}

namespace {

// 2 a z (1+z)^(a-1) + (1+z)^a, the factor contributed by a class of a
// parallel edges in a multitree.
Poly parallel_class_factor(int a) {
    return two_z().scaled(a) * one_plus_z().pow(static_cast<unsigned long>(a - 1)) +
           one_plus_z().pow(static_cast<unsigned long>(a));
}

void require_positive(const std::vector<int>& a, const char* what) {
    if (a.empty()) throw std::invalid_argument(std::string(what) + ": needs at least one class");
    for (const int v : a)
        if (v < 1) throw std::invalid_argument(std::string(what) + ": multiplicities must be >= 1");
}

}  // namespace

Poly closed_form_multitree(const std::vector<int>& multiplicities) {
    require_positive(multiplicities, "multitree");
    Poly p(1);
    for (const int a : multiplicities) p = p * parallel_class_factor(a);
    return p;
}

Poly closed_form_multicycle(const std::vector<int>& multiplicities) {
    require_positive(multiplicities, "multicycle");
    Poly minuend(1), subtrahend(1);
    for (const int a : multiplicities) {
        minuend = minuend * parallel_class_factor(a);
        subtrahend = subtrahend * (two_z().scaled(a) *
                                   one_plus_z().pow(static_cast<unsigned long>(a - 1)));
    }
    return minuend - subtrahend;
}

Poly closed_form_theta(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("theta: path lengths must be >= 1");
    const auto p13 = [](int k) { return one_plus_3z().pow(static_cast<unsigned long>(k)); };
    const auto p2z = [](int k) { return two_z().pow(static_cast<unsigned long>(k)); };
    return p13(a + b + c) - p2z(a + b) * p13(c) - p2z(a + c) * p13(b) - p2z(b + c) * p13(a) +
           p2z(a + b + c).scaled(2);
}

Poly closed_form_k2n(int n) {
    if (n < 1) throw std::invalid_argument("k2n: n must be >= 1");
    const Poly base(std::vector<Int>{1, 6, 5});
    return base.pow(static_cast<unsigned long>(n)) +
           (Poly::monomial(4 * Int(n), 2) * base.pow(static_cast<unsigned long>(n - 1)));
}

Multigraph multitree_graph(const std::vector<int>& multiplicities) {
    require_positive(multiplicities, "multitree");
    const int n = static_cast<int>(multiplicities.size()) + 1;
    std::vector<Edge> edges;
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < multiplicities[static_cast<std::size_t>(i)]; ++j)
            edges.push_back({i, i + 1});
    return Multigraph(n, std::move(edges));
}

Multigraph multicycle_graph(const std::vector<int>& multiplicities) {
    require_positive(multiplicities, "multicycle");
    const int n = static_cast<int>(multiplicities.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < multiplicities[static_cast<std::size_t>(i)]; ++j)
            edges.push_back({i, (i + 1) % n});  // n = 1 degenerates to loops
    return Multigraph(n, std::move(edges));
}

Multigraph theta_graph(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("theta: path lengths must be >= 1");
    // Nodes 0 and 1 are the two hubs; each path contributes length-1 inner nodes.
    const int n = a + b + c - 1;
    std::vector<Edge> edges;
    int next_node = 2;
    for (const int len : {a, b, c}) {
        int prev = 0;
        for (int i = 0; i < len - 1; ++i) {
            edges.push_back({prev, next_node});
            prev = next_node++;
        }
        edges.push_back({prev, 1});
    }
    Multigraph g(n, std::move(edges));
    return g;
}

Multigraph k2n_graph(int n) {
    if (n < 1) throw std::invalid_argument("k2n: n must be >= 1");
    // Nodes 0, 1 on the small side, 2..n+1 on the large side.
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        edges.push_back({0, v + 2});
        edges.push_back({1, v + 2});
    }
    return Multigraph(n + 2, std::move(edges));
}

Int volume(const Multigraph& g, const EnumLimits& limits) {
    return pow2(static_cast<unsigned long>(g.edge_count())) * count_acyclic_via_tutte(g, limits);
}

HstarReport hstar_report(const Multigraph& g, HstarMethod method, const EnumLimits& limits) {
    Poly p;
    switch (method) {
        case HstarMethod::acyclic: p = hstar_acyclic(g, limits); break;
        case HstarMethod::delcon: p = hstar_delcon(g, limits); break;
        case HstarMethod::tutte: p = hstar_tutte(g, limits); break;
        case HstarMethod::moebius: p = hstar_moebius(g, limits); break;
        case HstarMethod::triangulation:
            throw std::invalid_argument("triangulation reports are built from a Triangulation");
    }
    return {p, method, p.eval_one(), g.edge_count()};
}

}  // namespace cosmo
