#include "cosmo/tutte.hpp"

#include <unordered_map>

namespace cosmo {

BivarPoly tutte_subset_expansion(const Multigraph& g, const EnumLimits& limits) {
    const int m = g.edge_count();
    if (m > limits.max_subset_edges)
        throw size_error("tutte_subset_expansion: " + std::to_string(m) + " edges exceeds limit " +
                         std::to_string(limits.max_subset_edges));
    const int c_all = g.component_count();
    const int n = g.node_count();

    // (x-1)^a and (y-1)^b expanded once per needed exponent.
    std::vector<std::vector<Int>> xm1(static_cast<std::size_t>(n) + 1), ym1;
    auto binom_row = [](int a) {
        std::vector<Int> row(static_cast<std::size_t>(a) + 1);
        for (int k = 0; k <= a; ++k) {
            row[static_cast<std::size_t>(k)] =
                binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(k));
            if ((a - k) % 2 != 0) row[static_cast<std::size_t>(k)] = -row[static_cast<std::size_t>(k)];
        }
        return row;  // coefficients of (t-1)^a by degree of t
    };
    for (int a = 0; a <= n; ++a) xm1[static_cast<std::size_t>(a)] = binom_row(a);
    ym1.resize(static_cast<std::size_t>(m) + 1);
    for (int b = 0; b <= m; ++b) ym1[static_cast<std::size_t>(b)] = binom_row(b);

    BivarPoly t;
    for (EdgeSubset h = 0;; ++h) {
        const int c_h = g.component_count(h);
        const int a = c_h - c_all;               // exponent of (x-1)
        const int b = c_h + subset_size(h) - n;  // exponent of (y-1), the nullity
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j)
                t.add_term(i, j,
                           xm1[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
                               ym1[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)]);
        if (h == g.full_subset()) break;
    }
    return t;
}

namespace {

struct DelconCounts {
    int pivot = -1;  // lowest-index non-loop non-bridge edge, or -1
    int loops = 0;
    int bridges = 0;
};

DelconCounts classify_edges(const Multigraph& g) {
    DelconCounts out;
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

using TutteMemo = std::unordered_map<std::string, BivarPoly>;

BivarPoly tutte_rec(const Multigraph& g, TutteMemo& memo, const EnumLimits& limits) {
    const DelconCounts c = classify_edges(g);
    if (c.pivot < 0)  // only loops and bridges remain
        return BivarPoly::monomial(1, c.bridges, c.loops);

    const std::string key = g.canonical_key();
    if (const auto it = memo.find(key); it != memo.end()) return it->second;

    const BivarPoly result = tutte_rec(g.delete_edge(c.pivot), memo, limits) +
                             tutte_rec(g.contract_edge(c.pivot), memo, limits);
    if (memo.size() < limits.max_memo_entries) memo.emplace(key, result);
    return result;
}

}  // namespace

BivarPoly tutte_delcon(const Multigraph& g, const EnumLimits& limits) {
    TutteMemo memo;
    return tutte_rec(g, memo, limits);
}

Int count_acyclic_via_tutte(const Multigraph& g, const EnumLimits& limits) {
    return tutte_delcon(g, limits).eval(2, 1);
}

}  // namespace cosmo
