#include "cosmo/halfopen.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cosmo {

namespace {

struct FacetGeometry {
    QVector normal;       // canonical facet hyperplane normal (offset 0)
    Rat at_q_star;        // evaluated at the visibility point
};

}  // namespace

HalfOpenDecomposition half_open_decomposition(const Triangulation& t) {
    const int n = t.graph.node_count();
    const int ambient = t.ambient_dim();
    if (n < 1) throw std::invalid_argument("half_open_decomposition: graph has no nodes");

    // q: average of the node units; b: barycenter of the standard simplex.
    QVector q(static_cast<std::size_t>(ambient), Rat(0));
    for (int u = 0; u < n; ++u) q[static_cast<std::size_t>(u)] = make_rat(1, n);
    const QVector b(static_cast<std::size_t>(ambient), make_rat(1, ambient));

    // Facet normals do not depend on delta; compute them once.
    std::map<Simplex, QVector> normals;
    auto facet_normal = [&](const Simplex& facet) -> const QVector& {
        auto it = normals.find(facet);
        if (it != normals.end()) return it->second;
        QMatrix rows;
        rows.reserve(facet.size());
        for (const int pid : facet) rows.push_back(t.points[static_cast<std::size_t>(pid)].rational_coords());
        return normals.emplace(facet, facet_hyperplane(rows).normal).first->second;
    };

    std::vector<int> expected_k(t.cells.size());
    for (int c = 0; c < static_cast<int>(t.cells.size()); ++c)
        expected_k[static_cast<std::size_t>(c)] = decoration_of(t, c).k();

    Rat delta = make_rat(1, 8 * ambient);
    for (int attempt = 0; attempt <= 64; ++attempt, delta /= 2) {
        QVector q_star(static_cast<std::size_t>(ambient));
        for (std::size_t i = 0; i < q_star.size(); ++i)
            q_star[i] = (1 - delta) * q[i] + delta * b[i];

        HalfOpenDecomposition result;
        result.visibility_point = q_star;
        result.retries = attempt;
        result.cells.reserve(t.cells.size());

        bool retry = false;
        for (int c = 0; c < static_cast<int>(t.cells.size()) && !retry; ++c) {
            const Simplex& cell = t.cells[static_cast<std::size_t>(c)];
            std::vector<int> cell_sum(static_cast<std::size_t>(ambient), 0);
            for (const int pid : cell) {
                const auto& coords = t.points[static_cast<std::size_t>(pid)].coords;
                for (std::size_t i = 0; i < coords.size(); ++i) cell_sum[i] += coords[i];
            }

            HalfOpenCell hoc;
            hoc.cell = c;
            // a zero-dimensional cell (single point) has no facets to drop
            for (std::size_t drop = 0; cell.size() > 1 && drop < cell.size(); ++drop) {
                Simplex facet;
                facet.reserve(cell.size() - 1);
                for (std::size_t i = 0; i < cell.size(); ++i)
                    if (i != drop) facet.push_back(cell[i]);
                const QVector& normal = facet_normal(facet);
                const int side_q = sgn(dot(normal, q_star));
                if (side_q == 0) {  // q* is not generic at this delta
                    retry = true;
                    break;
                }
                const int side_cell = sgn(dot(normal, cell_sum));
                if (side_cell == 0) throw internal_error("half-open: degenerate cell barycenter");
                if (side_q != side_cell) hoc.removed_apexes.push_back(cell[drop]);
            }
            if (retry) break;
            if (static_cast<int>(hoc.removed_count()) != expected_k[static_cast<std::size_t>(c)]) {
                // Generic but still too coarse a perturbation: shrink further.
                retry = true;
                break;
            }
            result.cells.push_back(std::move(hoc));
        }
        if (!retry) return result;
    }
    throw internal_error("half-open: no admissible visibility point after 64 retries");
}

Int ehrhart_from_hstar(const Poly& hstar, int d, long j) {
    if (d < 0) throw std::invalid_argument("negative dimension");
    if (j < 0) throw std::invalid_argument("negative dilation");
    Int total = 0;
    for (int i = 0; i <= hstar.degree(); ++i)
        total += hstar.coeff(i) * binomial_or_zero(j + d - i, static_cast<unsigned long>(d));
    return total;
}

Int ehrhart_from_halfopen(const Triangulation& t, const HalfOpenDecomposition& h, long j) {
    if (j < 0) throw std::invalid_argument("negative dilation");
    const int d = t.dim();
    Int total = 0;
    for (const HalfOpenCell& cell : h.cells)
        total += binomial_or_zero(j + d - static_cast<long>(cell.removed_count()),
                                  static_cast<unsigned long>(d));
    return total;
}

bool membership_lp(const QVector& x, const std::vector<LatticePoint>& pts) {
    QMatrix generators;
    generators.reserve(pts.size());
    for (const LatticePoint& p : pts) generators.push_back(p.rational_coords());
    return lp_membership(x, generators);
}

bool membership_triangulation(const QVector& x, const Triangulation& t) {
    Rat coordinate_sum = 0;
    for (const Rat& v : x) coordinate_sum += v;
    if (coordinate_sum != 1) return false;

    const std::size_t ambient = static_cast<std::size_t>(t.ambient_dim());
    for (const Simplex& cell : t.cells) {
        // Barycentric coordinates: columns are the cell's points.
        QMatrix a(ambient, QVector(ambient, Rat(0)));
        for (std::size_t col = 0; col < cell.size(); ++col) {
            const auto& coords = t.points[static_cast<std::size_t>(cell[col])].coords;
            for (std::size_t row = 0; row < ambient; ++row) a[row][col] = coords[row];
        }
        const auto lambda = solve_linear(std::move(a), x);
        if (!lambda) throw internal_error("membership: singular cell matrix");
        const bool inside = std::all_of(lambda->begin(), lambda->end(),
                                        [](const Rat& v) { return v >= 0; });
        if (inside) return true;
    }
    return false;
}

Int ehrhart_brute(const Multigraph& g, long j, const BruteLimits& limits) {
    if (j < 0) throw std::invalid_argument("negative dilation");
    if (j == 0) return 1;  // the zero dilation is the single point 0
    const int n = g.node_count();
    const int m = g.edge_count();
    const int dim = n + m;
    if (dim > limits.max_dim)
        throw size_error("ehrhart_brute: ambient dimension " + std::to_string(dim) +
                         " exceeds limit " + std::to_string(limits.max_dim));
    if (j > limits.max_dilation)
        throw size_error("ehrhart_brute: dilation " + std::to_string(j) + " exceeds limit " +
                         std::to_string(limits.max_dilation));

    QMatrix generators;
    for (const LatticePoint& p : lattice_points(g)) generators.push_back(p.rational_coords());

    // Vertex coordinates lie in [-1, 2] on nodes and [-1, 1] on edges, so
    // the j-th dilation fits these per-coordinate boxes.
    std::vector<long> lo(static_cast<std::size_t>(dim)), hi(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        lo[static_cast<std::size_t>(i)] = -j;
        hi[static_cast<std::size_t>(i)] = i < n ? 2 * j : j;
    }

    Int count = 0;
    std::vector<long> x(static_cast<std::size_t>(dim), 0);
    // Enumerate all but the last coordinate; the sum constraint fixes it.
    const std::function<void(int, long)> sweep = [&](int pos, long partial_sum) {
        if (pos == dim - 1) {
            const long last = j - partial_sum;
            if (last < lo.back() || last > hi.back()) return;
            x.back() = last;
            QVector scaled(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) scaled[static_cast<std::size_t>(i)] = make_rat(x[static_cast<std::size_t>(i)], j);
            if (lp_membership(scaled, generators)) count += 1;
            return;
        }
        for (long v = lo[static_cast<std::size_t>(pos)]; v <= hi[static_cast<std::size_t>(pos)]; ++v) {
            x[static_cast<std::size_t>(pos)] = v;
            sweep(pos + 1, partial_sum + v);
        }
    };
    if (dim == 0) return 0;  // empty graph: no ambient space, no points
    sweep(0, 0);
    return count;
}

Poly hstar_triangulation(const Multigraph& g) {
    return h_vector_from_triangulation(placing_triangulation(g));
}

}  // namespace cosmo
