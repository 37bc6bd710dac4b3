#include "cosmo/polytope.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace cosmo {

std::string LatticePoint::label() const {
    const char* tag = nullptr;
    switch (kind) {
        case PointKind::node_unit: tag = "v"; break;
        case PointKind::edge_unit: tag = "e"; break;
        case PointKind::squiggle: tag = "sq"; break;
        case PointKind::left_arrow: tag = "la"; break;
        case PointKind::right_arrow: tag = "ra"; break;
    }
    return std::string(tag) + ":" + std::to_string(index);
}

QVector LatticePoint::rational_coords() const {
    QVector q(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) q[i] = coords[i];
    return q;
}

std::vector<LatticePoint> lattice_points(const Multigraph& g) {
    const int n = g.node_count();
    const int m = g.edge_count();
    const std::size_t dim = static_cast<std::size_t>(n + m);
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(n + 4 * m));

    auto unit = [&](int coord) {
        std::vector<int> c(dim, 0);
        c[static_cast<std::size_t>(coord)] = 1;
        return c;
    };
    for (int u = 0; u < n; ++u) pts.push_back({PointKind::node_unit, u, unit(u)});
    for (int f = 0; f < m; ++f) pts.push_back({PointKind::edge_unit, f, unit(n + f)});
    for (int f = 0; f < m; ++f) {
        const Edge& e = g.edge(f);
        std::vector<int> c(dim, 0);
        c[static_cast<std::size_t>(e.tail)] += 1;
        c[static_cast<std::size_t>(e.head)] += 1;
        c[static_cast<std::size_t>(n + f)] -= 1;
        pts.push_back({PointKind::squiggle, f, std::move(c)});
    }
    for (int f = 0; f < m; ++f) {
        if (g.is_loop(f)) continue;  // arrows of a loop coincide with its edge unit
        const Edge& e = g.edge(f);
        std::vector<int> c(dim, 0);
        c[static_cast<std::size_t>(e.tail)] = 1;
        c[static_cast<std::size_t>(e.head)] = -1;
        c[static_cast<std::size_t>(n + f)] = 1;
        pts.push_back({PointKind::left_arrow, f, std::move(c)});
    }
    for (int f = 0; f < m; ++f) {
        if (g.is_loop(f)) continue;
        const Edge& e = g.edge(f);
        std::vector<int> c(dim, 0);
        c[static_cast<std::size_t>(e.tail)] = -1;
        c[static_cast<std::size_t>(e.head)] = 1;
        c[static_cast<std::size_t>(n + f)] = 1;
        pts.push_back({PointKind::right_arrow, f, std::move(c)});
    }
    return pts;
}

Rat Triangulation::cell_determinant(int cell) const {
    const Simplex& s = cells.at(static_cast<std::size_t>(cell));
    QMatrix m;
    m.reserve(s.size());
    for (const int pid : s) m.push_back(points[static_cast<std::size_t>(pid)].rational_coords());
    return determinant(std::move(m));
}

bool Triangulation::contains_standard_simplex() const {
    Simplex standard(static_cast<std::size_t>(ambient_dim()));
    std::iota(standard.begin(), standard.end(), 0);
    return std::find(cells.begin(), cells.end(), standard) != cells.end();
}

std::vector<int> default_insertion_order(const Multigraph& g) {
    const int seed_size = g.node_count() + g.edge_count();
    const std::size_t total = lattice_points(g).size();
    std::vector<int> order(total - static_cast<std::size_t>(seed_size));
    std::iota(order.begin(), order.end(), seed_size);
    return order;
}

std::vector<int> random_insertion_order(const Multigraph& g, std::uint64_t seed) {
    std::vector<int> order = default_insertion_order(g);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

namespace {

// Boundary facet bookkeeping for the placing construction.  A facet key is
// the sorted id vector; a facet is boundary while it lies in exactly one
// cell.  The cached hyperplane is oriented so the owning cell is positive.
struct FacetTracker {
    std::map<Simplex, std::vector<int>> incident_cells;
    std::map<Simplex, QVector> oriented_normal;
};

std::vector<int> cell_coord_sum(const std::vector<LatticePoint>& points, const Simplex& cell) {
    std::vector<int> sum(points[0].coords.size(), 0);
    for (const int pid : cell) {
        const auto& c = points[static_cast<std::size_t>(pid)].coords;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c[i];
    }
    return sum;
}

void register_cell(Triangulation& t, FacetTracker& tracker, Simplex cell) {
    std::sort(cell.begin(), cell.end());
    const int cell_index = static_cast<int>(t.cells.size());
    for (std::size_t drop = 0; drop < cell.size(); ++drop) {
        Simplex facet;
        facet.reserve(cell.size() - 1);
        for (std::size_t i = 0; i < cell.size(); ++i)
            if (i != drop) facet.push_back(cell[i]);
        tracker.incident_cells[std::move(facet)].push_back(cell_index);
    }
    t.cells.push_back(std::move(cell));
}

const QVector& boundary_normal(const Triangulation& t, FacetTracker& tracker,
                               const Simplex& facet, int owner_cell) {
    if (const auto it = tracker.oriented_normal.find(facet); it != tracker.oriented_normal.end())
        return it->second;
    QMatrix rows;
    rows.reserve(facet.size());
    for (const int pid : facet) rows.push_back(t.points[static_cast<std::size_t>(pid)].rational_coords());
    QVector normal = facet_hyperplane(rows).normal;
    // Orient towards the owner: the cell barycenter (sums suffice for signs)
    // is strictly off every hyperplane spanned by one of its facets.
    const std::vector<int> sum = cell_coord_sum(t.points, t.cells[static_cast<std::size_t>(owner_cell)]);
    const int side = sgn(dot(normal, sum));
    if (side == 0) throw internal_error("placing: degenerate cell barycenter");
    if (side < 0)
        for (Rat& x : normal) x = -x;
    return tracker.oriented_normal.emplace(facet, std::move(normal)).first->second;
}

}  // namespace

Triangulation placing_triangulation(const Multigraph& g, const std::vector<int>& order) {
    const int n = g.node_count();
    const int m = g.edge_count();
    if (n < 1) throw std::invalid_argument("placing_triangulation: graph has no nodes");
    const int seed_size = n + m;

    Triangulation t;
    t.graph = g;
    t.points = lattice_points(g);

    {
        std::vector<bool> seen(t.points.size(), false);
        for (const int pid : order) {
            if (pid < seed_size || pid >= static_cast<int>(t.points.size()) ||
                seen[static_cast<std::size_t>(pid)])
                throw std::invalid_argument("placing_triangulation: order must list every non-seed point once");
            seen[static_cast<std::size_t>(pid)] = true;
        }
        if (order.size() + static_cast<std::size_t>(seed_size) != t.points.size())
            throw std::invalid_argument("placing_triangulation: order must list every non-seed point once");
    }

    FacetTracker tracker;
    Simplex standard(static_cast<std::size_t>(seed_size));
    std::iota(standard.begin(), standard.end(), 0);
    register_cell(t, tracker, std::move(standard));

    for (const int pid : order) {
        const LatticePoint& p = t.points[static_cast<std::size_t>(pid)];
        std::vector<Simplex> visible;
        for (const auto& [facet, cells] : tracker.incident_cells) {
            if (cells.size() != 1) continue;
            const QVector& normal = boundary_normal(t, tracker, facet, cells.front());
            if (sgn(dot(normal, p.coords)) < 0) visible.push_back(facet);
        }
        if (visible.empty())
            throw internal_error("placing: point " + p.label() + " sees no boundary facet");
        for (Simplex& facet : visible) {
            facet.push_back(pid);
            register_cell(t, tracker, std::move(facet));
        }
    }

    {
        std::vector<bool> used(t.points.size(), false);
        for (const Simplex& cell : t.cells)
            for (const int pid : cell) used[static_cast<std::size_t>(pid)] = true;
        if (std::find(used.begin(), used.end(), false) != used.end())
            throw internal_error("placing: some lattice point is unused");
    }

    for (const auto& [facet, cells] : tracker.incident_cells) {
        if (cells.size() == 2)
            t.dual_edges.emplace_back(std::min(cells[0], cells[1]), std::max(cells[0], cells[1]));
        else if (cells.size() > 2)
            throw internal_error("placing: facet shared by more than two cells");
    }
    std::sort(t.dual_edges.begin(), t.dual_edges.end());
    return t;
}

Triangulation placing_triangulation(const Multigraph& g) {
    return placing_triangulation(g, default_insertion_order(g));
}

EdgeSubset Decoration::squiggle_set() const {
    EdgeSubset s = 0;
    for (std::size_t f = 0; f < edge_status.size(); ++f)
        if (edge_status[f] == EdgeStatus::squiggly) s |= EdgeSubset{1} << f;
    return s;
}

EdgeSubset Decoration::double_set() const {
    EdgeSubset s = 0;
    for (std::size_t f = 0; f < edge_status.size(); ++f)
        if (edge_status[f] == EdgeStatus::double_left || edge_status[f] == EdgeStatus::double_right)
            s |= EdgeSubset{1} << f;
    return s;
}

EdgeSubset Decoration::right_double_set() const {
    EdgeSubset s = 0;
    for (std::size_t f = 0; f < edge_status.size(); ++f)
        if (edge_status[f] == EdgeStatus::double_right) s |= EdgeSubset{1} << f;
    return s;
}

int Decoration::selected_node_count() const {
    return static_cast<int>(std::count(selected_nodes.begin(), selected_nodes.end(), true));
}

int Decoration::k() const { return subset_size(squiggle_set()) + subset_size(double_set()); }

Decoration decoration_of(const Triangulation& t, int cell) {
    const Multigraph& g = t.graph;
    const int n = g.node_count();
    const int m = g.edge_count();
    const Simplex& s = t.cells.at(static_cast<std::size_t>(cell));

    Decoration dec;
    dec.selected_nodes.assign(static_cast<std::size_t>(n), false);
    dec.edge_status.assign(static_cast<std::size_t>(m), EdgeStatus::selected);

    // Per-edge presence masks: 1 = edge unit, 2 = squiggle, 4 = left, 8 = right.
    std::vector<unsigned> present(static_cast<std::size_t>(m), 0);
    for (const int pid : s) {
        const LatticePoint& p = t.points[static_cast<std::size_t>(pid)];
        switch (p.kind) {
            case PointKind::node_unit: dec.selected_nodes[static_cast<std::size_t>(p.index)] = true; break;
            case PointKind::edge_unit: present[static_cast<std::size_t>(p.index)] |= 1; break;
            case PointKind::squiggle: present[static_cast<std::size_t>(p.index)] |= 2; break;
            case PointKind::left_arrow: present[static_cast<std::size_t>(p.index)] |= 4; break;
            case PointKind::right_arrow: present[static_cast<std::size_t>(p.index)] |= 8; break;
        }
    }

    for (int f = 0; f < m; ++f) {
        EdgeStatus status;
        switch (present[static_cast<std::size_t>(f)]) {
            case 1: status = EdgeStatus::selected; break;
            case 2: status = EdgeStatus::squiggly; break;
            case 4: status = EdgeStatus::left; break;
            case 8: status = EdgeStatus::right; break;
            case 5: status = EdgeStatus::double_left; break;
            case 9: status = EdgeStatus::double_right; break;
            default:
                throw internal_error("decoration: edge " + std::to_string(f) +
                                     " carries point pattern " +
                                     std::to_string(present[static_cast<std::size_t>(f)]));
        }
        if (g.is_loop(f) && status != EdgeStatus::selected && status != EdgeStatus::squiggly)
            throw internal_error("decoration: loop " + std::to_string(f) + " is directed");
        dec.edge_status[static_cast<std::size_t>(f)] = status;
    }

    const EdgeSubset doubles = dec.double_set();
    if (!g.is_acyclic(doubles)) throw internal_error("decoration: double edges contain a cycle");
    if (dec.selected_node_count() != n - subset_size(doubles))
        throw internal_error("decoration: selected node count mismatch");

    // Exactly one selected node per component of (V, doubles).
    std::vector<int> comp(static_cast<std::size_t>(n));
    std::iota(comp.begin(), comp.end(), 0);
    const std::function<int(int)> find = [&](int x) {
        while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
        return x;
    };
    for (int f = 0; f < m; ++f)
        if (doubles >> f & 1) comp[static_cast<std::size_t>(find(g.edge(f).tail))] = find(g.edge(f).head);
    std::vector<int> selected_in_component(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        if (dec.selected_nodes[static_cast<std::size_t>(u)]) ++selected_in_component[static_cast<std::size_t>(find(u))];
    for (int u = 0; u < n; ++u)
        if (selected_in_component[static_cast<std::size_t>(find(u))] != 1)
            throw internal_error("decoration: component without a unique selected node");

    return dec;
}

BijectionReport verify_main_bijection(const Triangulation& t) {
    const Multigraph& g = t.graph;
    BijectionReport report;
    report.cell_count = t.cells.size();

    using Key = std::array<EdgeSubset, 3>;  // squiggles, doubles, right-oriented doubles
    std::set<Key> expected;
    for_each_acyclic_subset(g, [&](EdgeSubset h) {
        // Orientations of h, then any squiggle set disjoint from h.
        std::vector<EdgeSubset> orientations;
        EdgeSubset r = h;
        while (true) {
            orientations.push_back(r);
            if (r == 0) break;
            r = (r - 1) & h;
        }
        const EdgeSubset rest = g.full_subset() & ~h;
        EdgeSubset q = rest;
        while (true) {
            for (const EdgeSubset right : orientations) expected.insert({q, h, right});
            if (q == 0) break;
            q = (q - 1) & rest;
        }
    });
    report.expected_count = expected.size();

    std::set<Key> actual;
    for (int c = 0; c < static_cast<int>(t.cells.size()); ++c) {
        const Decoration dec = decoration_of(t, c);
        const Key key{dec.squiggle_set(), dec.double_set(), dec.right_double_set()};
        if (!actual.insert(key).second) {
            report.witness = "duplicate decoration at cell " + std::to_string(c);
            return report;
        }
        if (!expected.count(key)) {
            report.witness = "cell " + std::to_string(c) + " decorates an unexpected pair";
            return report;
        }
    }
    if (actual.size() != expected.size()) {
        report.witness = "only " + std::to_string(actual.size()) + " of " +
                         std::to_string(expected.size()) + " decorations realized";
        return report;
    }
    report.ok = true;
    return report;
}

AffineCoordinates affine_coordinates(const Triangulation& t, int cell, int node) {
    const Multigraph& g = t.graph;
    const int n = g.node_count();
    if (node < 0 || node >= n) throw std::invalid_argument("affine_coordinates: node out of range");
    const Decoration dec = decoration_of(t, cell);

    std::vector<int> selected;
    for (int u = 0; u < n; ++u)
        if (dec.selected_nodes[static_cast<std::size_t>(u)]) selected.push_back(u);
    std::vector<int> doubles;
    const EdgeSubset dset = dec.double_set();
    for (int f = 0; f < g.edge_count(); ++f)
        if (dset >> f & 1) doubles.push_back(f);

    // Node-coordinate system: e_node = sum lambda_u e_u + sum lambda_f (e_tail - e_head).
    const std::size_t size = selected.size() + doubles.size();
    if (size != static_cast<std::size_t>(n)) throw internal_error("affine_coordinates: rank mismatch");
    QMatrix a(static_cast<std::size_t>(n), QVector(size, Rat(0)));
    for (std::size_t j = 0; j < selected.size(); ++j)
        a[static_cast<std::size_t>(selected[j])][j] = 1;
    for (std::size_t j = 0; j < doubles.size(); ++j) {
        const Edge& e = g.edge(doubles[j]);
        a[static_cast<std::size_t>(e.tail)][selected.size() + j] += 1;
        a[static_cast<std::size_t>(e.head)][selected.size() + j] -= 1;
    }
    QVector b(static_cast<std::size_t>(n), Rat(0));
    b[static_cast<std::size_t>(node)] = 1;

    const auto solution = solve_linear(std::move(a), std::move(b));
    if (!solution) throw internal_error("affine_coordinates: singular system");

    AffineCoordinates out;
    for (std::size_t j = 0; j < selected.size(); ++j) out.node_coefficient[selected[j]] = (*solution)[j];
    for (std::size_t j = 0; j < doubles.size(); ++j)
        out.edge_coefficient[doubles[j]] = (*solution)[selected.size() + j];
    return out;
}

Poly h_vector_from_triangulation(const Triangulation& t) {
    std::vector<Int> histogram;
    for (int c = 0; c < static_cast<int>(t.cells.size()); ++c) {
        const int k = decoration_of(t, c).k();
        if (k >= static_cast<int>(histogram.size())) histogram.resize(static_cast<std::size_t>(k) + 1);
        histogram[static_cast<std::size_t>(k)] += 1;
    }
    return Poly(std::move(histogram));
}

}  // namespace cosmo
