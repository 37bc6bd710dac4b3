#include <doctest.h>

#include <random>

#include "cosmo/halfopen.hpp"
#include "cosmo/hstar.hpp"
#include "oracles.hpp"

using namespace cosmo;

namespace {

Poly p(std::vector<long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return Poly(std::move(c));
}

const std::vector<Multigraph>& geometry_suite() {
    static const std::vector<Multigraph> suite = {
        oracle::single_edge(),          oracle::loops_graph(1), oracle::parallel_graph(2),
        oracle::path_graph(2),          oracle::cycle_graph(3), oracle::parallel_graph(3),
        oracle::triangle_with_pendant()};
    return suite;
}

}  // namespace

TEST_CASE("the standard simplex keeps all facets") {
    const Triangulation t = placing_triangulation(oracle::parallel_graph(2));
    const HalfOpenDecomposition h = half_open_decomposition(t);
    REQUIRE(h.cells.size() == t.cells.size());
    CHECK(h.cells[0].removed_count() == 0);  // cell 0 is the standard simplex
}

TEST_CASE("removed facets count k(S) across the suite") {
    for (const Multigraph& g : geometry_suite()) {
        const Triangulation t = placing_triangulation(g);
        const HalfOpenDecomposition h = half_open_decomposition(t);
        std::vector<Int> histogram;
        for (const HalfOpenCell& cell : h.cells) {
            CHECK(static_cast<int>(cell.removed_count()) == decoration_of(t, cell.cell).k());
            if (cell.removed_count() >= histogram.size()) histogram.resize(cell.removed_count() + 1);
            histogram[cell.removed_count()] += 1;
        }
        CHECK(Poly(std::move(histogram)) == hstar_acyclic(g));
    }
}

TEST_CASE("half-open h-vector of the single edge is 1 + 3z") {
    const Triangulation t = placing_triangulation(oracle::single_edge());
    const HalfOpenDecomposition h = half_open_decomposition(t);
    int closed_cells = 0, once_open = 0;
    for (const HalfOpenCell& cell : h.cells) {
        if (cell.removed_count() == 0) ++closed_cells;
        if (cell.removed_count() == 1) ++once_open;
    }
    CHECK(closed_cells == 1);
    CHECK(once_open == 3);
}

TEST_CASE("ehrhart from h*") {
    CHECK(ehrhart_from_hstar(p({1, 3}), 2, 3) == 28);  // C(5,2) + 3 C(4,2)
    CHECK(ehrhart_from_hstar(p({1, 3}), 2, 0) == 1);
    CHECK(ehrhart_from_hstar(p({1, 6, 5}), 3, 1) == 10);
    CHECK(ehrhart_from_hstar(p({1, 6, 5}), 3, 0) == 1);
    CHECK_THROWS_AS(ehrhart_from_hstar(p({1}), 2, -1), std::invalid_argument);

    // cross-check the binomial convention against Pascal's triangle
    for (int d = 1; d <= 4; ++d)
        for (long j = 0; j <= 5; ++j) {
            Int expected = 0;
            const Poly h = p({1, 6, 5});
            for (int i = 0; i <= h.degree(); ++i)
                expected += h.coeff(i) * oracle::pascal_binomial(static_cast<int>(j) + d - i, d);
            CHECK(ehrhart_from_hstar(h, d, j) == expected);
        }
}

TEST_CASE("ehrhart from the half-open cover") {
    const Triangulation edge = placing_triangulation(oracle::single_edge());
    const HalfOpenDecomposition h = half_open_decomposition(edge);
    CHECK(ehrhart_from_halfopen(edge, h, 1) == 6);  // C(3,2) + 3 C(2,2)
    CHECK(ehrhart_from_halfopen(edge, h, 0) == 1);

    const Triangulation prism = placing_triangulation(oracle::parallel_graph(2));
    const HalfOpenDecomposition hp = half_open_decomposition(prism);
    CHECK(ehrhart_from_halfopen(prism, hp, 1) == 10);
}

TEST_CASE("half-open counts equal h* counts for j = 0..d+1") {
    for (const Multigraph& g : geometry_suite()) {
        const Triangulation t = placing_triangulation(g);
        const HalfOpenDecomposition h = half_open_decomposition(t);
        const Poly hstar = hstar_acyclic(g);
        const int d = t.dim();
        for (long j = 0; j <= d + 1; ++j)
            CHECK(ehrhart_from_halfopen(t, h, j) == ehrhart_from_hstar(hstar, d, j));
    }
}

TEST_CASE("brute-force lattice point counts") {
    const Multigraph edge = oracle::single_edge();
    CHECK(ehrhart_brute(edge, 0) == 1);
    CHECK(ehrhart_brute(edge, 1) == 6);
    CHECK(ehrhart_brute(edge, 2) == 15);
    CHECK(ehrhart_brute(edge, 3) == 28);

    for (const Multigraph& g : {oracle::single_edge(), oracle::loops_graph(1),
                                oracle::parallel_graph(2)}) {
        const Poly hstar = hstar_acyclic(g);
        const int d = g.node_count() + g.edge_count() - 1;
        for (long j = 1; j <= 3; ++j) CHECK(ehrhart_brute(g, j) == ehrhart_from_hstar(hstar, d, j));
    }

    BruteLimits tight;
    tight.max_dim = 3;
    CHECK_THROWS_AS(ehrhart_brute(oracle::parallel_graph(2), 1, tight), size_error);
    tight.max_dim = 5;
    tight.max_dilation = 2;
    CHECK_THROWS_AS(ehrhart_brute(oracle::single_edge(), 3, tight), size_error);
}

TEST_CASE("membership backends agree on random rational points") {
    std::mt19937_64 rng(83);
    for (const Multigraph& g : {oracle::single_edge(), oracle::loops_graph(1),
                                oracle::parallel_graph(2)}) {
        const Triangulation t = placing_triangulation(g);
        const std::vector<LatticePoint> pts = lattice_points(g);
        std::uniform_int_distribution<int> numerator(-6, 6);
        std::uniform_int_distribution<int> denominator(1, 4);
        for (int trial = 0; trial < 1000; ++trial) {
            QVector x(static_cast<std::size_t>(g.node_count() + g.edge_count()));
            for (Rat& v : x) v = make_rat(numerator(rng), denominator(rng));
            CHECK(membership_lp(x, pts) == membership_triangulation(x, t));
        }
    }
}

TEST_CASE("triangulation route reproduces the formula h*") {
    for (const Multigraph& g : geometry_suite()) CHECK(hstar_triangulation(g) == hstar_acyclic(g));
}

TEST_CASE("half-open cells partition the lattice points of small dilations") {
    // Pointwise certificate of disjointness and covering: every lattice point
    // of jP lies in exactly one half-open cell.  A point is in a half-open
    // cell iff its barycentric coordinates are non-negative and strictly
    // positive at each removed apex.
    for (const Multigraph& g : {oracle::single_edge(), oracle::loops_graph(1),
                                oracle::parallel_graph(2), oracle::path_graph(2)}) {
        const Triangulation t = placing_triangulation(g);
        const HalfOpenDecomposition ho = half_open_decomposition(t);
        const int n = g.node_count();
        const int dim = t.ambient_dim();

        for (long j = 1; j <= 2; ++j) {
            Int inside_total = 0;
            std::vector<long> x(static_cast<std::size_t>(dim));
            const std::function<void(int, long)> sweep = [&](int pos, long sum) {
                if (pos == dim - 1) {
                    const long last = j - sum;
                    const long hi = dim - 1 < n ? 2 * j : j;
                    if (last < -j || last > hi) return;
                    x.back() = last;
                    QVector scaled(static_cast<std::size_t>(dim));
                    for (int i = 0; i < dim; ++i)
                        scaled[static_cast<std::size_t>(i)] = make_rat(x[static_cast<std::size_t>(i)], j);

                    int containing_cells = 0;
                    for (const HalfOpenCell& hoc : ho.cells) {
                        const Simplex& cell = t.cells[static_cast<std::size_t>(hoc.cell)];
                        QMatrix a(static_cast<std::size_t>(dim), QVector(static_cast<std::size_t>(dim)));
                        for (std::size_t col = 0; col < cell.size(); ++col)
                            for (std::size_t row = 0; row < static_cast<std::size_t>(dim); ++row)
                                a[row][col] = t.points[static_cast<std::size_t>(cell[col])]
                                                  .coords[row];
                        const auto lambda = solve_linear(std::move(a), scaled);
                        REQUIRE(lambda.has_value());
                        bool inside = true;
                        for (const Rat& v : *lambda) inside = inside && v >= 0;
                        for (const int apex : hoc.removed_apexes) {
                            const auto it = std::find(cell.begin(), cell.end(), apex);
                            const auto idx = static_cast<std::size_t>(it - cell.begin());
                            inside = inside && (*lambda)[idx] > 0;
                        }
                        if (inside) ++containing_cells;
                    }
                    const bool in_polytope = membership_lp(scaled, lattice_points(g));
                    CHECK(containing_cells == (in_polytope ? 1 : 0));
                    if (in_polytope) inside_total += 1;
                    return;
                }
                const long hi = pos < n ? 2 * j : j;
                for (long v = -j; v <= hi; ++v) {
                    x[static_cast<std::size_t>(pos)] = v;
                    sweep(pos + 1, sum + v);
                }
            };
            sweep(0, 0);
            CHECK(inside_total == ehrhart_from_hstar(hstar_acyclic(g), t.dim(), j));
        }
    }
}

TEST_CASE("geometric certification holds on random small multigraphs") {
    std::mt19937_64 rng(0xFACADE);
    int done = 0;
    while (done < 15) {
        const Multigraph g = oracle::random_graph(rng, 4, 5);
        if (g.node_count() + g.edge_count() > 7 || g.node_count() < 1) continue;
        ++done;
        const Triangulation t = placing_triangulation(g);
        CHECK(Int(static_cast<unsigned long>(t.cells.size())) ==
              pow2(static_cast<unsigned long>(g.edge_count())) *
                  Int(static_cast<unsigned long>(acyclic_subsets(g).size())));
        for (int c = 0; c < static_cast<int>(t.cells.size()); ++c)
            CHECK(abs(t.cell_determinant(c)) == 1);
        CHECK(verify_main_bijection(t).ok);
        const Poly formula = hstar_acyclic(g);
        CHECK(h_vector_from_triangulation(t) == formula);

        const HalfOpenDecomposition ho = half_open_decomposition(t);
        const int d = t.dim();
        for (long j = 0; j <= d + 1; ++j)
            CHECK(ehrhart_from_halfopen(t, ho, j) == ehrhart_from_hstar(formula, d, j));
    }
}
