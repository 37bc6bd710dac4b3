#include <doctest.h>

#include <random>

#include "cosmo/exact.hpp"

using namespace cosmo;

namespace {

QVector qv(std::vector<long> entries) {
    QVector v(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) v[i] = entries[i];
    return v;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> entry(-5, 5);
    QMatrix m(n, QVector(n));
    for (auto& row : m)
        for (auto& x : row) x = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("determinants and orientation signs") {
    CHECK(determinant({{Rat(2)}}) == 2);
    CHECK(determinant(QMatrix{qv({1, 2}), qv({3, 4})}) == -2);
    CHECK(determinant(QMatrix{qv({1, 2}), qv({2, 4})}) == 0);

    // unit points: identity matrix
    CHECK(orientation_sign(QMatrix{qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}) == 1);
    // repeated point
    CHECK(orientation_sign(QMatrix{qv({1, 0, 0}), qv({1, 0, 0}), qv({0, 0, 1})}) == 0);
    // prism dependency: squiggle = e_u + e_v - e_f
    CHECK(orientation_sign(QMatrix{qv({1, 0, 0, 0}), qv({0, 1, 0, 0}), qv({0, 0, 1, 0}),
                                   qv({1, 1, -1, 0})}) == 0);
}

TEST_CASE("orientation alternates under row swaps") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        QMatrix m = random_matrix(rng, 4);
        const Rat d = determinant(m);
        std::swap(m[1], m[3]);
        CHECK(determinant(m) == -d);
    }
}

TEST_CASE("facet hyperplanes on the single-edge polytope") {
    // ambient (u, v, f); hyperplane through e_u, e_v is x_f = 0
    const Hyperplane h1 = facet_hyperplane(QMatrix{qv({1, 0, 0}), qv({0, 1, 0})});
    CHECK(h1.normal == qv({0, 0, 1}));
    CHECK(h1.offset == 0);

    // through e_f and the right arrow -e_u + e_v + e_f: x_u + x_v = 0
    const Hyperplane h2 = facet_hyperplane(QMatrix{qv({0, 0, 1}), qv({-1, 1, 1})});
    CHECK(h2.normal == qv({1, 1, 0}));
    CHECK(h2.eval(qv({0, 0, 1})) == 0);
    CHECK(h2.eval(qv({-1, 1, 1})) == 0);

    CHECK_THROWS_AS(facet_hyperplane(QMatrix{qv({1, 0, 0}), qv({2, 0, 0})}),
                    std::invalid_argument);
}

TEST_CASE("sign tests are invariant under all-ones shifts of the functional") {
    // On the hull sum(x) = 1 the representative (normal + c*1, offset + c)
    // evaluates identically; facet normals are canonical representatives.
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        QVector x(4);
        long sum = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            const long v = entry(rng);
            x[i] = v;
            sum += v;
        }
        x[3] = 1 - sum;  // now sum(x) = 1
        Hyperplane h{qv({1, -2, 3, 0}), Rat(2)};
        Hyperplane shifted{qv({1 + 5, -2 + 5, 3 + 5, 0 + 5}), Rat(2 + 5)};
        CHECK(h.eval(x) == shifted.eval(x));
    }
}

TEST_CASE("exact linear solves") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        const QMatrix a = random_matrix(rng, 4);
        QVector x0(4);
        std::uniform_int_distribution<long> entry(-7, 7);
        for (Rat& v : x0) v = entry(rng);
        QVector b(4, Rat(0));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) b[i] += a[i][j] * x0[j];
        const auto solved = solve_linear(a, b);
        if (determinant(a) == 0) {
            CHECK_FALSE(solved.has_value());
        } else {
            REQUIRE(solved.has_value());
            CHECK(*solved == x0);
        }
    }
    CHECK_FALSE(solve_linear(QMatrix{qv({1, 1}), qv({2, 2})}, qv({1, 1})).has_value());
}

TEST_CASE("rational arithmetic stays exact") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
    for (int trial = 0; trial < 100; ++trial) {
        const Rat a = make_rat(num(rng), den(rng));
        const Rat b = make_rat(num(rng), den(rng));
        const Rat s = (a + b) * Rat(a.get_den()) * Rat(b.get_den());
        CHECK(s.get_den() == 1);  // (a/b + c/d) b d is an integer
    }
}

TEST_CASE("lp membership") {
    // single-edge polytope: 6 lattice points in ambient 3
    const QMatrix pts = {qv({1, 0, 0}),  qv({0, 1, 0}),  qv({0, 0, 1}),
                         qv({1, 1, -1}), qv({1, -1, 1}), qv({-1, 1, 1})};

    for (const QVector& p : pts) CHECK(lp_membership(p, pts));

    QVector barycenter(3, Rat(0));
    for (const QVector& p : pts)
        for (std::size_t i = 0; i < 3; ++i) barycenter[i] += p[i] / 6;
    CHECK(lp_membership(barycenter, pts));

    CHECK_FALSE(lp_membership(qv({2, 0, 0}), pts));   // violates x_u <= 1
    CHECK_FALSE(lp_membership(qv({0, 0, 0}), pts));   // sum != 1
    CHECK_FALSE(lp_membership(qv({1, 1, 1}), pts));

    // midpoints of generator pairs stay inside
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        const QVector &a = pts[pick(rng)], &b = pts[pick(rng)];
        QVector mid(3);
        for (std::size_t i = 0; i < 3; ++i) mid[i] = (a[i] + b[i]) / 2;
        CHECK(lp_membership(mid, pts));
    }
}
