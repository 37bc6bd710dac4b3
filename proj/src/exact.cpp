#include "cosmo/exact.hpp"

#include <algorithm>

namespace cosmo {

Rat dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw internal_error("dot: dimension mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Rat dot(const QVector& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw internal_error("dot: dimension mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) acc += a[i] * b[i];
    return acc;
}

Rat determinant(QMatrix m) {
    const std::size_t n = m.size();
    for (const QVector& row : m)
        if (row.size() != n) throw internal_error("determinant: matrix not square");
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rat inv_pivot = Rat(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat factor = m[r][col] * inv_pivot;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

int orientation_sign(const QMatrix& points) {
    if (points.empty()) throw std::invalid_argument("orientation_sign: no points");
    for (const QVector& p : points)
        if (p.size() != points.size())
            throw std::invalid_argument("orientation_sign: need d+1 points of dimension d+1");
    return sgn(determinant(points));
}

namespace {

// Scale to integral entries with content 1 and first nonzero entry positive.
void canonicalize(QVector& v) {
    Int denom_lcm = 1;
    for (const Rat& x : v) denom_lcm = lcm(denom_lcm, x.get_den());
    Int content = 0;
    std::vector<Int> scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = v[i].get_num() * (denom_lcm / v[i].get_den());
        content = gcd(content, scaled[i]);
    }
    if (content == 0) throw internal_error("canonicalize: zero vector");
    int lead_sign = 0;
    for (const Int& x : scaled) {
        if (x != 0) {
            lead_sign = sgn(x);
            break;
        }
    }
    if (lead_sign < 0) content = -content;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(scaled[i] / content);
}

}  // namespace

QVector kernel_vector(QMatrix m, std::size_t cols) {
    const std::size_t rows = m.size();
    for (const QVector& row : m)
        if (row.size() != cols) throw internal_error("kernel_vector: ragged matrix");

    // Row echelon with recorded pivot columns.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || m[rr][c] == 0) continue;
            const Rat factor = m[rr][c] * inv;
            for (std::size_t cc = c; cc < cols; ++cc) m[rr][cc] -= factor * m[r][cc];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() + 1 != cols)
        throw std::invalid_argument("kernel_vector: input does not have nullity one");

    // Unique free column; back-substitute with free value 1.
    std::vector<bool> is_pivot(cols, false);
    for (const std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    QVector v(cols, Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        const std::size_t c = pivot_col[i];
        v[c] = -m[i][free_col] / m[i][c];
    }
    return v;
}

Hyperplane facet_hyperplane(const QMatrix& points) {
    if (points.empty()) throw std::invalid_argument("facet_hyperplane: no points");
    const std::size_t ambient = points.front().size();
    if (points.size() + 1 != ambient)
        throw std::invalid_argument("facet_hyperplane: need ambient-1 points");
    QVector normal;
    try {
        normal = kernel_vector(points, ambient);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("facet_hyperplane: points are affinely dependent");
    }
    canonicalize(normal);
    return Hyperplane{std::move(normal), Rat(0)};
}

std::optional<QVector> solve_linear(QMatrix a, QVector b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw internal_error("solve_linear: dimension mismatch");
    for (const QVector& row : a)
        if (row.size() != n) throw internal_error("solve_linear: matrix not square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[col]);
        std::swap(b[p], b[col]);
        const Rat inv = Rat(1) / a[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rat factor = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    QVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

bool lp_membership(const QVector& x, const QMatrix& generators) {
    if (generators.empty()) throw std::invalid_argument("lp_membership: no generators");
    const std::size_t dim = x.size();
    for (const QVector& g : generators)
        if (g.size() != dim) throw internal_error("lp_membership: dimension mismatch");

    // Phase-1 tableau for { G lambda = x, sum lambda = 1, lambda >= 0 } with
    // one artificial per row; minimize the artificial sum.
    const std::size_t rows = dim + 1;
    const std::size_t n_structural = generators.size();
    QMatrix t(rows, QVector(n_structural + 1, Rat(0)));  // last column = rhs
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < n_structural; ++j) t[i][j] = generators[j][i];
        t[i][n_structural] = x[i];
    }
    for (std::size_t j = 0; j < n_structural; ++j) t[dim][j] = 1;
    t[dim][n_structural] = 1;
    for (std::size_t i = 0; i < rows; ++i)
        if (t[i][n_structural] < 0)
            for (Rat& v : t[i]) v = -v;

    // w = sum of artificials; its row starts as the column sums.
    QVector w(n_structural + 1, Rat(0));
    for (std::size_t j = 0; j <= n_structural; ++j)
        for (std::size_t i = 0; i < rows; ++i) w[j] += t[i][j];

    // basis[i]: structural index, or n_structural + i for the i-th artificial.
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = n_structural + i;

    while (true) {
        // Bland: smallest structural index with positive w-coefficient enters.
        std::size_t enter = n_structural;
        for (std::size_t j = 0; j < n_structural; ++j) {
            if (w[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == n_structural) break;

        std::size_t leave = rows;
        Rat best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            const Rat ratio = t[i][n_structural] / t[i][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == rows) throw internal_error("lp_membership: phase-1 unbounded");

        const Rat inv = Rat(1) / t[leave][enter];
        for (Rat& v : t[leave]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rat factor = t[i][enter];
            for (std::size_t j = 0; j <= n_structural; ++j) t[i][j] -= factor * t[leave][j];
        }
        if (w[enter] != 0) {
            const Rat factor = w[enter];
            for (std::size_t j = 0; j <= n_structural; ++j) w[j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }
    return w[n_structural] == 0;
}

}  // namespace cosmo
