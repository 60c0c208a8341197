#include "polynorm/geometry.hpp"

#include <string>

namespace polynorm {

namespace {

void require_square(const Matrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw DimensionError("determinant: matrix is not square");
}

Matrix edge_matrix(std::span<const Point> points) {
    if (points.empty()) throw DimensionError("empty point list");
    std::size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw DimensionError("points of mixed dimension");
    Matrix m;
    m.reserve(points.size() - 1);
    for (std::size_t k = 1; k < points.size(); ++k) m.push_back(points[k] - points[0]);
    return m;
}

void require_simplex_shape(std::span<const Point> points) {
    if (points.empty()) throw DimensionError("empty point list");
    std::size_t d = points[0].size();
    if (d < 2 || d > 4) throw DimensionError("dimension must be 2, 3 or 4, got " + std::to_string(d));
    if (points.size() != d + 1)
        throw DimensionError("expected " + std::to_string(d + 1) + " points in dimension " + std::to_string(d));
}

}  // namespace

Rational determinant(Matrix m) {
    require_square(m);
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    // Scale each row by the lcm of its denominators.
    mpz_class scale_total = 1;
    for (auto& row : m) {
        mpz_class l = 1;
        for (const auto& x : row) {
            if (!x.is_integer()) {
                mpz_class d = x.denominator();
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            }
        }
        if (l != 1) {
            Rational f{l};
            for (auto& x : row) x *= f;
            scale_total *= l;
        }
    }
    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Rational(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = Rational(0);
        }
        prev = m[k][k];
    }
    Rational det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    if (scale_total != 1) det /= Rational(scale_total);
    return det;
}

int rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw DimensionError("rank: ragged matrix");
    int r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = fused_sub_mul(m[i][j], f, m[r][j]);
        }
        ++r;
    }
    return r;
}

int orientation(std::span<const Point> points) {
    require_simplex_shape(points);
    return determinant(edge_matrix(points)).sign();
}

Rational signed_volume(std::span<const Point> points) {
    require_simplex_shape(points);
    std::size_t d = points[0].size();
    int fact = d == 2 ? 2 : d == 3 ? 6 : 24;
    return determinant(edge_matrix(points)) / Rational(fact);
}

Rational polygon_area(std::span<const Point> v) {
    if (v.size() < 3) throw std::invalid_argument("polygon_area: fewer than 3 vertices");
    for (const auto& p : v)
        if (p.size() != 2) throw DimensionError("polygon_area: vertices must be 2-dimensional");
    const std::size_t n = v.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::array<Point, 3> tri{v[k], v[(k + 1) % n], v[(k + 2) % n]};
        int o = orientation(tri);
        if (o == 0) throw std::invalid_argument("polygon_area: polygon is not strictly convex");
        if (o < 0) throw std::invalid_argument("polygon_area: vertices are not counterclockwise or not convex");
    }
    // Every other vertex strictly left of every edge rules out multiply-winding stars.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t q = 0; q < n; ++q) {
            if (q == k || q == (k + 1) % n) continue;
            std::array<Point, 3> tri{v[k], v[(k + 1) % n], v[q]};
            if (orientation(tri) <= 0) throw std::invalid_argument("polygon_area: polygon is not convex");
        }
    }
    Rational twice(0);
    for (std::size_t k = 0; k < n; ++k) {
        const Point& a = v[k];
        const Point& b = v[(k + 1) % n];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    return twice / Rational(2);
}

int affine_span_dim(std::span<const Point> points) {
    Matrix m = edge_matrix(points);
    if (m.empty()) return 0;
    return rank(std::move(m));
}

Rational dot(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw DimensionError("dot: dimension mismatch");
    Rational s(0);
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

Point operator-(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw DimensionError("subtract: dimension mismatch");
    Point r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

Point operator+(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw DimensionError("add: dimension mismatch");
    Point r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

Point scale(const Point& a, const Rational& s) {
    Point r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] * s;
    return r;
}

}  // namespace polynorm
