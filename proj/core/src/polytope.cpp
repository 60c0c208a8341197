#include "polynorm/polytope.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace polynorm {

std::string to_string(const VertexLabel& v) { return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")"; }

std::vector<Point> factor_points(int r, const std::string& coordinatization) {
    std::vector<Point> pts;
    if (r == 2) {
        pts.push_back(Point{Rational(0)});
        pts.push_back(Point{Rational(1)});
        return pts;
    }
    if (r < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (int k = 1; k <= r; ++k) {
        if (coordinatization == "circle-int") {
            std::int64_t t = 2 * k - r - 1;
            Rational den(1 + t * t);
            pts.push_back(Point{Rational(1 - t * t) / den, Rational(2 * t) / den});
        } else if (coordinatization == "parabola") {
            std::int64_t t = k;
            pts.push_back(Point{Rational(t), Rational(t * t)});
        } else {
            throw std::invalid_argument("unknown coordinatization '" + coordinatization + "'");
        }
    }
    return pts;
}

namespace {

// Outward facets of a single factor: normal . x <= offset.
struct FactorFacet {
    Point normal;
    Rational offset;
};

std::vector<FactorFacet> factor_facets(const std::vector<Point>& pts) {
    std::vector<FactorFacet> out;
    if (pts.size() == 2) {
        out.push_back({Point{Rational(-1)}, -pts[0][0]});
        out.push_back({Point{Rational(1)}, pts[1][0]});
        return out;
    }
    const std::size_t r = pts.size();
    for (std::size_t k = 0; k < r; ++k) {
        const Point& a = pts[k];
        const Point& b = pts[(k + 1) % r];
        // Rotating the edge clockwise gives an outward normal of the same length.
        Point nrm{b[1] - a[1], a[0] - b[0]};
        out.push_back({nrm, dot(nrm, a)});
    }
    return out;
}

Rational factor_measure(const std::vector<Point>& pts) {
    if (pts.size() == 2) return pts[1][0] - pts[0][0];
    return polygon_area(pts);
}

}  // namespace

ProductPolytope ProductPolytope::build(int n, int m, const std::string& coordinatization) {
    if (n < 3 || m < 3) throw std::invalid_argument("P(n,m) requires n, m >= 3");
    ProductPolytope P;
    P.n_ = n;
    P.m_ = m;
    P.coordinatization_ = coordinatization;
    P.poly1_ = factor_points(n, coordinatization);
    P.poly2_ = factor_points(m, coordinatization);
    P.finish();
    return P;
}

ProductPolytope ProductPolytope::prism(int m, const std::string& coordinatization) {
    if (m < 3) throw std::invalid_argument("prism requires m >= 3");
    ProductPolytope P;
    P.n_ = 2;
    P.m_ = m;
    P.coordinatization_ = coordinatization;
    P.poly1_ = factor_points(2, coordinatization);
    P.poly2_ = factor_points(m, coordinatization);
    P.finish();
    return P;
}

void ProductPolytope::finish() {
    const int d1 = static_cast<int>(poly1_[0].size());
    const int d2 = static_cast<int>(poly2_[0].size());
    dim_ = d1 + d2;
    cache_ = std::make_shared<OrientationCache>();
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= m_; ++j) {
            Point p = poly1_[i - 1];
            p.insert(p.end(), poly2_[j - 1].begin(), poly2_[j - 1].end());
            vertices_.push_back(std::move(p));
        }
    }
    measure1_ = factor_measure(poly1_);
    measure2_ = factor_measure(poly2_);
    volume_ = measure1_ * measure2_;

    auto f1 = factor_facets(poly1_);
    auto f2 = factor_facets(poly2_);
    for (std::size_t k = 0; k < f1.size(); ++k) {
        FacetPrism F;
        F.kind = FacetKind::EdgeOfFirst;
        F.edge_index = static_cast<int>(k) + 1;
        F.normal = f1[k].normal;
        F.normal.resize(dim_, Rational(0));
        F.offset = f1[k].offset;
        facets_.push_back(std::move(F));
    }
    for (std::size_t k = 0; k < f2.size(); ++k) {
        FacetPrism F;
        F.kind = FacetKind::EdgeOfSecond;
        F.edge_index = static_cast<int>(k) + 1;
        F.normal.assign(d1, Rational(0));
        F.normal.insert(F.normal.end(), f2[k].normal.begin(), f2[k].normal.end());
        F.offset = f2[k].offset;
        facets_.push_back(std::move(F));
    }
    const int nv = num_vertices();
    const int nf = static_cast<int>(facets_.size());
    vertex_facets_.assign(nv, {});
    on_facet_.assign(nv, std::vector<char>(nf, 0));
    for (int f = 0; f < nf; ++f) {
        for (int v = 0; v < nv; ++v) {
            Rational s = dot(facets_[f].normal, vertices_[v]);
            if (s > facets_[f].offset) throw std::logic_error("vertex violates a facet inequality");
            if (s == facets_[f].offset) {
                facets_[f].vertex_labels.push_back(label(v));
                vertex_facets_[v].push_back(f);
                on_facet_[v][f] = 1;
            }
        }
    }
    ridge_.assign(nf, std::vector<char>(nf, 0));
    for (int f = 0; f < nf; ++f) {
        for (int g = f + 1; g < nf; ++g) {
            std::vector<Point> common;
            for (int v = 0; v < nv; ++v)
                if (on_facet_[v][f] && on_facet_[v][g]) common.push_back(vertices_[v]);
            bool r = !common.empty() && affine_span_dim(common) == dim_ - 2;
            ridge_[f][g] = ridge_[g][f] = r;
        }
    }
}

VertexLabel ProductPolytope::wrap(int i, int j) const {
    auto md = [](int a, int r) { return ((a - 1) % r + r) % r + 1; };
    return {md(i, n_), md(j, m_)};
}

int ProductPolytope::index(const VertexLabel& v) const {
    if (!has_label(v)) throw std::out_of_range("vertex label " + to_string(v) + " not on polytope");
    return (v.i - 1) * m_ + (v.j - 1);
}

VertexLabel ProductPolytope::label(int index) const { return {index / m_ + 1, index % m_ + 1}; }

bool ProductPolytope::has_label(const VertexLabel& v) const {
    return v.i >= 1 && v.i <= n_ && v.j >= 1 && v.j <= m_;
}

bool ProductPolytope::vertex_on_facet(int vertex, int facet) const { return on_facet_[vertex][facet]; }

std::vector<int> ProductPolytope::common_facets(std::span<const int> vs) const {
    std::vector<int> out;
    if (vs.empty()) return out;
    for (int f : vertex_facets_[vs[0]]) {
        bool all = true;
        for (int v : vs)
            if (!on_facet_[v][f]) {
                all = false;
                break;
            }
        if (all) out.push_back(f);
    }
    return out;
}

Rational ProductPolytope::pyramid_volume(int facet, const Point& apex) const {
    const FacetPrism& F = facets_[facet];
    Rational h = (dot(F.normal, apex) - F.offset).abs();
    const Rational& other = F.kind == FacetKind::EdgeOfFirst ? measure2_ : measure1_;
    return h * other / Rational(dim_);
}

Point ProductPolytope::centroid() const {
    Point c(dim_, Rational(0));
    for (const auto& v : vertices_) c = c + v;
    return scale(c, Rational(1) / Rational(num_vertices()));
}

bool ProductPolytope::contains(const Point& p) const {
    if (static_cast<int>(p.size()) != dim_) throw DimensionError("point dimension does not match polytope");
    for (const auto& F : facets_)
        if (dot(F.normal, p) > F.offset) return false;
    return true;
}

bool ProductPolytope::strictly_inside(const Point& p) const {
    if (static_cast<int>(p.size()) != dim_) throw DimensionError("point dimension does not match polytope");
    for (const auto& F : facets_)
        if (dot(F.normal, p) >= F.offset) return false;
    return true;
}

FaceDescriptor ProductPolytope::minimal_face(const Point& p) const {
    if (!contains(p)) throw std::invalid_argument("minimal_face: point outside polytope");
    FaceDescriptor face;
    for (int f = 0; f < static_cast<int>(facets_.size()); ++f)
        if (dot(facets_[f].normal, p) == facets_[f].offset) face.facets.push_back(f);
    std::vector<Point> pts;
    for (int v = 0; v < num_vertices(); ++v) {
        bool on_all = true;
        for (int f : face.facets)
            if (!on_facet_[v][f]) {
                on_all = false;
                break;
            }
        if (on_all) {
            face.vertices.push_back(label(v));
            pts.push_back(vertices_[v]);
        }
    }
    face.dimension = affine_span_dim(pts);
    return face;
}

bool ProductPolytope::triangle_interior_to_facet(const std::array<VertexLabel, 3>& tri, int facet) const {
    std::array<int, 3> idx{index(tri[0]), index(tri[1]), index(tri[2])};
    for (int v : idx)
        if (!on_facet_[v][facet]) return false;
    for (int g = 0; g < static_cast<int>(facets_.size()); ++g) {
        if (g == facet || !ridge_[facet][g]) continue;
        if (on_facet_[idx[0]][g] && on_facet_[idx[1]][g] && on_facet_[idx[2]][g]) return false;
    }
    return true;
}

int ProductPolytope::orientation_of(std::span<const int> vs) const {
    if (static_cast<int>(vs.size()) != dim_ + 1) throw DimensionError("orientation_of: wrong number of vertices");
    std::array<int, OrientationCache::kMaxArity> sorted{};
    std::copy(vs.begin(), vs.end(), sorted.begin());
    const std::size_t k = vs.size();
    int parity = 1;
    for (std::size_t a = 1; a < k; ++a) {
        for (std::size_t b = a; b > 0 && sorted[b - 1] > sorted[b]; --b) {
            std::swap(sorted[b - 1], sorted[b]);
            parity = -parity;
        }
    }
    for (std::size_t a = 1; a < k; ++a)
        if (sorted[a] == sorted[a - 1]) return 0;
    std::span<const int> key(sorted.data(), k);
    int s = cache_->get(key, [&] {
        std::vector<Point> pts;
        for (int v : key) pts.push_back(vertices_[v]);
        return orientation(pts);
    });
    return parity * s;
}

Rational ProductPolytope::signed_volume_of(std::span<const int> vs) const {
    return signed_volume(points_of(vs));
}

std::vector<Point> ProductPolytope::points_of(std::span<const int> vs) const {
    std::vector<Point> pts;
    pts.reserve(vs.size());
    for (int v : vs) pts.push_back(vertices_[v]);
    return pts;
}

PolytopePtr make_product(int n, int m, const std::string& coordinatization) {
    return std::make_shared<const ProductPolytope>(ProductPolytope::build(n, m, coordinatization));
}

PolytopePtr make_prism(int m, const std::string& coordinatization) {
    return std::make_shared<const ProductPolytope>(ProductPolytope::prism(m, coordinatization));
}

std::vector<int> EnumeratedSimplex::positively_oriented() const {
    std::vector<int> out = vertices;
    if (orientation < 0 && out.size() >= 2) std::swap(out[out.size() - 2], out[out.size() - 1]);
    return out;
}

std::vector<EnumeratedSimplex> enumerate_simplices(const ProductPolytope& P) {
    std::vector<EnumeratedSimplex> out;
    const int k = P.dim() + 1;
    const int nv = P.num_vertices();
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            int o = P.orientation_of(cur);
            if (o != 0) out.push_back({cur, o});
            return;
        }
        for (int v = start; v <= nv - (k - static_cast<int>(cur.size())); ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace polynorm
