#pragma once

#include <array>
#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "polynorm/geometry.hpp"

namespace polynorm {

// Vertex (i,j) of P(n,m): i indexes the first polygon, j the second, both 1-based.
struct VertexLabel {
    int i = 1;
    int j = 1;
    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

std::string to_string(const VertexLabel& v);

enum class FacetKind { EdgeOfFirst, EdgeOfSecond };

// A facet of the product: (face of factor 1) x factor 2 or factor 1 x (face of factor 2).
// Supporting halfspace is normal . x <= offset, with equality on the facet.
struct FacetPrism {
    FacetKind kind = FacetKind::EdgeOfFirst;
    int edge_index = 1;  // edge (k, k+1); for a segment factor, the endpoint k
    std::vector<VertexLabel> vertex_labels;
    Point normal;
    Rational offset;
};

struct FaceDescriptor {
    int dimension = 0;
    std::vector<int> facets;  // indices into facets(), the defining set
    std::vector<VertexLabel> vertices;
};

// Rational points for an r-gon (or a segment when r == 2) in counterclockwise order.
std::vector<Point> factor_points(int r, const std::string& coordinatization);

class ProductPolytope {
public:
    // P(n,m) for n,m >= 3. Coordinatizations: "circle-int" (default) and "parabola".
    static ProductPolytope build(int n, int m, const std::string& coordinatization = "circle-int");
    // Three-dimensional prism: segment x m-gon, labelled (1,j) bottom and (2,j) top.
    static ProductPolytope prism(int m, const std::string& coordinatization = "circle-int");

    int n() const { return n_; }
    int m() const { return m_; }
    int dim() const { return dim_; }
    bool is_prism() const { return n_ == 2; }
    const std::string& coordinatization() const { return coordinatization_; }
    int num_vertices() const { return n_ * m_; }

    const std::vector<Point>& polygon1() const { return poly1_; }
    const std::vector<Point>& polygon2() const { return poly2_; }

    VertexLabel wrap(int i, int j) const;
    int index(const VertexLabel& v) const;
    VertexLabel label(int index) const;
    bool has_label(const VertexLabel& v) const;
    const Point& vertex(const VertexLabel& v) const { return vertices_[index(v)]; }
    const Point& vertex(int index) const { return vertices_[index]; }

    const std::vector<FacetPrism>& facets() const { return facets_; }
    const std::vector<int>& facets_of_vertex(int index) const { return vertex_facets_[index]; }
    bool vertex_on_facet(int vertex, int facet) const;
    // Facets containing every listed vertex.
    std::vector<int> common_facets(std::span<const int> vertices) const;
    bool in_boundary(std::span<const int> vertices) const { return !common_facets(vertices).empty(); }
    // Whether facets f and g meet in a face of codimension two.
    bool is_ridge(int f, int g) const { return ridge_[f][g]; }

    Rational volume() const { return volume_; }
    // Volume of conv(facet, apex).
    Rational pyramid_volume(int facet, const Point& apex) const;
    Point centroid() const;

    bool contains(const Point& p) const;
    bool strictly_inside(const Point& p) const;
    FaceDescriptor minimal_face(const Point& p) const;
    bool triangle_interior_to_facet(const std::array<VertexLabel, 3>& tri, int facet) const;

    // Orientation of the vertices in the given order (memoized by sorted tuple).
    int orientation_of(std::span<const int> vertices) const;
    Rational signed_volume_of(std::span<const int> vertices) const;
    std::vector<Point> points_of(std::span<const int> vertices) const;

    const OrientationCache& cache() const { return *cache_; }

private:
    ProductPolytope() = default;
    void finish();

    int n_ = 0, m_ = 0, dim_ = 0;
    std::string coordinatization_;
    std::vector<Point> poly1_, poly2_;
    std::vector<Point> vertices_;
    std::vector<FacetPrism> facets_;
    std::vector<std::vector<int>> vertex_facets_;
    std::vector<std::vector<char>> on_facet_;  // [vertex][facet]
    std::vector<std::vector<char>> ridge_;
    Rational measure1_, measure2_, volume_;
    std::shared_ptr<OrientationCache> cache_;
};

using PolytopePtr = std::shared_ptr<const ProductPolytope>;

PolytopePtr make_product(int n, int m, const std::string& coordinatization = "circle-int");
PolytopePtr make_prism(int m, const std::string& coordinatization = "circle-int");

// A nondegenerate full-dimensional simplex: sorted vertex indices and the
// orientation of that sorted tuple.
struct EnumeratedSimplex {
    std::vector<int> vertices;
    int orientation = 0;
    // The same vertex set reordered (last two swapped if needed) to be positively oriented.
    std::vector<int> positively_oriented() const;
};

std::vector<EnumeratedSimplex> enumerate_simplices(const ProductPolytope& P);

}  // namespace polynorm
