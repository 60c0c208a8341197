#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "polynorm/polytope.hpp"

using namespace polynorm;

namespace {

// Combinatorial facet membership: edge k of the first polygon holds i in {k, k+1}.
bool on_facet_combinatorial(const FacetPrism& F, const VertexLabel& v, int n, int m) {
    int k = F.edge_index;
    if (F.kind == FacetKind::EdgeOfFirst) return v.i == k || v.i == k % n + 1;
    return v.j == k || v.j == k % m + 1;
}

std::vector<int> all_vertices_on(const ProductPolytope& P, int f) {
    std::vector<int> out;
    for (int v = 0; v < P.num_vertices(); ++v)
        if (P.vertex_on_facet(v, f)) out.push_back(v);
    return out;
}

}  // namespace

TEST_SUITE("product_polytope") {
    TEST_CASE("sizes of P(3,4) and P(3,3)") {
        auto P = make_product(3, 4);
        CHECK(P->num_vertices() == 12);
        CHECK(P->facets().size() == 7);
        int eight = 0, six = 0;
        for (const auto& F : P->facets()) {
            if (F.vertex_labels.size() == 8) ++eight;
            if (F.vertex_labels.size() == 6) ++six;
        }
        CHECK(eight == 3);
        CHECK(six == 4);
        auto Q = make_product(3, 3);
        CHECK(Q->num_vertices() == 9);
        CHECK(Q->facets().size() == 6);
        for (const auto& F : Q->facets()) CHECK(F.vertex_labels.size() == 6);
    }

    TEST_CASE("volume is the product of shoelace areas") {
        for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 5}, {6, 6}}) {
            auto P = make_product(n, m);
            oracle::Q expected = oracle::shoelace(oracle::circle_polygon(n)) * oracle::shoelace(oracle::circle_polygon(m));
            CHECK(P->volume().to_mpq() == expected);
        }
        auto P33 = make_product(3, 3);
        oracle::Q a3 = oracle::shoelace(oracle::circle_polygon(3));
        CHECK(P33->volume().to_mpq() == a3 * a3);
    }

    TEST_CASE("vertex coordinates follow the circle-int formula") {
        auto P = make_product(4, 5);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 5; ++j) {
                auto q = oracle::product_point(i, j, 4, 5);
                const Point& p = P->vertex(VertexLabel{i, j});
                for (int c = 0; c < 4; ++c) CHECK(p[c].to_mpq() == q[c]);
            }
    }

    TEST_CASE("labels wrap modulo n and m") {
        auto P = make_product(4, 6);
        CHECK(P->wrap(5, 0) == VertexLabel{1, 6});
        CHECK(P->wrap(0, 7) == VertexLabel{4, 1});
        CHECK(P->wrap(-3, 13) == VertexLabel{1, 1});
    }

    TEST_CASE("invalid sizes and coordinatizations are rejected") {
        CHECK_THROWS(make_product(2, 5));
        CHECK_THROWS(make_product(5, 1));
        CHECK_THROWS(make_product(4, 4, "no-such-coordinates"));
    }

    TEST_CASE("halfspaces: facet vertices tight, every other vertex strictly inside") {
        for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}, {5, 6}}) {
            auto P = make_product(n, m);
            CHECK(P->facets().size() == static_cast<std::size_t>(n + m));
            for (const auto& F : P->facets()) {
                std::size_t tight = 0;
                for (int v = 0; v < P->num_vertices(); ++v) {
                    Rational s = dot(F.normal, P->vertex(v));
                    bool member = on_facet_combinatorial(F, P->label(v), n, m);
                    CHECK((s == F.offset) == member);
                    CHECK(s <= F.offset);
                    tight += member;
                }
                CHECK(tight == (F.kind == FacetKind::EdgeOfFirst ? 2u * m : 2u * n));
            }
        }
    }

    TEST_CASE("every vertex on exactly 4 facets and every edge on exactly 3") {
        auto P = make_product(4, 5);
        for (int v = 0; v < P->num_vertices(); ++v) CHECK(P->facets_of_vertex(v).size() == 4);
        for (int v = 0; v < P->num_vertices(); ++v) {
            VertexLabel l = P->label(v);
            for (auto w : {P->wrap(l.i + 1, l.j), P->wrap(l.i, l.j + 1)}) {
                std::array<int, 2> e{v, P->index(w)};
                CHECK(P->common_facets(e).size() == 3);
            }
        }
    }

    TEST_CASE("alternate coordinatization gives the same face lattice") {
        auto A = make_product(4, 5, "circle-int");
        auto B = make_product(4, 5, "parabola");
        REQUIRE(A->facets().size() == B->facets().size());
        for (std::size_t f = 0; f < A->facets().size(); ++f) {
            CHECK(A->facets()[f].vertex_labels == B->facets()[f].vertex_labels);
            CHECK(all_vertices_on(*A, static_cast<int>(f)) == all_vertices_on(*B, static_cast<int>(f)));
            for (std::size_t g = 0; g < A->facets().size(); ++g)
                CHECK(A->is_ridge(static_cast<int>(f), static_cast<int>(g)) == B->is_ridge(static_cast<int>(f), static_cast<int>(g)));
        }
        CHECK(enumerate_simplices(*make_product(3, 4, "parabola")).size() == enumerate_simplices(*make_product(3, 4)).size());
    }

    TEST_CASE("minimal face of sample points") {
        auto P = make_product(3, 4);
        FaceDescriptor v = P->minimal_face(P->vertex(VertexLabel{2, 3}));
        CHECK(v.dimension == 0);
        CHECK(v.vertices == std::vector<VertexLabel>{VertexLabel{2, 3}});
        CHECK(P->minimal_face(P->centroid()).dimension == 4);
        Point mid = scale(P->vertex(VertexLabel{1, 1}) + P->vertex(VertexLabel{1, 2}), Rational(1, 2));
        FaceDescriptor e = P->minimal_face(mid);
        CHECK(e.dimension == 1);
        CHECK(e.vertices == std::vector<VertexLabel>{VertexLabel{1, 1}, VertexLabel{1, 2}});
        for (int f : e.facets) CHECK(dot(P->facets()[f].normal, mid) == P->facets()[f].offset);
        Point outside = scale(P->centroid(), Rational(1)) + Point{Rational(5), Rational(0), Rational(0), Rational(0)};
        CHECK_THROWS(P->minimal_face(outside));
    }

    TEST_CASE("triangle interior to facet: prism bottom example and brute force on P(3,3)") {
        // Bottom 4-gon of the prism: (1,1),(1,2),(1,3) has interior edge (1,1)-(1,3).
        auto R = make_prism(4);
        int bottom = -1;
        for (std::size_t f = 0; f < R->facets().size(); ++f)
            if (R->facets()[f].kind == FacetKind::EdgeOfFirst && R->facets()[f].edge_index == 1) bottom = static_cast<int>(f);
        REQUIRE(bottom >= 0);
        CHECK(R->triangle_interior_to_facet({VertexLabel{1, 1}, VertexLabel{1, 2}, VertexLabel{1, 3}}, bottom));

        auto P = make_product(3, 3);
        const int nf = static_cast<int>(P->facets().size());
        std::vector<int> count(nf, 0), expected(nf, 0);
        for (int a = 0; a < 9; ++a)
            for (int b = a + 1; b < 9; ++b)
                for (int c = b + 1; c < 9; ++c) {
                    std::array<VertexLabel, 3> tri{P->label(a), P->label(b), P->label(c)};
                    for (int f = 0; f < nf; ++f) {
                        if (P->triangle_interior_to_facet(tri, f)) ++count[f];
                        // In f but in no second facet together: its relative interior is interior to f.
                        const auto& F = P->facets()[f];
                        bool in_f = true;
                        for (const auto& v : tri) in_f = in_f && on_facet_combinatorial(F, v, 3, 3);
                        if (!in_f) continue;
                        bool in_other = false;
                        for (int g = 0; g < nf; ++g) {
                            if (g == f) continue;
                            bool all = true;
                            for (const auto& v : tri) all = all && on_facet_combinatorial(P->facets()[g], v, 3, 3);
                            in_other = in_other || all;
                        }
                        if (!in_other) ++expected[f];
                    }
                }
        CHECK(count == expected);
        // Each facet is a triangular prism: 20 triangles, minus 2 caps and 12 on the square sides.
        for (int f = 0; f < nf; ++f) CHECK(count[f] == 6);
        // A triangle spanning two facet hyperplanes is interior to neither.
        std::array<VertexLabel, 3> across{VertexLabel{1, 1}, VertexLabel{2, 2}, VertexLabel{3, 3}};
        for (int f = 0; f < nf; ++f) CHECK_FALSE(P->triangle_interior_to_facet(across, f));
    }

    TEST_CASE("enumerate_simplices matches brute-force orientation counts") {
        for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}}) {
            auto P = make_product(n, m);
            const int N = n * m;
            std::size_t expected = 0;
            for (int a = 0; a < N; ++a)
                for (int b = a + 1; b < N; ++b)
                    for (int c = b + 1; c < N; ++c)
                        for (int d = c + 1; d < N; ++d)
                            for (int e = d + 1; e < N; ++e) {
                                std::vector<oracle::QVec> pts;
                                for (int v : {a, b, c, d, e}) pts.push_back(oracle::product_point(v / m + 1, v % m + 1, n, m));
                                expected += oracle::orient5(pts) != 0;
                            }
            auto simplices = enumerate_simplices(*P);
            CHECK(simplices.size() == expected);
            CHECK(simplices.size() <= (n == 3 && m == 3 ? 126u : 792u));
            for (const auto& s : simplices) {
                CHECK(std::is_sorted(s.vertices.begin(), s.vertices.end()));
                CHECK(P->signed_volume_of(s.positively_oriented()).sign() == 1);
            }
        }
    }

    TEST_CASE("prism polytope") {
        auto R = make_prism(6);
        CHECK(R->dim() == 3);
        CHECK(R->num_vertices() == 12);
        CHECK(R->facets().size() == 8);
        CHECK(R->volume().to_mpq() == oracle::shoelace(oracle::circle_polygon(6)));
    }
}
