#include <doctest.h>

#include <map>

#include "polynorm/constructions.hpp"
#include "polynorm/covers.hpp"
#include "polynorm/titap.hpp"

using namespace polynorm;

namespace {

struct Scan {
    int maximum = 0;
    std::size_t interior = 0;
    bool within_k_bound = true;
};

Scan scan(int n, int m) {
    auto P = make_product(n, m);
    Scan s;
    for (const auto& e : enumerate_simplices(*P)) {
        if (P->in_boundary(e.vertices)) continue;
        ++s.interior;
        TitapBreakdown b = titap_breakdown(*P, e.vertices);
        s.maximum = std::max(s.maximum, b.titap);
        // Each boundary tetrahedron shares one triangle with every other one.
        int k = b.boundary_tetrahedra;
        if (b.titap > k * (5 - k)) s.within_k_bound = false;
    }
    return s;
}

std::vector<Construction> all_constructions_up_to_8() {
    std::vector<Construction> out;
    for (int m = 3; m <= 8; ++m) out.push_back(p3m_triangulation(m));
    for (int n = 4; n <= 8; ++n)
        for (int m = 3; m <= 8; ++m) out.push_back(product_triangulation(n, m));
    for (int n = 4; n <= 8; n += 2)
        for (int m = 4; m <= 8; m += 2) out.push_back(seven_halves_triangulation(n, m));
    return out;
}

}  // namespace

TEST_SUITE("titap") {
    TEST_CASE("exhaustive: titap <= 6 on P(3,3), P(3,4), P(4,4), with 6 attained on P(4,4)") {
        Scan a = scan(3, 3), b = scan(3, 4), c = scan(4, 4);
        CHECK(a.maximum <= 6);
        CHECK(b.maximum <= 6);
        CHECK(c.maximum == 6);
        CHECK(a.within_k_bound);
        CHECK(b.within_k_bound);
        CHECK(c.within_k_bound);
        CHECK(a.interior > 0);
        MESSAGE("max titap: P(3,3)=" << a.maximum << " P(3,4)=" << b.maximum << " P(4,4)=" << c.maximum);
    }

    TEST_CASE("a simplex inside the boundary is rejected") {
        auto P = make_product(3, 4);
        for (const auto& e : enumerate_simplices(*P))
            if (P->in_boundary(e.vertices)) {
                CHECK_THROWS(titap_breakdown(*P, e.vertices));
                return;
            }
    }

    TEST_CASE("titap_chain meets 12mn - 16m - 16n on every construction up to 8") {
        for (const auto& c : all_constructions_up_to_8()) {
            CAPTURE(c.name);
            CAPTURE(c.n);
            CAPTURE(c.m);
            AffineChain ch = c.chain();
            Rational t = titap_chain(ch);
            CHECK(t >= titap_chain_lower_bound(c.n, c.m));
            CHECK(Rational(6) * ch.norm() >= t);
        }
        CHECK(titap_chain_lower_bound(4, 4) == Rational(64));
        CHECK(titap_chain(seven_halves_triangulation(4, 4).chain()) >= Rational(64));
        CHECK(titap_chain(product_triangulation(6, 6).chain()) >= Rational(240));
    }

    TEST_CASE("titap_chain on the reduced cover chain") {
        auto P = make_product(6, 6);
        auto v = validate_cover(reduced_cover(6), P);
        REQUIRE(v.chain);
        Rational t = titap_chain(*v.chain);
        CHECK(t >= titap_chain_lower_bound(6, 6));
        CHECK(Rational(6) * v.chain->norm() >= t);
    }

    TEST_CASE("lower bounds") {
        CHECK(general_lower_bound(6, 6) == Rational(40));
        CHECK(general_lower_bound(3, 3) == Rational(2));
        CHECK(general_lower_bound(3, 4) == Rational(16, 3));
        CHECK(lower_bounds(6, 6).general_lb == Rational(40));
        auto r37 = lower_bounds(3, 7);
        REQUIRE(r37.special_lb);
        CHECK(*r37.special_lb == Rational(24));
        auto r46 = lower_bounds(4, 6);
        REQUIRE(r46.special_lb);
        CHECK(*r46.special_lb == Rational(30));
        // Symmetric in the factors.
        REQUIRE(lower_bounds(7, 3).special_lb);
        CHECK(*lower_bounds(7, 3).special_lb == Rational(24));
    }

    TEST_CASE("corner cutting bound") {
        CHECK(corner_cutting_bound(6, 6) == Rational(46));
        CHECK(corner_cutting_bound(4, 4) == Rational(40, 3));
        CHECK_THROWS(corner_cutting_bound(5, 6));
        for (int n = 4; n <= 12; n += 2)
            for (int m = 4; m <= 10; m += 2) CHECK(corner_cutting_bound(n, m + 2) > corner_cutting_bound(n, m));
    }

    TEST_CASE("bounds report consistency") {
        BoundsReport r = lower_bounds(6, 6);
        r.construction_ub = 62;
        r.cover_ub = 60;
        CHECK(r.consistent());
        CHECK(r.best_upper() == 60);
        BoundsReport bad = lower_bounds(3, 4);
        bad.lp_value = Rational(11);
        bad.ip_value = 10;
        CHECK_FALSE(bad.consistent());
        BoundsReport low = lower_bounds(6, 6);
        low.cover_ub = 39;
        CHECK_FALSE(low.consistent());
    }

    TEST_CASE("surface note uses the (n-2)(m-2) normalization") {
        BoundsReport r = lower_bounds(6, 6);
        r.construction_ub = 62;
        r.cover_ub = 60;
        SurfaceNote s = surface_note(r, 2, 2);
        CHECK(s.upper_bound == Rational(60));
        CHECK(s.reference == Rational(24));
        CHECK(s.nm_display == Rational(16 * 60, 36));
        SurfaceNote t = surface_note(r, 3, 2);
        CHECK(t.upper_bound == Rational(120));
        CHECK(t.reference == Rational(48));
        CHECK(describe(s) == "surface norm for genera (2,2): UPPER bound 60 (reference exact value 24)");
        CHECK_THROWS(surface_note(r, 1, 2));
    }
}
