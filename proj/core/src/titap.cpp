#include "polynorm/titap.hpp"

#include <algorithm>
#include <stdexcept>

namespace polynorm {

TitapBreakdown titap_breakdown(const ProductPolytope& P, const std::vector<int>& vs) {
    const int k = static_cast<int>(vs.size());
    if (k != P.dim() + 1) throw std::invalid_argument("titap: wrong simplex size");
    if (P.in_boundary(vs)) throw std::invalid_argument("titap: simplex lies in the boundary");
    TitapBreakdown out;
    for (int q = 0; q < k; ++q) {
        std::vector<int> tet;
        for (int r = 0; r < k; ++r)
            if (r != q) tet.push_back(vs[r]);
        std::vector<int> facets = P.common_facets(tet);
        if (facets.empty()) continue;
        ++out.boundary_tetrahedra;
        for (int f : facets) {
            for (std::size_t a = 0; a < tet.size(); ++a) {
                std::array<VertexLabel, 3> tri;
                int w = 0;
                for (std::size_t b = 0; b < tet.size(); ++b)
                    if (b != a) tri[w++] = P.label(tet[b]);
                if (P.triangle_interior_to_facet(tri, f)) ++out.titap;
            }
        }
    }
    return out;
}

int titap_simplex(const ProductPolytope& P, const Simplex& s) { return titap_breakdown(P, indices_of(P, s)).titap; }

Rational titap_chain(const AffineChain& c) {
    const ProductPolytope& P = *c.polytope();
    Rational total(0);
    for (const auto& [s, w] : c.terms()) total += w.abs() * Rational(titap_simplex(P, s));
    return total;
}

Rational titap_chain_lower_bound(int n, int m) { return Rational(12L * m * n - 16L * m - 16L * n); }

Rational general_lower_bound(int n, int m) { return Rational(2L * m * n) - Rational(8L * (m + n), 3); }

BoundsReport lower_bounds(int n, int m) {
    if (n < 3 || m < 3) throw std::invalid_argument("lower_bounds: n, m must be at least 3");
    BoundsReport r;
    r.n = n;
    r.m = m;
    r.general_lb = general_lower_bound(n, m);
    std::vector<std::pair<Rational, std::string>> specials;
    auto add_triangle_case = [&](int k) {
        Rational v(3L * k + 3L * ((k + 1) / 2) - 9);
        specials.emplace_back(v, "P(3,k) chain bound 3k+3ceil(k/2)-9");
        if (k % 2 == 0) r.triangulation_lb = v + Rational(1);
    };
    auto add_square_case = [&](int k) {
        specials.emplace_back(Rational(3L * ((5L * (k - 2) + 1) / 2)), "P(4,k) bound 3ceil(5(k-2)/2)");
    };
    if (n == 3) add_triangle_case(m);
    if (m == 3) add_triangle_case(n);
    if (n == 4) add_square_case(m);
    if (m == 4) add_square_case(n);
    for (const auto& [v, why] : specials) {
        if (!r.special_lb || v > *r.special_lb) {
            r.special_lb = v;
            r.special_provenance = why;
        }
    }
    if (r.triangulation_lb && r.special_lb && *r.triangulation_lb < *r.special_lb) r.triangulation_lb = r.special_lb;
    if (n % 2 == 0 && m % 2 == 0) r.corner_cutting_lb = corner_cutting_bound(n, m);
    return r;
}

Rational corner_cutting_bound(int n, int m) {
    if (n % 2 || m % 2) throw std::invalid_argument("corner_cutting_bound: n and m must be even");
    return Rational(1L * m * n, 2) + Rational(10L * m * n - 16L * n - 16L * m, 6);
}

std::optional<long> BoundsReport::best_upper() const {
    std::optional<long> best = construction_ub;
    if (cover_ub && (!best || *cover_ub < *best)) best = cover_ub;
    return best;
}

bool BoundsReport::consistent() const {
    Rational lower = general_lb;
    if (special_lb && *special_lb > lower) lower = *special_lb;
    if (lp_value && *lp_value < lower) return false;
    if (lp_value && ip_value && Rational(*ip_value) < *lp_value) return false;
    if (ip_value && Rational(*ip_value) < lower) return false;
    if (ip_value && triangulation_lb && Rational(*ip_value) < *triangulation_lb) return false;
    if (ip_value && construction_ub && *construction_ub < *ip_value) return false;
    // Covers bound the norm only, so they are compared with the norm lower bounds.
    if (construction_ub && lp_value && Rational(*construction_ub) < *lp_value) return false;
    if (construction_ub && Rational(*construction_ub) < lower) return false;
    if (cover_ub && Rational(*cover_ub) < lower) return false;
    return true;
}

SurfaceNote surface_note(const BoundsReport& report, int g, int h) {
    if (g < 2 || h < 2) throw std::invalid_argument("surface_note: genera must be at least 2");
    auto ub = report.best_upper();
    if (!ub) throw std::invalid_argument("surface_note: no upper bound available");
    SurfaceNote s;
    s.g = g;
    s.h = h;
    Rational gh(static_cast<long>(g - 1) * (h - 1));
    s.upper_bound = Rational(16L * *ub) / Rational(static_cast<long>(report.n - 2) * (report.m - 2)) * gh;
    s.reference = Rational(24) * gh;
    s.nm_display = Rational(16L * *ub) / Rational(static_cast<long>(report.n) * report.m) * gh;
    return s;
}

std::string describe(const SurfaceNote& s) {
    return "surface norm for genera (" + std::to_string(s.g) + "," + std::to_string(s.h) + "): UPPER bound " +
           s.upper_bound.to_string() + " (reference exact value " + s.reference.to_string() + ")";
}

}  // namespace polynorm
