#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polynorm/chains.hpp"

namespace polynorm {

struct TitapBreakdown {
    int titap = 0;
    int boundary_tetrahedra = 0;  // facets of the simplex lying in the boundary of P
};

// Counts (triangle, tetrahedron) incidences of a simplex where the tetrahedron
// lies in a facet prism and the triangle is interior to that prism. Throws when
// the whole simplex lies in the boundary.
TitapBreakdown titap_breakdown(const ProductPolytope& P, const std::vector<int>& vertices);
int titap_simplex(const ProductPolytope& P, const Simplex& simplex);
Rational titap_chain(const AffineChain& c);

Rational titap_chain_lower_bound(int n, int m);  // 12mn - 16m - 16n

struct BoundsReport {
    int n = 0, m = 0;
    Rational general_lb;
    std::optional<Rational> special_lb;
    std::string special_provenance;
    std::optional<Rational> triangulation_lb;  // lower bound valid for T only
    std::optional<Rational> lp_value;
    std::optional<long> ip_value;
    std::optional<long> construction_ub;
    std::string construction_provenance;
    std::optional<long> cover_ub;
    std::optional<Rational> corner_cutting_lb;

    std::optional<long> best_upper() const;
    // general_lb <= lp <= ip <= upper bounds, for the fields present.
    bool consistent() const;
};

Rational general_lower_bound(int n, int m);  // 2mn - 8(m+n)/3
BoundsReport lower_bounds(int n, int m);
// mn/2 + (10mn - 16n - 16m)/6, only for triangulations that cut corners; n, m even.
Rational corner_cutting_bound(int n, int m);

struct SurfaceNote {
    int g = 0, h = 0;
    Rational upper_bound;  // 16 * best_upper / ((n-2)(m-2)) * (g-1)(h-1)
    Rational reference;    // 24 (g-1)(h-1)
    Rational nm_display;   // same bound normalized by nm instead; display only
};
SurfaceNote surface_note(const BoundsReport& report, int g, int h);
// One-line report; the surface value is stated as an upper bound only.
std::string describe(const SurfaceNote& s);

}  // namespace polynorm
