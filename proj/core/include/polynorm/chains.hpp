#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polynorm/polytope.hpp"

namespace polynorm {

// Canonical simplex: labels sorted ascending, no repeats.
using Simplex = std::vector<VertexLabel>;

struct Canonical {
    Simplex simplex;
    int sign = 0;  // parity of the sorting permutation, 0 when a label repeats
};

Canonical canonicalize(std::vector<VertexLabel> vertices);

// Formal rational combination of affine simplices on the vertices of P, taken
// in the alternating algebra: reordering multiplies by the permutation sign and
// repeated vertices give zero.
class AffineChain {
public:
    AffineChain(PolytopePtr polytope, int dimension);

    const PolytopePtr& polytope() const { return polytope_; }
    int dimension() const { return dimension_; }
    const std::map<Simplex, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // Adds coeff * [vertices]; vertices may be in any order.
    void add(std::vector<VertexLabel> vertices, const Rational& coeff);
    Rational coefficient(const Simplex& canonical) const;

    AffineChain boundary() const;
    Rational norm() const;
    AffineChain scaled(const Rational& s) const;
    AffineChain operator+(const AffineChain& o) const;

    friend bool operator==(const AffineChain& a, const AffineChain& b) {
        return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
    }

private:
    PolytopePtr polytope_;
    int dimension_;
    std::map<Simplex, Rational> terms_;
};

std::vector<int> indices_of(const ProductPolytope& P, const Simplex& s);
Simplex labels_of(const ProductPolytope& P, const std::vector<int>& idx);

// Unit-coefficient chain with every simplex positively oriented.
AffineChain triangulation_chain(const PolytopePtr& P, const std::vector<Simplex>& simplices);

struct CycleCertificate {
    bool boundary_on_boundary = false;
    Rational total_signed_volume;
    std::map<int, Rational> per_facet_degree;  // facet index -> degree
    bool is_fundamental = false;
    std::vector<std::string> violations;
};

std::string facet_name(const ProductPolytope& P, int facet);

CycleCertificate verify_fundamental_cycle(const AffineChain& c);

enum class CheckLevel { Fast, Full };

struct TriangulationReport {
    bool valid = false;
    CheckLevel level = CheckLevel::Fast;
    std::size_t simplices = 0;
    std::size_t interior_ridges = 0;
    std::size_t boundary_ridges = 0;
    std::size_t pairs_checked = 0;
    std::size_t pairs_needing_lp = 0;
    Rational total_volume;
    std::vector<std::string> violations;
};

// Throws std::invalid_argument on a degenerate input simplex.
TriangulationReport verify_triangulation(const ProductPolytope& P, const std::vector<Simplex>& simplices,
                                         CheckLevel level);

// Copies a chain on P(j,k) into every cell of a fan subdivision of P(n,m),
// reflecting alternate cells so that neighbouring copies agree on shared prisms.
AffineChain replicate_chain(const AffineChain& c, int n, int m);

struct RawSimplex {
    std::vector<Point> vertices;
    Rational coeff;
};

// Replaces every raw vertex by the lexicographically smallest vertex of its
// minimal face and collects the result in the alternating algebra.
AffineChain straighten(const std::vector<RawSimplex>& raw, const PolytopePtr& P);

}  // namespace polynorm
