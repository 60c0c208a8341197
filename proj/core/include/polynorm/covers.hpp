#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polynorm/chains.hpp"

namespace polynorm {

struct CoverSimplex {
    std::string type;  // "A".."F", "A'".."F'", "G"
    int i = 0;         // parameters of the generating cell (i even and j odd for A..F')
    int j = 0;
    std::array<VertexLabel, 5> vertices;

    bool has_repeated_vertex() const;
};

struct CoverComplex {
    int m = 0;
    bool reduced = false;
    std::vector<CoverSimplex> simplices;
};

CoverComplex binary_cover(int m);
CoverComplex reduced_cover(int m);

// Which of the six deletion classes removes this simplex (0 when it is kept).
int deletion_class(const CoverSimplex& s, int m);

struct CoverValidation {
    bool valid = false;
    bool orientable = false;
    int components = 0;
    std::size_t counted_simplices = 0;    // pre-quotient count
    std::size_t repeated_vertex = 0;      // dropped as zero in the alternating algebra
    std::size_t flat = 0;                 // distinct labels but zero volume
    std::size_t max_interior_multiplicity = 0;
    std::vector<int> orientations;        // per cover simplex, relative to its listed vertex order; 0 if dropped
    std::optional<AffineChain> chain;
    CycleCertificate certificate;
    Rational degree;                      // total signed volume / volume(P)
    std::vector<std::string> violations;
};

CoverValidation validate_cover(const CoverComplex& cover, const PolytopePtr& P);

// Pre-quotient simplex count; throws std::logic_error when validation failed.
Rational cover_norm_bound(const CoverComplex& cover, const CoverValidation& validation);

}  // namespace polynorm
