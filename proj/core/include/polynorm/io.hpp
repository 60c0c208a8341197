#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polynorm/constructions.hpp"
#include "polynorm/covers.hpp"
#include "polynorm/optimizer.hpp"
#include "polynorm/titap.hpp"

namespace polynorm {

using Json = nlohmann::ordered_json;

// Malformed input such as a bad JSON shape or an unparsable rational.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json polytope_to_json(const ProductPolytope& P);
PolytopePtr polytope_from_json(const Json& j);

// {"polytope", "dimension", "terms": [{"vertices": [[i,j],...], "coeff": "p/q"}]}
Json chain_to_json(const AffineChain& c);
AffineChain chain_from_json(const Json& j);

Json construction_to_json(const Construction& c);
// Cover simplices with nonzero orientation, each tagged with its type and cell.
Json cover_to_json(const CoverComplex& cover, const CoverValidation& validation, const ProductPolytope& P);

Json certificate_to_json(const ProductPolytope& P, const CycleCertificate& cert);
Json report_to_json(const TriangulationReport& rep);
Json titap_to_json(const ProductPolytope& P, const AffineChain& c);

Json bounds_to_json(const BoundsReport& r);
std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport& r);
Json surface_to_json(const SurfaceNote& s);

Json model_to_json(const UniversalModel& model);
Json lp_result_to_json(const UniversalModel& model, const LPResult& res);
Json ip_solution_to_json(const IPSolution& s);

}  // namespace polynorm
