#include "polynorm/io.hpp"

#include <sstream>

namespace polynorm {

namespace {

Json label_json(const VertexLabel& v) { return Json::array({v.i, v.j}); }

Json simplex_json(const Simplex& s) {
    Json out = Json::array();
    for (const auto& v : s) out.push_back(label_json(v));
    return out;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' is not an integer");
    return v.get<int>();
}

std::string opt(const std::optional<Rational>& r) { return r ? r->to_string() : ""; }
std::string opt(const std::optional<long>& r) { return r ? std::to_string(*r) : ""; }
Json opt_json(const std::optional<Rational>& r) { return r ? to_json(*r) : Json(nullptr); }
Json opt_json(const std::optional<long>& r) { return r ? Json(*r) : Json(nullptr); }

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string or an integer");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + j.get<std::string>() + "'");
    }
}

Json polytope_to_json(const ProductPolytope& P) {
    return Json{{"n", P.n()}, {"m", P.m()}, {"coordinatization", P.coordinatization()}};
}

PolytopePtr polytope_from_json(const Json& j) {
    int n = int_field(j, "n");
    int m = int_field(j, "m");
    std::string coord = "circle-int";
    if (j.contains("coordinatization")) {
        if (!j.at("coordinatization").is_string()) throw ParseError("coordinatization must be a string");
        coord = j.at("coordinatization").get<std::string>();
    }
    try {
        return n == 2 ? make_prism(m, coord) : make_product(n, m, coord);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("polytope: ") + e.what());
    }
}

Json chain_to_json(const AffineChain& c) {
    Json terms = Json::array();
    for (const auto& [s, w] : c.terms()) terms.push_back(Json{{"vertices", simplex_json(s)}, {"coeff", to_json(w)}});
    return Json{{"polytope", polytope_to_json(*c.polytope())}, {"dimension", c.dimension()}, {"terms", std::move(terms)}};
}

AffineChain chain_from_json(const Json& j) {
    PolytopePtr P = polytope_from_json(field(j, "polytope"));
    int dim = j.contains("dimension") ? int_field(j, "dimension") : P->dim();
    if (dim < 0 || dim > P->dim()) throw ParseError("dimension out of range");
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    AffineChain c(P, dim);
    for (const auto& t : terms) {
        const Json& vs = field(t, "vertices");
        if (!vs.is_array() || static_cast<int>(vs.size()) != dim + 1) throw ParseError("term has the wrong number of vertices");
        std::vector<VertexLabel> labels;
        for (const auto& v : vs) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
                throw ParseError("vertex must be an [i,j] pair");
            VertexLabel l{v[0].get<int>(), v[1].get<int>()};
            if (!P->has_label(l)) throw ParseError("vertex " + to_string(l) + " is not a vertex of the polytope");
            labels.push_back(l);
        }
        c.add(std::move(labels), rational_from_json(field(t, "coeff")));
    }
    return c;
}

Json construction_to_json(const Construction& c) {
    Json out = chain_to_json(c.chain());
    out["provenance"] = Json{{"construction", c.name}, {"n", c.n}, {"m", c.m}, {"simplices", c.simplices.size()}};
    return out;
}

Json cover_to_json(const CoverComplex& cover, const CoverValidation& v, const ProductPolytope& P) {
    Json terms = Json::array();
    for (std::size_t s = 0; s < cover.simplices.size(); ++s) {
        if (v.orientations[s] == 0) continue;
        const auto& cs = cover.simplices[s];
        terms.push_back(Json{{"vertices", simplex_json({cs.vertices.begin(), cs.vertices.end()})},
                             {"coeff", to_json(Rational(v.orientations[s]))},
                             {"type", cs.type},
                             {"cell", Json::array({cs.i, cs.j})}});
    }
    return Json{{"polytope", polytope_to_json(P)},
                {"dimension", 4},
                {"terms", std::move(terms)},
                {"cover_type", cover.reduced ? "reduced" : "full"},
                {"provenance", Json{{"cover", cover.reduced ? "reduced" : "full"}, {"m", cover.m}, {"simplices", cover.simplices.size()}}}};
}

Json certificate_to_json(const ProductPolytope& P, const CycleCertificate& cert) {
    Json degrees = Json::object();
    for (const auto& [f, d] : cert.per_facet_degree) degrees[facet_name(P, f)] = to_json(d);
    return Json{{"fundamental", cert.is_fundamental},
                {"boundary_on_boundary", cert.boundary_on_boundary},
                {"total_signed_volume", to_json(cert.total_signed_volume)},
                {"volume", to_json(P.volume())},
                {"facet_degrees", std::move(degrees)},
                {"violations", cert.violations}};
}

Json report_to_json(const TriangulationReport& rep) {
    return Json{{"valid", rep.valid},
                {"level", rep.level == CheckLevel::Full ? "full" : "fast"},
                {"simplices", rep.simplices},
                {"interior_ridges", rep.interior_ridges},
                {"boundary_ridges", rep.boundary_ridges},
                {"pairs_checked", rep.pairs_checked},
                {"pairs_needing_lp", rep.pairs_needing_lp},
                {"total_volume", to_json(rep.total_volume)},
                {"violations", rep.violations}};
}

Json titap_to_json(const ProductPolytope& P, const AffineChain& c) {
    Json per = Json::array();
    for (const auto& [s, w] : c.terms()) {
        auto idx = indices_of(P, s);
        if (P.in_boundary(idx)) continue;
        TitapBreakdown b = titap_breakdown(P, idx);
        per.push_back(Json{{"vertices", simplex_json(s)}, {"titap", b.titap}, {"boundary_tetrahedra", b.boundary_tetrahedra}});
    }
    return Json{{"polytope", polytope_to_json(P)},
                {"titap", to_json(titap_chain(c))},
                {"lower_bound", to_json(titap_chain_lower_bound(P.n(), P.m()))},
                {"simplices", std::move(per)}};
}

Json bounds_to_json(const BoundsReport& r) {
    return Json{{"n", r.n},
                {"m", r.m},
                {"general_lb", to_json(r.general_lb)},
                {"special_lb", opt_json(r.special_lb)},
                {"special_provenance", r.special_provenance},
                {"triangulation_lb", opt_json(r.triangulation_lb)},
                {"lp", opt_json(r.lp_value)},
                {"ip", opt_json(r.ip_value)},
                {"construction_ub", opt_json(r.construction_ub)},
                {"construction_provenance", r.construction_provenance},
                {"cover_ub", opt_json(r.cover_ub)},
                {"corner_cutting_lb", opt_json(r.corner_cutting_lb)},
                {"best_upper", opt_json(r.best_upper())},
                {"consistent", r.consistent()}};
}

std::string bounds_csv_header() { return "n,m,general_lb,special_lb,lp,ip,construction_ub,cover_ub"; }

std::string bounds_csv_row(const BoundsReport& r) {
    std::ostringstream os;
    os << r.n << ',' << r.m << ',' << r.general_lb << ',' << opt(r.special_lb) << ',' << opt(r.lp_value) << ','
       << opt(r.ip_value) << ',' << opt(r.construction_ub) << ',' << opt(r.cover_ub);
    return os.str();
}

Json surface_to_json(const SurfaceNote& s) {
    return Json{{"g", s.g},
                {"h", s.h},
                {"upper_bound", to_json(s.upper_bound)},
                {"kind", "upper bound"},
                {"reference_exact", to_json(s.reference)},
                {"nm_normalized_display_only", to_json(s.nm_display)}};
}

Json model_to_json(const UniversalModel& model) {
    Json vars = Json::array();
    for (const auto& s : model.simplices) vars.push_back(simplex_json(labels_of(*model.polytope, s.vertices)));
    Json rows = Json::array();
    const auto& lp = model.lp;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        Json entries = Json::array();
        for (const auto& [c, v] : lp.rows[r]) entries.push_back(Json::array({c, to_json(v)}));
        rows.push_back(Json{{"label", lp.row_labels[r]}, {"entries", std::move(entries)}, {"rhs", to_json(lp.rhs[r])}});
    }
    Json point = Json::array();
    for (const auto& x : model.generic_point) point.push_back(to_json(x));
    return Json{{"polytope", polytope_to_json(*model.polytope)},
                {"variables", std::move(vars)},
                {"objective", "sum"},
                {"generic_point", std::move(point)},
                {"rows", std::move(rows)}};
}

Json lp_result_to_json(const UniversalModel& model, const LPResult& res) {
    const char* status = res.status == LPStatus::Optimal      ? "optimal"
                         : res.status == LPStatus::Infeasible ? "infeasible"
                         : res.status == LPStatus::Unbounded  ? "unbounded"
                                                              : "time_limit";
    Json support = Json::array();
    for (std::size_t c = 0; c < res.x.size(); ++c)
        if (!res.x[c].is_zero())
            support.push_back(Json{{"vertices", simplex_json(model.simplex_of(static_cast<int>(c)))}, {"weight", to_json(res.x[c])}});
    return Json{{"status", status},
                {"value", to_json(res.value)},
                {"pivots", res.pivots},
                {"redundant_rows", res.redundant_rows},
                {"duality_verified", verify_lp_duality(model.lp, res)},
                {"support", std::move(support)}};
}

Json ip_solution_to_json(const IPSolution& s) {
    const char* status = s.status == IPStatus::Optimal ? "optimal" : s.status == IPStatus::BudgetExhausted ? "budget_exhausted" : "infeasible";
    Json support = Json::array();
    for (const auto& x : s.support) support.push_back(simplex_json(x));
    return Json{{"status", status},
                {"value", s.value},
                {"root_lp", opt_json(s.root_lp)},
                {"lower_bound", to_json(s.lower_bound)},
                {"node_count", s.node_count},
                {"chamber_cuts", s.chamber_cuts},
                {"support_from_incumbent", s.support_from_incumbent},
                {"support", std::move(support)},
                {"certificate", report_to_json(s.certificate)}};
}

}  // namespace polynorm
