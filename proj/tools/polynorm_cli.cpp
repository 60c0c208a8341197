// polynorm: command-line front end for triangulations of polygon products.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "polynorm/io.hpp"

using namespace polynorm;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Usage-level failures (bad sizes, unreadable files) map to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& path) {
    std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Construction make_construction(const std::string& kind, int n, int m) {
    if (kind == "prism") return prism_triangulation(m);
    if (kind == "p3m") return p3m_triangulation(m);
    if (kind == "product") return product_triangulation(n, m);
    if (kind == "seven-halves") return seven_halves_triangulation(n, m);
    throw UsageError("unknown construction " + kind);
}

Json point_json(const Point& p) {
    Json out = Json::array();
    for (const auto& x : p) out.push_back(to_json(x));
    return out;
}

int cmd_build(int n, int m, const std::string& coord, bool count, const std::string& out) {
    PolytopePtr P = n == 2 ? make_prism(m, coord) : make_product(n, m, coord);
    Json vertices = Json::array();
    for (int v = 0; v < P->num_vertices(); ++v) {
        VertexLabel l = P->label(v);
        vertices.push_back(Json{{"label", Json::array({l.i, l.j})}, {"point", point_json(P->vertex(v))}});
    }
    Json facets = Json::array();
    for (std::size_t f = 0; f < P->facets().size(); ++f) {
        const auto& F = P->facets()[f];
        Json labels = Json::array();
        for (const auto& l : F.vertex_labels) labels.push_back(Json::array({l.i, l.j}));
        facets.push_back(Json{{"name", facet_name(*P, static_cast<int>(f))},
                              {"normal", point_json(F.normal)},
                              {"offset", to_json(F.offset)},
                              {"vertices", std::move(labels)}});
    }
    Json j{{"polytope", polytope_to_json(*P)},
           {"dimension", P->dim()},
           {"volume", to_json(P->volume())},
           {"vertices", std::move(vertices)},
           {"facets", std::move(facets)}};
    if (count) j["nondegenerate_simplices"] = enumerate_simplices(*P).size();
    emit(j, out);
    return kPass;
}

int cmd_construct(const std::string& kind, int n, int m, const std::string& out) {
    Construction c = make_construction(kind, n, m);
    TriangulationReport rep = verify_triangulation(*c.polytope, c.simplices, CheckLevel::Full);
    Json j = construction_to_json(c);
    j["provenance"]["verified"] = rep.valid;
    emit(j, out);
    if (!rep.valid) {
        for (const auto& v : rep.violations) std::cerr << "violation: " << v << '\n';
        return kFail;
    }
    return kPass;
}

int cmd_cover(int m, bool full, const std::string& out) {
    CoverComplex cover = full ? binary_cover(m) : reduced_cover(m);
    PolytopePtr P = make_product(m, m);
    CoverValidation v = validate_cover(cover, P);
    emit(cover_to_json(cover, v, *P), out);
    std::cerr << (full ? "full" : "reduced") << " cover of P(" << m << ',' << m << "): " << cover.simplices.size()
              << " simplices, degree " << v.degree << ", " << (v.valid ? "valid" : "INVALID") << '\n';
    for (const auto& s : v.violations) std::cerr << "violation: " << s << '\n';
    return v.valid ? kPass : kFail;
}

int cmd_verify(const std::string& path, const std::string& certificate_path, bool fast) {
    Json in = read_json(path);
    AffineChain c = chain_from_json(in);
    const ProductPolytope& P = *c.polytope();
    CycleCertificate cert = verify_fundamental_cycle(c);
    Json out = certificate_to_json(P, cert);
    out["degree"] = to_json(cert.total_signed_volume / P.volume());
    bool pass = cert.is_fundamental && cert.total_signed_volume == P.volume();
    if (cert.is_fundamental && cert.total_signed_volume != P.volume())
        out["violations"].push_back("chain represents minus the fundamental class");
    // Covers carry +-1 coefficients too but are not triangulations.
    bool unit = std::all_of(c.terms().begin(), c.terms().end(), [](const auto& t) { return t.second.abs() == Rational(1); });
    if (unit && !in.contains("cover_type") && c.dimension() == P.dim()) {
        std::vector<Simplex> simplices;
        for (const auto& [s, w] : c.terms()) simplices.push_back(s);
        TriangulationReport rep = verify_triangulation(P, simplices, fast ? CheckLevel::Fast : CheckLevel::Full);
        out["triangulation"] = report_to_json(rep);
        pass = pass && rep.valid;
    }
    out["pass"] = pass;
    emit(out, certificate_path);
    if (!pass)
        for (const auto& v : out["violations"]) std::cerr << "violation: " << v.get<std::string>() << '\n';
    return pass ? kPass : kFail;
}

int cmd_titap_file(const std::string& path, const std::string& out) {
    AffineChain c = chain_from_json(read_json(path));
    const ProductPolytope& P = *c.polytope();
    if (P.dim() != 4 || c.dimension() != 4) throw UsageError("titap needs a 4-chain on P(n,m)");
    Json j = titap_to_json(P, c);
    bool ok = titap_chain(c) >= titap_chain_lower_bound(P.n(), P.m());
    j["meets_lower_bound"] = ok;
    emit(j, out);
    return ok ? kPass : kFail;
}

int cmd_titap_exhaustive(int n, int m, const std::string& out) {
    PolytopePtr P = make_product(n, m);
    std::map<int, long> histogram;
    int maximum = 0;
    for (const auto& s : enumerate_simplices(*P)) {
        if (P->in_boundary(s.vertices)) continue;
        int t = titap_breakdown(*P, s.vertices).titap;
        ++histogram[t];
        maximum = std::max(maximum, t);
    }
    Json h = Json::object();
    for (const auto& [t, count] : histogram) h[std::to_string(t)] = count;
    emit(Json{{"polytope", polytope_to_json(*P)}, {"max_titap", maximum}, {"histogram", std::move(h)}}, out);
    return maximum <= 6 ? kPass : kFail;
}

int cmd_optimize(int n, int m, bool lp_only, double budget, bool use_incumbent, const std::string& model_path,
                 const std::string& out) {
    PolytopePtr P = make_product(n, m);
    UniversalModel model = build_universal_model(P);
    if (!model_path.empty()) emit(model_to_json(model), model_path);
    if (lp_only) {
        LPOptions opt;
        opt.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(budget));
        LPResult res = solve_lp(model.lp, opt);
        Json j = lp_result_to_json(model, res);
        j["polytope"] = polytope_to_json(*P);
        emit(j, out);
        return res.status == LPStatus::Optimal ? kPass : kFail;
    }
    IPOptions opt;
    opt.time_budget_seconds = budget;
    if (use_incumbent) opt.incumbent = best_construction(n, m).simplices;
    IPSolution sol = solve_ip(model, opt);
    Json j = ip_solution_to_json(sol);
    j["polytope"] = polytope_to_json(*P);
    emit(j, out);
    return sol.status == IPStatus::Optimal ? kPass : kFail;
}

struct BoundsFlags {
    bool lp = false, ip = false, covers = false;
    double budget = 600;
    std::vector<int> genus;
};

BoundsReport compute_bounds(int n, int m, const BoundsFlags& f, bool& solved) {
    BoundsReport r = lower_bounds(n, m);
    Construction c = best_construction(n, m);
    if (verify_triangulation(*c.polytope, c.simplices, CheckLevel::Full).valid) {
        r.construction_ub = static_cast<long>(c.simplices.size());
        r.construction_provenance = c.name;
    }
    if (f.covers && n == m && m % 2 == 0 && m >= 6) {
        CoverComplex cover = reduced_cover(m);
        CoverValidation v = validate_cover(cover, make_product(m, m));
        if (v.valid) r.cover_ub = cover_norm_bound(cover, v).numerator().get_si();
    }
    solved = true;
    if (f.lp || f.ip) {
        UniversalModel model = build_universal_model(make_product(n, m));
        if (f.ip) {
            IPOptions opt;
            opt.time_budget_seconds = f.budget;
            opt.incumbent = c.simplices;
            IPSolution sol = solve_ip(model, opt);
            if (sol.root_lp) r.lp_value = sol.root_lp;
            if (sol.status == IPStatus::Optimal) r.ip_value = sol.value;
            else solved = false;
        } else {
            LPOptions opt;
            opt.deadline = std::chrono::steady_clock::now() +
                           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(f.budget));
            LPResult res = solve_lp(model.lp, opt);
            if (res.status == LPStatus::Optimal) r.lp_value = res.value;
            else solved = false;
        }
    }
    return r;
}

int cmd_bounds(int n, int m, const BoundsFlags& f, const std::string& out) {
    bool solved = true;
    BoundsReport r = compute_bounds(n, m, f, solved);
    std::cout << bounds_csv_header() << '\n' << bounds_csv_row(r) << '\n';
    std::cout << "sandwich: " << r.general_lb << " <= " << (r.lp_value ? r.lp_value->to_string() : "[LP]") << " <= "
              << (r.ip_value ? std::to_string(*r.ip_value) : "[IP]") << " <= "
              << (r.best_upper() ? std::to_string(*r.best_upper()) : "[UB]") << '\n';
    Json j = bounds_to_json(r);
    if (!f.genus.empty()) {
        SurfaceNote s = surface_note(r, f.genus[0], f.genus[1]);
        std::cout << describe(s) << '\n';
        j["surface"] = surface_to_json(s);
    }
    if (!out.empty()) emit(j, out);
    else std::cout << j.dump(2) << '\n';
    return r.consistent() ? kPass : kFail;
}

int cmd_table(int max_n, int max_m, double budget, const std::string& out) {
    std::ostringstream csv;
    csv << "n,m,entry,lower,upper,lp\n";
    bool ok = true;
    for (int n = 3; n <= max_n; ++n) {
        for (int m = n; m <= max_m; ++m) {
            BoundsFlags f;
            f.ip = true;
            f.budget = budget;
            bool solved = false;
            BoundsReport r = compute_bounds(n, m, f, solved);
            Rational lower = r.general_lb;
            if (r.special_lb && *r.special_lb > lower) lower = *r.special_lb;
            if (r.triangulation_lb && *r.triangulation_lb > lower) lower = *r.triangulation_lb;
            if (r.lp_value && *r.lp_value > lower) lower = *r.lp_value;
            long lo = Rational(lower.ceil()).numerator().get_si();
            long hi = r.construction_ub.value_or(0);
            std::string entry = r.ip_value ? std::to_string(*r.ip_value) : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
            if (r.ip_value) lo = hi = *r.ip_value;
            ok = ok && r.consistent() && lo <= hi;
            csv << n << ',' << m << ',' << entry << ',' << lo << ',' << hi << ',' << (r.lp_value ? r.lp_value->to_string() : "")
                << '\n';
        }
    }
    if (out.empty()) std::cout << csv.str();
    else {
        std::ofstream f(out);
        if (!f) throw UsageError("cannot write " + out);
        f << csv.str();
    }
    return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact bounds and certificates for triangulations of products of two polygons"};
    app.require_subcommand(1);
    std::string out;

    int n = 0, m = 0;
    std::string coord = "circle-int";
    bool count = false;
    auto* build = app.add_subcommand("build", "Print vertices, facets and volume of P(n,m) (n = 2 gives the prism)");
    build->add_option("--n", n, "first polygon size (2 for the prism)")->required();
    build->add_option("--m", m, "second polygon size")->required();
    build->add_option("--coord", coord, "coordinatization: circle-int or parabola");
    build->add_flag("--count-simplices", count, "also count nondegenerate full-dimensional simplices");
    build->add_option("-o,--output", out, "output file (default stdout)");

    std::string kind;
    auto* construct = app.add_subcommand("construct", "Export a construction as chain JSON");
    construct->add_option("kind", kind, "prism | p3m | product | seven-halves")
        ->required()
        ->check(CLI::IsMember({"prism", "p3m", "product", "seven-halves"}));
    construct->add_option("--n", n, "first polygon size (product, seven-halves)");
    construct->add_option("--m", m, "second polygon size")->required();
    construct->add_option("-o,--output", out, "output file (default stdout)");

    bool full = false, reduced = false;
    auto* cover = app.add_subcommand("cover", "Export and validate the binary cover of P(m,m)");
    cover->add_option("--m", m, "polygon size (even)")->required();
    auto* full_flag = cover->add_flag("--full", full, "the full cover");
    cover->add_flag("--reduced", reduced, "the reduced cover (default)")->excludes(full_flag);
    cover->add_option("-o,--output", out, "output file (default stdout)");

    std::string chain_file, certificate;
    bool fast = false;
    auto* verify = app.add_subcommand("verify", "Verify a chain file; exit 0 on pass, 1 on failure");
    verify->add_option("chain", chain_file, "chain JSON file")->required();
    verify->add_option("--certificate", certificate, "write the certificate here (default stdout)");
    verify->add_flag("--fast", fast, "skip the pairwise intersection check for triangulations");

    bool exhaustive = false;
    auto* titap = app.add_subcommand("titap", "Titap counts of a chain file, or the exhaustive maximum on P(n,m)");
    titap->add_option("chain", chain_file, "chain JSON file");
    titap->add_flag("--exhaustive", exhaustive, "scan every interior simplex of P(n,m)");
    titap->add_option("--n", n, "first polygon size");
    titap->add_option("--m", m, "second polygon size");
    titap->add_option("-o,--output", out, "output file (default stdout)");

    bool lp_only = false, no_incumbent = false;
    double budget = 600;
    std::string model_path;
    auto* optimize = app.add_subcommand("optimize", "Solve the universal-polytope LP or IP exactly");
    optimize->add_option("--n", n, "first polygon size")->required();
    optimize->add_option("--m", m, "second polygon size")->required();
    optimize->add_flag("--lp-only", lp_only, "solve only the LP relaxation");
    optimize->add_option("--budget", budget, "time budget in seconds");
    optimize->add_flag("--no-incumbent", no_incumbent, "do not seed the search with a construction");
    optimize->add_option("--model", model_path, "dump the model JSON here");
    optimize->add_option("-o,--output", out, "output file (default stdout)");

    BoundsFlags bflags;
    auto* bounds = app.add_subcommand("bounds", "Print the bound sandwich for P(n,m) as a CSV row and JSON");
    bounds->add_option("--n", n, "first polygon size")->required();
    bounds->add_option("--m", m, "second polygon size")->required();
    bounds->add_flag("--lp", bflags.lp, "solve the LP relaxation");
    bounds->add_flag("--ip", bflags.ip, "solve the integer program");
    bounds->add_flag("--covers", bflags.covers, "include the reduced binary cover (n = m even, at least 6)");
    bounds->add_option("--budget", bflags.budget, "time budget in seconds for LP/IP");
    bounds->add_option("--genus", bflags.genus, "surface genera g h (both at least 2)")->expected(2);
    bounds->add_option("-o,--output", out, "write JSON here instead of stdout");

    int max_n = 4, max_m = 4;
    auto* table = app.add_subcommand("table", "CSV of T(n,m) for 3 <= n <= m within a per-cell budget");
    table->add_option("--max-n", max_n, "largest n");
    table->add_option("--max-m", max_m, "largest m");
    table->add_option("--budget", budget, "per-cell time budget in seconds");
    table->add_option("-o,--output", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*build) return cmd_build(n, m, coord, count, out);
        if (*construct) return cmd_construct(kind, n, m, out);
        if (*cover) return cmd_cover(m, full, out);
        if (*verify) return cmd_verify(chain_file, certificate, fast);
        if (*titap) {
            if (exhaustive) {
                if (n < 3 || m < 3) throw UsageError("--exhaustive needs --n and --m");
                return cmd_titap_exhaustive(n, m, out);
            }
            if (chain_file.empty()) throw UsageError("titap needs a chain file or --exhaustive");
            return cmd_titap_file(chain_file, out);
        }
        if (*optimize) return cmd_optimize(n, m, lp_only, budget, !no_incumbent, model_path, out);
        if (*bounds) return cmd_bounds(n, m, bflags, out);
        if (*table) return cmd_table(max_n, max_m, budget, out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
