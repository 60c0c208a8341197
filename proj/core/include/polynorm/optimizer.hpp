#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polynorm/chains.hpp"

namespace polynorm {

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

// minimize objective . x + objective_constant  subject to  rows x = rhs, x >= 0.
struct LinearProgram {
    int num_vars = 0;
    std::vector<Rational> objective;
    Rational objective_constant;
    std::vector<SparseRow> rows;
    std::vector<Rational> rhs;
    std::vector<std::string> row_labels;

    int add_row(SparseRow row, const Rational& b, std::string label = {});
    std::size_t nonzeros() const;
};

enum class LPStatus { Optimal, Infeasible, Unbounded, TimeLimit };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
    std::vector<Rational> y;  // duals, one per row
    std::vector<int> basis;
    long pivots = 0;
    long degenerate_pivots = 0;
    int redundant_rows = 0;
};

struct LPOptions {
    // Dantzig pricing with a lexicographic ratio test; Bland's rule takes over
    // after this many consecutive degenerate pivots.
    int bland_threshold = 20000;
    // Start the exact solve from the final basis of a floating-point simplex run.
    // The result is exact either way; a bad hint falls back to a cold start.
    bool float_guided = true;
    long float_pivot_limit = 200000;
    // Give up with LPStatus::TimeLimit once this point passes.
    std::optional<std::chrono::steady_clock::time_point> deadline;
    // Progress line on stderr every this many pivots (0 disables).
    long trace_every = 0;
};

LPResult solve_lp(const LinearProgram& lp, const LPOptions& options = {});

// Exact check that primal and dual are feasible with equal objectives.
bool verify_lp_duality(const LinearProgram& lp, const LPResult& result);

// Universal-polytope model over the nondegenerate simplices of P.
struct UniversalModel {
    PolytopePtr polytope;
    std::vector<EnumeratedSimplex> simplices;
    LinearProgram lp;
    Point generic_point;
    std::size_t balance_rows = 0;
    std::size_t chamber_rows = 0;

    int variable_of(const Simplex& s) const;
    Simplex simplex_of(int var) const;
};

UniversalModel build_universal_model(const PolytopePtr& P);

// True when no hyperplane spanned by vertices of P passes through p.
bool is_generic_point(const ProductPolytope& P, const Point& p);

// Row sum_{sigma containing p} x_sigma = 1 for a generic point p.
SparseRow chamber_row(const UniversalModel& model, const Point& p);
void add_chamber_constraint(UniversalModel& model, const Point& p);

// Row sum_sigma x_sigma = k: with it, an infeasible IP proves no triangulation of size k.
void add_cardinality_constraint(UniversalModel& model, long k);

struct IPOptions {
    double time_budget_seconds = 60.0;
    // Known valid triangulation used as the starting incumbent.
    std::optional<std::vector<Simplex>> incumbent;
    LPOptions lp;
};

enum class IPStatus { Optimal, BudgetExhausted, Infeasible };

struct IPSolution {
    IPStatus status = IPStatus::Infeasible;
    long value = 0;
    std::optional<Rational> root_lp;  // empty when the budget ran out inside the root LP
    Rational lower_bound;
    std::vector<Simplex> support;
    long node_count = 0;
    int chamber_cuts = 0;
    bool support_from_incumbent = false;
    TriangulationReport certificate;
};

IPSolution solve_ip(UniversalModel& model, const IPOptions& options = {});

// If the integral support fails full verification, a generic point covered a
// wrong number of times; returns it when one can be found.
std::optional<Point> find_chamber_violation(const ProductPolytope& P, const std::vector<Simplex>& support);

struct FeasibilityResult {
    bool overlap = false;
    Point witness;      // strictly interior to both simplices when overlap
    Rational margin;    // maximal common barycentric margin (0 when disjoint interiors)
};

// Maximizes t such that some point has all barycentric coordinates >= t in both simplices.
FeasibilityResult feasibility_point(const std::vector<Point>& a, const std::vector<Point>& b);

// Whether two simplices of P meet in a common face (possibly empty).
bool proper_intersection(const ProductPolytope& P, const std::vector<int>& a, const std::vector<int>& b);

}  // namespace polynorm
