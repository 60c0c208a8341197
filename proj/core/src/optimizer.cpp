#include "polynorm/optimizer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace polynorm {

namespace {

// Strict containment of p in the simplex with the given sorted vertex indices.
bool simplex_contains(const ProductPolytope& P, const std::vector<int>& s, int orient, const Point& p) {
    std::vector<Point> pts = P.points_of(s);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        Point saved = pts[k];
        pts[k] = p;
        int o = orientation(pts);
        pts[k] = saved;
        if (o != orient) return false;
    }
    return true;
}

Point perturbation(int dim, const Rational& k) {
    // 1/K * (1, K', K'^2, K'^3) with K' = 3.
    Point d(dim);
    Rational f = Rational(1) / k;
    for (int c = 0; c < dim; ++c) {
        d[c] = f;
        f *= Rational(3);
    }
    return d;
}

}  // namespace

bool is_generic_point(const ProductPolytope& P, const Point& p) {
    const int d = P.dim();
    const int nv = P.num_vertices();
    std::vector<int> cur;
    bool generic = true;
    std::function<void(int)> rec = [&](int start) {
        if (!generic) return;
        if (static_cast<int>(cur.size()) == d) {
            std::vector<Point> pts = P.points_of(cur);
            pts.push_back(p);
            if (orientation(pts) != 0) return;
            pts.pop_back();
            if (affine_span_dim(pts) == d - 1) generic = false;
            return;
        }
        for (int v = start; v <= nv - (d - static_cast<int>(cur.size())); ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return generic;
}

int UniversalModel::variable_of(const Simplex& s) const {
    std::vector<int> idx = indices_of(*polytope, s);
    std::sort(idx.begin(), idx.end());
    auto it = std::lower_bound(simplices.begin(), simplices.end(), idx,
                               [](const EnumeratedSimplex& e, const std::vector<int>& v) { return e.vertices < v; });
    if (it == simplices.end() || it->vertices != idx) return -1;
    return static_cast<int>(it - simplices.begin());
}

Simplex UniversalModel::simplex_of(int var) const { return labels_of(*polytope, simplices.at(var).vertices); }

SparseRow chamber_row(const UniversalModel& model, const Point& p) {
    const ProductPolytope& P = *model.polytope;
    if (!P.strictly_inside(p)) throw std::invalid_argument("chamber point must be interior");
    if (!is_generic_point(P, p)) throw std::invalid_argument("chamber point must be generic");
    SparseRow row;
    for (std::size_t v = 0; v < model.simplices.size(); ++v) {
        const auto& s = model.simplices[v];
        if (simplex_contains(P, s.vertices, s.orientation, p)) row.emplace_back(static_cast<int>(v), Rational(1));
    }
    return row;
}

void add_chamber_constraint(UniversalModel& model, const Point& p) {
    model.lp.add_row(chamber_row(model, p), Rational(1), "chamber");
    ++model.chamber_rows;
}

UniversalModel build_universal_model(const PolytopePtr& Pptr) {
    const ProductPolytope& P = *Pptr;
    UniversalModel model;
    model.polytope = Pptr;
    model.simplices = enumerate_simplices(P);
    const int nvars = static_cast<int>(model.simplices.size());
    model.lp.num_vars = nvars;
    model.lp.objective.assign(nvars, Rational(1));

    std::map<std::vector<int>, SparseRow> balance;
    const int k = P.dim() + 1;
    for (int v = 0; v < nvars; ++v) {
        const auto& s = model.simplices[v].vertices;
        for (int q = 0; q < k; ++q) {
            std::vector<int> ridge;
            for (int r = 0; r < k; ++r)
                if (r != q) ridge.push_back(s[r]);
            if (P.in_boundary(ridge)) continue;
            std::vector<int> probe = ridge;
            probe.push_back(s[q]);
            int side = P.orientation_of(probe);
            balance[ridge].emplace_back(v, Rational(side));
        }
    }
    std::set<SparseRow> seen;
    for (auto& [ridge, row] : balance) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseRow neg = row;
        for (auto& e : neg) e.second = -e.second;
        if (seen.count(row) || seen.count(neg)) continue;
        seen.insert(row);
        std::string label = "balance";
        for (int x : ridge) label += " " + to_string(P.label(x));
        model.lp.add_row(row, Rational(0), std::move(label));
        ++model.balance_rows;
    }

    const Point c = P.centroid();
    for (Rational K(10);; K *= Rational(10)) {
        Point p = c + perturbation(P.dim(), K);
        if (P.strictly_inside(p) && is_generic_point(P, p)) {
            model.generic_point = p;
            break;
        }
    }
    model.lp.add_row(chamber_row(model, model.generic_point), Rational(1), "normalization");
    return model;
}

FeasibilityResult feasibility_point(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("feasibility_point: empty simplex");
    const int d = static_cast<int>(a[0].size());
    const int ka = static_cast<int>(a.size()), kb = static_cast<int>(b.size());
    // Variables: t, s_1..s_ka, r_1..r_kb with lambda_i = t + s_i and mu_i = t + r_i.
    LinearProgram lp;
    lp.num_vars = 1 + ka + kb;
    lp.objective.assign(lp.num_vars, Rational(0));
    lp.objective[0] = Rational(-1);
    for (int c = 0; c < d; ++c) {
        SparseRow row;
        Rational tc(0);
        for (int i = 0; i < ka; ++i) {
            tc += a[i][c];
            row.emplace_back(1 + i, a[i][c]);
        }
        for (int i = 0; i < kb; ++i) {
            tc -= b[i][c];
            row.emplace_back(1 + ka + i, -b[i][c]);
        }
        row.emplace_back(0, tc);
        lp.add_row(std::move(row), Rational(0));
    }
    SparseRow ra{{0, Rational(ka)}}, rb{{0, Rational(kb)}};
    for (int i = 0; i < ka; ++i) ra.emplace_back(1 + i, Rational(1));
    for (int i = 0; i < kb; ++i) rb.emplace_back(1 + ka + i, Rational(1));
    lp.add_row(std::move(ra), Rational(1));
    lp.add_row(std::move(rb), Rational(1));
    LPResult res = solve_lp(lp);
    FeasibilityResult out;
    if (res.status != LPStatus::Optimal) return out;
    out.margin = res.x[0];
    if (out.margin.sign() <= 0) return out;
    out.overlap = true;
    out.witness.assign(d, Rational(0));
    for (int i = 0; i < ka; ++i) out.witness = out.witness + scale(a[i], res.x[0] + res.x[1 + i]);
    return out;
}

bool proper_intersection(const ProductPolytope& P, const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b) return true;
    auto separated_by_facet = [&](const std::vector<int>& s, const std::vector<int>& other) {
        const int k = static_cast<int>(s.size());
        for (int q = 0; q < k; ++q) {
            std::vector<int> probe;
            for (int r = 0; r < k; ++r)
                if (r != q) probe.push_back(s[r]);
            probe.push_back(s[q]);
            const int apex_side = P.orientation_of(probe);
            bool ok = true;
            for (int w : other) {
                bool in_ridge = std::find(probe.begin(), probe.end() - 1, w) != probe.end() - 1;
                if (in_ridge) continue;
                probe.back() = w;
                int o = P.orientation_of(probe);
                if (o == 0 || o == apex_side) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    };
    if (separated_by_facet(a, b) || separated_by_facet(b, a)) return true;

    // Maximize the weight on non-shared vertices of a over common points.
    const int d = P.dim();
    const int ka = static_cast<int>(a.size()), kb = static_cast<int>(b.size());
    LinearProgram lp;
    lp.num_vars = ka + kb;
    lp.objective.assign(lp.num_vars, Rational(0));
    for (int i = 0; i < ka; ++i)
        if (!std::binary_search(b.begin(), b.end(), a[i])) lp.objective[i] = Rational(-1);
    for (int c = 0; c < d; ++c) {
        SparseRow row;
        for (int i = 0; i < ka; ++i) row.emplace_back(i, P.vertex(a[i])[c]);
        for (int i = 0; i < kb; ++i) row.emplace_back(ka + i, -P.vertex(b[i])[c]);
        lp.add_row(std::move(row), Rational(0));
    }
    SparseRow ra, rb;
    for (int i = 0; i < ka; ++i) ra.emplace_back(i, Rational(1));
    for (int i = 0; i < kb; ++i) rb.emplace_back(ka + i, Rational(1));
    lp.add_row(std::move(ra), Rational(1));
    lp.add_row(std::move(rb), Rational(1));
    LPResult res = solve_lp(lp);
    if (res.status == LPStatus::Infeasible) return true;
    return res.value.is_zero();
}

std::optional<Point> find_chamber_violation(const ProductPolytope& P, const std::vector<Simplex>& support) {
    std::vector<std::vector<int>> sx;
    std::vector<int> orient;
    for (const auto& s : support) {
        std::vector<int> idx = indices_of(P, s);
        std::sort(idx.begin(), idx.end());
        orient.push_back(P.orientation_of(idx));
        sx.push_back(std::move(idx));
    }
    for (std::size_t a = 0; a < sx.size(); ++a) {
        for (std::size_t b = a + 1; b < sx.size(); ++b) {
            FeasibilityResult fr = feasibility_point(P.points_of(sx[a]), P.points_of(sx[b]));
            if (!fr.overlap) continue;
            for (Rational K(1000);; K *= Rational(10)) {
                Point p = fr.witness + perturbation(P.dim(), K);
                if (!simplex_contains(P, sx[a], orient[a], p) || !simplex_contains(P, sx[b], orient[b], p)) continue;
                if (is_generic_point(P, p)) return p;
            }
        }
    }
    return std::nullopt;
}

namespace {

struct Node {
    Rational bound;
    int depth = 0;
    long id = 0;
    std::vector<int> fixed_one;
    std::vector<int> fixed_zero;
};

struct NodeOrder {
    bool operator()(const Node& x, const Node& y) const {
        if (x.bound != y.bound) return x.bound > y.bound;
        if (x.depth != y.depth) return x.depth < y.depth;
        return x.id > y.id;
    }
};

struct NodeLP {
    LinearProgram lp;
    std::vector<int> column_of;  // node column -> model column
};

NodeLP restrict_lp(const LinearProgram& base, const std::vector<int>& ones, const std::vector<int>& zeros) {
    NodeLP out;
    std::vector<int> map(base.num_vars, -1);
    std::vector<char> fixed(base.num_vars, 0);
    for (int v : ones) fixed[v] = 1;
    for (int v : zeros) fixed[v] = 2;
    for (int c = 0; c < base.num_vars; ++c) {
        if (fixed[c]) continue;
        map[c] = static_cast<int>(out.column_of.size());
        out.column_of.push_back(c);
    }
    out.lp.num_vars = static_cast<int>(out.column_of.size());
    out.lp.objective_constant = base.objective_constant;
    for (int c : out.column_of) out.lp.objective.push_back(base.objective[c]);
    for (int v : ones) out.lp.objective_constant += base.objective[v];
    for (std::size_t r = 0; r < base.rows.size(); ++r) {
        SparseRow row;
        Rational b = base.rhs[r];
        for (const auto& [c, v] : base.rows[r]) {
            if (fixed[c] == 1)
                b -= v;
            else if (fixed[c] == 0)
                row.emplace_back(map[c], v);
        }
        out.lp.rows.push_back(std::move(row));
        out.lp.rhs.push_back(std::move(b));
        out.lp.row_labels.push_back(base.row_labels[r]);
    }
    return out;
}

}  // namespace

void add_cardinality_constraint(UniversalModel& model, long k) {
    SparseRow row;
    for (std::size_t v = 0; v < model.simplices.size(); ++v) row.emplace_back(static_cast<int>(v), Rational(1));
    model.lp.add_row(std::move(row), Rational(k), "cardinality");
}

IPSolution solve_ip(UniversalModel& model, const IPOptions& options) {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    const ProductPolytope& P = *model.polytope;
    const int nsimp = static_cast<int>(model.simplices.size());
    IPSolution sol;
    bool have_incumbent = false;
    long best = 0;
    if (options.incumbent) {
        TriangulationReport rep = verify_triangulation(P, *options.incumbent, CheckLevel::Full);
        if (!rep.valid) throw std::invalid_argument("solve_ip: supplied incumbent is not a valid triangulation");
        have_incumbent = true;
        best = static_cast<long>(options.incumbent->size());
        sol.support = *options.incumbent;
        sol.support_from_incumbent = true;
        sol.certificate = rep;
    }

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long next_id = 0;
    open.push(Node{Rational(0), 0, next_id++, {}, {}});
    bool root = true;
    bool budget_hit = false;
    Rational open_min;
    while (!open.empty()) {
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (elapsed > options.time_budget_seconds) {
            budget_hit = true;
            break;
        }
        Node node = open.top();
        open.pop();
        if (have_incumbent && !root && Rational(node.bound.ceil()) >= Rational(best)) continue;
        ++sol.node_count;
        NodeLP nlp = restrict_lp(model.lp, node.fixed_one, node.fixed_zero);
        LPOptions lp_options = options.lp;
        lp_options.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(options.time_budget_seconds));
        LPResult res = solve_lp(nlp.lp, lp_options);
        if (res.status == LPStatus::TimeLimit) {
            --sol.node_count;
            open.push(std::move(node));
            budget_hit = true;
            break;
        }
        if (root) {
            root = false;
            if (res.status == LPStatus::Optimal) sol.root_lp = res.value;
        }
        if (res.status != LPStatus::Optimal) continue;
        if (have_incumbent && Rational(res.value.ceil()) >= Rational(best)) continue;

        std::vector<Rational> x(model.lp.num_vars, Rational(0));
        for (int v : node.fixed_one) x[v] = Rational(1);
        for (std::size_t c = 0; c < nlp.column_of.size(); ++c) x[nlp.column_of[c]] = res.x[c];
        int branch = -1;
        Rational best_gap;
        const Rational half(1, 2);
        for (int v = 0; v < nsimp; ++v) {
            if (x[v].is_integer()) continue;
            Rational gap = (x[v] - half).abs();
            if (branch < 0 || gap < best_gap) {
                branch = v;
                best_gap = gap;
            }
        }
        if (branch < 0) {
            std::vector<Simplex> support;
            for (int v = 0; v < nsimp; ++v) {
                if (x[v].is_zero()) continue;
                if (x[v] != Rational(1)) throw std::logic_error("integral solution with multiplicity above one");
                support.push_back(model.simplex_of(v));
            }
            TriangulationReport rep = verify_triangulation(P, support, CheckLevel::Full);
            if (rep.valid) {
                have_incumbent = true;
                best = static_cast<long>(support.size());
                sol.support = std::move(support);
                sol.support_from_incumbent = false;
                sol.certificate = std::move(rep);
                continue;
            }
            if (auto p = find_chamber_violation(P, support)) {
                add_chamber_constraint(model, *p);
            } else {
                // No overlapping interiors: exclude this exact support with a slack row.
                int slack = model.lp.num_vars++;
                model.lp.objective.push_back(Rational(0));
                SparseRow row;
                for (const auto& s : support) row.emplace_back(model.variable_of(s), Rational(1));
                row.emplace_back(slack, Rational(1));
                model.lp.add_row(std::move(row), Rational(static_cast<long>(support.size()) - 1), "no-good");
            }
            ++sol.chamber_cuts;
            node.bound = res.value;
            node.id = next_id++;
            open.push(std::move(node));
            continue;
        }
        Node one = node, zero = node;
        one.fixed_one.push_back(branch);
        zero.fixed_zero.push_back(branch);
        one.bound = zero.bound = res.value;
        one.depth = zero.depth = node.depth + 1;
        one.id = next_id++;
        zero.id = next_id++;
        open.push(std::move(one));
        open.push(std::move(zero));
    }
    if (budget_hit) {
        sol.status = IPStatus::BudgetExhausted;
        Rational lb = open.empty() ? Rational(best) : open.top().bound;
        sol.lower_bound = Rational(lb.ceil());
        if (have_incumbent && sol.lower_bound > Rational(best)) sol.lower_bound = Rational(best);
        sol.value = have_incumbent ? best : 0;
        return sol;
    }
    if (!have_incumbent) {
        sol.status = IPStatus::Infeasible;
        return sol;
    }
    sol.status = IPStatus::Optimal;
    sol.value = best;
    sol.lower_bound = Rational(best);
    return sol;
}

}  // namespace polynorm
