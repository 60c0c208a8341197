// Exact two-phase primal simplex on a sparse tableau.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <iostream>
#include <stdexcept>

#include "polynorm/optimizer.hpp"

namespace polynorm {

int LinearProgram::add_row(SparseRow row, const Rational& b, std::string label) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseRow merged;
    for (auto& [c, v] : row) {
        if (c < 0 || c >= num_vars) throw std::out_of_range("LinearProgram::add_row: column out of range");
        if (!merged.empty() && merged.back().first == c) {
            merged.back().second += v;
            if (merged.back().second.is_zero()) merged.pop_back();
        } else if (!v.is_zero()) {
            merged.emplace_back(c, v);
        }
    }
    rows.push_back(std::move(merged));
    rhs.push_back(b);
    row_labels.push_back(std::move(label));
    return static_cast<int>(rows.size()) - 1;
}

std::size_t LinearProgram::nonzeros() const {
    std::size_t s = 0;
    for (const auto& r : rows) s += r.size();
    return s;
}

namespace {

const Rational* find_entry(const SparseRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// a - f * b over sorted sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(f * b[j].second));
            ++j;
        } else {
            Rational v = a[i].second - f * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Double-precision simplex on a dense tableau with a deterministic rhs
// perturbation. Only the final basis is used, as a crash start for the exact solve.
class FloatSimplex {
public:
    explicit FloatSimplex(const LinearProgram& lp) : n_(lp.num_vars), m_(static_cast<int>(lp.rows.size())) {
        w_ = n_ + m_;
        t_.assign(static_cast<std::size_t>(m_) * w_, 0.0);
        beta_.resize(m_);
        basic_.resize(m_);
        dead_.assign(m_, false);
        for (int r = 0; r < m_; ++r) {
            double b = lp.rhs[r].to_double();
            double sgn = b < 0 ? -1.0 : 1.0;
            for (const auto& [c, v] : lp.rows[r]) at(r, c) = sgn * v.to_double();
            at(r, n_ + r) = 1.0;
            double delta = 1e-7 * (1.0 + static_cast<double>((r * 7919L) % 997) / 997.0);
            beta_[r] = sgn * b + delta;
            perturbation_ += delta;
            basic_[r] = n_ + r;
        }
    }

    // Structural basic columns at the end, or nothing on failure.
    bool timed_out = false;

    std::optional<std::vector<int>> solve(const LinearProgram& lp, long max_pivots,
                                          std::optional<std::chrono::steady_clock::time_point> deadline) {
        deadline_ = deadline;
        d_.assign(w_, 0.0);
        for (int r = 0; r < m_; ++r)
            for (int c = 0; c < n_; ++c) d_[c] -= at(r, c);
        if (!iterate(max_pivots)) return std::nullopt;
        double infeas = 0;
        for (int r = 0; r < m_; ++r)
            if (basic_[r] >= n_) infeas += beta_[r];
        if (infeas > 1e-6 + 2 * perturbation_) return std::nullopt;
        dead_.assign(m_, false);
        for (int r = 0; r < m_; ++r) {
            if (basic_[r] < n_) continue;
            int q = -1;
            for (int c = 0; c < n_; ++c)
                if (std::abs(at(r, c)) > 1e-7 && (q < 0 || std::abs(at(r, c)) > std::abs(at(r, q)))) q = c;
            if (q < 0) dead_[r] = true;
            else pivot(r, q);
        }
        d_.assign(w_, 0.0);
        for (int c = 0; c < n_; ++c) d_[c] = lp.objective[c].to_double();
        for (int r = 0; r < m_; ++r) {
            int b = basic_[r];
            if (b >= n_) continue;
            double cb = lp.objective[b].to_double();
            if (cb == 0) continue;
            const double* row = &t_[static_cast<std::size_t>(r) * w_];
            for (int c = 0; c < w_; ++c) d_[c] -= cb * row[c];
        }
        if (!iterate(max_pivots)) return std::nullopt;
        std::vector<int> out;
        for (int b : basic_)
            if (b < n_) out.push_back(b);
        return out;
    }

private:
    static constexpr double kTol = 1e-9;

    double& at(int r, int c) { return t_[static_cast<std::size_t>(r) * w_ + c]; }

    bool iterate(long max_pivots) {
        for (long it = 0; it < max_pivots; ++it) {
            if (deadline_ && it % 32 == 0 && std::chrono::steady_clock::now() > *deadline_) {
                timed_out = true;
                return false;
            }
            int q = -1;
            for (int c = 0; c < n_; ++c)
                if (d_[c] < -kTol && (q < 0 || d_[c] < d_[q])) q = c;
            if (q < 0) return true;
            // Harris two-pass ratio test.
            double bound = std::numeric_limits<double>::infinity();
            for (int r = 0; r < m_; ++r) {
                double a = at(r, q);
                if (a > kTol && !dead_[r]) bound = std::min(bound, (std::max(beta_[r], 0.0) + kTol) / a);
            }
            if (!std::isfinite(bound)) return false;
            int p = -1;
            double best = 0;
            for (int r = 0; r < m_; ++r) {
                double a = at(r, q);
                if (a <= kTol || dead_[r] || std::max(beta_[r], 0.0) / a > bound) continue;
                if (p < 0 || a > best) {
                    p = r;
                    best = a;
                }
            }
            if (p < 0) return false;
            pivot(p, q);
        }
        return false;
    }

    void pivot(int p, int q) {
        double* prow = &t_[static_cast<std::size_t>(p) * w_];
        double inv = 1.0 / prow[q];
        for (int c = 0; c < w_; ++c) prow[c] *= inv;
        beta_[p] *= inv;
        std::vector<int> nz;
        for (int c = 0; c < w_; ++c)
            if (prow[c] != 0.0) nz.push_back(c);
        for (int r = 0; r < m_; ++r) {
            if (r == p) continue;
            double f = at(r, q);
            if (f == 0.0) continue;
            double* row = &t_[static_cast<std::size_t>(r) * w_];
            for (int c : nz) row[c] -= f * prow[c];
            row[q] = 0.0;
            beta_[r] -= f * beta_[p];
        }
        double f = d_[q];
        if (f != 0.0) {
            for (int c : nz) d_[c] -= f * prow[c];
            d_[q] = 0.0;
        }
        basic_[p] = q;
    }

    int n_, m_, w_;
    std::vector<double> t_;
    std::vector<double> beta_;
    std::vector<int> basic_;
    std::vector<bool> dead_;
    std::vector<double> d_;
    double perturbation_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

class Tableau {
public:
    Tableau(const LinearProgram& lp, const LPOptions& opt) : opt_(opt), n_(lp.num_vars) {
        const int m = static_cast<int>(lp.rows.size());
        flipped_.assign(m, false);
        for (int r = 0; r < m; ++r) {
            SparseRow row = lp.rows[r];
            Rational b = lp.rhs[r];
            if (b.sign() < 0) {
                flipped_[r] = true;
                b = -b;
                for (auto& e : row) e.second = -e.second;
            }
            row.emplace_back(n_ + r, Rational(1));
            rows_.push_back(std::move(row));
            beta_.push_back(b);
            basic_.push_back(n_ + r);
            origin_.push_back(r);
        }
        total_cols_ = n_ + m;
    }

    // Pivots the given columns into the basis regardless of sign. Returns false
    // when the resulting basis is not primal feasible.
    bool crash(std::vector<int> cols, LPResult& res) {
        d_.assign(total_cols_, Rational(0));
        std::vector<std::size_t> count(n_, 0);
        for (const auto& row : rows_)
            for (const auto& e : row)
                if (e.first < n_) ++count[e.first];
        std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) { return count[a] < count[b]; });
        for (int q : cols) {
            int p = -1;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (basic_[r] < n_ || !find_entry(rows_[r], q)) continue;
                if (p < 0 || rows_[r].size() < rows_[p].size()) p = static_cast<int>(r);
            }
            if (p >= 0) pivot(p, q, res);
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (beta_[r].sign() < 0) return false;
            if (basic_[r] >= n_ && !beta_[r].is_zero()) return false;
        }
        return true;
    }

    LPResult run(const LinearProgram& lp, const std::vector<int>* start = nullptr) {
        LPResult res;
        if (start) {
            if (!crash(*start, res)) throw CrashFailed{};
            return finish(lp, res);
        }
        // Phase 1: minimize the sum of artificials.
        d_.assign(total_cols_, Rational(0));
        z_ = Rational(0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            z_ += beta_[r];
            for (const auto& [c, v] : rows_[r])
                if (c < n_) d_[c] -= v;
        }
        if (!iterate(res)) throw std::logic_error("phase 1 reported unbounded");
        if (z_.sign() != 0) {
            res.status = LPStatus::Infeasible;
            return res;
        }
        return finish(lp, res);
    }

    struct CrashFailed {};
    struct TimeUp {};

private:
    LPResult finish(const LinearProgram& lp, LPResult& res) {
        // Drive remaining artificials out of the basis or drop redundant rows.
        for (std::size_t r = 0; r < rows_.size();) {
            if (basic_[r] < n_) {
                ++r;
                continue;
            }
            int col = -1;
            for (const auto& [c, v] : rows_[r])
                if (c < n_) {
                    col = c;
                    break;
                }
            if (col >= 0) {
                pivot(static_cast<int>(r), col, res);
                ++r;
            } else {
                rows_.erase(rows_.begin() + r);
                beta_.erase(beta_.begin() + r);
                basic_.erase(basic_.begin() + r);
                origin_.erase(origin_.begin() + r);
                ++res.redundant_rows;
            }
        }
        // Phase 2.
        d_.assign(total_cols_, Rational(0));
        for (int c = 0; c < n_; ++c) d_[c] = lp.objective[c];
        z_ = Rational(0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            int b = basic_[r];
            if (b >= n_ || lp.objective[b].is_zero()) continue;
            const Rational& cb = lp.objective[b];
            z_ += cb * beta_[r];
            for (const auto& [c, v] : rows_[r]) d_[c] -= cb * v;
        }
        if (!iterate(res)) {
            res.status = LPStatus::Unbounded;
            return res;
        }
        res.status = LPStatus::Optimal;
        res.value = z_ + lp.objective_constant;
        res.x.assign(n_, Rational(0));
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (basic_[r] < n_) res.x[basic_[r]] = beta_[r];
        const int m = static_cast<int>(lp.rows.size());
        res.y.assign(m, Rational(0));
        for (int i = 0; i < m; ++i) {
            Rational yi = -d_[n_ + i];
            res.y[i] = flipped_[i] ? -yi : yi;
        }
        for (int b : basic_)
            if (b < n_) res.basis.push_back(b);
        std::sort(res.basis.begin(), res.basis.end());
        return res;
    }

    // Returns false on unboundedness.
    bool iterate(LPResult& res) {
        int degenerate_run = 0;
        for (;;) {
            if (opt_.deadline && res.pivots % 8 == 0 && std::chrono::steady_clock::now() > *opt_.deadline) throw TimeUp{};
            bool bland = degenerate_run >= opt_.bland_threshold;
            int q = -1;
            for (int c = 0; c < n_; ++c) {
                if (d_[c].sign() >= 0) continue;
                if (q < 0 || (!bland && d_[c] < d_[q])) {
                    q = c;
                    if (bland) break;
                }
            }
            if (q < 0) return true;
            int p = -1;
            Rational best;
            std::vector<int> ties;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const Rational* a = find_entry(rows_[r], q);
                if (!a || a->sign() <= 0) continue;
                Rational ratio = beta_[r] / *a;
                if (p < 0 || ratio < best) {
                    p = static_cast<int>(r);
                    best = std::move(ratio);
                    ties.assign(1, p);
                } else if (ratio == best) {
                    ties.push_back(static_cast<int>(r));
                }
            }
            if (ties.size() > 1) {
                if (bland) {
                    for (int r : ties)
                        if (basic_[r] < basic_[p]) p = r;
                } else {
                    p = ties[0];
                    for (std::size_t t = 1; t < ties.size(); ++t)
                        if (lex_less(ties[t], p, q)) p = ties[t];
                }
            }
            if (p < 0) return false;
            bool degenerate = best.is_zero();
            pivot(p, q, res);
            if (opt_.trace_every > 0 && res.pivots % opt_.trace_every == 0) trace(res);
            if (degenerate) {
                ++degenerate_run;
                ++res.degenerate_pivots;
            } else {
                degenerate_run = 0;
            }
        }
    }

    // Compares rows of B^-1 (the artificial block) scaled by the pivot column entries.
    bool lex_less(int r1, int r2, int q) const {
        const SparseRow& a = rows_[r1];
        const SparseRow& b = rows_[r2];
        const Rational fa = find_entry(a, q)->inverse();
        const Rational fb = find_entry(b, q)->inverse();
        auto ia = std::lower_bound(a.begin(), a.end(), n_, [](const auto& e, int c) { return e.first < c; });
        auto ib = std::lower_bound(b.begin(), b.end(), n_, [](const auto& e, int c) { return e.first < c; });
        while (ia != a.end() || ib != b.end()) {
            int ca = ia == a.end() ? total_cols_ : ia->first;
            int cb = ib == b.end() ? total_cols_ : ib->first;
            Rational va(0), vb(0);
            if (ca <= cb) va = ia->second * fa;
            if (cb <= ca) vb = ib->second * fb;
            if (va != vb) return va < vb;
            if (ca <= cb) ++ia;
            if (cb <= ca) ++ib;
        }
        return false;
    }

    void trace(const LPResult& res) const {
        std::size_t nnz = 0, big = 0;
        for (const auto& r : rows_) {
            nnz += r.size();
            for (const auto& e : r) big += !e.second.is_small();
        }
        std::cerr << "[lp] pivots " << res.pivots << " degenerate " << res.degenerate_pivots << " objective "
                  << z_.to_double() << " rows " << rows_.size() << " nnz " << nnz << " big " << big << '\n';
    }

    void pivot(int p, int q, LPResult& res) {
        ++res.pivots;
        Rational inv = find_entry(rows_[p], q)->inverse();
        for (auto& e : rows_[p]) e.second *= inv;
        beta_[p] *= inv;
        const SparseRow& prow = rows_[p];
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (static_cast<int>(r) == p) continue;
            const Rational* a = find_entry(rows_[r], q);
            if (!a) continue;
            Rational f = *a;
            rows_[r] = axpy(rows_[r], f, prow);
            if (!beta_[p].is_zero()) beta_[r] -= f * beta_[p];
        }
        if (!d_[q].is_zero()) {
            Rational f = d_[q];
            for (const auto& [c, v] : prow) d_[c] -= f * v;
            z_ += f * beta_[p];
        }
        basic_[p] = q;
    }

    LPOptions opt_;
    int n_;
    int total_cols_ = 0;
    std::vector<SparseRow> rows_;
    std::vector<Rational> beta_;
    std::vector<int> basic_;
    std::vector<int> origin_;
    std::vector<bool> flipped_;
    std::vector<Rational> d_;
    Rational z_;
};

}  // namespace

LPResult solve_lp(const LinearProgram& lp, const LPOptions& options) {
    if (static_cast<int>(lp.objective.size()) != lp.num_vars) throw std::invalid_argument("solve_lp: objective size mismatch");
    if (lp.rows.size() != lp.rhs.size()) throw std::invalid_argument("solve_lp: rhs size mismatch");
    LPResult timeout;
    timeout.status = LPStatus::TimeLimit;
    try {
        if (options.float_guided && lp.num_vars > 0 && !lp.rows.empty()) {
            FloatSimplex f(lp);
            auto basis = f.solve(lp, options.float_pivot_limit, options.deadline);
            if (f.timed_out) return timeout;
            if (basis) {
                try {
                    Tableau t(lp, options);
                    return t.run(lp, &*basis);
                } catch (const Tableau::CrashFailed&) {
                }
            }
        }
        Tableau t(lp, options);
        return t.run(lp);
    } catch (const Tableau::TimeUp&) {
        return timeout;
    }
}

bool verify_lp_duality(const LinearProgram& lp, const LPResult& res) {
    if (res.status != LPStatus::Optimal) return false;
    if (static_cast<int>(res.x.size()) != lp.num_vars || res.y.size() != lp.rows.size()) return false;
    for (const auto& v : res.x)
        if (v.sign() < 0) return false;
    Rational primal = lp.objective_constant;
    for (int c = 0; c < lp.num_vars; ++c) primal += lp.objective[c] * res.x[c];
    std::vector<Rational> aty(lp.num_vars, Rational(0));
    Rational dual = lp.objective_constant;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        Rational ax(0);
        for (const auto& [c, v] : lp.rows[r]) {
            ax += v * res.x[c];
            if (!res.y[r].is_zero()) aty[c] += v * res.y[r];
        }
        if (ax != lp.rhs[r]) return false;
        dual += lp.rhs[r] * res.y[r];
    }
    for (int c = 0; c < lp.num_vars; ++c)
        if (aty[c] > lp.objective[c]) return false;
    return primal == dual && primal == res.value;
}

}  // namespace polynorm
