#include "polynorm/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polynorm {

namespace {

int md(int a, int r) { return ((a - 1) % r + r) % r + 1; }

Simplex sorted(std::vector<VertexLabel> v) {
    std::sort(v.begin(), v.end());
    return v;
}

enum Role { RoleA = 0, RoleB = 1, RoleC = 2 };

// Template simplex on P(3,m): i holds a role rather than a polygon vertex.
using RoleSimplex = std::vector<VertexLabel>;

// Even m. Corners cut at (A, odd j) and (B, even j); the rest is coned from
// v = (C, i0): the cut faces, the remnants of the AB-free triangular prisms and
// the AB antiprism (fanned on its A face from the first even vertex, coned from (B, u)).
std::vector<RoleSimplex> p3m_even_template(int m, int i0, int u) {
    const int A = RoleA, B = RoleB, C = RoleC;
    std::vector<RoleSimplex> S;
    for (int j = 1; j <= m; ++j) {
        if (j % 2 == 1)
            S.push_back({{A, md(j - 1, m)}, {A, j}, {A, md(j + 1, m)}, {B, j}, {C, j}});
        else
            S.push_back({{B, md(j - 1, m)}, {B, j}, {B, md(j + 1, m)}, {A, j}, {C, j}});
    }
    const VertexLabel v{C, i0};
    for (int j = 1; j <= m; ++j) {
        if (j == i0) continue;
        if (j % 2 == 1)
            S.push_back({{A, md(j - 1, m)}, {A, md(j + 1, m)}, {B, j}, {C, j}, v});
        else
            S.push_back({{B, md(j - 1, m)}, {B, md(j + 1, m)}, {A, j}, {C, j}, v});
    }
    for (int j = 1; j <= m; ++j) {
        int j1 = md(j + 1, m);
        if (j == i0 || j1 == i0) continue;
        if (j % 2 == 1)
            S.push_back({{A, j1}, {B, j}, {C, j}, {C, j1}, v});
        else
            S.push_back({{A, j}, {B, j1}, {C, j}, {C, j1}, v});
    }
    std::vector<std::vector<VertexLabel>> anti;
    std::vector<int> even;
    for (int j = 2; j <= m; j += 2) even.push_back(j);
    for (std::size_t x = 1; x + 1 < even.size(); ++x)
        anti.push_back({{A, even[0]}, {A, even[x]}, {A, even[x + 1]}});
    for (int j = 1; j <= m; j += 2) anti.push_back({{A, md(j - 1, m)}, {A, md(j + 1, m)}, {B, j}});
    for (int j = 2; j <= m; j += 2) anti.push_back({{B, md(j - 1, m)}, {B, md(j + 1, m)}, {A, j}});
    const VertexLabel apex{B, u};
    for (auto& tri : anti) {
        if (std::find(tri.begin(), tri.end(), apex) != tri.end()) continue;
        tri.push_back(apex);
        tri.push_back(v);
        S.push_back(tri);
    }
    return S;
}

std::vector<RoleSimplex> p3m_template(int m) {
    if (m % 2 == 0) return p3m_even_template(m, 1, 3);
    // Odd m: build the (m+1) pattern and identify j = m+1 with j = 1.
    std::vector<RoleSimplex> out;
    for (auto s : p3m_even_template(m + 1, 1, 3)) {
        for (auto& x : s)
            if (x.j == m + 1) x.j = 1;
        std::set<VertexLabel> distinct(s.begin(), s.end());
        if (distinct.size() == s.size()) out.push_back(s);
    }
    return out;
}

// Role of a vertex of the n-gon in the fan labelling.
int fan_role(int vertex) {
    if (vertex == 1) return RoleB;
    return vertex % 2 == 0 ? RoleA : RoleC;
}

std::vector<Simplex> fan_product(int n, int m) {
    const auto T = p3m_template(m);
    std::vector<Simplex> K;
    for (int k = 2; k < n; ++k) {
        int vertex_of_role[3];
        for (int v : {1, k, k + 1}) vertex_of_role[fan_role(v)] = v;
        for (const auto& s : T) {
            std::vector<VertexLabel> img;
            for (const auto& x : s) img.push_back({vertex_of_role[x.i], x.j});
            K.push_back(sorted(std::move(img)));
        }
    }
    return K;
}

// Across the chord (1,k) the cells (1,k-1,k) and (1,k,k+1) are glued; simplices
// (c,i)*tau and (c',i)*tau with tau in the chord prism form a bipyramid over the
// region Q swept by the taus. Replace them by (c,i)(c',i)*t for the boundary
// triangles t of Q off the two squares at the edge {(1,i),(k,i)}, when that is cheaper.
std::vector<Simplex> bipyramid_trick(std::vector<Simplex> input, int n, int m) {
    std::set<Simplex> K(input.begin(), input.end());
    for (int k = 3; k < n; ++k) {
        const int c = k - 1, cp = k + 1;
        std::map<int, std::vector<Simplex>> groups;
        for (const auto& s : K) {
            for (const auto& apex : s) {
                if (apex.i != c) continue;
                Simplex tau;
                for (const auto& x : s)
                    if (x != apex) tau.push_back(x);
                bool in_chord = std::all_of(tau.begin(), tau.end(), [&](const VertexLabel& x) { return x.i == 1 || x.i == k; });
                if (!in_chord) continue;
                Simplex other = tau;
                other.push_back({cp, apex.j});
                std::sort(other.begin(), other.end());
                if (!K.count(other)) continue;
                const int i = apex.j;
                const std::set<int> window{md(i - 1, m), i, md(i + 1, m), 1};
                bool local = i == 1 || std::all_of(tau.begin(), tau.end(), [&](const VertexLabel& x) { return window.count(x.j) > 0; });
                if (local) groups[i].push_back(tau);
            }
        }
        for (const auto& [i, taus] : groups) {
            std::map<Simplex, int> count;
            for (const auto& tau : taus)
                for (std::size_t q = 0; q < tau.size(); ++q) {
                    Simplex t;
                    for (std::size_t r = 0; r < tau.size(); ++r)
                        if (r != q) t.push_back(tau[r]);
                    ++count[t];
                }
            std::vector<Simplex> boundary;
            for (const auto& [t, cnt] : count)
                if (cnt == 1) boundary.push_back(t);
            const VertexLabel e1{1, i}, e2{k, i};
            bool has_edge = std::any_of(boundary.begin(), boundary.end(), [&](const Simplex& t) {
                return std::count(t.begin(), t.end(), e1) && std::count(t.begin(), t.end(), e2);
            });
            if (!has_edge) continue;
            const std::set<int> left{md(i - 1, m), i}, right{i, md(i + 1, m)};
            std::vector<Simplex> fresh;
            for (const auto& t : boundary) {
                bool in_left = std::all_of(t.begin(), t.end(), [&](const VertexLabel& x) { return left.count(x.j) > 0; });
                bool in_right = std::all_of(t.begin(), t.end(), [&](const VertexLabel& x) { return right.count(x.j) > 0; });
                if (in_left || in_right) continue;
                Simplex s = t;
                s.push_back({c, i});
                s.push_back({cp, i});
                fresh.push_back(sorted(std::move(s)));
            }
            if (fresh.size() >= 2 * taus.size()) continue;
            for (const auto& tau : taus) {
                Simplex a = tau, b = tau;
                a.push_back({c, i});
                b.push_back({cp, i});
                K.erase(sorted(std::move(a)));
                K.erase(sorted(std::move(b)));
            }
            K.insert(fresh.begin(), fresh.end());
        }
    }
    return {K.begin(), K.end()};
}

}  // namespace

Construction transpose(const Construction& c) {
    if (c.n == 2) throw std::invalid_argument("transpose: prism constructions have no transpose");
    Construction t;
    t.name = c.name + " (transposed)";
    t.n = c.m;
    t.m = c.n;
    t.polytope = make_product(t.n, t.m, c.polytope->coordinatization());
    for (const auto& s : c.simplices) {
        Simplex r;
        for (const auto& v : s) r.push_back(VertexLabel{v.j, v.i});
        std::sort(r.begin(), r.end());
        t.simplices.push_back(std::move(r));
    }
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

Construction best_construction(int n, int m) {
    if (n < 3 || m < 3) throw std::invalid_argument("best_construction: n, m must be at least 3");
    std::vector<Construction> candidates;
    auto add_both = [&](Construction c) {
        if (c.n == n && c.m == m) candidates.push_back(std::move(c));
        else candidates.push_back(transpose(c));
    };
    if (n == 3) add_both(p3m_triangulation(m));
    if (m == 3) add_both(p3m_triangulation(n));
    if (n % 2 == 0 && m % 2 == 0 && n >= 4 && m >= 4) add_both(seven_halves_triangulation(n, m));
    add_both(product_triangulation(n, m));
    add_both(product_triangulation(m, n));
    auto best = std::min_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return a.simplices.size() < b.simplices.size();
    });
    return *best;
}

long prism_size_formula(int m) { return (5L * (m - 2) + 1) / 2; }

long p3m_size_formula(int m) { return m % 2 == 0 ? 9L * m / 2 - 8 : (9L * m - 15) / 2; }

long seven_halves_size_formula(int n, int m) { return 7L * n * m / 2 - 6L * (n + m) + 8; }

Construction prism_triangulation(int m) {
    if (m < 3) throw std::invalid_argument("prism_triangulation: m must be at least 3");
    Construction out;
    out.name = "prism";
    out.n = 2;
    out.m = m;
    out.polytope = make_prism(m);
    auto& S = out.simplices;
    // Even part on vertices 1..me.
    const int me = m % 2 == 0 ? m : m - 1;
    if (me >= 4) {
        for (int j = 1; j <= me; ++j) {
            if (j % 2 == 1)
                S.push_back(sorted({{1, md(j - 1, me)}, {1, j}, {1, md(j + 1, me)}, {2, j}}));
            else
                S.push_back(sorted({{2, md(j - 1, me)}, {2, j}, {2, md(j + 1, me)}, {1, j}}));
        }
        std::vector<std::vector<VertexLabel>> faces;
        std::vector<int> even;
        for (int j = 2; j <= me; j += 2) even.push_back(j);
        for (std::size_t x = 1; x + 1 < even.size(); ++x) faces.push_back({{1, even[0]}, {1, even[x]}, {1, even[x + 1]}});
        for (int j = 1; j <= me; j += 2) faces.push_back({{1, md(j - 1, me)}, {1, md(j + 1, me)}, {2, j}});
        for (int j = 2; j <= me; j += 2) faces.push_back({{2, md(j - 1, me)}, {2, md(j + 1, me)}, {1, j}});
        const VertexLabel apex{2, 1};
        for (auto& f : faces) {
            if (std::find(f.begin(), f.end(), apex) != f.end()) continue;
            f.push_back(apex);
            S.push_back(sorted(std::move(f)));
        }
    }
    if (m % 2 == 1) {
        // Staircase triangulation of the triangular prism over (m-1, m, 1).
        const int a = m - 1;
        S.push_back(sorted({{1, a}, {1, m}, {1, 1}, {2, 1}}));
        S.push_back(sorted({{1, a}, {1, m}, {2, m}, {2, 1}}));
        S.push_back(sorted({{1, a}, {2, a}, {2, m}, {2, 1}}));
    }
    return out;
}

Construction p3m_triangulation(int m) {
    if (m < 3) throw std::invalid_argument("p3m_triangulation: m must be at least 3");
    Construction out = product_triangulation(3, m);
    out.name = "p3m";
    return out;
}

Construction product_triangulation(int n, int m) {
    if (n < 3 || m < 3) throw std::invalid_argument("product_triangulation: n, m must be at least 3");
    Construction out;
    out.name = "product";
    out.n = n;
    out.m = m;
    out.polytope = make_product(n, m);
    out.simplices = fan_product(n, m);
    std::sort(out.simplices.begin(), out.simplices.end());
    return out;
}

Construction seven_halves_triangulation(int n, int m) {
    if (n < 4 || m < 4 || n % 2 || m % 2)
        throw std::invalid_argument("seven_halves_triangulation: n and m must be even and at least 4");
    Construction out;
    out.name = "seven-halves";
    out.n = n;
    out.m = m;
    out.polytope = make_product(n, m);
    out.simplices = bipyramid_trick(fan_product(n, m), n, m);
    return out;
}

P3mCensus p3m_census(const std::vector<Simplex>& simplices) {
    P3mCensus c;
    for (const auto& s : simplices) {
        int cnt[3] = {0, 0, 0};
        for (const auto& v : s) {
            if (v.i < 1 || v.i > 3) throw std::invalid_argument("p3m_census: not a P(3,m) simplex");
            ++cnt[fan_role(v.i)];
        }
        auto is = [&](int a, int b, int cc) { return cnt[RoleA] == a && cnt[RoleB] == b && cnt[RoleC] == cc; };
        if (is(3, 1, 1)) ++c.A;
        else if (is(1, 3, 1)) ++c.B;
        else if (is(1, 1, 3)) ++c.C;
        else if (is(2, 2, 1)) ++c.AB;
        else if (is(2, 1, 2)) ++c.AC;
        else if (is(1, 2, 2)) ++c.BC;
        else ++c.other;
    }
    return c;
}

}  // namespace polynorm
