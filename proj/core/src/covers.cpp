#include "polynorm/covers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace polynorm {

namespace {

int md(int a, int r) { return ((a - 1) % r + r) % r + 1; }

}  // namespace

bool CoverSimplex::has_repeated_vertex() const {
    std::set<VertexLabel> s(vertices.begin(), vertices.end());
    return s.size() < vertices.size();
}

CoverComplex binary_cover(int m) {
    if (m < 4 || m % 2) throw std::invalid_argument("binary_cover: m must be even and at least 4");
    CoverComplex cover;
    cover.m = m;
    auto V = [m](int a, int b) { return VertexLabel{md(a, m), md(b, m)}; };
    std::vector<CoverSimplex> base;
    for (int i = 2; i <= m; i += 2) {
        for (int j = 1; j <= m; j += 2) {
            const VertexLabel b1 = V(i - 1, j), b2 = V(i + 1, j);
            base.push_back({"A", i, j, {b1, b2, V(i, j - 1), V(i, j + 1), V(i, j)}});
            base.push_back({"B", i, j, {b1, b2, V(i, j - 1), V(i, j + 1), V(i, i)}});
            base.push_back({"C", i, j, {b1, b2, V(j + 1, j + 1), V(i, j + 1), V(i, i)}});
            base.push_back({"D", i, j, {b1, b2, V(i, j - 1), V(j - 1, j - 1), V(i, i)}});
            base.push_back({"E", i, j, {b1, b2, V(j + 1, j + 1), V(j - 1, j - 1), V(i, i)}});
            base.push_back({"F", i, j, {b1, b2, V(j + 1, j + 1), V(j - 1, j - 1), V(j, j)}});
        }
    }
    cover.simplices = base;
    for (const auto& s : base) {
        CoverSimplex t = s;
        t.type += "'";
        for (auto& v : t.vertices) std::swap(v.i, v.j);
        cover.simplices.push_back(t);
    }
    for (int i = 1; i <= m; i += 2)
        for (int j = 1; j <= m; j += 2)
            cover.simplices.push_back({"G", i, j, {V(i, j), V(i - 1, i - 1), V(i + 1, i + 1), V(j - 1, j - 1), V(j + 1, j + 1)}});
    return cover;
}

int deletion_class(const CoverSimplex& s, int m) {
    const int diff = ((s.i - s.j) % m + m) % m;  // i - j mod m
    const bool pm1 = diff == 1 || diff == m - 1;
    std::string base = s.type.substr(0, 1);
    if (base == "B" && pm1) return 1;
    if (base == "C" && diff == 1) return 2;
    if (base == "D" && diff == m - 1) return 3;
    if (base == "E" && pm1) return 4;
    if (base == "F" && pm1) return 5;
    if (s.type == "G" && (diff == 0 || diff == 2 || diff == m - 2)) return 6;
    return 0;
}

CoverComplex reduced_cover(int m) {
    if (m < 6 || m % 2) throw std::invalid_argument("reduced_cover: m must be even and at least 6");
    CoverComplex full = binary_cover(m);
    CoverComplex out;
    out.m = m;
    out.reduced = true;
    for (const auto& s : full.simplices)
        if (deletion_class(s, m) == 0) out.simplices.push_back(s);
    return out;
}

CoverValidation validate_cover(const CoverComplex& cover, const PolytopePtr& Pptr) {
    const ProductPolytope& P = *Pptr;
    if (P.n() != cover.m || P.m() != cover.m) throw std::invalid_argument("validate_cover: polytope does not match cover");
    CoverValidation out;
    out.counted_simplices = cover.simplices.size();
    out.orientations.assign(cover.simplices.size(), 0);

    struct Entry {
        std::vector<int> idx;  // sorted vertex indices
        int parity;
        std::size_t source;
    };
    std::vector<Entry> entries;
    for (std::size_t s = 0; s < cover.simplices.size(); ++s) {
        const auto& cs = cover.simplices[s];
        Canonical c = canonicalize({cs.vertices.begin(), cs.vertices.end()});
        if (c.sign == 0) {
            ++out.repeated_vertex;
            continue;
        }
        std::vector<int> idx = indices_of(P, c.simplex);
        if (P.orientation_of(idx) == 0) ++out.flat;
        entries.push_back({std::move(idx), c.sign, s});
    }

    std::map<std::vector<int>, std::vector<std::pair<int, int>>> adj;  // tet -> (entry, incidence sign)
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const auto& idx = entries[e].idx;
        for (int k = 0; k < 5; ++k) {
            std::vector<int> tet;
            for (int r = 0; r < 5; ++r)
                if (r != k) tet.push_back(idx[r]);
            adj[tet].emplace_back(static_cast<int>(e), k % 2 == 0 ? 1 : -1);
        }
    }
    auto tet_name = [&](const std::vector<int>& t) {
        std::string s;
        for (int v : t) s += to_string(P.label(v));
        return s;
    };
    std::map<std::vector<int>, bool> interior;
    for (const auto& [tet, inc] : adj) {
        bool in = !P.in_boundary(tet);
        interior[tet] = in;
        if (!in) continue;
        out.max_interior_multiplicity = std::max(out.max_interior_multiplicity, inc.size());
        if (inc.size() == 1) out.violations.push_back("unmatched interior tetrahedron " + tet_name(tet));
    }

    // Propagate coefficients on the sorted simplices across interior tetrahedra shared by two.
    std::vector<int> sign(entries.size(), 0);
    std::vector<int> component(entries.size(), -1);
    out.orientable = true;
    for (std::size_t root = 0; root < entries.size(); ++root) {
        if (sign[root]) continue;
        const int comp = out.components++;
        sign[root] = 1;
        component[root] = comp;
        std::deque<int> queue{static_cast<int>(root)};
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            const auto& idx = entries[a].idx;
            for (int k = 0; k < 5; ++k) {
                std::vector<int> tet;
                for (int r = 0; r < 5; ++r)
                    if (r != k) tet.push_back(idx[r]);
                if (!interior[tet]) continue;
                const auto& inc = adj[tet];
                if (inc.size() != 2) continue;
                const auto& [x, ex] = inc[0];
                const auto& [y, ey] = inc[1];
                const int b = x == a ? y : x;
                const int want = -sign[a] * ex * ey;
                if (sign[b] == 0) {
                    sign[b] = want;
                    component[b] = comp;
                    queue.push_back(b);
                } else if (sign[b] != want) {
                    out.orientable = false;
                    out.violations.push_back("inconsistent orientation across " + tet_name(tet));
                }
            }
        }
    }
    // Fix each component's global sign so that it covers positively.
    std::vector<Rational> comp_volume(out.components, Rational(0));
    for (std::size_t e = 0; e < entries.size(); ++e)
        comp_volume[component[e]] += Rational(sign[e]) * P.signed_volume_of(entries[e].idx);
    for (std::size_t e = 0; e < entries.size(); ++e)
        if (comp_volume[component[e]].sign() < 0) sign[e] = -sign[e];

    AffineChain chain(Pptr, 4);
    for (std::size_t e = 0; e < entries.size(); ++e) {
        chain.add(labels_of(P, entries[e].idx), Rational(sign[e]));
        out.orientations[entries[e].source] = sign[e] * entries[e].parity;
    }
    out.certificate = verify_fundamental_cycle(chain);
    for (const auto& v : out.certificate.violations) out.violations.push_back(v);
    out.degree = out.certificate.total_signed_volume / P.volume();
    out.chain = std::move(chain);
    out.valid = out.orientable && out.violations.empty() && out.certificate.is_fundamental && out.degree == Rational(1);
    return out;
}

Rational cover_norm_bound(const CoverComplex& cover, const CoverValidation& validation) {
    if (!validation.valid) throw std::logic_error("cover_norm_bound: cover did not validate");
    return Rational(static_cast<long>(cover.simplices.size()));
}

}  // namespace polynorm
