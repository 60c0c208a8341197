#include "polynorm/chains.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "polynorm/optimizer.hpp"

namespace polynorm {

Canonical canonicalize(std::vector<VertexLabel> v) {
    int sign = 1;
    for (std::size_t a = 1; a < v.size(); ++a) {
        for (std::size_t b = a; b > 0 && v[b] < v[b - 1]; --b) {
            std::swap(v[b], v[b - 1]);
            sign = -sign;
        }
    }
    for (std::size_t a = 1; a < v.size(); ++a)
        if (v[a] == v[a - 1]) return {std::move(v), 0};
    return {std::move(v), sign};
}

AffineChain::AffineChain(PolytopePtr polytope, int dimension)
    : polytope_(std::move(polytope)), dimension_(dimension) {
    if (!polytope_) throw std::invalid_argument("AffineChain: null polytope");
    if (dimension_ < 0 || dimension_ > polytope_->dim()) throw std::invalid_argument("AffineChain: bad dimension");
}

void AffineChain::add(std::vector<VertexLabel> vertices, const Rational& coeff) {
    if (static_cast<int>(vertices.size()) != dimension_ + 1)
        throw std::invalid_argument("AffineChain::add: simplex has wrong number of vertices");
    for (const auto& v : vertices)
        if (!polytope_->has_label(v)) throw std::invalid_argument("AffineChain::add: vertex " + to_string(v) + " not on polytope");
    Canonical c = canonicalize(std::move(vertices));
    if (c.sign == 0 || coeff.is_zero()) return;
    Rational delta = c.sign > 0 ? coeff : -coeff;
    auto it = terms_.find(c.simplex);
    if (it == terms_.end()) {
        terms_.emplace(std::move(c.simplex), delta);
        return;
    }
    it->second += delta;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational AffineChain::coefficient(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

AffineChain AffineChain::boundary() const {
    if (dimension_ < 1) throw std::invalid_argument("boundary of a 0-chain");
    AffineChain out(polytope_, dimension_ - 1);
    for (const auto& [s, w] : terms_) {
        for (std::size_t k = 0; k < s.size(); ++k) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t q = 0; q < s.size(); ++q)
                if (q != k) face.push_back(s[q]);
            out.add(std::move(face), k % 2 == 0 ? w : -w);
        }
    }
    return out;
}

Rational AffineChain::norm() const {
    Rational s(0);
    for (const auto& [_, w] : terms_) s += w.abs();
    return s;
}

AffineChain AffineChain::scaled(const Rational& f) const {
    AffineChain out(polytope_, dimension_);
    if (f.is_zero()) return out;
    for (const auto& [s, w] : terms_) out.terms_.emplace(s, w * f);
    return out;
}

AffineChain AffineChain::operator+(const AffineChain& o) const {
    if (o.dimension_ != dimension_) throw std::invalid_argument("adding chains of different dimension");
    AffineChain out = *this;
    for (const auto& [s, w] : o.terms_) out.add(s, w);
    return out;
}

std::vector<int> indices_of(const ProductPolytope& P, const Simplex& s) {
    std::vector<int> idx;
    idx.reserve(s.size());
    for (const auto& v : s) idx.push_back(P.index(v));
    return idx;
}

Simplex labels_of(const ProductPolytope& P, const std::vector<int>& idx) {
    Simplex s;
    s.reserve(idx.size());
    for (int v : idx) s.push_back(P.label(v));
    return s;
}

AffineChain triangulation_chain(const PolytopePtr& P, const std::vector<Simplex>& simplices) {
    AffineChain c(P, P->dim());
    for (const auto& s : simplices) {
        int o = P->orientation_of(indices_of(*P, s));
        if (o == 0) throw std::invalid_argument("triangulation_chain: degenerate simplex");
        c.add(s, Rational(o));
    }
    return c;
}

std::string facet_name(const ProductPolytope& P, int facet) {
    const FacetPrism& F = P.facets()[facet];
    if (F.kind == FacetKind::EdgeOfFirst) {
        if (P.is_prism()) return F.edge_index == 1 ? "bottom" : "top";
        int k = F.edge_index;
        return "edge(" + std::to_string(k) + "," + std::to_string(k % P.n() + 1) + ")xC" + std::to_string(P.m());
    }
    int k = F.edge_index;
    std::string first = P.is_prism() ? "I" : "C" + std::to_string(P.n());
    return first + "xedge(" + std::to_string(k) + "," + std::to_string(k % P.m() + 1) + ")";
}

CycleCertificate verify_fundamental_cycle(const AffineChain& c) {
    const ProductPolytope& P = *c.polytope();
    CycleCertificate cert;
    if (c.dimension() != P.dim()) {
        cert.violations.push_back("chain is not top-dimensional");
        return cert;
    }
    cert.boundary_on_boundary = true;
    Rational total(0);
    for (const auto& [s, w] : c.terms()) total += w * P.signed_volume_of(indices_of(P, s));
    cert.total_signed_volume = total;

    const Point apex = P.centroid();
    const int nf = static_cast<int>(P.facets().size());
    std::vector<Rational> acc(nf, Rational(0));
    AffineChain bd = c.boundary();
    for (const auto& [tau, w] : bd.terms()) {
        std::vector<int> idx = indices_of(P, tau);
        std::vector<int> facets = P.common_facets(idx);
        if (facets.empty()) {
            cert.boundary_on_boundary = false;
            std::string name;
            for (const auto& v : tau) name += to_string(v);
            cert.violations.push_back("interior face " + name + " has boundary coefficient " + w.to_string());
            continue;
        }
        // Apex first so the cone over a boundary face carries the face's own sign.
        std::vector<Point> pts{apex};
        for (auto& q : P.points_of(idx)) pts.push_back(std::move(q));
        Rational v = w * signed_volume(pts);
        for (int f : facets) acc[f] += v;
    }
    bool volume_ok = total == P.volume() || total == -P.volume();
    if (!volume_ok)
        cert.violations.push_back("total signed volume " + total.to_string() + " differs from +-" + P.volume().to_string());
    int expected = total.sign();
    bool degrees_ok = expected != 0;
    for (int f = 0; f < nf; ++f) {
        Rational deg = acc[f] / P.pyramid_volume(f, apex);
        cert.per_facet_degree[f] = deg;
        if (deg != Rational(expected)) {
            degrees_ok = false;
            cert.violations.push_back("facet " + facet_name(P, f) + " has degree " + deg.to_string());
        }
    }
    cert.is_fundamental = cert.boundary_on_boundary && volume_ok && degrees_ok;
    return cert;
}

namespace {

std::string simplex_name(const ProductPolytope& P, const std::vector<int>& idx) {
    std::string s;
    for (int v : idx) s += to_string(P.label(v));
    return s;
}

}  // namespace

TriangulationReport verify_triangulation(const ProductPolytope& P, const std::vector<Simplex>& simplices,
                                         CheckLevel level) {
    TriangulationReport rep;
    rep.level = level;
    rep.simplices = simplices.size();
    const int k = P.dim() + 1;
    std::vector<std::vector<int>> sx;
    sx.reserve(simplices.size());
    for (const auto& s : simplices) {
        if (static_cast<int>(s.size()) != k) throw std::invalid_argument("verify_triangulation: wrong simplex size");
        std::vector<int> idx = indices_of(P, s);
        std::sort(idx.begin(), idx.end());
        if (P.orientation_of(idx) == 0)
            throw std::invalid_argument("verify_triangulation: degenerate simplex " + simplex_name(P, idx));
        sx.push_back(std::move(idx));
    }
    {
        std::set<std::vector<int>> seen;
        for (const auto& s : sx)
            if (!seen.insert(s).second) rep.violations.push_back("duplicate simplex " + simplex_name(P, s));
    }
    Rational total(0);
    std::map<std::vector<int>, std::vector<int>> ridges;  // ridge -> sides of the apexes
    for (const auto& s : sx) {
        total += P.signed_volume_of(s).abs();
        for (int q = 0; q < k; ++q) {
            std::vector<int> ridge;
            for (int r = 0; r < k; ++r)
                if (r != q) ridge.push_back(s[r]);
            std::vector<int> probe = ridge;
            probe.push_back(s[q]);
            ridges[ridge].push_back(P.orientation_of(probe));
        }
    }
    rep.total_volume = total;
    if (total != P.volume())
        rep.violations.push_back("total volume " + total.to_string() + " differs from " + P.volume().to_string());
    for (const auto& [ridge, sides] : ridges) {
        if (P.in_boundary(ridge)) {
            ++rep.boundary_ridges;
            if (sides.size() != 1)
                rep.violations.push_back("boundary ridge " + simplex_name(P, ridge) + " used " +
                                         std::to_string(sides.size()) + " times");
        } else {
            ++rep.interior_ridges;
            if (sides.size() != 2 || sides[0] == sides[1])
                rep.violations.push_back("interior ridge " + simplex_name(P, ridge) + " is not shared by two simplices on opposite sides");
        }
    }
    if (level == CheckLevel::Full) {
        for (std::size_t a = 0; a < sx.size(); ++a) {
            for (std::size_t b = a + 1; b < sx.size(); ++b) {
                ++rep.pairs_checked;
                if (!proper_intersection(P, sx[a], sx[b]))
                    rep.violations.push_back("simplices " + simplex_name(P, sx[a]) + " and " + simplex_name(P, sx[b]) +
                                             " do not meet in a common face");
            }
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

AffineChain replicate_chain(const AffineChain& c, int n, int m) {
    const ProductPolytope& Q = *c.polytope();
    const int j = Q.n(), k = Q.m();
    if (Q.is_prism()) throw std::invalid_argument("replicate_chain: source must be a polygon product");
    if (n < j || m < k || (n - 2) % (j - 2) != 0 || (m - 2) % (k - 2) != 0)
        throw std::invalid_argument("replicate_chain: (j-2) must divide (n-2) and (k-2) must divide (m-2)");
    auto target = make_product(n, m, Q.coordinatization());
    AffineChain out(target, c.dimension());
    const int q1 = (n - 2) / (j - 2), q2 = (m - 2) / (k - 2);
    // Cell t of an r-gon split into s-gons by a fan from vertex 1: vertices 1, t(s-2)+2, ..., (t+1)(s-2)+2.
    // Odd cells use the reflection fixing position 1 and reversing the rest.
    auto cell_map = [](int a, int t, int s) {
        int pos = (t % 2 == 0 || a == 1) ? a : s + 2 - a;
        return pos == 1 ? 1 : t * (s - 2) + pos;
    };
    for (int t = 0; t < q1; ++t) {
        for (int u = 0; u < q2; ++u) {
            Rational sign((t + u) % 2 == 0 ? 1 : -1);
            for (const auto& [s, w] : c.terms()) {
                std::vector<VertexLabel> img;
                for (const auto& v : s) img.push_back({cell_map(v.i, t, j), cell_map(v.j, u, k)});
                out.add(std::move(img), w * sign);
            }
        }
    }
    return out;
}

AffineChain straighten(const std::vector<RawSimplex>& raw, const PolytopePtr& P) {
    AffineChain out(P, P->dim());
    for (const auto& rs : raw) {
        if (static_cast<int>(rs.vertices.size()) != P->dim() + 1)
            throw std::invalid_argument("straighten: raw simplex has wrong number of vertices");
        std::vector<VertexLabel> snapped;
        std::vector<FaceDescriptor> faces;
        for (const auto& p : rs.vertices) {
            if (!P->contains(p)) throw std::invalid_argument("straighten: raw vertex outside polytope");
            FaceDescriptor f = P->minimal_face(p);
            snapped.push_back(*std::min_element(f.vertices.begin(), f.vertices.end()));
            faces.push_back(std::move(f));
        }
        // Each face of the raw simplex must land in the minimal face of its barycenter.
        const int k = static_cast<int>(rs.vertices.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            Point bary(P->dim(), Rational(0));
            int cnt = 0;
            for (int q = 0; q < k; ++q)
                if (mask & (1 << q)) {
                    bary = bary + rs.vertices[q];
                    ++cnt;
                }
            bary = scale(bary, Rational(1) / Rational(cnt));
            FaceDescriptor face = P->minimal_face(bary);
            for (int q = 0; q < k; ++q)
                if ((mask & (1 << q)) &&
                    !std::binary_search(face.vertices.begin(), face.vertices.end(), snapped[q]))
                    throw std::invalid_argument("straighten: face compatibility violated");
        }
        out.add(std::move(snapped), rs.coeff);
    }
    return out;
}

}  // namespace polynorm
