#include "tvt/simplicial_complex.hpp"

#include <algorithm>
#include <set>

namespace tvt {

namespace {

const std::vector<Simplex> kNoFaces;

// All non-empty subsets of a sorted vertex list, as simplices.
void push_all_subsets(const std::vector<vertex_t>& verts, std::set<Simplex>& out) {
    std::size_t n = verts.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        Simplex s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i)) s.vertices.push_back(verts[i]);
        out.insert(std::move(s));
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<vertex_t>>& facets) {
    std::set<Simplex> closure;
    for (const auto& facet : facets) {
        Simplex top(facet);  // validates: non-empty, duplicate-free, non-negative
        if (facet.size() > 62) throw input_error("facet too large");
        push_all_subsets(top.vertices, closure);
    }
    SimplicialComplex X;
    for (const auto& s : closure) {
        int k = s.dim();
        if (k >= static_cast<int>(X.faces_by_dim_.size())) X.faces_by_dim_.resize(k + 1);
        X.faces_by_dim_[k].push_back(s);
    }
    X.index_faces();
    return X;
}

void SimplicialComplex::index_faces() {
    std::set<vertex_t> vs;
    for (auto& level : faces_by_dim_) {
        std::sort(level.begin(), level.end());
        for (const auto& s : level) vs.insert(s.vertices.begin(), s.vertices.end());
    }
    vertices_.assign(vs.begin(), vs.end());
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
    if (k < 0 || k >= static_cast<int>(faces_by_dim_.size())) return kNoFaces;
    return faces_by_dim_[k];
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t n = 0;
    for (const auto& level : faces_by_dim_) n += level.size();
    return n;
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
    std::vector<Simplex> out;
    out.reserve(face_count());
    for (const auto& level : faces_by_dim_)
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= dim(); ++k) {
        for (const auto& s : faces(k)) {
            bool maximal = true;
            for (int m = k + 1; m <= dim() && maximal; ++m)
                for (const auto& t : faces(m))
                    if (s.subset_of(t)) { maximal = false; break; }
            if (maximal) out.push_back(s);
        }
    }
    return out;
}

bool SimplicialComplex::has_face(const Simplex& s) const { return face_index(s) >= 0; }

bool SimplicialComplex::has_vertex(vertex_t v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int SimplicialComplex::face_index(const Simplex& s) const {
    const auto& level = faces(s.dim());
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || !(*it == s)) return -1;
    return static_cast<int>(it - level.begin());
}

SimplicialComplex full_simplex(int n) {
    if (n < 0) throw input_error("full_simplex: n must be >= 0");
    std::vector<vertex_t> verts(n + 1);
    for (int i = 0; i <= n; ++i) verts[i] = i;
    return SimplicialComplex::from_facets({verts});
}

SimplicialComplex boundary_simplex(int n) {
    if (n < 0) throw input_error("boundary_simplex: n must be >= 0");
    if (n == 0) return SimplicialComplex{};
    std::vector<std::vector<vertex_t>> facets;
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<vertex_t> f;
        for (int i = 0; i <= n; ++i)
            if (i != omit) f.push_back(i);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex delete_vertices(const SimplicialComplex& X, const std::vector<vertex_t>& verts) {
    std::vector<vertex_t> del(verts);
    std::sort(del.begin(), del.end());
    SimplicialComplex out;
    for (int k = 0; k <= X.dim(); ++k) {
        std::vector<Simplex> kept;
        for (const auto& s : X.faces(k)) {
            bool hit = false;
            for (vertex_t v : s.vertices)
                if (std::binary_search(del.begin(), del.end(), v)) { hit = true; break; }
            if (!hit) kept.push_back(s);
        }
        if (!kept.empty()) {
            out.faces_by_dim_.resize(k + 1);
            out.faces_by_dim_[k] = std::move(kept);
        }
    }
    // trim trailing empty levels (possible when only low faces survive)
    while (!out.faces_by_dim_.empty() && out.faces_by_dim_.back().empty())
        out.faces_by_dim_.pop_back();
    out.index_faces();
    return out;
}

SimplicialComplex delete_face(const SimplicialComplex& X, const Simplex& sigma) {
    return delete_vertices(X, sigma.vertices);
}

SimplicialComplex delete_tuple(const SimplicialComplex& X, const FaceTuple& t) {
    t.validate();
    return delete_vertices(X, t.vertex_union());
}

SimplicialComplex link(const SimplicialComplex& X, vertex_t v) {
    if (!X.has_vertex(v)) throw input_error("link: not a vertex of the complex");
    std::vector<std::vector<vertex_t>> facets;
    for (int k = 1; k <= X.dim(); ++k)
        for (const auto& s : X.faces(k))
            if (s.contains(v)) {
                std::vector<vertex_t> rest;
                for (vertex_t u : s.vertices)
                    if (u != v) rest.push_back(u);
                facets.push_back(std::move(rest));
            }
    if (facets.empty()) return SimplicialComplex{};
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex star(const SimplicialComplex& X, vertex_t v) {
    if (!X.has_vertex(v)) throw input_error("star: not a vertex of the complex");
    std::vector<std::vector<vertex_t>> facets;
    for (int k = 0; k <= X.dim(); ++k)
        for (const auto& s : X.faces(k))
            if (s.contains(v)) facets.push_back(s.vertices);
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cone(const SimplicialComplex& X, vertex_t apex) {
    if (apex < 0) throw input_error("cone: apex must be non-negative");
    if (X.has_vertex(apex)) throw input_error("cone: apex already a vertex of the complex");
    SimplicialComplex out;
    out.faces_by_dim_.resize(static_cast<std::size_t>(X.dim() + 2 > 1 ? X.dim() + 2 : 1));
    out.faces_by_dim_[0].push_back(Simplex({apex}));
    for (int k = 0; k <= X.dim(); ++k)
        for (const auto& s : X.faces(k)) {
            out.faces_by_dim_[k].push_back(s);
            Simplex joined;
            joined.vertices = s.vertices;
            joined.vertices.insert(
                std::lower_bound(joined.vertices.begin(), joined.vertices.end(), apex), apex);
            out.faces_by_dim_[k + 1].push_back(joined);
        }
    out.index_faces();
    return out;
}

namespace {

bool tuple_search(const SimplicialComplex& X, const std::vector<Simplex>& all, int arity,
                  std::optional<int> dim_budget, bool ordered, std::vector<int>& chosen,
                  int used_dim, const std::function<bool(const FaceTuple&)>& visit) {
    if (static_cast<int>(chosen.size()) == arity) {
        FaceTuple t;
        t.faces.reserve(chosen.size());
        for (int idx : chosen) t.faces.push_back(all[idx]);
        return visit(t);
    }
    int start = 0;
    if (!ordered && !chosen.empty()) start = chosen.back() + 1;
    for (int i = start; i < static_cast<int>(all.size()); ++i) {
        const Simplex& cand = all[i];
        if (dim_budget && used_dim + cand.dim() > *dim_budget) continue;
        bool ok = true;
        for (int idx : chosen)
            if (!all[idx].disjoint_from(cand)) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(i);
        bool cont = tuple_search(X, all, arity, dim_budget, ordered, chosen,
                                 used_dim + cand.dim(), visit);
        chosen.pop_back();
        if (!cont) return false;
    }
    return true;
}

}  // namespace

bool for_each_disjoint_tuple(const SimplicialComplex& X, int arity,
                             std::optional<int> dim_budget, bool ordered,
                             const std::function<bool(const FaceTuple&)>& visit) {
    if (arity < 0) throw input_error("disjoint_tuples: arity must be >= 0");
    if (arity == 0) return visit(FaceTuple{});
    std::vector<Simplex> all = X.all_faces();
    std::vector<int> chosen;
    return tuple_search(X, all, arity, dim_budget, ordered, chosen, 0, visit);
}

std::vector<FaceTuple> disjoint_tuples(const SimplicialComplex& X, int arity,
                                       std::optional<int> dim_budget, bool ordered) {
    std::vector<FaceTuple> out;
    for_each_disjoint_tuple(X, arity, dim_budget, ordered, [&](const FaceTuple& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

}  // namespace tvt
