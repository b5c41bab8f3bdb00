#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tvt/simplex.hpp"

namespace tvt {

// Finite simplicial complex, stored as the full downward-closed face list
// grouped by dimension and sorted lexicographically within each dimension.
// The empty complex (no faces at all) is a legal value.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Downward closure of the given facets. Facets contained in other facets
    // are absorbed. Throws input_error on a duplicate vertex within a facet.
    static SimplicialComplex from_facets(const std::vector<std::vector<vertex_t>>& facets);

    bool empty() const { return faces_by_dim_.empty(); }
    int dim() const { return static_cast<int>(faces_by_dim_.size()) - 1; }

    const std::vector<vertex_t>& vertex_set() const { return vertices_; }

    // Faces of dimension k, sorted lexicographically. Empty span if out of range.
    const std::vector<Simplex>& faces(int k) const;

    std::size_t face_count() const;
    std::size_t face_count(int k) const { return faces(k).size(); }

    // All faces in canonical order (dimension, then lex).
    std::vector<Simplex> all_faces() const;

    // Inclusion-maximal faces, canonical order.
    std::vector<Simplex> facets() const;

    bool has_face(const Simplex& s) const;
    bool has_vertex(vertex_t v) const;

    // Index of s within faces(s.dim()), or -1.
    int face_index(const Simplex& s) const;

    bool operator==(const SimplicialComplex& other) const {
        return faces_by_dim_ == other.faces_by_dim_;
    }

private:
    friend SimplicialComplex delete_vertices(const SimplicialComplex&, const std::vector<vertex_t>&);
    friend SimplicialComplex cone(const SimplicialComplex&, vertex_t);

    void index_faces();

    std::vector<vertex_t> vertices_;                  // sorted
    std::vector<std::vector<Simplex>> faces_by_dim_;  // [k] -> sorted faces of dim k
};

// Full simplex on vertices {0,...,n}.
SimplicialComplex full_simplex(int n);

// Boundary of the n-simplex: all proper non-empty subsets of {0,...,n}.
// n = 0 gives the empty complex (boundary of a point).
SimplicialComplex boundary_simplex(int n);

// Subcomplex of faces disjoint from the given vertex set (X - sigma).
SimplicialComplex delete_vertices(const SimplicialComplex& X, const std::vector<vertex_t>& verts);
SimplicialComplex delete_face(const SimplicialComplex& X, const Simplex& sigma);

// Iterated deletion X - sigma_1 - ... - sigma_i; throws on a non-disjoint tuple.
SimplicialComplex delete_tuple(const SimplicialComplex& X, const FaceTuple& t);

// Link and closed star of a vertex; throw input_error if v is not a vertex.
SimplicialComplex link(const SimplicialComplex& X, vertex_t v);
SimplicialComplex star(const SimplicialComplex& X, vertex_t v);

// Cone: apex joined to every face, X itself kept. apex must be fresh.
SimplicialComplex cone(const SimplicialComplex& X, vertex_t apex);

// Enumerates tuples of pairwise disjoint non-empty faces in deterministic
// order (lexicographic on the canonical face order). ordered=false yields each
// unordered tuple once, with faces in increasing canonical order. A tuple with
// total dimension above dim_budget is skipped. The visitor returns false to
// stop. Returns false if the visit was stopped early.
bool for_each_disjoint_tuple(const SimplicialComplex& X, int arity,
                             std::optional<int> dim_budget, bool ordered,
                             const std::function<bool(const FaceTuple&)>& visit);

std::vector<FaceTuple> disjoint_tuples(const SimplicialComplex& X, int arity,
                                       std::optional<int> dim_budget = std::nullopt,
                                       bool ordered = true);

}  // namespace tvt
