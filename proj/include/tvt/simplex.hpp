#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "tvt/util.hpp"

namespace tvt {

using vertex_t = int;

// A face: non-empty, strictly increasing vertex list. dim() = size - 1.
struct Simplex {
    std::vector<vertex_t> vertices;

    Simplex() = default;
    explicit Simplex(std::vector<vertex_t> verts) : vertices(std::move(verts)) {
        std::sort(vertices.begin(), vertices.end());
        validate();
    }

    void validate() const {
        if (vertices.empty()) throw input_error("simplex must have at least one vertex");
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] < 0) throw input_error("negative vertex identifier");
            if (i > 0 && vertices[i - 1] == vertices[i])
                throw input_error("duplicate vertex in simplex");
        }
    }

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    bool contains(vertex_t v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }

    bool disjoint_from(const Simplex& other) const {
        auto a = vertices.begin(), b = other.vertices.begin();
        while (a != vertices.end() && b != other.vertices.end()) {
            if (*a == *b) return false;
            if (*a < *b) ++a; else ++b;
        }
        return true;
    }

    bool subset_of(const Simplex& other) const {
        return std::includes(other.vertices.begin(), other.vertices.end(),
                             vertices.begin(), vertices.end());
    }

    // Face with vertex at position i removed; requires dim() >= 1.
    Simplex facet_omitting(int i) const {
        Simplex f;
        f.vertices.reserve(vertices.size() - 1);
        for (int j = 0; j < static_cast<int>(vertices.size()); ++j)
            if (j != i) f.vertices.push_back(vertices[j]);
        return f;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vertices[i]);
        }
        return s + "}";
    }

    auto operator<=>(const Simplex&) const = default;
};

// Canonical face order used everywhere a deterministic order is needed:
// by dimension, then lexicographic on the sorted vertex list.
inline bool canonical_face_less(const Simplex& a, const Simplex& b) {
    if (a.vertices.size() != b.vertices.size())
        return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

// Ordered sequence of pairwise vertex-disjoint faces.
struct FaceTuple {
    std::vector<Simplex> faces;

    FaceTuple() = default;
    explicit FaceTuple(std::vector<Simplex> fs) : faces(std::move(fs)) { validate(); }

    void validate() const {
        for (std::size_t i = 0; i < faces.size(); ++i)
            for (std::size_t j = i + 1; j < faces.size(); ++j)
                if (!faces[i].disjoint_from(faces[j]))
                    throw input_error("faces in tuple are not pairwise disjoint: " +
                                      faces[i].to_string() + " meets " + faces[j].to_string());
    }

    std::size_t size() const { return faces.size(); }

    int total_dim() const {
        int d = 0;
        for (const auto& f : faces) d += f.dim();
        return d;
    }

    // Sorted union of all vertex sets; deletion depends only on this.
    std::vector<vertex_t> vertex_union() const {
        std::vector<vertex_t> u;
        for (const auto& f : faces) u.insert(u.end(), f.vertices.begin(), f.vertices.end());
        std::sort(u.begin(), u.end());
        return u;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (i) s += ",";
            s += faces[i].to_string();
        }
        return s + ")";
    }

    auto operator<=>(const FaceTuple&) const = default;
};

}  // namespace tvt
