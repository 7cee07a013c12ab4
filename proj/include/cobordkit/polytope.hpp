#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cobordkit {

// A combinatorial simple polytope: an ordered facet list plus the vertices,
// each vertex recorded as the set of facets through it. No coordinates are
// stored. A facet collection has nonempty intersection iff it is contained
// in some vertex set. Immutable after construction.
class SimplePolytope {
public:
    // Validates: vertex sets have exactly dim distinct facets, every facet
    // lies on at least one vertex, no duplicate vertices or facet ids.
    SimplePolytope(int dim, std::vector<std::string> facet_ids,
                   std::vector<std::vector<int>> vertices);

    // The m-simplex: m+1 facets, vertices = all m-subsets.
    static SimplePolytope simplex(int m); // m >= 1
    // The k-gon: facets are edges in cyclic order, vertices consecutive pairs.
    static SimplePolytope polygon(int k); // k >= 3
    // Cartesian product. Facets are relabelled "F1".."Fm", left factor first;
    // vertices are unions of one vertex set from each factor.
    static SimplePolytope product(const SimplePolytope& p, const SimplePolytope& r);

    int dim() const { return dim_; }
    const std::vector<std::string>& facet_ids() const { return facet_ids_; }
    std::size_t facet_count() const { return facet_ids_.size(); }
    // Vertices in canonical (lexicographic) order, as sorted facet indices.
    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }

    int facet_index(const std::string& id) const; // throws DomainError if unknown
    const std::string& facet_id(int index) const;
    std::vector<std::string> vertex_ids(std::size_t v) const;

    // Nonempty-intersection test for a facet collection (indices).
    bool faces_intersect(const std::vector<int>& facet_indices) const;

    bool operator==(const SimplePolytope&) const = default;

    static SimplePolytope from_json(const nlohmann::ordered_json& doc);
    nlohmann::ordered_json to_json() const;

private:
    int dim_;
    std::vector<std::string> facet_ids_;
    std::vector<std::vector<int>> vertices_;
};

// Exceptional-facet check: the marked facets must be pairwise disjoint and
// their vertices must cover all vertices of the polytope.
struct ExceptionalReport {
    bool valid = false;
    std::string violation;                            // "", "disjointness" or "cover"
    std::optional<std::vector<std::string>> witness;  // first failing vertex

    nlohmann::ordered_json to_json() const;
};

ExceptionalReport check_exceptional(const SimplePolytope& p,
                                    const std::vector<std::string>& marked);

// A facet as a simple polytope of one dimension less. Its facets keep the ids
// of the parent facets they come from: sub-facet g is the face (f intersect g).
struct FacetSub {
    SimplePolytope sub;
    std::string parent_facet;
    // sub facet id -> parent facet id (identical strings, recorded explicitly)
    std::vector<std::pair<std::string, std::string>> correspondence;
};

FacetSub facet_subpolytope(const SimplePolytope& p, const std::string& facet);

} // namespace cobordkit
