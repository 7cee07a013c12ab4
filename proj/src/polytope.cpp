#include "cobordkit/polytope.hpp"

#include "cobordkit/errors.hpp"

#include <algorithm>
#include <set>

namespace cobordkit {

using njson = nlohmann::ordered_json;

SimplePolytope::SimplePolytope(int dim, std::vector<std::string> facet_ids,
                               std::vector<std::vector<int>> vertices)
    : dim_(dim), facet_ids_(std::move(facet_ids)), vertices_(std::move(vertices)) {
    if (dim_ < 0) throw DomainError("polytope: negative dimension");
    std::set<std::string> seen;
    for (const auto& id : facet_ids_) {
        if (id.empty()) throw DomainError("polytope: empty facet id");
        if (!seen.insert(id).second) throw DomainError("polytope: duplicate facet id '" + id + "'");
    }
    if (vertices_.empty()) throw DomainError("polytope: no vertices");

    const int m = static_cast<int>(facet_ids_.size());
    std::vector<bool> used(facet_ids_.size(), false);
    for (auto& v : vertices_) {
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw DomainError("polytope: vertex lists a facet twice");
        if (static_cast<int>(v.size()) != dim_)
            throw DomainError("polytope: vertex on " + std::to_string(v.size()) +
                              " facets, expected " + std::to_string(dim_) + " (not simple)");
        for (int f : v) {
            if (f < 0 || f >= m) throw DomainError("polytope: vertex references unknown facet");
            used[static_cast<std::size_t>(f)] = true;
        }
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw DomainError("polytope: duplicate vertex");
    for (std::size_t f = 0; f < used.size(); ++f)
        if (!used[f])
            throw DomainError("polytope: facet '" + facet_ids_[f] + "' lies on no vertex");
}

namespace {

std::vector<std::string> fresh_ids(std::size_t m) {
    std::vector<std::string> ids;
    ids.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) ids.push_back("F" + std::to_string(i));
    return ids;
}

} // namespace

SimplePolytope SimplePolytope::simplex(int m) {
    if (m < 1) throw DomainError("simplex: m must be >= 1, got " + std::to_string(m));
    std::vector<std::vector<int>> vertices;
    for (int skip = 0; skip <= m; ++skip) {
        std::vector<int> v;
        for (int f = 0; f <= m; ++f)
            if (f != skip) v.push_back(f);
        vertices.push_back(std::move(v));
    }
    return SimplePolytope(m, fresh_ids(static_cast<std::size_t>(m) + 1), std::move(vertices));
}

SimplePolytope SimplePolytope::polygon(int k) {
    if (k < 3) throw DomainError("polygon: k must be >= 3, got " + std::to_string(k));
    std::vector<std::vector<int>> vertices;
    for (int i = 0; i < k; ++i) vertices.push_back({i, (i + 1) % k});
    return SimplePolytope(2, fresh_ids(static_cast<std::size_t>(k)), std::move(vertices));
}

SimplePolytope SimplePolytope::product(const SimplePolytope& p, const SimplePolytope& r) {
    const int shift = static_cast<int>(p.facet_count());
    std::vector<std::vector<int>> vertices;
    vertices.reserve(p.vertex_count() * r.vertex_count());
    for (const auto& vp : p.vertices_) {
        for (const auto& vr : r.vertices_) {
            std::vector<int> v = vp;
            for (int f : vr) v.push_back(f + shift);
            vertices.push_back(std::move(v));
        }
    }
    return SimplePolytope(p.dim_ + r.dim_, fresh_ids(p.facet_count() + r.facet_count()),
                          std::move(vertices));
}

int SimplePolytope::facet_index(const std::string& id) const {
    for (std::size_t i = 0; i < facet_ids_.size(); ++i)
        if (facet_ids_[i] == id) return static_cast<int>(i);
    throw DomainError("polytope: unknown facet id '" + id + "'");
}

const std::string& SimplePolytope::facet_id(int index) const {
    if (index < 0 || index >= static_cast<int>(facet_ids_.size()))
        throw DomainError("polytope: facet index out of range");
    return facet_ids_[static_cast<std::size_t>(index)];
}

std::vector<std::string> SimplePolytope::vertex_ids(std::size_t v) const {
    if (v >= vertices_.size()) throw DomainError("polytope: vertex index out of range");
    std::vector<std::string> ids;
    ids.reserve(vertices_[v].size());
    for (int f : vertices_[v]) ids.push_back(facet_id(f));
    return ids;
}

bool SimplePolytope::faces_intersect(const std::vector<int>& facet_indices) const {
    for (const auto& v : vertices_)
        if (std::includes(v.begin(), v.end(), facet_indices.begin(), facet_indices.end()))
            return true;
    return false;
}

SimplePolytope SimplePolytope::from_json(const njson& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("facets") ||
        !doc.contains("vertices"))
        throw ParseError("polytope json: expected object with dim, facets, vertices");
    if (!doc["dim"].is_number_integer()) throw ParseError("polytope json: dim must be an integer");
    if (!doc["facets"].is_array() || !doc["vertices"].is_array())
        throw ParseError("polytope json: facets and vertices must be arrays");

    std::vector<std::string> ids;
    for (const auto& f : doc["facets"]) {
        if (!f.is_string()) throw ParseError("polytope json: facet ids must be strings");
        ids.push_back(f.get<std::string>());
    }
    // index map before constructing, so vertices can name facets by id
    std::vector<std::vector<int>> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_array()) throw ParseError("polytope json: each vertex must be an array of ids");
        std::vector<int> idx;
        for (const auto& f : v) {
            if (!f.is_string()) throw ParseError("polytope json: vertex entries must be strings");
            const std::string id = f.get<std::string>();
            auto it = std::find(ids.begin(), ids.end(), id);
            if (it == ids.end()) throw ParseError("polytope json: vertex names unknown facet '" + id + "'");
            idx.push_back(static_cast<int>(it - ids.begin()));
        }
        vertices.push_back(std::move(idx));
    }
    return SimplePolytope(doc["dim"].get<int>(), std::move(ids), std::move(vertices));
}

njson SimplePolytope::to_json() const {
    njson doc;
    doc["dim"] = dim_;
    doc["facets"] = facet_ids_;
    njson verts = njson::array();
    for (std::size_t v = 0; v < vertices_.size(); ++v) verts.push_back(vertex_ids(v));
    doc["vertices"] = std::move(verts);
    return doc;
}

njson ExceptionalReport::to_json() const {
    njson doc;
    doc["valid"] = valid;
    doc["violation"] = violation;
    doc["witness_vertex"] = witness ? njson(*witness) : njson(nullptr);
    return doc;
}

ExceptionalReport check_exceptional(const SimplePolytope& p,
                                    const std::vector<std::string>& marked) {
    std::vector<bool> is_marked(p.facet_count(), false);
    for (const auto& id : marked)
        is_marked[static_cast<std::size_t>(p.facet_index(id))] = true;

    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        int hits = 0;
        for (int f : p.vertices()[v])
            if (is_marked[static_cast<std::size_t>(f)]) ++hits;
        if (hits >= 2)
            return ExceptionalReport{false, "disjointness", p.vertex_ids(v)};
        if (hits == 0)
            return ExceptionalReport{false, "cover", p.vertex_ids(v)};
    }
    return ExceptionalReport{true, "", std::nullopt};
}

FacetSub facet_subpolytope(const SimplePolytope& p, const std::string& facet) {
    const int f = p.facet_index(facet);
    if (p.dim() < 1) throw DomainError("facet_subpolytope: polytope has no proper facets");

    // Facets of the sub-polytope: facets meeting f, in parent order.
    std::vector<int> adjacent;
    for (const auto& v : p.vertices()) {
        if (!std::binary_search(v.begin(), v.end(), f)) continue;
        for (int g : v)
            if (g != f && std::find(adjacent.begin(), adjacent.end(), g) == adjacent.end())
                adjacent.push_back(g);
    }
    std::sort(adjacent.begin(), adjacent.end());

    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> correspondence;
    std::vector<int> reindex(p.facet_count(), -1);
    for (std::size_t i = 0; i < adjacent.size(); ++i) {
        const std::string& id = p.facet_id(adjacent[i]);
        ids.push_back(id);
        correspondence.emplace_back(id, id);
        reindex[static_cast<std::size_t>(adjacent[i])] = static_cast<int>(i);
    }

    std::vector<std::vector<int>> vertices;
    for (const auto& v : p.vertices()) {
        if (!std::binary_search(v.begin(), v.end(), f)) continue;
        std::vector<int> w;
        for (int g : v)
            if (g != f) w.push_back(reindex[static_cast<std::size_t>(g)]);
        vertices.push_back(std::move(w));
    }
    return FacetSub{SimplePolytope(p.dim() - 1, std::move(ids), std::move(vertices)),
                    facet, std::move(correspondence)};
}

} // namespace cobordkit
