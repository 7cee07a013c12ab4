#include "cobordkit.h"

#include "cobordkit/chern.hpp"
#include "cobordkit/clutch.hpp"
#include "cobordkit/errors.hpp"
#include "cobordkit/hexprism.hpp"
#include "cobordkit/lattice.hpp"
#include "cobordkit/polytope.hpp"

#include "jsonutil.hpp"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

using namespace cobordkit;

struct cobord_polytope {
    SimplePolytope value;
};

struct cobord_assignment {
    VectorAssignment value;
};

struct cobord_doc {
    bool pass = false;
    std::string json;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cobord_status fail(cobord_status status, const char* what) {
    g_last_error = what ? what : "";
    return status;
}

template <typename Fn>
cobord_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return COBORD_OK;
    } catch (const ParseError& e) {
        return fail(COBORD_ERR_PARSE, e.what());
    } catch (const DomainError& e) {
        return fail(COBORD_ERR_DOMAIN, e.what());
    } catch (const MismatchError& e) {
        return fail(COBORD_ERR_DOMAIN, e.what());
    } catch (const InternalError& e) {
        return fail(COBORD_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(COBORD_ERR_INTERNAL, e.what());
    }
}

int checked_dim(int64_t n) {
    if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max())
        throw DomainError("dimension parameter out of range");
    return static_cast<int>(n);
}

Partition partition_from(const int64_t* parts, size_t nparts) {
    if (!parts && nparts > 0) throw DomainError("null partition array");
    std::vector<Int> v;
    v.reserve(nparts);
    for (size_t i = 0; i < nparts; ++i) v.emplace_back(static_cast<long>(parts[i]));
    return Partition(std::move(v));
}

cobord_doc* make_doc(bool pass, const njson& doc) {
    return new cobord_doc{pass, doc.dump(2)};
}

std::vector<Int> int_range(int64_t lo, int64_t hi) {
    if (lo > hi) throw DomainError("empty range: lo > hi");
    std::vector<Int> values;
    for (int64_t v = lo; v <= hi; ++v) values.emplace_back(static_cast<long>(v));
    return values;
}

StructureKind structure_from(int structure) {
    if (structure == COBORD_STRUCTURE_STANDARD) return StructureKind::Standard;
    if (structure == COBORD_STRUCTURE_TWISTED) return StructureKind::Twisted;
    throw DomainError("structure must be 0 (standard) or 1 (twisted)");
}

std::vector<std::string> id_list(const char* const* ids, size_t count) {
    if (!ids && count > 0) throw DomainError("null id array");
    std::vector<std::string> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        if (!ids[i]) throw DomainError("null id in array");
        out.emplace_back(ids[i]);
    }
    return out;
}

// Rows with ring-computed and closed-form values side by side; for the
// twisted structure the closed value is identically zero.
njson chern_table_json(int n, const Int& a, StructureKind kind, bool& pass) {
    pass = true;
    njson rows = njson::array();
    for (const Partition& I : partitions(n)) {
        const Int ring_value = chern_number(n, a, kind, I);
        const Int closed =
            kind == StructureKind::Standard ? chern_number_closed(n, I) : Int(0);
        if (ring_value != closed) pass = false;
        rows.push_back(njson{{"partition", partition_json(I)},
                             {"ring", json_int(ring_value)},
                             {"closed", json_int(closed)},
                             {"match", ring_value == closed}});
    }
    njson doc;
    doc["n"] = n;
    doc["a"] = json_int(a);
    doc["structure"] = to_string(kind);
    doc["pass"] = pass;
    doc["rows"] = std::move(rows);
    return doc;
}

} // namespace

extern "C" {

const char* cobord_version(void) { return "0.1.0"; }

const char* cobord_status_name(cobord_status status) {
    switch (status) {
    case COBORD_OK: return "ok";
    case COBORD_ERR_DOMAIN: return "domain error";
    case COBORD_ERR_PARSE: return "parse error";
    case COBORD_ERR_NULL_ARG: return "null argument";
    case COBORD_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* cobord_last_error(void) { return g_last_error.c_str(); }

void cobord_free_string(char* s) { std::free(s); }

cobord_status cobord_chern_number(int64_t n, int64_t a, int structure, const int64_t* parts,
                                  size_t nparts, char** out_decimal) {
    if (!out_decimal) return fail(COBORD_ERR_NULL_ARG, "out_decimal is null");
    return guarded([&] {
        const Int value = chern_number(checked_dim(n), Int(static_cast<long>(a)),
                                       structure_from(structure), partition_from(parts, nparts));
        *out_decimal = dup_string(to_decimal(value));
    });
}

cobord_status cobord_chern_number_closed(int64_t n, const int64_t* parts, size_t nparts,
                                         char** out_decimal) {
    if (!out_decimal) return fail(COBORD_ERR_NULL_ARG, "out_decimal is null");
    return guarded([&] {
        const Int value = chern_number_closed(checked_dim(n), partition_from(parts, nparts));
        *out_decimal = dup_string(to_decimal(value));
    });
}

cobord_status cobord_chern_table(int64_t n, int64_t a, int structure, cobord_doc** out) {
    if (!out) return fail(COBORD_ERR_NULL_ARG, "out is null");
    return guarded([&] {
        bool pass = false;
        const njson doc = chern_table_json(checked_dim(n), Int(static_cast<long>(a)),
                                           structure_from(structure), pass);
        *out = make_doc(pass, doc);
    });
}

cobord_status cobord_verify_independence(int64_t n, int64_t a_lo, int64_t a_hi,
                                         cobord_doc** out) {
    if (!out) return fail(COBORD_ERR_NULL_ARG, "out is null");
    return guarded([&] {
        const IdentityReport report =
            verify_a_independence(checked_dim(n), int_range(a_lo, a_hi));
        njson doc = report.to_json();
        doc["n"] = checked_dim(n);
        doc["a_range"] = njson::array({a_lo, a_hi});
        *out = make_doc(report.pass, doc);
    });
}

cobord_status cobord_verify_twisted_null(int64_t n, int64_t a_lo, int64_t a_hi,
                                         cobord_doc** out) {
    if (!out) return fail(COBORD_ERR_NULL_ARG, "out is null");
    return guarded([&] {
        bool pass = true;
        njson per_a = njson::array();
        for (const Int& a : int_range(a_lo, a_hi)) {
            const IdentityReport report = verify_twisted_null(checked_dim(n), a);
            pass = pass && report.pass;
            njson row = report.to_json();
            row["a"] = json_int(a);
            per_a.push_back(std::move(row));
        }
        njson doc;
        doc["mode"] = "twisted-null";
        doc["n"] = checked_dim(n);
        doc["a_range"] = njson::array({a_lo, a_hi});
        doc["pass"] = pass;
        doc["per_a"] = std::move(per_a);
        *out = make_doc(pass, doc);
    });
}

cobord_status cobord_verify_triple(int64_t n, int64_t a, int64_t b, cobord_doc** out) {
    if (!out) return fail(COBORD_ERR_NULL_ARG, "out is null");
    return guarded([&] {
        const IdentityReport report = verify_triple(
            checked_dim(n), Int(static_cast<long>(a)), Int(static_cast<long>(b)));
        njson doc = report.to_json();
        doc["n"] = checked_dim(n);
        doc["a"] = a;
        doc["b"] = b;
        *out = make_doc(report.pass, doc);
    });
}

cobord_status cobord_verify_gluing(int64_t n, int64_t a, int64_t b, cobord_doc** out) {
    if (!out) return fail(COBORD_ERR_NULL_ARG, "out is null");
    return guarded([&] {
        const GluingReport report = verify_gluing_bordism(
            checked_dim(n), Int(static_cast<long>(a)), Int(static_cast<long>(b)));
        *out = make_doc(report.pass, report.to_json());
    });
}

cobord_status cobord_polytope_simplex(int64_t m, cobord_polytope** out) {
    if (!out) return fail(COBORD_ERR_NULL_ARG, "out is null");
    return guarded([&] { *out = new cobord_polytope{SimplePolytope::simplex(checked_dim(m))}; });
}

cobord_status cobord_polytope_polygon(int64_t k, cobord_polytope** out) {
    if (!out) return fail(COBORD_ERR_NULL_ARG, "out is null");
    return guarded([&] { *out = new cobord_polytope{SimplePolytope::polygon(checked_dim(k))}; });
}

cobord_status cobord_polytope_product(const cobord_polytope* p, const cobord_polytope* r,
                                      cobord_polytope** out) {
    if (!p || !r || !out) return fail(COBORD_ERR_NULL_ARG, "polytope argument is null");
    return guarded(
        [&] { *out = new cobord_polytope{SimplePolytope::product(p->value, r->value)}; });
}

cobord_status cobord_polytope_from_json(const char* json, cobord_polytope** out) {
    if (!json || !out) return fail(COBORD_ERR_NULL_ARG, "argument is null");
    return guarded([&] {
        const njson doc = njson::parse(json, nullptr, false);
        if (doc.is_discarded()) throw ParseError("polytope json: not valid JSON");
        *out = new cobord_polytope{SimplePolytope::from_json(doc)};
    });
}

cobord_status cobord_polytope_to_json(const cobord_polytope* p, char** out_json) {
    if (!p || !out_json) return fail(COBORD_ERR_NULL_ARG, "argument is null");
    return guarded([&] { *out_json = dup_string(p->value.to_json().dump(2)); });
}

int64_t cobord_polytope_dim(const cobord_polytope* p) { return p ? p->value.dim() : -1; }

int64_t cobord_polytope_facet_count(const cobord_polytope* p) {
    return p ? static_cast<int64_t>(p->value.facet_count()) : -1;
}

int64_t cobord_polytope_vertex_count(const cobord_polytope* p) {
    return p ? static_cast<int64_t>(p->value.vertex_count()) : -1;
}

void cobord_polytope_free(cobord_polytope* p) { delete p; }

cobord_status cobord_assignment_from_json(const char* json, cobord_assignment** out) {
    if (!json || !out) return fail(COBORD_ERR_NULL_ARG, "argument is null");
    return guarded([&] {
        const njson doc = njson::parse(json, nullptr, false);
        if (doc.is_discarded()) throw ParseError("assignment json: not valid JSON");
        *out = new cobord_assignment{VectorAssignment::from_json(doc)};
    });
}

cobord_status cobord_assignment_to_json(const cobord_assignment* a, char** out_json) {
    if (!a || !out_json) return fail(COBORD_ERR_NULL_ARG, "argument is null");
    return guarded([&] { *out_json = dup_string(a->value.to_json().dump(2)); });
}

int64_t cobord_assignment_rank(const cobord_assignment* a) { return a ? a->value.rank() : -1; }

void cobord_assignment_free(cobord_assignment* a) { delete a; }

cobord_status cobord_check_characteristic(const cobord_polytope* p,
                                          const cobord_assignment* chi, cobord_doc** out) {
    if (!p || !chi || !out) return fail(COBORD_ERR_NULL_ARG, "argument is null");
    return guarded([&] {
        const CharacteristicReport report = is_characteristic(p->value, chi->value);
        *out = make_doc(report.pass, report.to_json());
    });
}

cobord_status cobord_validate_isotropy(const cobord_polytope* p, const char* const* marked,
                                       size_t nmarked, const cobord_assignment* lambda,
                                       int mode, cobord_doc** out) {
    if (!p || !lambda || !out) return fail(COBORD_ERR_NULL_ARG, "argument is null");
    return guarded([&] {
        if (mode != COBORD_ISOTROPY_INDEPENDENCE && mode != COBORD_ISOTROPY_SARKAR)
            throw DomainError("mode must be 0 (independence) or 1 (sarkar)");
        const IsotropyReport report = validate_isotropy(
            p->value, id_list(marked, nmarked), lambda->value,
            mode == COBORD_ISOTROPY_SARKAR ? IsotropyMode::SarkarCondition
                                           : IsotropyMode::IndependenceOnly);
        *out = make_doc(report.pass, report.to_json());
    });
}

cobord_status cobord_check_lemma(const cobord_polytope* p, const char* const* marked,
                                 size_t nmarked, const cobord_assignment* lambda,
                                 cobord_doc** out) {
    if (!p || !lambda || !out) return fail(COBORD_ERR_NULL_ARG, "argument is null");
    return guarded([&] {
        const LemmaReport report =
            check_lemma_equivalence(p->value, id_list(marked, nmarked), lambda->value);
        *out = make_doc(report.agree, report.to_json());
    });
}

cobord_status cobord_gl_equivalent(const cobord_assignment* a, const cobord_assignment* b,
                                   const char* blocks_json, int allow_sign, cobord_doc** out) {
    if (!a || !b || !blocks_json || !out) return fail(COBORD_ERR_NULL_ARG, "argument is null");
    return guarded([&] {
        const njson blocks_doc = njson::parse(blocks_json, nullptr, false);
        if (blocks_doc.is_discarded() || !blocks_doc.is_array())
            throw ParseError("blocks json: expected an array of arrays of facet ids");
        std::vector<std::vector<std::string>> blocks;
        for (const auto& block : blocks_doc) {
            if (!block.is_array()) throw ParseError("blocks json: each block must be an array");
            std::vector<std::string> ids;
            for (const auto& id : block) {
                if (!id.is_string()) throw ParseError("blocks json: ids must be strings");
                ids.push_back(id.get<std::string>());
            }
            blocks.push_back(std::move(ids));
        }
        const std::optional<GlWitness> witness =
            gl_equivalent(a->value, b->value, blocks, allow_sign != 0);
        njson doc;
        doc["found"] = witness.has_value();
        doc["witness"] = witness ? witness->to_json() : njson(nullptr);
        *out = make_doc(witness.has_value(), doc);
    });
}

cobord_status cobord_hexprism_certificate(int64_t n, int64_t a, int64_t b, cobord_doc** out) {
    if (!out) return fail(COBORD_ERR_NULL_ARG, "out is null");
    return guarded([&] {
        const njson doc = certificate(checked_dim(n), Int(static_cast<long>(a)),
                                      Int(static_cast<long>(b)));
        *out = make_doc(doc["verdict"] == "pass", doc);
    });
}

int cobord_doc_pass(const cobord_doc* doc) { return doc && doc->pass ? 1 : 0; }

const char* cobord_doc_json(const cobord_doc* doc) { return doc ? doc->json.c_str() : ""; }

void cobord_doc_free(cobord_doc* doc) { delete doc; }

} // extern "C"
