#include "cobordkit/hexprism.hpp"

#include "cobordkit/chern.hpp"
#include "cobordkit/errors.hpp"
#include "cobordkit/quasitoric.hpp"

#include "jsonutil.hpp"

#include <algorithm>

namespace cobordkit {

HexPrismData build_hexprism(int n, const Int& a, const Int& b) {
    if (n < 2)
        throw DomainError("build_hexprism: n must be >= 2 (the marking F2,F4,F6 covers "
                          "no vertex set otherwise), got " + std::to_string(n));
    SimplePolytope q =
        SimplePolytope::product(SimplePolytope::polygon(6), SimplePolytope::simplex(n - 1));

    const std::size_t rank = static_cast<std::size_t>(n);
    VectorAssignment lambda(n);

    std::vector<Int> f1(rank, Int(0));
    f1[0] = 1;
    lambda.set("F1", std::move(f1));

    std::vector<Int> f3(rank, Int(0));
    f3[0] = -1;
    f3[1] = -a;
    lambda.set("F3", std::move(f3));

    std::vector<Int> f5(rank, Int(0));
    f5[0] = -1;
    f5[1] = -b;
    lambda.set("F5", std::move(f5));

    for (int j = 1; j <= n - 1; ++j) {
        std::vector<Int> col(rank, Int(0));
        col[static_cast<std::size_t>(j)] = 1;
        lambda.set("F" + std::to_string(6 + j), std::move(col));
    }
    std::vector<Int> last(rank, Int(-1));
    last[0] = 0;
    lambda.set("F" + std::to_string(n + 6), std::move(last));

    return HexPrismData{n, a, b, std::move(q), {"F2", "F4", "F6"}, std::move(lambda)};
}

njson HexValidation::to_json() const {
    njson doc;
    doc["exceptional"] = exceptional.to_json();
    doc["isotropy"] = isotropy.to_json();
    doc["lemma"] = lemma.to_json();
    doc["pass"] = pass;
    return doc;
}

HexValidation validate(const HexPrismData& data) {
    HexValidation v{check_exceptional(data.polytope, data.marked),
                    validate_isotropy(data.polytope, data.marked, data.lambda,
                                      IsotropyMode::SarkarCondition),
                    check_lemma_equivalence(data.polytope, data.marked, data.lambda), false};
    v.pass = v.exceptional.valid && v.isotropy.pass && v.lemma.agree &&
             v.lemma.restrictions_characteristic;
    return v;
}

njson BoundaryComponent::to_json() const {
    njson doc;
    doc["facet"] = facet;
    doc["label"] = label.to_string();
    doc["b_parameter"] = json_int(b_parameter);
    doc["orientation"] = orientation;
    doc["direct_match"] = direct_match;
    doc["witness"] = witness.to_json();
    doc["sub_polytope"] = sub.to_json();
    doc["xi"] = xi.to_json();
    return doc;
}

njson BoundaryReport::to_json() const {
    njson doc;
    doc["pass"] = pass;
    njson comps = njson::array();
    for (const auto& c : components) comps.push_back(c.to_json());
    doc["components"] = std::move(comps);
    return doc;
}

namespace {

struct ExpectedBoundary {
    BoundaryLabel label;
    Int b_parameter;
    int orientation;
    StructureKind kind;
    Int model_a;
};

ExpectedBoundary expected_for(const std::string& facet, const Int& a, const Int& b) {
    if (facet == "F2")
        return {BoundaryLabel{BoundaryLabel::Kind::Standard, a}, Int(0), 1,
                StructureKind::Standard, a};
    if (facet == "F4")
        return {BoundaryLabel{BoundaryLabel::Kind::Twisted, b - a}, Int(-a), 1,
                StructureKind::Twisted, b - a};
    if (facet == "F6")
        return {BoundaryLabel{BoundaryLabel::Kind::Standard, b}, Int(0), -1,
                StructureKind::Standard, b};
    throw DomainError("expected_for: unexpected marked facet '" + facet + "'");
}

} // namespace

BoundaryReport boundary_components(const HexPrismData& data) {
    BoundaryReport report;
    report.pass = true;

    for (const std::string& q : data.marked) {
        Restriction r = restriction(data.polytope, data.marked, data.lambda, q);
        const ExpectedBoundary expect = expected_for(q, data.a, data.b);
        const VectorAssignment model =
            model_characteristic(data.n, expect.model_a, expect.b_parameter, expect.kind);

        // Catalog correspondence: the two hexagon-edge facets (parent index < 6,
        // increasing) become F1, F2; the fiber facets follow in order.
        std::vector<std::string> base_ids, fiber_ids;
        for (const auto& [sub_id, parent_id] : r.face.correspondence) {
            (void)sub_id;
            if (data.polytope.facet_index(parent_id) < 6)
                base_ids.push_back(parent_id);
            else
                fiber_ids.push_back(parent_id);
        }
        if (base_ids.size() != 2 || fiber_ids.size() != static_cast<std::size_t>(data.n))
            throw InternalError("boundary_components: unexpected facet incidence at " + q);

        VectorAssignment relabelled(data.lambda.rank());
        relabelled.set("F1", r.xi.at(base_ids[0]));
        relabelled.set("F2", r.xi.at(base_ids[1]));
        std::vector<std::string> fiber_catalog_ids;
        for (std::size_t j = 0; j < fiber_ids.size(); ++j) {
            const std::string catalog_id = "F" + std::to_string(3 + j);
            relabelled.set(catalog_id, r.xi.at(fiber_ids[j]));
            fiber_catalog_ids.push_back(catalog_id);
        }

        bool direct = true;
        for (const auto& [id, vec] : model.entries())
            if (*relabelled.find(id) != vec) {
                direct = false;
                break;
            }

        std::optional<GlWitness> witness =
            gl_equivalent(relabelled, model, {fiber_catalog_ids}, false);
        if (!witness)
            throw InternalError("boundary_components: restriction at " + q +
                                " does not match its catalog matrix");

        report.components.push_back(BoundaryComponent{q, std::move(r.face.sub), std::move(r.xi),
                                                      expect.label, expect.b_parameter,
                                                      expect.orientation, direct,
                                                      std::move(*witness)});
    }
    return report;
}

njson certificate(int n, const Int& a, const Int& b) {
    const HexPrismData data = build_hexprism(n, a, b);
    const HexValidation validation = validate(data);

    njson doc;
    doc["params"] = njson{{"n", n}, {"a", json_int(a)}, {"b", json_int(b)}};
    doc["isotropy_valid"] = validation.pass;
    doc["validation"] = validation.to_json();

    bool pass = validation.pass;
    njson witness = nullptr;
    if (!validation.pass) {
        witness = validation.to_json();
        doc["boundaries"] = njson::array();
    } else {
        try {
            const BoundaryReport boundary = boundary_components(data);
            doc["boundaries"] = boundary.to_json()["components"];
            pass = pass && boundary.pass;
        } catch (const InternalError& e) {
            pass = false;
            witness = njson{{"boundary_error", e.what()}};
            doc["boundaries"] = njson::array();
        }
    }

    const IdentityReport triple = verify_triple(n, a, b);
    const GluingReport gluing = verify_gluing_bordism(n, a, b);

    njson tables;
    tables["standard_a"] = all_chern_numbers(n, a, StructureKind::Standard).to_json();
    tables["standard_b"] = all_chern_numbers(n, b, StructureKind::Standard).to_json();
    tables["twisted_b_minus_a"] = all_chern_numbers(n, b - a, StructureKind::Twisted).to_json();
    tables["signed_sums"] = triple.table;
    tables["triple_identity_pass"] = triple.pass;
    tables["gluing"] = gluing.to_json();
    doc["chern_tables"] = std::move(tables);

    if (pass && !triple.pass) {
        pass = false;
        witness = triple.to_json();
    }
    if (pass && !gluing.pass) {
        pass = false;
        witness = gluing.to_json();
    }

    doc["verdict"] = pass ? "pass" : "fail";
    doc["witness"] = std::move(witness);
    return doc;
}

} // namespace cobordkit
