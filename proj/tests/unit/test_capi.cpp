// Exercises the shared-library surface exactly as an external C consumer
// would: through cobordkit.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cobordkit.h"

#include "json.hpp"

#include <cstring>
#include <string>

using njson = nlohmann::ordered_json;

namespace {

njson doc_json(const cobord_doc* doc) { return njson::parse(cobord_doc_json(doc)); }

} // namespace

TEST_CASE("version and status strings") {
    CHECK(std::string(cobord_version()) == "0.1.0");
    CHECK(std::string(cobord_status_name(COBORD_OK)) == "ok");
    CHECK(std::string(cobord_status_name(COBORD_ERR_DOMAIN)) == "domain error");
}

TEST_CASE("chern numbers as decimal strings") {
    const int64_t parts[] = {2};
    char* value = nullptr;
    REQUIRE(cobord_chern_number(2, 7, COBORD_STRUCTURE_STANDARD, parts, 1, &value) ==
            COBORD_OK);
    CHECK(std::string(value) == "4");
    cobord_free_string(value);

    const int64_t ones[] = {1, 1};
    REQUIRE(cobord_chern_number_closed(2, ones, 2, &value) == COBORD_OK);
    CHECK(std::string(value) == "8");
    cobord_free_string(value);

    const int64_t twisted[] = {3};
    REQUIRE(cobord_chern_number(3, -2, COBORD_STRUCTURE_TWISTED, twisted, 1, &value) ==
            COBORD_OK);
    CHECK(std::string(value) == "0");
    cobord_free_string(value);
}

TEST_CASE("domain and argument errors set codes and messages") {
    const int64_t parts[] = {2};
    char* value = nullptr;
    CHECK(cobord_chern_number(0, 1, COBORD_STRUCTURE_STANDARD, parts, 1, &value) ==
          COBORD_ERR_DOMAIN);
    CHECK(std::strlen(cobord_last_error()) > 0);

    CHECK(cobord_chern_number(2, 1, COBORD_STRUCTURE_STANDARD, parts, 1, nullptr) ==
          COBORD_ERR_NULL_ARG);

    const int64_t bad[] = {3}; // not a partition of 2
    CHECK(cobord_chern_number(2, 1, COBORD_STRUCTURE_STANDARD, bad, 1, &value) ==
          COBORD_ERR_DOMAIN);

    CHECK(cobord_chern_number(2, 1, 99, parts, 1, &value) == COBORD_ERR_DOMAIN);
}

TEST_CASE("chern table doc") {
    cobord_doc* doc = nullptr;
    REQUIRE(cobord_chern_table(3, -2, COBORD_STRUCTURE_STANDARD, &doc) == COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 1);
    const njson j = doc_json(doc);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0]["ring"] == 6);
    CHECK(j["rows"][0]["closed"] == 6);
    cobord_doc_free(doc);
}

TEST_CASE("verification entry points") {
    cobord_doc* doc = nullptr;
    REQUIRE(cobord_verify_independence(4, -3, 3, &doc) == COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 1);
    cobord_doc_free(doc);

    REQUIRE(cobord_verify_twisted_null(3, -4, 4, &doc) == COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 1);
    cobord_doc_free(doc);

    REQUIRE(cobord_verify_triple(3, 2, -1, &doc) == COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 1);
    cobord_doc_free(doc);

    REQUIRE(cobord_verify_gluing(2, 1, 0, &doc) == COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 1);
    const njson j = doc_json(doc);
    CHECK(j["clutchings"][0]["label"] == "Standard(1)");
    CHECK(j["clutchings"][1]["label"] == "Twisted(-1)");
    CHECK(j["clutchings"][2]["label"] == "ConjStandard(0)");
    cobord_doc_free(doc);

    CHECK(cobord_verify_independence(4, 3, -3, &doc) == COBORD_ERR_DOMAIN); // lo > hi
}

TEST_CASE("polytope handles and json") {
    cobord_polytope* hexagon = nullptr;
    REQUIRE(cobord_polytope_polygon(6, &hexagon) == COBORD_OK);
    cobord_polytope* segment = nullptr;
    REQUIRE(cobord_polytope_simplex(1, &segment) == COBORD_OK);
    cobord_polytope* prism = nullptr;
    REQUIRE(cobord_polytope_product(hexagon, segment, &prism) == COBORD_OK);
    CHECK(cobord_polytope_dim(prism) == 3);
    CHECK(cobord_polytope_facet_count(prism) == 8);
    CHECK(cobord_polytope_vertex_count(prism) == 12);

    char* json = nullptr;
    REQUIRE(cobord_polytope_to_json(prism, &json) == COBORD_OK);
    cobord_polytope* reparsed = nullptr;
    REQUIRE(cobord_polytope_from_json(json, &reparsed) == COBORD_OK);
    CHECK(cobord_polytope_vertex_count(reparsed) == 12);
    cobord_free_string(json);

    cobord_polytope* broken = nullptr;
    CHECK(cobord_polytope_from_json("{not json", &broken) == COBORD_ERR_PARSE);
    // structurally valid JSON that violates simplicity is a domain error
    CHECK(cobord_polytope_from_json(R"({"dim":2,"facets":["A"],"vertices":[["A"]]})",
                                    &broken) == COBORD_ERR_DOMAIN);
    CHECK(cobord_polytope_simplex(0, &broken) == COBORD_ERR_DOMAIN);

    cobord_polytope_free(hexagon);
    cobord_polytope_free(segment);
    cobord_polytope_free(prism);
    cobord_polytope_free(reparsed);
}

TEST_CASE("assignment checks through the C surface") {
    cobord_polytope* square = nullptr;
    {
        cobord_polytope* seg1 = nullptr;
        cobord_polytope* seg2 = nullptr;
        REQUIRE(cobord_polytope_simplex(1, &seg1) == COBORD_OK);
        REQUIRE(cobord_polytope_simplex(1, &seg2) == COBORD_OK);
        REQUIRE(cobord_polytope_product(seg1, seg2, &square) == COBORD_OK);
        cobord_polytope_free(seg1);
        cobord_polytope_free(seg2);
    }

    const char* good = R"({"rank":2,"vectors":{"F1":[1,0],"F2":[-1,-1],"F3":[0,1],"F4":[0,-1]}})";
    cobord_assignment* chi = nullptr;
    REQUIRE(cobord_assignment_from_json(good, &chi) == COBORD_OK);
    CHECK(cobord_assignment_rank(chi) == 2);

    cobord_doc* doc = nullptr;
    REQUIRE(cobord_check_characteristic(square, chi, &doc) == COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 1);
    cobord_doc_free(doc);

    const char* bad = R"({"rank":2,"vectors":{"F1":[1,0],"F2":[-1,-1],"F3":[0,2],"F4":[0,-1]}})";
    cobord_assignment* chi_bad = nullptr;
    REQUIRE(cobord_assignment_from_json(bad, &chi_bad) == COBORD_OK);
    REQUIRE(cobord_check_characteristic(square, chi_bad, &doc) == COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 0);
    CHECK(doc_json(doc)["witness_det"] == 2);
    cobord_doc_free(doc);

    cobord_assignment* broken = nullptr;
    CHECK(cobord_assignment_from_json(R"({"rank":2})", &broken) == COBORD_ERR_PARSE);

    cobord_assignment_free(chi);
    cobord_assignment_free(chi_bad);
    cobord_polytope_free(square);
}

TEST_CASE("isotropy, lemma and gl-equivalence through the C surface") {
    // hexagon prism n = 2 with the construction columns, a = 1, b = 0
    cobord_polytope* prism = nullptr;
    {
        cobord_polytope* hexagon = nullptr;
        cobord_polytope* segment = nullptr;
        REQUIRE(cobord_polytope_polygon(6, &hexagon) == COBORD_OK);
        REQUIRE(cobord_polytope_simplex(1, &segment) == COBORD_OK);
        REQUIRE(cobord_polytope_product(hexagon, segment, &prism) == COBORD_OK);
        cobord_polytope_free(hexagon);
        cobord_polytope_free(segment);
    }
    const char* lambda_json =
        R"({"rank":2,"vectors":{"F1":[1,0],"F3":[-1,-1],"F5":[-1,0],"F7":[0,1],"F8":[0,-1]}})";
    cobord_assignment* lambda = nullptr;
    REQUIRE(cobord_assignment_from_json(lambda_json, &lambda) == COBORD_OK);

    const char* marked[] = {"F2", "F4", "F6"};
    cobord_doc* doc = nullptr;
    REQUIRE(cobord_validate_isotropy(prism, marked, 3, lambda, COBORD_ISOTROPY_SARKAR, &doc) ==
            COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 1);
    cobord_doc_free(doc);

    REQUIRE(cobord_check_lemma(prism, marked, 3, lambda, &doc) == COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 1);
    cobord_doc_free(doc);

    // gl equivalence of the two square models differing by b
    const char* a_json =
        R"({"rank":2,"vectors":{"F1":[1,0],"F2":[-1,-1],"F3":[0,1],"F4":[0,-1]}})";
    const char* b_json =
        R"({"rank":2,"vectors":{"F1":[1,1],"F2":[-1,0],"F3":[0,1],"F4":[0,-1]}})";
    cobord_assignment* a = nullptr;
    cobord_assignment* b = nullptr;
    REQUIRE(cobord_assignment_from_json(a_json, &a) == COBORD_OK);
    REQUIRE(cobord_assignment_from_json(b_json, &b) == COBORD_OK);
    REQUIRE(cobord_gl_equivalent(a, b, R"([["F3","F4"]])", 0, &doc) == COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 1);
    const njson w = doc_json(doc)["witness"];
    CHECK(w["U"] == njson::parse("[[1,0],[1,-1]]"));
    CHECK(w["sigma"]["F3"] == "F4");
    cobord_doc_free(doc);

    CHECK(cobord_gl_equivalent(a, b, "not json", 0, &doc) == COBORD_ERR_PARSE);

    cobord_assignment_free(a);
    cobord_assignment_free(b);
    cobord_assignment_free(lambda);
    cobord_polytope_free(prism);
}

TEST_CASE("hexprism certificate through the C surface") {
    cobord_doc* doc = nullptr;
    REQUIRE(cobord_hexprism_certificate(2, 1, 0, &doc) == COBORD_OK);
    CHECK(cobord_doc_pass(doc) == 1);
    const njson j = doc_json(doc);
    CHECK(j["verdict"] == "pass");
    CHECK(j["boundaries"].size() == 3);
    cobord_doc_free(doc);

    CHECK(cobord_hexprism_certificate(1, 0, 0, &doc) == COBORD_ERR_DOMAIN);
    CHECK(std::string(cobord_last_error()).find("n must be >= 2") != std::string::npos);
}
