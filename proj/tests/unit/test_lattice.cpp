#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cobordkit/errors.hpp"
#include "cobordkit/hexprism.hpp"
#include "cobordkit/lattice.hpp"
#include "cobordkit/quasitoric.hpp"

#include "oracles.hpp"

#include <algorithm>

using namespace cobordkit;

namespace {

IntMat random_matrix(std::size_t rows, std::size_t cols, int bound) {
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = oracles::rand_int(-bound, bound);
    return m;
}

// Random unimodular matrix from elementary operations on the identity.
IntMat random_unimodular(std::size_t n) {
    IntMat m = IntMat::identity(n);
    for (int step = 0; step < 12; ++step) {
        const auto i = static_cast<std::size_t>(oracles::rand_int(0, static_cast<int>(n) - 1));
        const auto j = static_cast<std::size_t>(oracles::rand_int(0, static_cast<int>(n) - 1));
        if (i == j) continue;
        m.add_row_multiple(i, j, Int(oracles::rand_int(-2, 2)));
    }
    return m;
}

} // namespace

TEST_CASE("smith normal form on the named examples") {
    IntMat diag(2, 2);
    diag.at(0, 0) = 2;
    diag.at(1, 1) = 3;
    const SmithResult s1 = smith_normal_form(diag);
    CHECK(s1.D.at(0, 0) == 1);
    CHECK(s1.D.at(1, 1) == 6);

    const SmithResult s2 = smith_normal_form(IntMat::identity(3));
    CHECK(s2.D == IntMat::identity(3));

    IntMat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = -1;
    const SmithResult s3 = smith_normal_form(m);
    CHECK(s3.D.at(0, 0) == 1);
    CHECK(s3.D.at(1, 1) == 2);
}

TEST_CASE("smith postconditions re-verified externally on random matrices") {
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<std::size_t>(oracles::rand_int(1, 5));
        const auto cols = static_cast<std::size_t>(oracles::rand_int(1, 5));
        const IntMat m = random_matrix(rows, cols, 20);
        const SmithResult s = smith_normal_form(m); // self-check runs inside
        CHECK(s.U * m * s.V == s.D);
        Int du = oracles::naive_det(s.U);
        Int dv = oracles::naive_det(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (std::size_t t = 0; t + 1 < std::min(rows, cols); ++t) {
            const Int& a = s.D.at(t, t);
            const Int& b = s.D.at(t + 1, t + 1);
            CHECK(a >= 0);
            CHECK((a == 0 ? b == 0 : b % a == 0));
        }
    }
}

TEST_CASE("part-of-basis tests") {
    CHECK(is_part_of_basis({{1, 0}}));
    CHECK(!is_part_of_basis({{2, 0}}));
    CHECK(!is_part_of_basis({{1, 1}, {1, -1}}));
    CHECK(is_part_of_basis({}));
    CHECK(!is_part_of_basis({{1, 0}, {0, 1}, {1, 1}})); // r > n
    CHECK(is_part_of_basis({{1, 0, 0}, {0, 1, 0}}));
    CHECK_THROWS_AS(is_part_of_basis({{1, 0}, {1}}), DomainError);
}

TEST_CASE("part-of-basis is closed under subsets") {
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(oracles::rand_int(2, 5));
        const IntMat u = random_unimodular(n);
        const auto r = static_cast<std::size_t>(oracles::rand_int(1, static_cast<int>(n)));
        std::vector<std::vector<Int>> set;
        for (std::size_t j = 0; j < r; ++j) set.push_back(u.column(j));
        REQUIRE(is_part_of_basis(set));
        // every subset (drop a random element, and the full power set when small)
        std::vector<std::vector<Int>> subset;
        for (const auto& v : set)
            if (oracles::rand_int(0, 1)) subset.push_back(v);
        CHECK(is_part_of_basis(subset));
    }
    // arbitrary random sets: whenever the test passes, so does every subset
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(oracles::rand_int(2, 4));
        const auto r = static_cast<std::size_t>(oracles::rand_int(1, static_cast<int>(n)));
        std::vector<std::vector<Int>> set;
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Int> v;
            for (std::size_t i = 0; i < n; ++i) v.emplace_back(oracles::rand_int(-4, 4));
            set.push_back(std::move(v));
        }
        if (!is_part_of_basis(set)) continue;
        for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
            std::vector<std::vector<Int>> subset;
            for (std::size_t j = 0; j < r; ++j)
                if (mask & (std::size_t{1} << j)) subset.push_back(set[j]);
            CHECK(is_part_of_basis(subset));
        }
    }
}

TEST_CASE("characteristic check on the square models") {
    const auto square = prism_polytope(2);

    VectorAssignment good(2);
    good.set("F1", {1, 0});
    good.set("F2", {-1, -1}); // a=1, b=0
    good.set("F3", {0, 1});
    good.set("F4", {0, -1});
    CHECK(is_characteristic(square, good).pass);

    VectorAssignment bad(2);
    bad.set("F1", {1, 0});
    bad.set("F2", {-1, -1});
    bad.set("F3", {0, 2});
    bad.set("F4", {0, -1});
    const CharacteristicReport r = is_characteristic(square, bad);
    CHECK(!r.pass);
    CHECK((r.witness_det == 2 || r.witness_det == -2));

    VectorAssignment twisted(2);
    twisted.set("F1", {-1, 0});
    twisted.set("F2", {-1, -2}); // a=2, b=0
    twisted.set("F3", {0, 1});
    twisted.set("F4", {0, -1});
    CHECK(is_characteristic(square, twisted).pass);

    VectorAssignment missing(2);
    missing.set("F1", {1, 0});
    CHECK_THROWS_AS(is_characteristic(square, missing), DomainError);
    VectorAssignment wrong_rank(3);
    CHECK_THROWS_AS(is_characteristic(square, wrong_rank), MismatchError);
}

TEST_CASE("model characteristic matrices pass for n <= 6, a, b in [-4,4]") {
    for (int n = 2; n <= 6; ++n)
        for (long a = -4; a <= 4; ++a)
            for (long b = -4; b <= 4; ++b) {
                const auto std_pair = catalog_model(n, a, b, StructureKind::Standard);
                CHECK(is_characteristic(std_pair.polytope, std_pair.chi).pass);
                const auto twi_pair = catalog_model(n, a, b, StructureKind::Twisted);
                CHECK(is_characteristic(twi_pair.polytope, twi_pair.chi).pass);
            }
}

TEST_CASE("isotropy validation on the hexagon prism") {
    const HexPrismData hex = build_hexprism(2, 1, 0);
    CHECK(validate_isotropy(hex.polytope, hex.marked, hex.lambda,
                            IsotropyMode::SarkarCondition)
              .pass);

    // corrupt F1 -> (2, 0): the Sarkar condition fails at the first vertex
    // containing F1, the rational rank does not
    VectorAssignment corrupted(2);
    corrupted.set("F1", {2, 0});
    for (const auto& [id, vec] : hex.lambda.entries())
        if (id != "F1") corrupted.set(id, vec);

    const IsotropyReport sarkar = validate_isotropy(hex.polytope, hex.marked, corrupted,
                                                    IsotropyMode::SarkarCondition);
    CHECK(!sarkar.pass);
    REQUIRE(sarkar.witness_vertex);
    CHECK(*sarkar.witness_vertex == std::vector<std::string>{"F1", "F2", "F7"});

    CHECK(validate_isotropy(hex.polytope, hex.marked, corrupted,
                            IsotropyMode::IndependenceOnly)
              .pass);

    // assignment touching a marked facet is rejected
    VectorAssignment overreach(2);
    for (const auto& [id, vec] : hex.lambda.entries()) overreach.set(id, vec);
    overreach.set("F2", {1, 1});
    CHECK_THROWS_AS(validate_isotropy(hex.polytope, hex.marked, overreach,
                                      IsotropyMode::SarkarCondition),
                    DomainError);

    // missing unmarked facet is rejected
    VectorAssignment partial(2);
    partial.set("F1", {1, 0});
    CHECK_THROWS_AS(
        validate_isotropy(hex.polytope, hex.marked, partial, IsotropyMode::SarkarCondition),
        DomainError);

    VectorAssignment wrong_rank(3);
    CHECK_THROWS_AS(validate_isotropy(hex.polytope, hex.marked, wrong_rank,
                                      IsotropyMode::SarkarCondition),
                    MismatchError);
}

TEST_CASE("restrictions pull back the assignment along facet incidence") {
    const HexPrismData hex = build_hexprism(2, 2, 5);

    const Restriction r2 = restriction(hex.polytope, hex.marked, hex.lambda, "F2");
    CHECK(r2.face.sub.facet_ids() == std::vector<std::string>{"F1", "F3", "F7", "F8"});
    CHECK(r2.xi.at("F1") == std::vector<Int>{1, 0});
    CHECK(r2.xi.at("F3") == std::vector<Int>{-1, -2});
    CHECK(r2.xi.at("F7") == std::vector<Int>{0, 1});
    CHECK(r2.xi.at("F8") == std::vector<Int>{0, -1});

    const Restriction r4 = restriction(hex.polytope, hex.marked, hex.lambda, "F4");
    CHECK(r4.xi.at("F3") == std::vector<Int>{-1, -2});
    CHECK(r4.xi.at("F5") == std::vector<Int>{-1, -5});

    const Restriction r6 = restriction(hex.polytope, hex.marked, hex.lambda, "F6");
    CHECK(r6.xi.at("F1") == std::vector<Int>{1, 0});
    CHECK(r6.xi.at("F5") == std::vector<Int>{-1, -5});

    CHECK_THROWS_AS(restriction(hex.polytope, hex.marked, hex.lambda, "F1"), DomainError);
}

TEST_CASE("checking lemma: the two routes agree") {
    const HexPrismData hex = build_hexprism(2, 1, 0);
    const LemmaReport good = check_lemma_equivalence(hex.polytope, hex.marked, hex.lambda);
    CHECK(good.restrictions_characteristic);
    CHECK(good.sarkar_holds);
    CHECK(good.agree);

    VectorAssignment corrupted(2);
    corrupted.set("F1", {2, 0});
    for (const auto& [id, vec] : hex.lambda.entries())
        if (id != "F1") corrupted.set(id, vec);
    const LemmaReport bad = check_lemma_equivalence(hex.polytope, hex.marked, corrupted);
    CHECK(!bad.restrictions_characteristic);
    CHECK(!bad.sarkar_holds);
    CHECK(bad.agree);

    // random assignments never split the two sides
    for (int trial = 0; trial < 300; ++trial) {
        VectorAssignment lambda(2);
        for (const auto& id : {"F1", "F3", "F5", "F7", "F8"})
            lambda.set(id, {oracles::rand_int(-4, 4), oracles::rand_int(-4, 4)});
        const LemmaReport r = check_lemma_equivalence(hex.polytope, hex.marked, lambda);
        CHECK(r.agree);
    }
}

TEST_CASE("gl equivalence: identity, solved witness, and absence") {
    const VectorAssignment a = model_characteristic(2, 1, 0, StructureKind::Standard);
    SUBCASE("identity") {
        const auto w = gl_equivalent(a, a, {}, false);
        REQUIRE(w);
        CHECK(w->U == IntMat::identity(2));
        CHECK(verify_gl_witness(a, a, *w, false));
    }
    SUBCASE("solved witness with a fiber swap") {
        const VectorAssignment b = model_characteristic(2, 1, 1, StructureKind::Standard);
        const auto w = gl_equivalent(a, b, {{"F3", "F4"}}, false);
        REQUIRE(w);
        IntMat expected(2, 2);
        expected.at(0, 0) = 1;
        expected.at(1, 0) = 1;
        expected.at(1, 1) = -1;
        CHECK(w->U == expected);
        CHECK(w->image("F3") == "F4");
        CHECK(w->image("F4") == "F3");
        CHECK(verify_gl_witness(a, b, *w, false));
    }
    SUBCASE("no witness between different twists") {
        const VectorAssignment b = model_characteristic(2, 2, 0, StructureKind::Standard);
        CHECK(!gl_equivalent(a, b, {{"F3", "F4"}}, false));
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(gl_equivalent(a, VectorAssignment(3), {}, false), MismatchError);
        CHECK_THROWS_AS(gl_equivalent(a, a, {{"F3", "nope"}}, false), DomainError);
        CHECK_THROWS_AS(gl_equivalent(a, a, {{"F3"}, {"F3", "F4"}}, false), DomainError);
    }
}

TEST_CASE("gl equivalence with per-facet signs") {
    // No unimodular U maps e1, e2, e1+e2 onto e1, e2, e1-e2 without sign
    // flips. The sign enumeration finds U = diag(-1,1) with flips on F1, F3.
    VectorAssignment a(2), b(2);
    a.set("F1", {1, 0});
    a.set("F2", {0, 1});
    a.set("F3", {1, 1});
    b.set("F1", {1, 0});
    b.set("F2", {0, 1});
    b.set("F3", {1, -1});

    CHECK(!gl_equivalent(a, b, {}, false));

    const auto w = gl_equivalent(a, b, {}, true);
    REQUIRE(w);
    IntMat expected(2, 2);
    expected.at(0, 0) = -1;
    expected.at(1, 1) = 1;
    CHECK(w->U == expected);
    CHECK(w->sign("F1") == -1);
    CHECK(w->sign("F2") == 1);
    CHECK(w->sign("F3") == -1);
    CHECK(verify_gl_witness(a, b, *w, true));
    CHECK(!verify_gl_witness(a, b, *w, false)); // signs are not allowed then
}

TEST_CASE("tampered witnesses fail verification") {
    const VectorAssignment a = model_characteristic(2, 1, 0, StructureKind::Standard);
    const VectorAssignment b = model_characteristic(2, 1, 1, StructureKind::Standard);
    const auto w = gl_equivalent(a, b, {{"F3", "F4"}}, false);
    REQUIRE(w);

    GlWitness wrong_u = *w;
    wrong_u.U.at(0, 1) = 5;
    CHECK(!verify_gl_witness(a, b, wrong_u, false));

    GlWitness wrong_sigma = *w;
    for (auto& [from, to] : wrong_sigma.sigma)
        if (from == "F3") to = "F3";
    CHECK(!verify_gl_witness(a, b, wrong_sigma, false));

    GlWitness wrong_sign = *w;
    wrong_sign.signs.front().second = -1;
    CHECK(!verify_gl_witness(a, b, wrong_sign, true));
}

TEST_CASE("gl_equivalent(A, A) always succeeds, witnesses always verify") {
    for (int trial = 0; trial < 100; ++trial) {
        const int rank = oracles::rand_int(1, 4);
        VectorAssignment a(rank);
        const int facets = oracles::rand_int(rank, rank + 3);
        for (int f = 0; f < facets; ++f) {
            std::vector<Int> v;
            for (int i = 0; i < rank; ++i) v.emplace_back(oracles::rand_int(-3, 3));
            a.set("F" + std::to_string(f + 1), std::move(v));
        }
        const auto w = gl_equivalent(a, a, {}, false);
        REQUIRE(w);
        CHECK(verify_gl_witness(a, a, *w, false));
    }
}

TEST_CASE("gl equivalence transported by a random unimodular matrix") {
    for (int trial = 0; trial < 50; ++trial) {
        const int rank = oracles::rand_int(2, 4);
        const VectorAssignment a =
            model_characteristic(rank, oracles::rand_int(-3, 3), oracles::rand_int(-3, 3),
                                 StructureKind::Standard);
        const IntMat u = random_unimodular(static_cast<std::size_t>(rank));
        VectorAssignment b(rank);
        for (const auto& [id, vec] : a.entries()) b.set(id, u.apply(vec));
        const auto w = gl_equivalent(a, b, {}, false);
        REQUIRE(w);
        CHECK(verify_gl_witness(a, b, *w, false));
        CHECK(w->U == u); // sigma is forced to the identity, so U is unique
    }
}

TEST_CASE("assignment json round trip") {
    const VectorAssignment a = model_characteristic(3, 2, -1, StructureKind::Twisted);
    const auto doc = a.to_json();
    CHECK(VectorAssignment::from_json(doc) == a);
    CHECK_THROWS_AS(VectorAssignment::from_json(nlohmann::ordered_json::parse("{}")),
                    ParseError);
    CHECK_THROWS_AS(VectorAssignment::from_json(nlohmann::ordered_json::parse(
                        R"({"rank": 2, "vectors": {"F1": [1]}})")),
                    ParseError);
}
