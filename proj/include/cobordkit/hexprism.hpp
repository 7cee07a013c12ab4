#pragma once

#include "cobordkit/clutch.hpp"
#include "cobordkit/lattice.hpp"
#include "cobordkit/polytope.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cobordkit {

// The hexagon-prism construction: Q = hexagon x Delta^(n-1) with exceptional
// facets F2, F4, F6 and the isotropy columns
//   F1 = e1, F3 = -e1 - a*e2, F5 = -e1 - b*e2,
//   F(6+j) = e(j+1) for j = 1..n-1, F(n+6) = -(e2 + ... + en).
struct HexPrismData {
    int n;
    Int a;
    Int b;
    SimplePolytope polytope;
    std::vector<std::string> marked; // F2, F4, F6
    VectorAssignment lambda;
};

HexPrismData build_hexprism(int n, const Int& a, const Int& b); // n >= 2

struct HexValidation {
    ExceptionalReport exceptional;
    IsotropyReport isotropy;
    LemmaReport lemma;
    bool pass = false;

    nlohmann::ordered_json to_json() const;
};

HexValidation validate(const HexPrismData& data);

// One boundary piece: the restriction of lambda to a marked facet, matched
// against the catalog characteristic matrix it realises.
struct BoundaryComponent {
    std::string facet;
    SimplePolytope sub;
    VectorAssignment xi;
    BoundaryLabel label;
    Int b_parameter;
    int orientation; // -1 exactly for the F6 component
    bool direct_match;
    GlWitness witness;

    nlohmann::ordered_json to_json() const;
};

struct BoundaryReport {
    bool pass = false;
    std::vector<BoundaryComponent> components;

    nlohmann::ordered_json to_json() const;
};

// Matches F2 -> Standard(a), F4 -> Twisted(b-a), F6 -> Standard(b) with
// orientation -1, each with a verified GL_n(Z) witness. Throws InternalError
// if a restriction fails to match its catalog entry.
BoundaryReport boundary_components(const HexPrismData& data);

// Full certificate: construction validity, boundary matching, the triple
// Chern-number identity and the gluing certificate, in one document.
nlohmann::ordered_json certificate(int n, const Int& a, const Int& b);

} // namespace cobordkit
