#pragma once

#include "cobordkit/bigint.hpp"
#include "cobordkit/partition.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace cobordkit {

// Degree data of the clutching isomorphism Id (x) F_n(d) + F_2(e) over
// S^1 x CP^(n-1): d twists the rank-n tensored block, e the rank-2 trivial
// block. Composition adds degrees; homotopy classes are identified with
// (d, e) pairs.
struct ClutchSpec {
    int rank; // n, rank of the tensored block
    Int d;
    Int e;

    bool operator==(const ClutchSpec&) const = default;
};

ClutchSpec compose(const ClutchSpec& c1, const ClutchSpec& c2); // ranks must agree
ClutchSpec inverse(const ClutchSpec& c);

// Normal forms of glued-bundle boundary pieces:
//   (d, e) = (-a,  2)  ->  Standard(a)        P^n(a) with its natural structure
//   (d, e) = (-a,  0)  ->  Twisted(a)         (P^n(a), twisted structure)
//   (d, e) = ( a, -2)  ->  ConjStandard(a)    conjugate of P^n(a); bordism class -[P^n(a)]
struct BoundaryLabel {
    enum class Kind { Standard, ConjStandard, Twisted, Unclassified };

    Kind kind = Kind::Unclassified;
    Int parameter = 0; // unused when Unclassified

    bool operator==(const BoundaryLabel&) const = default;
    std::string to_string() const; // "Standard(5)", "Unclassified"
};

BoundaryLabel classify(const ClutchSpec& c);

// Pairwise clutching data of the three-piece gluing: f_A = (0, 1),
// f_B = (a, -1), f_C = (b, -1); f_{A,B} = f_B^{-1} o f_A and cyclically.
struct GluingTriple {
    ClutchSpec f_ab, f_bc, f_ca;
    BoundaryLabel label_ab, label_bc, label_ca;
};

GluingTriple gluing_triple(int n, const Int& a, const Int& b);

// Chern-number certificate of the gluing relation: for every partition I the
// signed sum over the three boundary labels vanishes (ConjStandard enters
// with sign -1).
struct GluingReport {
    int n = 0;
    Int a = 0;
    Int b = 0;
    GluingTriple triple;
    bool labels_ok = false; // labels are exactly {Standard(a), Twisted(b-a), ConjStandard(b)}
    bool sums_ok = false;
    bool pass = false;
    std::optional<Partition> counterexample;
    nlohmann::ordered_json table;

    nlohmann::ordered_json to_json() const;
};

GluingReport verify_gluing_bordism(int n, const Int& a, const Int& b);

} // namespace cobordkit
