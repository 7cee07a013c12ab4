#pragma once

#include "cobordkit/partition.hpp"
#include "cobordkit/ring.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cobordkit {

// Standard: the natural complex structure on P^n(a).
// Twisted: the structure c_T(a) obtained by trivialising the 2p*eta-bar summand.
enum class StructureKind { Standard, Twisted };

const char* to_string(StructureKind kind);

// Total Chern class in CohomRing(n, a), fully reduced.
//   Standard: (1+x)^2 * (1 + y - a*x) * (1+y)^(n-1)
//   Twisted:  (1 + y - a*x) * (1+y)^(n-1)
RingElement total_chern_class(int n, const Int& a, StructureKind kind);

// <c_{i_1} ... c_{i_r}, [P^n(a)]> for a partition I of n.
Int chern_number(int n, const Int& a, StructureKind kind, const Partition& I);

// Closed form 2 * sum_q C(n, i_q - 1) * prod_{s != q} C(n, i_s); equals the
// standard-structure Chern number for every a. Kept as an independent route:
// neither function ever calls the other.
Int chern_number_closed(int n, const Partition& I);

struct ChernData {
    int n = 0;
    Int a = 0;
    StructureKind kind = StructureKind::Standard;
    // One entry per partition of n, in reverse-lexicographic order.
    std::vector<std::pair<Partition, Int>> numbers;

    const Int& at(const Partition& I) const;
    nlohmann::ordered_json to_json() const;
};

ChernData all_chern_numbers(int n, const Int& a, StructureKind kind);

struct IdentityReport {
    std::string mode;
    bool pass = true;
    std::optional<Partition> counterexample;
    std::string detail;           // first-failure description, empty on pass
    nlohmann::ordered_json table; // full value table

    nlohmann::ordered_json to_json() const;
};

// Ring-computed c_I(P^n(a)) agree across all listed a and match the closed form.
IdentityReport verify_a_independence(int n, const std::vector<Int>& a_values);

// Every Chern number of (P^n(a), twisted) vanishes.
IdentityReport verify_twisted_null(int n, const Int& a);

// c_I(P^n(a)) - c_I(P^n(b)) + c_I(P^n(b-a), twisted) = 0 for every I.
IdentityReport verify_triple(int n, const Int& a, const Int& b);

} // namespace cobordkit
