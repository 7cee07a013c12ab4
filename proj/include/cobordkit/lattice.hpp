#pragma once

#include "cobordkit/bigint.hpp"
#include "cobordkit/intmat.hpp"
#include "cobordkit/polytope.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cobordkit {

// Smith normal form U*M*V = D: U, V unimodular, D diagonal with nonnegative
// entries in a divisibility chain d1 | d2 | ... Postconditions are re-checked
// on every call; a violation throws InternalError.
struct SmithResult {
    IntMat U, D, V;
};

SmithResult smith_normal_form(const IntMat& m);

// Rank over Q = number of nonzero Smith diagonal entries.
int rational_rank(const IntMat& m);

// True iff the vectors extend to a Z-basis of the ambient lattice: the Smith
// form of the matrix with these columns has exactly r unit divisors. More
// vectors than the ambient rank can never qualify; the empty set always does.
bool is_part_of_basis(const std::vector<std::vector<Int>>& vectors);

// Facet id -> vector in Z^rank, in a caller-controlled order.
class VectorAssignment {
public:
    explicit VectorAssignment(int rank);

    int rank() const { return rank_; }
    void set(const std::string& facet, std::vector<Int> vector); // validates length
    const std::vector<Int>* find(const std::string& facet) const;
    const std::vector<Int>& at(const std::string& facet) const; // throws DomainError
    const std::vector<std::pair<std::string, std::vector<Int>>>& entries() const {
        return entries_;
    }
    std::size_t size() const { return entries_.size(); }

    bool operator==(const VectorAssignment&) const = default;

    static VectorAssignment from_json(const nlohmann::ordered_json& doc);
    nlohmann::ordered_json to_json() const;

private:
    int rank_;
    std::vector<std::pair<std::string, std::vector<Int>>> entries_;
};

// Characteristic-function check: at every vertex the facet vectors form a
// basis of Z^dim (determinant +-1).
struct CharacteristicReport {
    bool pass = true;
    std::optional<std::vector<std::string>> witness_vertex;
    Int witness_det = 0;

    nlohmann::ordered_json to_json() const;
};

CharacteristicReport is_characteristic(const SimplePolytope& p, const VectorAssignment& chi);

enum class IsotropyMode { IndependenceOnly, SarkarCondition };

// Isotropy-function check on a polytope with exceptional (marked) facets:
// lambda assigns vectors of length dim-1 to exactly the unmarked facets, and
// at every vertex the unmarked facet vectors must be linearly independent
// (IndependenceOnly) or part of a Z-basis (SarkarCondition). Vertex-only
// checking suffices: every nonempty facet intersection extends into a vertex
// and sub-collections inherit both properties.
struct IsotropyReport {
    IsotropyMode mode = IsotropyMode::SarkarCondition;
    bool pass = true;
    std::optional<std::vector<std::string>> witness_vertex;
    std::string detail;

    nlohmann::ordered_json to_json() const;
};

IsotropyReport validate_isotropy(const SimplePolytope& p,
                                 const std::vector<std::string>& marked,
                                 const VectorAssignment& lambda, IsotropyMode mode);

// Pull lambda back to a marked facet via the facet correspondence: sub-facet
// (q intersect F) receives lambda(F).
struct Restriction {
    FacetSub face;
    VectorAssignment xi;
};

Restriction restriction(const SimplePolytope& p, const std::vector<std::string>& marked,
                        const VectorAssignment& lambda, const std::string& facet);

// Both routes of the checking lemma: "every restriction is characteristic"
// versus "the Sarkar condition holds". The two must agree; the report carries
// both verdicts.
struct LemmaReport {
    bool restrictions_characteristic = true;
    std::optional<std::string> first_failing_facet;
    bool sarkar_holds = true;
    bool agree = true;
    nlohmann::ordered_json per_facet;

    nlohmann::ordered_json to_json() const;
};

LemmaReport check_lemma_equivalence(const SimplePolytope& p,
                                    const std::vector<std::string>& marked,
                                    const VectorAssignment& lambda);

// A verified GL_n(Z)-equivalence: U*A(F) = sign(F) * B(sigma(F)) for every
// facet F, with U unimodular and sigma a permutation inside the given blocks.
struct GlWitness {
    IntMat U;
    std::vector<std::pair<std::string, std::string>> sigma; // F -> sigma(F)
    std::vector<std::pair<std::string, int>> signs;         // F -> +1/-1

    const std::string& image(const std::string& facet) const;
    int sign(const std::string& facet) const;
    nlohmann::ordered_json to_json() const;
};

bool verify_gl_witness(const VectorAssignment& a, const VectorAssignment& b,
                       const GlWitness& w, bool allow_sign);

// Searches for a GL-equivalence witness. sigma ranges over permutations within
// perm_blocks (facets not listed are fixed); signs are searched only when
// allow_sign is set. Absence of a witness is a normal result. The solve-based
// search needs the columns of `a` to span Q^rank; assignments that do not span
// are only matched by the exact-equality fast path.
std::optional<GlWitness> gl_equivalent(const VectorAssignment& a, const VectorAssignment& b,
                                       const std::vector<std::vector<std::string>>& perm_blocks,
                                       bool allow_sign);

} // namespace cobordkit
