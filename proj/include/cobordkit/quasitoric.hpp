#pragma once

#include "cobordkit/chern.hpp"
#include "cobordkit/lattice.hpp"
#include "cobordkit/polytope.hpp"

namespace cobordkit {

// The prism over the simplex, Delta^1 x Delta^(n-1): facets F1, F2 are the two
// simplex ends, F3..F(n+2) the fiber facets Delta^1 x Delta_j.
SimplePolytope prism_polytope(int n); // n >= 2

// Model characteristic data on that prism for P^n(a) and its twisted variant.
// Columns, in facet order:
//   standard:  (1, b, 0..0), (-1, b-a, 0..0), e_2, ..., e_n, (0, -1, ..., -1)
//   twisted:  (-1, b, 0..0), (-1, b-a, 0..0), e_2, ..., e_n, (0, -1, ..., -1)
VectorAssignment model_characteristic(int n, const Int& a, const Int& b, StructureKind kind);

struct CatalogPair {
    SimplePolytope polytope;
    VectorAssignment chi;
};

CatalogPair catalog_model(int n, const Int& a, const Int& b, StructureKind kind);

} // namespace cobordkit
