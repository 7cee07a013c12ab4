#include "cobordkit/quasitoric.hpp"

#include "cobordkit/errors.hpp"

namespace cobordkit {

SimplePolytope prism_polytope(int n) {
    if (n < 2) throw DomainError("prism_polytope: n must be >= 2, got " + std::to_string(n));
    return SimplePolytope::product(SimplePolytope::simplex(1), SimplePolytope::simplex(n - 1));
}

VectorAssignment model_characteristic(int n, const Int& a, const Int& b, StructureKind kind) {
    if (n < 2) throw DomainError("model_characteristic: n must be >= 2");
    const std::size_t rank = static_cast<std::size_t>(n);
    VectorAssignment chi(n);

    std::vector<Int> f1(rank, Int(0));
    f1[0] = kind == StructureKind::Standard ? 1 : -1;
    f1[1] = b;
    chi.set("F1", std::move(f1));

    std::vector<Int> f2(rank, Int(0));
    f2[0] = -1;
    f2[1] = b - a;
    chi.set("F2", std::move(f2));

    for (int j = 1; j <= n - 1; ++j) {
        std::vector<Int> col(rank, Int(0));
        col[static_cast<std::size_t>(j)] = 1;
        chi.set("F" + std::to_string(2 + j), std::move(col));
    }
    std::vector<Int> last(rank, Int(-1));
    last[0] = 0;
    chi.set("F" + std::to_string(n + 2), std::move(last));
    return chi;
}

CatalogPair catalog_model(int n, const Int& a, const Int& b, StructureKind kind) {
    return CatalogPair{prism_polytope(n), model_characteristic(n, a, b, kind)};
}

} // namespace cobordkit
