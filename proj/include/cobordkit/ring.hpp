#pragma once

#include "cobordkit/bigint.hpp"

#include <string>
#include <vector>

namespace cobordkit {

// The cohomology ring Z[x,y]/(x^2, y^n - a*x*y^(n-1)) of the projectivisation
// P^n(a), in the monomial basis {y^j, x*y^j : 0 <= j < n}. Complex grading:
// deg y^j = j, deg x*y^j = j + 1.
class CohomRing {
public:
    CohomRing(int n, Int a); // n >= 1

    int dim() const { return n_; }
    const Int& twist() const { return a_; }

    bool operator==(const CohomRing&) const = default;

private:
    int n_;
    Int a_;
};

// An element in canonical reduced form: no stored x^2, y^n or x*y^n monomial.
// Elements are immutable values; all operations are pure.
class RingElement {
public:
    static RingElement zero(const CohomRing& ring);
    static RingElement one(const CohomRing& ring);
    // coeff * x^(with_x) * y^(y_power), canonically reduced.
    static RingElement monomial(const CohomRing& ring, bool with_x, int y_power,
                                Int coeff = Int(1));

    const CohomRing& ring() const { return ring_; }
    const Int& y_coeff(int j) const;  // coefficient of y^j
    const Int& xy_coeff(int j) const; // coefficient of x*y^j
    bool is_zero() const;

    RingElement operator+(const RingElement& other) const;
    RingElement operator-(const RingElement& other) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& other) const; // reduced product
    friend RingElement operator*(const Int& c, const RingElement& e);

    bool operator==(const RingElement&) const = default;

    RingElement pow(int e) const; // e >= 0
    // The sum of basis monomials of the given complex degree.
    RingElement homogeneous_component(int degree) const;

    std::string to_string() const;

private:
    explicit RingElement(CohomRing ring);
    void require_same_ring(const RingElement& other) const;

    CohomRing ring_;
    std::vector<Int> ycoef_;  // size n
    std::vector<Int> xycoef_; // size n
};

// Coefficient of the top class x*y^(n-1); pairing against the fundamental
// class of P^n(a). Additive and Int-linear.
Int fundamental_pairing(const RingElement& e);

} // namespace cobordkit
