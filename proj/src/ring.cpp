#include "cobordkit/ring.hpp"

#include "cobordkit/errors.hpp"

#include <sstream>

namespace cobordkit {

CohomRing::CohomRing(int n, Int a) : n_(n), a_(std::move(a)) {
    if (n < 1) throw DomainError("CohomRing: n must be >= 1, got " + std::to_string(n));
}

RingElement::RingElement(CohomRing ring)
    : ring_(std::move(ring)),
      ycoef_(static_cast<std::size_t>(ring_.dim()), Int(0)),
      xycoef_(static_cast<std::size_t>(ring_.dim()), Int(0)) {}

RingElement RingElement::zero(const CohomRing& ring) { return RingElement(ring); }

RingElement RingElement::one(const CohomRing& ring) {
    RingElement e(ring);
    e.ycoef_[0] = 1;
    return e;
}

RingElement RingElement::monomial(const CohomRing& ring, bool with_x, int y_power,
                                  Int coeff) {
    if (y_power < 0) throw DomainError("monomial: negative y power");
    RingElement e(ring);
    const int n = ring.dim();
    if (!with_x) {
        if (y_power < n) {
            e.ycoef_[static_cast<std::size_t>(y_power)] = std::move(coeff);
        } else if (y_power == n) {
            // y^n = a * x * y^(n-1)
            e.xycoef_[static_cast<std::size_t>(n - 1)] = coeff * ring.twist();
        }
        // y^m = a * x * y^(m-1) = 0 for m > n.
    } else {
        if (y_power < n) e.xycoef_[static_cast<std::size_t>(y_power)] = std::move(coeff);
        // x * y^m = 0 for m >= n.
    }
    return e;
}

const Int& RingElement::y_coeff(int j) const {
    if (j < 0 || j >= ring_.dim()) throw DomainError("y_coeff: index out of range");
    return ycoef_[static_cast<std::size_t>(j)];
}

const Int& RingElement::xy_coeff(int j) const {
    if (j < 0 || j >= ring_.dim()) throw DomainError("xy_coeff: index out of range");
    return xycoef_[static_cast<std::size_t>(j)];
}

bool RingElement::is_zero() const {
    for (const Int& c : ycoef_)
        if (c != 0) return false;
    for (const Int& c : xycoef_)
        if (c != 0) return false;
    return true;
}

void RingElement::require_same_ring(const RingElement& other) const {
    if (!(ring_ == other.ring_))
        throw MismatchError("ring elements belong to distinct rings");
}

RingElement RingElement::operator+(const RingElement& other) const {
    require_same_ring(other);
    RingElement r(*this);
    for (std::size_t j = 0; j < ycoef_.size(); ++j) {
        r.ycoef_[j] += other.ycoef_[j];
        r.xycoef_[j] += other.xycoef_[j];
    }
    return r;
}

RingElement RingElement::operator-(const RingElement& other) const {
    return *this + (-other);
}

RingElement RingElement::operator-() const {
    RingElement r(*this);
    for (std::size_t j = 0; j < ycoef_.size(); ++j) {
        r.ycoef_[j] = -r.ycoef_[j];
        r.xycoef_[j] = -r.xycoef_[j];
    }
    return r;
}

RingElement operator*(const Int& c, const RingElement& e) {
    RingElement r(e);
    for (std::size_t j = 0; j < r.ycoef_.size(); ++j) {
        r.ycoef_[j] *= c;
        r.xycoef_[j] *= c;
    }
    return r;
}

RingElement RingElement::operator*(const RingElement& other) const {
    require_same_ring(other);
    const int n = ring_.dim();
    const Int& a = ring_.twist();
    RingElement r(ring_);

    // y^j * y^k: stays y^(j+k) below n, becomes a*x*y^(n-1) at n, vanishes above.
    // y^j * x*y^k: x*y^(j+k), zero once j+k >= n. x*x terms vanish.
    for (int j = 0; j < n; ++j) {
        const Int& pj = ycoef_[static_cast<std::size_t>(j)];
        const Int& qj = xycoef_[static_cast<std::size_t>(j)];
        if (pj == 0 && qj == 0) continue;
        for (int k = 0; k < n; ++k) {
            const Int& rk = other.ycoef_[static_cast<std::size_t>(k)];
            const Int& sk = other.xycoef_[static_cast<std::size_t>(k)];
            const int m = j + k;
            if (pj != 0 && rk != 0) {
                if (m < n)
                    r.ycoef_[static_cast<std::size_t>(m)] += pj * rk;
                else if (m == n)
                    r.xycoef_[static_cast<std::size_t>(n - 1)] += a * pj * rk;
            }
            if (m < n) {
                if (pj != 0 && sk != 0) r.xycoef_[static_cast<std::size_t>(m)] += pj * sk;
                if (qj != 0 && rk != 0) r.xycoef_[static_cast<std::size_t>(m)] += qj * rk;
            }
        }
    }
    return r;
}

RingElement RingElement::pow(int e) const {
    if (e < 0) throw DomainError("pow: negative exponent");
    RingElement acc = one(ring_);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

RingElement RingElement::homogeneous_component(int degree) const {
    RingElement r(ring_);
    const int n = ring_.dim();
    if (degree >= 0 && degree <= n - 1)
        r.ycoef_[static_cast<std::size_t>(degree)] = ycoef_[static_cast<std::size_t>(degree)];
    if (degree >= 1 && degree <= n)
        r.xycoef_[static_cast<std::size_t>(degree - 1)] =
            xycoef_[static_cast<std::size_t>(degree - 1)];
    return r;
}

std::string RingElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto term = [&](const Int& c, const std::string& mono) {
        if (c == 0) return;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        Int mag = abs(c);
        if (mag != 1 || mono.empty()) out << mag;
        if (!mono.empty()) {
            if (mag != 1) out << "*";
            out << mono;
        }
        first = false;
    };
    const int n = ring_.dim();
    for (int j = 0; j < n; ++j) {
        std::string mono = j == 0 ? "" : (j == 1 ? "y" : "y^" + std::to_string(j));
        term(ycoef_[static_cast<std::size_t>(j)], mono);
    }
    for (int j = 0; j < n; ++j) {
        std::string mono = j == 0 ? "x" : (j == 1 ? "x*y" : "x*y^" + std::to_string(j));
        term(xycoef_[static_cast<std::size_t>(j)], mono);
    }
    if (first) out << "0";
    return out.str();
}

Int fundamental_pairing(const RingElement& e) {
    return e.xy_coeff(e.ring().dim() - 1);
}

} // namespace cobordkit
