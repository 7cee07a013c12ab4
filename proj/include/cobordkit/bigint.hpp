#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cobordkit {

// Arbitrary-precision signed integer. Every quantity in this library is an
// exact integer; there is no floating point anywhere.
using Int = mpz_class;

// Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n.
Int binomial(const Int& n, const Int& k);

std::string to_decimal(const Int& v);
Int parse_decimal(const std::string& text); // throws ParseError on garbage

// Checked narrowing for container indexing and the C ABI.
std::size_t to_index(const Int& v); // throws DomainError if negative or too large
std::int64_t to_int64(const Int& v);

} // namespace cobordkit
