#include "cobordkit/bigint.hpp"

#include "cobordkit/errors.hpp"

#include <limits>

namespace cobordkit {

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return Int(0);
    // 0 <= k <= n implies n >= 0, so C(n, k) = C(n, n-k).
    Int kk = k;
    Int other = n - k;
    if (other < kk) kk = other;
    if (!kk.fits_ulong_p())
        throw DomainError("binomial: argument too large to evaluate");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), kk.get_ui());
    return r;
}

std::string to_decimal(const Int& v) { return v.get_str(10); }

Int parse_decimal(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer literal");
    Int r;
    if (mpz_set_str(r.get_mpz_t(), text.c_str(), 10) != 0)
        throw ParseError("not a decimal integer: '" + text + "'");
    return r;
}

std::size_t to_index(const Int& v) {
    if (v < 0 || !v.fits_ulong_p())
        throw DomainError("integer out of index range: " + to_decimal(v));
    return static_cast<std::size_t>(v.get_ui());
}

std::int64_t to_int64(const Int& v) {
    if (!v.fits_slong_p())
        throw DomainError("integer out of int64 range: " + to_decimal(v));
    return static_cast<std::int64_t>(v.get_si());
}

} // namespace cobordkit
