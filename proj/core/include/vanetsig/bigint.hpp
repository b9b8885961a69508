#ifndef VANETSIG_BIGINT_HPP_
#define VANETSIG_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include "vanetsig/bytes.hpp"

namespace vanetsig {

using Int = boost::multiprecision::cpp_int;

// Canonical residue in [0, m).  Works for negative a too.
inline Int mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int mulmod(const Int& a, const Int& b, const Int& m) {
    return (a * b) % m;
}

// b^e mod m for non-negative e.
Int powmod(const Int& b, const Int& e, const Int& m);

// Modular inverse via extended Euclid.  Throws std::domain_error if
// gcd(a, m) != 1.
Int invmod(const Int& a, const Int& m);

bool probably_prime(const Int& n);

Int from_be_bytes(BytesView b);
Bytes to_be_bytes(const Int& v);                           // minimal length, 0 -> {}
Bytes to_be_bytes_fixed(const Int& v, std::size_t width);  // throws if it does not fit

}  // namespace vanetsig

#endif  // VANETSIG_BIGINT_HPP_
