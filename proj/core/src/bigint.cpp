#include "vanetsig/bigint.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <stdexcept>

namespace vanetsig {

Int powmod(const Int& b, const Int& e, const Int& m) {
    if (e < 0) throw std::domain_error("powmod: negative exponent");
    return boost::multiprecision::powm(mod(b, m), e, m);
}

Int invmod(const Int& a, const Int& m) {
    // Extended Euclid; much faster than Fermat for cpp_int operands.
    Int r0 = m, r1 = mod(a, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("invmod: element not invertible");
    return mod(t0, m);
}

bool probably_prime(const Int& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

Int from_be_bytes(BytesView b) {
    Int v = 0;
    for (std::uint8_t byte : b) {
        v <<= 8;
        v += byte;
    }
    return v;
}

Bytes to_be_bytes(const Int& v) {
    if (v < 0) throw std::domain_error("to_be_bytes: negative value");
    Bytes out;
    Int x = v;
    while (x > 0) {
        out.push_back(static_cast<std::uint8_t>(x & 0xff));
        x >>= 8;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Bytes to_be_bytes_fixed(const Int& v, std::size_t width) {
    Bytes minimal = to_be_bytes(v);
    if (minimal.size() > width) throw std::domain_error("to_be_bytes_fixed: value too wide");
    Bytes out(width - minimal.size(), 0);
    append(out, minimal);
    return out;
}

}  // namespace vanetsig
