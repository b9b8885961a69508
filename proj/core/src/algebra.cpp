#include "vanetsig/algebra.hpp"

#include <sstream>

namespace vanetsig {

namespace detail {

std::string_view tag_label(HashTag t) {
    switch (t) {
        case HashTag::Vehicle: return "vanetsig.h_v";
        case HashTag::Opener: return "vanetsig.h_o";
        case HashTag::Gm: return "vanetsig.h_r";
        case HashTag::Challenge: return "vanetsig.h";
    }
    throw std::invalid_argument("unknown hash tag");
}

Int expand_to_int(std::string_view label, std::uint32_t ctr, BytesView msg, std::size_t bits) {
    // 128 spare bits keep the modular reduction bias below 2^-128.
    std::size_t nblocks = (bits + 128 + 255) / 256;
    Bytes acc;
    acc.reserve(nblocks * 32);
    for (std::size_t i = 0; i < nblocks; ++i) {
        Bytes block;
        append(block, label);
        append_u8(block, 0x00);
        append_u32_be(block, ctr);
        append_u8(block, static_cast<std::uint8_t>(i));
        append(block, msg);
        append(acc, sha256(block));
    }
    return from_be_bytes(acc);
}

Int Backend::hash_to_scalar(HashTag t, BytesView msg) const {
    std::size_t bits = boost::multiprecision::msb(order_) + 1;
    Int wide = expand_to_int(tag_label(t), 0, msg, bits);
    return mod(wide, order_ - 1) + 1;  // lands in [1, p-1]
}

}  // namespace detail

Scalar Scalar::inverse() const {
    if (v_ == 0) throw std::domain_error("scalar inverse of zero");
    return Scalar(be_, invmod(v_, order()));
}

Scalar Scalar::operator-() const { return Scalar(be_, mod(-v_, order())); }

Bytes Scalar::serialize() const {
    Bytes out;
    append_framed(out, to_be_bytes(v_));
    return out;
}

static Int random_below(Rng& rng, const Int& bound) {
    if (bound <= 1) return 0;
    std::size_t bits = boost::multiprecision::msb(bound - 1) + 1;
    std::size_t words = (bits + 63) / 64;
    for (;;) {
        Int v = 0;
        for (std::size_t i = 0; i < words; ++i) {
            v <<= 64;
            v += Int(rng());
        }
        v >>= (words * 64 - bits);
        if (v < bound) return v;
    }
}

Scalar GroupContext::random_scalar_nonzero(Rng& rng) const {
    return Scalar(be_, random_below(rng, order() - 1) + 1);
}

Scalar GroupContext::random_scalar(Rng& rng) const {
    return Scalar(be_, random_below(rng, order()));
}

G1Elem GroupContext::random_g1(Rng& rng) const {
    return g1_generator().pow(random_below(rng, order() - 1) + 1);
}

Scalar GroupContext::parse_scalar(BytesView in) const {
    std::size_t pos = 0;
    Bytes payload = read_frame(in, pos);
    if (pos != in.size()) throw std::invalid_argument("trailing bytes after scalar");
    if (!payload.empty() && payload[0] == 0)
        throw std::invalid_argument("non-minimal scalar encoding");
    Int v = from_be_bytes(payload);
    if (v >= order()) throw std::invalid_argument("scalar out of range");
    return Scalar(be_, std::move(v));
}

GroupContext context_from_descriptor(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string head;
    in >> head;
    if (head == "transparent") {
        Int p = 0;
        std::uint64_t seed = 0;
        bool have_p = false, have_seed = false;
        std::string tok;
        while (in >> tok) {
            if (tok.rfind("p=", 0) == 0) {
                p = Int(tok.substr(2));
                have_p = true;
            } else if (tok.rfind("seed=", 0) == 0) {
                seed = std::stoull(tok.substr(5));
                have_seed = true;
            } else {
                throw std::invalid_argument("bad descriptor token: " + tok);
            }
        }
        if (!have_p || !have_seed) throw std::invalid_argument("descriptor missing p= or seed=");
        return make_transparent_context(seed, p);
    }
    if (head == "curve") {
        std::string tok;
        while (in >> tok) {
            if (tok.rfind("id=", 0) == 0) return make_curve_context(tok.substr(3));
            throw std::invalid_argument("bad descriptor token: " + tok);
        }
        throw std::invalid_argument("descriptor missing id=");
    }
    throw std::invalid_argument("unknown backend in descriptor: " + head);
}

}  // namespace vanetsig
