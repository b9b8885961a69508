#include "vanetsig/algebra.hpp"

namespace vanetsig {

namespace {

using detail::Rep;

// Exponent-form groups: an element of any of the three groups is the
// integer a in g^a, stored mod p.  Multiplication adds exponents and the
// pairing multiplies them, which makes e(g^a, h^b) = t^(a*b) hold by
// construction.  Generators get random nonzero exponents derived from
// the seed so that tests cannot accidentally rely on g = g^1.
class TransparentBackend final : public detail::Backend {
public:
    TransparentBackend(std::uint64_t seed, const Int& p) : seed_(seed) {
        if (!probably_prime(p)) throw std::invalid_argument("transparent backend: modulus must be prime");
        if (p < 3) throw std::invalid_argument("transparent backend: modulus too small");
        order_ = p;
        Rng rng(seed ^ 0x7472616e73706172ULL);  // decoupled from caller RNG streams
        gen_[0] = draw_nonzero(rng);
        gen_[1] = draw_nonzero(rng);
        gen_[2] = mulmod(gen_[0], gen_[1], order_);
    }

    std::string name() const override { return "transparent"; }

    std::string descriptor() const override {
        return "transparent p=" + order_.str() + " seed=" + std::to_string(seed_);
    }

    Rep generator(GroupKind k) const override { return gen_[idx(k)]; }

    Rep identity(GroupKind) const override { return Int(0); }

    Rep op(GroupKind, const Rep& a, const Rep& b) const override {
        return mod(get(a) + get(b), order_);
    }

    Rep inv(GroupKind, const Rep& a) const override { return mod(-get(a), order_); }

    Rep pow(GroupKind, const Rep& a, const Int& e) const override {
        return mod(get(a) * mod(e, order_), order_);
    }

    bool valid(GroupKind, const Rep& a) const override {
        const Int* v = std::get_if<Int>(&a);
        return v != nullptr && *v >= 0 && *v < order_;
    }

    Bytes serialize(GroupKind, const Rep& a) const override {
        Bytes out;
        append_framed(out, to_be_bytes(get(a)));
        return out;
    }

    Rep parse(GroupKind, BytesView in) const override {
        std::size_t pos = 0;
        Bytes payload = read_frame(in, pos);
        if (pos != in.size()) throw std::invalid_argument("trailing bytes after element");
        if (!payload.empty() && payload[0] == 0)
            throw std::invalid_argument("non-minimal element encoding");
        Int v = from_be_bytes(payload);
        if (v >= order_) throw std::invalid_argument("element exponent out of range");
        return v;
    }

    Rep pair_uncounted(const Rep& a, const Rep& b) const override {
        return mulmod(get(a), get(b), order_);
    }

    Rep hash_to_source(HashTag t, BytesView msg) const override {
        return hash_to_scalar(t, msg);  // exponent in [1, p-1], so never the identity
    }

    std::optional<Int> known_log(GroupKind, const Rep& a) const override { return get(a); }

private:
    static std::size_t idx(GroupKind k) { return static_cast<std::size_t>(k); }

    static const Int& get(const Rep& r) { return std::get<Int>(r); }

    Int draw_nonzero(Rng& rng) {
        for (;;) {
            Int v = 0;
            std::size_t bits = boost::multiprecision::msb(order_ - 1) + 1;
            for (std::size_t i = 0; i < (bits + 63) / 64; ++i) {
                v <<= 64;
                v += Int(rng());
            }
            v = mod(v, order_);
            if (v != 0) return v;
        }
    }

    std::uint64_t seed_;
    Int gen_[3];
};

}  // namespace

GroupContext make_transparent_context(std::uint64_t seed, const Int& p) {
    return GroupContext(std::make_shared<TransparentBackend>(seed, p));
}

GroupContext make_transparent_context(std::uint64_t seed) {
    return make_transparent_context(seed, Int(2147483647));  // 2^31 - 1
}

}  // namespace vanetsig
