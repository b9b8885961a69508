#ifndef VANETSIG_ALGEBRA_HPP_
#define VANETSIG_ALGEBRA_HPP_

// Pairing-group abstraction used by the whole signature stack.
//
// Two interchangeable backends sit behind GroupContext:
//
//  * "transparent" — groups are Z_p written multiplicatively.  An element
//    is just its exponent with respect to a fixed generator, so every
//    discrete log is known (known_log()) and the pairing is literally
//    exponent multiplication: e(g^a, h^b) = t^(a*b).  This makes protocol
//    identities checkable against plain modular arithmetic and is the
//    backend all correctness tests run on.
//
//  * "curve" — a supersingular curve E: y^2 = x^3 + x over F_q with
//    q ≡ 3 (mod 4), embedding degree 2, and the modified Tate pairing
//    via the distortion map (x,y) -> (-x, iy).  Source and target groups
//    have prime order r.  Nothing in the scheme relies on G1 == G2, so
//    the same symmetric instantiation serves both source-group slots.
//
// Elements are small value types bound to their backend; all arithmetic
// is forwarded through the backend vtable.  The context counts pairing
// evaluations (and only those), which the batch-verification tests use
// to audit work.

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

#include "vanetsig/bigint.hpp"
#include "vanetsig/bytes.hpp"

namespace vanetsig {

using Rng = std::mt19937_64;

// Independent hash domains.  Vehicle/Opener map into the source group,
// Gm/Challenge map into Z_p*.
enum class HashTag : std::uint8_t { Vehicle = 0, Opener = 1, Gm = 2, Challenge = 3 };

enum class GroupKind : std::uint8_t { G1 = 0, G2 = 1, G3 = 2 };

namespace detail {

struct EcPoint {
    Int x;
    Int y;
    bool inf = true;
    friend bool operator==(const EcPoint&, const EcPoint&) = default;
};

// a + b*i with i^2 = -1; the quadratic extension the curve pairing lands in.
struct Fq2 {
    Int a;
    Int b;
    friend bool operator==(const Fq2&, const Fq2&) = default;
};

using Rep = std::variant<Int, EcPoint, Fq2>;

class Backend {
public:
    virtual ~Backend() = default;

    virtual std::string name() const = 0;
    virtual std::string descriptor() const = 0;

    const Int& order() const { return order_; }

    virtual Rep generator(GroupKind k) const = 0;
    virtual Rep identity(GroupKind k) const = 0;
    virtual Rep op(GroupKind k, const Rep& a, const Rep& b) const = 0;
    virtual Rep inv(GroupKind k, const Rep& a) const = 0;
    virtual Rep pow(GroupKind k, const Rep& a, const Int& e) const = 0;
    virtual bool valid(GroupKind k, const Rep& a) const = 0;
    virtual Bytes serialize(GroupKind k, const Rep& a) const = 0;
    // Throws std::invalid_argument on malformed or non-member input.
    virtual Rep parse(GroupKind k, BytesView in) const = 0;

    virtual Rep pair_uncounted(const Rep& a, const Rep& b) const = 0;
    virtual Rep hash_to_source(HashTag t, BytesView msg) const = 0;

    // Transparent backend reveals exponents; curve backend declines.
    virtual std::optional<Int> known_log(GroupKind k, const Rep& a) const {
        (void)k;
        (void)a;
        return std::nullopt;
    }

    // Uniform-enough value in [1, order-1], derived from SHA-256 expansion.
    Int hash_to_scalar(HashTag t, BytesView msg) const;

    std::uint64_t pairing_count() const { return counter_.load(std::memory_order_relaxed); }
    void reset_pairing_count() const { counter_.store(0, std::memory_order_relaxed); }
    void count_pairing() const { counter_.fetch_add(1, std::memory_order_relaxed); }

protected:
    Int order_;
    mutable std::atomic<std::uint64_t> counter_{0};
};

using BackendPtr = std::shared_ptr<const Backend>;

// Hash-expansion helper shared by both backends: SHA-256 blocks over
// (label || 0x00 || ctr || blockindex || msg), concatenated until at
// least `bits` + 128 bits are available, read as a big-endian integer.
Int expand_to_int(std::string_view label, std::uint32_t ctr, BytesView msg, std::size_t bits);

std::string_view tag_label(HashTag t);

}  // namespace detail

class GroupContext;
class Scalar;

template <GroupKind K>
class Elem {
public:
    Elem() = default;

    bool is_null() const { return be_ == nullptr; }
    bool is_identity() const { return rep_ == be().identity(K); }
    bool valid() const { return be().valid(K, rep_); }

    Elem pow(const Int& e) const { return Elem(be_, be().pow(K, rep_, e)); }
    Elem pow(const Scalar& e) const;
    Elem inverse() const { return Elem(be_, be().inv(K, rep_)); }
    Bytes serialize() const { return be().serialize(K, rep_); }

    friend Elem operator*(const Elem& a, const Elem& b) {
        return Elem(a.be_, a.be().op(K, a.rep_, b.rep_));
    }
    friend Elem operator/(const Elem& a, const Elem& b) {
        return Elem(a.be_, a.be().op(K, a.rep_, a.be().inv(K, b.rep_)));
    }
    friend bool operator==(const Elem& a, const Elem& b) {
        if (!a.be_ || !b.be_) return a.be_ == b.be_;
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

private:
    friend class GroupContext;
    friend Elem<GroupKind::G3> pairing(const Elem<GroupKind::G1>&, const Elem<GroupKind::G2>&);

    Elem(detail::BackendPtr be, detail::Rep rep) : be_(std::move(be)), rep_(std::move(rep)) {}

    const detail::Backend& be() const {
        if (!be_) throw std::logic_error("operation on null group element");
        return *be_;
    }

    detail::BackendPtr be_;
    detail::Rep rep_;
};

using G1Elem = Elem<GroupKind::G1>;
using G2Elem = Elem<GroupKind::G2>;
using G3Elem = Elem<GroupKind::G3>;

class Scalar {
public:
    Scalar() = default;

    const Int& value() const { return v_; }
    bool is_null() const { return be_ == nullptr; }
    bool is_zero() const { return v_ == 0; }

    Scalar inverse() const;   // throws std::domain_error on zero
    Scalar operator-() const;
    Bytes serialize() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.be_, mod(a.v_ + b.v_, a.order()));
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.be_, mod(a.v_ - b.v_, a.order()));
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.be_, mod(a.v_ * b.v_, a.order()));
    }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }

private:
    friend class GroupContext;
    template <GroupKind K>
    friend class Elem;

    Scalar(detail::BackendPtr be, Int v) : be_(std::move(be)), v_(std::move(v)) {}

    const Int& order() const {
        if (!be_) throw std::logic_error("operation on null scalar");
        return be_->order();
    }

    detail::BackendPtr be_;
    Int v_;
};

template <GroupKind K>
Elem<K> Elem<K>::pow(const Scalar& e) const {
    return Elem(be_, be().pow(K, rep_, e.v_));
}

// Pairing as a free function so protocol code reads like the math.
// Every call increments the context's pairing counter.
inline G3Elem pairing(const G1Elem& a, const G2Elem& b) {
    const detail::Backend& be = *a.be_;
    be.count_pairing();
    return G3Elem(a.be_, be.pair_uncounted(a.rep_, b.rep_));
}

class GroupContext {
public:
    GroupContext() = default;

    explicit operator bool() const { return be_ != nullptr; }
    std::string name() const { return be().name(); }
    std::string descriptor() const { return be().descriptor(); }
    const Int& order() const { return be().order(); }

    G1Elem g1_generator() const { return G1Elem(be_, be().generator(GroupKind::G1)); }
    G2Elem g2_generator() const { return G2Elem(be_, be().generator(GroupKind::G2)); }
    G3Elem g3_generator() const { return G3Elem(be_, be().generator(GroupKind::G3)); }
    G1Elem g1_identity() const { return G1Elem(be_, be().identity(GroupKind::G1)); }
    G2Elem g2_identity() const { return G2Elem(be_, be().identity(GroupKind::G2)); }
    G3Elem g3_identity() const { return G3Elem(be_, be().identity(GroupKind::G3)); }

    G3Elem pair(const G1Elem& a, const G2Elem& b) const {
        be().count_pairing();
        return G3Elem(be_, be().pair_uncounted(rep(a), rep(b)));
    }

    std::uint64_t pairing_count() const { return be().pairing_count(); }
    void reset_pairing_count() const { be().reset_pairing_count(); }

    G1Elem hash_to_g1(HashTag t, std::string_view msg) const {
        if (t != HashTag::Vehicle && t != HashTag::Opener)
            throw std::invalid_argument("hash_to_g1: tag must map to the source group");
        Bytes m = as_bytes(msg);
        return G1Elem(be_, be().hash_to_source(t, m));
    }
    Scalar hash_to_zp(HashTag t, std::string_view msg) const {
        Bytes m = as_bytes(msg);
        return Scalar(be_, be().hash_to_scalar(t, m));
    }
    Scalar hash_to_zp(HashTag t, BytesView msg) const {
        return Scalar(be_, be().hash_to_scalar(t, msg));
    }

    Scalar scalar(const Int& v) const { return Scalar(be_, mod(v, order())); }
    Scalar scalar(std::int64_t v) const { return scalar(Int(v)); }

    // Uniform in [1, p-1].
    Scalar random_scalar_nonzero(Rng& rng) const;
    // Uniform in [0, p-1].
    Scalar random_scalar(Rng& rng) const;
    // Uniform non-identity source-group element.
    G1Elem random_g1(Rng& rng) const;

    G1Elem parse_g1(BytesView in) const { return G1Elem(be_, be().parse(GroupKind::G1, in)); }
    G2Elem parse_g2(BytesView in) const { return G2Elem(be_, be().parse(GroupKind::G2, in)); }
    G3Elem parse_g3(BytesView in) const { return G3Elem(be_, be().parse(GroupKind::G3, in)); }
    Scalar parse_scalar(BytesView in) const;

    template <GroupKind K>
    std::optional<Int> known_log(const Elem<K>& x) const {
        return be().known_log(K, rep(x));
    }

    // Structural homomorphism between the two source-group slots.  Both
    // backends realize the groups identically, so this is the identity
    // map on representations.  Declared for interface completeness; no
    // protocol step uses it.
    G2Elem lift_to_g2(const G1Elem& x) const { return G2Elem(be_, rep(x)); }

    friend bool operator==(const GroupContext& a, const GroupContext& b) {
        return a.be_ == b.be_;
    }

private:
    template <GroupKind K>
    static const detail::Rep& rep(const Elem<K>& x) {
        return x.rep_;
    }

    friend GroupContext make_transparent_context(std::uint64_t, const Int&);
    friend GroupContext make_curve_context(std::string_view);

    explicit GroupContext(detail::BackendPtr be) : be_(std::move(be)) {}

    const detail::Backend& be() const {
        if (!be_) throw std::logic_error("operation on empty group context");
        return *be_;
    }

    detail::BackendPtr be_;
};

// Transparent backend over Z_p; p must be prime (checked) and odd.
// Default modulus is the Mersenne prime 2^31 - 1: big enough that random
// collisions never disturb tests, small enough that exponent arithmetic
// is instant.
GroupContext make_transparent_context(std::uint64_t seed, const Int& p);
GroupContext make_transparent_context(std::uint64_t seed);

// Curve backend.  Known ids: "ss256" (257-bit field, testing grade) and
// "ss512" (512-bit field, default).  Throws std::invalid_argument for
// unknown ids.
GroupContext make_curve_context(std::string_view curve_id);

// Rebuilds a context from GroupContext::descriptor() output, e.g.
// "transparent p=2147483647 seed=42" or "curve id=ss512".
GroupContext context_from_descriptor(std::string_view text);

}  // namespace vanetsig

#endif  // VANETSIG_ALGEBRA_HPP_
