#include <array>
#include <map>
#include <mutex>

#include "vanetsig/algebra.hpp"

// Supersingular pairing backend.
//
// E: y^2 = x^3 + x over F_q with q ≡ 3 (mod 4).  Then #E(F_q) = q + 1 =
// c * r with r a 160-bit prime, the embedding degree is 2, and
// φ(x, y) = (-x, iy) is a distortion map into E(F_q^2) \ E(F_q), where
// F_q^2 = F_q[i], i^2 = -1.  The modified Tate pairing
//
//     ê(P, Q) = f_{r,P}(φ(Q)) ^ ((q^2 - 1) / r)
//
// is non-degenerate on the order-r subgroup.  Because (q^2 - 1) / r =
// (q - 1) * c, every factor of the Miller value that lies in F_q^* is
// killed by the final exponentiation, so vertical lines (and all
// denominators) can be dropped from the Miller loop entirely.
//
// Both source-group slots use the same subgroup with independent fixed
// generators; the target group is the order-r subgroup of F_q^2^*.

namespace vanetsig {

namespace {

using detail::EcPoint;
using detail::Fq2;
using detail::Rep;

struct CurveSpec {
    const char* id;
    const char* q;
    const char* r;
    const char* c;
    const char* ax;
    const char* ay;
    const char* bx;
    const char* by;
};

// Parameters found by sieving k so that q = k*r - 1 is prime with
// q ≡ 3 (mod 4) for a random 160-bit prime r; generators are cofactor-
// cleared hashes of fixed strings.
constexpr CurveSpec kCurveSpecs[] = {
    {
        "ss256",
        "1595ceb961c831b493aca2c646aecfc4c8ada7683023d84d99a35f01650c751e3",
        "c386bbc4cd613e30d8f16adf91b7584a2265b2df",
        "1c42dddc22f41f7cd1cddee9c",
        "497ab6b7666b67820bfcadd75931e6e2da24a18d349bb3b131050e6504b44024",
        "72efc34861ef2f6bc67e5cbbbc2175a505595254c71df0a2351fefec90b87a43",
        "138911aecf23259ae08a912220f68f2b40b7846bb3f570cfdb6c202e53bbab88d",
        "c9e24ef27400d4ef62b0a4fd7c95408d29874e8b10c6b0386faa0fd56aacbf92",
    },
    {
        "ss512",
        "dca2737f346e65c8ce639cd6f791a5454d2e9385b8cb741d3c8988e5b7de0a7b"
        "4c6031d5e95846ac9ebd911b653a9697919caa6c9f6e41287b8957f4375065f3",
        "8e7a269fd95bafc8f2a4d27bdcf4bb99f4bea97b",
        "18c6e800b4268636f98b7df4f7d214e972809cc893b4bee51650936624bf8b43"
        "aae2321e6d60476177dfbad9c",
        "451d4b89a036d940fe61813d0ee3352dd810981a92c5812de176ef24e5954861"
        "102de36701c5a210b4aea38d5cc8c9689099766488905beb0391316e4ca59f18",
        "4995f82aa3cf35626e6377a035a1c2357abc1bfdf2e7c8b7a01e48b048d34e2f"
        "d19bd29ffccf634597660f878641b3003c51951e9d2c498010a42e84c2d88091",
        "41f4d602ae0125df0f3ea2bea60657559e15c833d527ce2b561cd90f5f7290c6"
        "fd980bfe2e092e0e88c71cc2c7252aff7edd4d57dc9da9dd048c15223de542a2",
        "74b560a3d823a593314eb4687033e24db64073f1874f0d057a1f01816bebe28b"
        "22a9c3333e75aee2afd2a426fd5dff5828257a91ca386d056dc0ee2976b92e55",
    },
};

struct CurveParams {
    std::string id;
    Int q, r, c;
    Int sqrt_exp;  // (q + 1) / 4, for square roots mod q
    EcPoint A, B;
    std::size_t fq_bytes;
};

bool on_curve(const CurveParams& cp, const EcPoint& p) {
    if (p.inf) return true;
    if (p.x < 0 || p.x >= cp.q || p.y < 0 || p.y >= cp.q) return false;
    Int lhs = mulmod(p.y, p.y, cp.q);
    Int rhs = mod(mulmod(mulmod(p.x, p.x, cp.q), p.x, cp.q) + p.x, cp.q);
    return lhs == rhs;
}

EcPoint ec_neg(const CurveParams& cp, const EcPoint& p) {
    if (p.inf) return p;
    return EcPoint{p.x, mod(-p.y, cp.q), false};
}

EcPoint ec_add(const CurveParams& cp, const EcPoint& p, const EcPoint& t) {
    if (p.inf) return t;
    if (t.inf) return p;
    const Int& q = cp.q;
    Int lam;
    if (p.x == t.x) {
        if (mod(p.y + t.y, q) == 0) return EcPoint{};  // P + (-P)
        // tangent: (3x^2 + 1) / (2y)
        Int num = mod(3 * mulmod(p.x, p.x, q) + 1, q);
        lam = mulmod(num, invmod(mod(2 * p.y, q), q), q);
    } else {
        lam = mulmod(mod(t.y - p.y, q), invmod(mod(t.x - p.x, q), q), q);
    }
    Int x3 = mod(mulmod(lam, lam, q) - p.x - t.x, q);
    Int y3 = mod(mulmod(lam, mod(p.x - x3, q), q) - p.y, q);
    return EcPoint{x3, y3, false};
}

EcPoint ec_mul(const CurveParams& cp, const Int& k, const EcPoint& p) {
    if (k == 0 || p.inf) return EcPoint{};
    EcPoint acc{};
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(boost::multiprecision::msb(k)); i >= 0; --i) {
        acc = ec_add(cp, acc, acc);
        if (boost::multiprecision::bit_test(k, static_cast<unsigned>(i))) acc = ec_add(cp, acc, p);
    }
    return acc;
}

Fq2 fq2_one() { return Fq2{1, 0}; }

Fq2 fq2_mul(const CurveParams& cp, const Fq2& u, const Fq2& v) {
    const Int& q = cp.q;
    return Fq2{mod(u.a * v.a - u.b * v.b, q), mod(u.a * v.b + u.b * v.a, q)};
}

Fq2 fq2_conj(const CurveParams& cp, const Fq2& u) { return Fq2{u.a, mod(-u.b, cp.q)}; }

Fq2 fq2_inv(const CurveParams& cp, const Fq2& u) {
    // (a + bi)^-1 = (a - bi) / (a^2 + b^2)
    const Int& q = cp.q;
    Int norm = mod(u.a * u.a + u.b * u.b, q);
    Int ninv = invmod(norm, q);
    return Fq2{mulmod(u.a, ninv, q), mulmod(mod(-u.b, q), ninv, q)};
}

Fq2 fq2_pow(const CurveParams& cp, const Fq2& u, const Int& e) {
    if (e == 0) return fq2_one();
    Fq2 acc = fq2_one();
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(boost::multiprecision::msb(e)); i >= 0; --i) {
        acc = fq2_mul(cp, acc, acc);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) acc = fq2_mul(cp, acc, u);
    }
    return acc;
}

// Line through S and T (tangent when S == T) evaluated at
// φ(Q) = (-x_Q, i*y_Q).  Vertical lines contribute an F_q^* factor that
// the final exponentiation kills, so they evaluate to 1.  For the
// generic line y = λ(x - x_S) + y_S the value at φ(Q) is
//   (i*y_Q) - λ(-x_Q - x_S) - y_S  =  (-y_S - λ(-x_Q - x_S)) + i*y_Q.
Fq2 miller_line(const CurveParams& cp, const EcPoint& s, const EcPoint& t, const EcPoint& qpt) {
    if (s.inf || t.inf) return fq2_one();
    const Int& q = cp.q;
    Int lam;
    if (s.x == t.x) {
        if (mod(s.y + t.y, q) == 0) return fq2_one();  // vertical
        Int num = mod(3 * mulmod(s.x, s.x, q) + 1, q);
        lam = mulmod(num, invmod(mod(2 * s.y, q), q), q);
    } else {
        lam = mulmod(mod(t.y - s.y, q), invmod(mod(t.x - s.x, q), q), q);
    }
    Int c0 = mod(-s.y - lam * mod(-qpt.x - s.x, q), q);
    return Fq2{c0, qpt.y};
}

Fq2 tate_pairing(const CurveParams& cp, const EcPoint& p, const EcPoint& qpt) {
    if (p.inf || qpt.inf) return fq2_one();
    Fq2 f = fq2_one();
    EcPoint s = p;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(boost::multiprecision::msb(cp.r)) - 1; i >= 0; --i) {
        f = fq2_mul(cp, fq2_mul(cp, f, f), miller_line(cp, s, s, qpt));
        s = ec_add(cp, s, s);
        if (boost::multiprecision::bit_test(cp.r, static_cast<unsigned>(i))) {
            f = fq2_mul(cp, f, miller_line(cp, s, p, qpt));
            s = ec_add(cp, s, p);
        }
    }
    // final exponentiation: (q^2-1)/r = (q-1)*c; f^(q-1) = conj(f)/f.
    Fq2 m = fq2_mul(cp, fq2_conj(cp, f), fq2_inv(cp, f));
    return fq2_pow(cp, m, cp.c);
}

const CurveParams& curve_params(std::string_view id) {
    static std::map<std::string, CurveParams, std::less<>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(id); it != cache.end()) return it->second;

    const CurveSpec* spec = nullptr;
    for (const CurveSpec& s : kCurveSpecs)
        if (id == s.id) spec = &s;
    if (spec == nullptr) throw std::invalid_argument("unknown curve id: " + std::string(id));

    CurveParams cp;
    cp.id = spec->id;
    cp.q = Int("0x" + std::string(spec->q));
    cp.r = Int("0x" + std::string(spec->r));
    cp.c = Int("0x" + std::string(spec->c));
    cp.sqrt_exp = (cp.q + 1) / 4;
    cp.A = EcPoint{Int("0x" + std::string(spec->ax)), Int("0x" + std::string(spec->ay)), false};
    cp.B = EcPoint{Int("0x" + std::string(spec->bx)), Int("0x" + std::string(spec->by)), false};
    cp.fq_bytes = (boost::multiprecision::msb(cp.q) + 1 + 7) / 8;

    // One-time sanity checks on the hardcoded constants.
    if (cp.q % 4 != 3 || cp.c * cp.r != cp.q + 1) throw std::logic_error("curve table: bad group order");
    if (!probably_prime(cp.q) || !probably_prime(cp.r)) throw std::logic_error("curve table: q and r must be prime");
    if (!on_curve(cp, cp.A) || !on_curve(cp, cp.B)) throw std::logic_error("curve table: generator off curve");
    if (!ec_mul(cp, cp.r, cp.A).inf || !ec_mul(cp, cp.r, cp.B).inf)
        throw std::logic_error("curve table: generator has wrong order");

    return cache.emplace(std::string(id), std::move(cp)).first->second;
}

class CurveBackend final : public detail::Backend {
public:
    explicit CurveBackend(const CurveParams& cp) : cp_(cp) {
        order_ = cp_.r;
        gt_gen_ = tate_pairing(cp_, cp_.A, cp_.B);
        if (gt_gen_ == fq2_one()) throw std::logic_error("degenerate pairing on curve generators");
    }

    std::string name() const override { return "curve"; }
    std::string descriptor() const override { return "curve id=" + cp_.id; }

    Rep generator(GroupKind k) const override {
        switch (k) {
            case GroupKind::G1: return cp_.A;
            case GroupKind::G2: return cp_.B;
            case GroupKind::G3: return gt_gen_;
        }
        throw std::logic_error("bad group kind");
    }

    Rep identity(GroupKind k) const override {
        if (k == GroupKind::G3) return fq2_one();
        return EcPoint{};
    }

    Rep op(GroupKind k, const Rep& a, const Rep& b) const override {
        if (k == GroupKind::G3) return fq2_mul(cp_, tgt(a), tgt(b));
        return ec_add(cp_, src(a), src(b));
    }

    Rep inv(GroupKind k, const Rep& a) const override {
        if (k == GroupKind::G3) return fq2_inv(cp_, tgt(a));
        return ec_neg(cp_, src(a));
    }

    Rep pow(GroupKind k, const Rep& a, const Int& e) const override {
        Int ee = mod(e, cp_.r);
        if (k == GroupKind::G3) return fq2_pow(cp_, tgt(a), ee);
        return ec_mul(cp_, ee, src(a));
    }

    bool valid(GroupKind k, const Rep& a) const override {
        if (k == GroupKind::G3) {
            const Fq2* u = std::get_if<Fq2>(&a);
            if (u == nullptr) return false;
            if (u->a < 0 || u->a >= cp_.q || u->b < 0 || u->b >= cp_.q) return false;
            if (u->a == 0 && u->b == 0) return false;
            return fq2_pow(cp_, *u, cp_.r) == fq2_one();
        }
        const EcPoint* p = std::get_if<EcPoint>(&a);
        if (p == nullptr || !on_curve(cp_, *p)) return false;
        return ec_mul(cp_, cp_.r, *p).inf;
    }

    Bytes serialize(GroupKind k, const Rep& a) const override {
        Bytes payload;
        if (k == GroupKind::G3) {
            const Fq2& u = tgt(a);
            append(payload, to_be_bytes_fixed(u.a, cp_.fq_bytes));
            append(payload, to_be_bytes_fixed(u.b, cp_.fq_bytes));
        } else {
            const EcPoint& p = src(a);
            if (p.inf) {
                append_u8(payload, 0x00);
            } else {
                append_u8(payload, 0x04);
                append(payload, to_be_bytes_fixed(p.x, cp_.fq_bytes));
                append(payload, to_be_bytes_fixed(p.y, cp_.fq_bytes));
            }
        }
        Bytes out;
        append_framed(out, payload);
        return out;
    }

    Rep parse(GroupKind k, BytesView in) const override {
        std::size_t pos = 0;
        Bytes payload = read_frame(in, pos);
        if (pos != in.size()) throw std::invalid_argument("trailing bytes after element");
        if (k == GroupKind::G3) {
            if (payload.size() != 2 * cp_.fq_bytes) throw std::invalid_argument("bad target-group encoding length");
            BytesView v(payload);
            Fq2 u{from_be_bytes(v.subspan(0, cp_.fq_bytes)), from_be_bytes(v.subspan(cp_.fq_bytes))};
            if (!valid(k, u)) throw std::invalid_argument("target-group element outside order-r subgroup");
            return u;
        }
        if (payload.size() == 1 && payload[0] == 0x00) return EcPoint{};
        if (payload.size() != 1 + 2 * cp_.fq_bytes || payload[0] != 0x04)
            throw std::invalid_argument("bad curve-point encoding");
        BytesView v(payload);
        EcPoint p{from_be_bytes(v.subspan(1, cp_.fq_bytes)), from_be_bytes(v.subspan(1 + cp_.fq_bytes)), false};
        if (!valid(k, p)) throw std::invalid_argument("point not in the prime-order subgroup");
        return p;
    }

    Rep pair_uncounted(const Rep& a, const Rep& b) const override {
        return tate_pairing(cp_, src(a), src(b));
    }

    Rep hash_to_source(HashTag t, BytesView msg) const override {
        std::string_view label = detail::tag_label(t);
        std::size_t qbits = boost::multiprecision::msb(cp_.q) + 1;
        for (std::uint32_t ctr = 0; ctr < 1000; ++ctr) {
            Int x = mod(detail::expand_to_int(label, ctr, msg, qbits), cp_.q);
            Int rhs = mod(mulmod(mulmod(x, x, cp_.q), x, cp_.q) + x, cp_.q);
            if (rhs == 0) continue;  // avoid the 2-torsion point y = 0
            Int y = powmod(rhs, cp_.sqrt_exp, cp_.q);
            if (mulmod(y, y, cp_.q) != rhs) continue;  // rhs was a non-residue
            // pick the root whose parity matches a digest-derived bit
            Bytes sign_block;
            append(sign_block, label);
            append_u8(sign_block, 0x01);
            append_u32_be(sign_block, ctr);
            append(sign_block, msg);
            bool want_odd = (sha256(sign_block)[0] & 1) != 0;
            if ((boost::multiprecision::bit_test(y, 0)) != want_odd) y = mod(-y, cp_.q);
            EcPoint g = ec_mul(cp_, cp_.c, EcPoint{x, y, false});  // clear the cofactor
            if (g.inf) continue;
            return g;
        }
        throw std::runtime_error("hash_to_source: no curve point found");
    }

private:
    static const EcPoint& src(const Rep& r) { return std::get<EcPoint>(r); }
    static const Fq2& tgt(const Rep& r) { return std::get<Fq2>(r); }

    const CurveParams& cp_;
    Fq2 gt_gen_;
};

}  // namespace

GroupContext make_curve_context(std::string_view curve_id) {
    return GroupContext(std::make_shared<CurveBackend>(curve_params(curve_id)));
}

}  // namespace vanetsig
