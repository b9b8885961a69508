#include "vanetsig/ibgs.hpp"

#include <stdexcept>

namespace vanetsig {

namespace {

void put_str(Bytes& buf, std::string_view s) { append_framed(buf, as_bytes(s)); }
void put_bytes(Bytes& buf, BytesView b) { append_framed(buf, b); }

// H_R(C || ID_R) — the scalar that binds a GM key to its identity.
Scalar hash_gm(const SystemParams& params, const G2Elem& C, std::string_view id_R) {
    Bytes buf = C.serialize();
    put_str(buf, id_R);
    return params.ctx.hash_to_zp(HashTag::Gm, BytesView(buf));
}

// Challenge hash of the signature scheme:
// f = H((Γ0..Γ3,Γ5) || C || v1 || V2 || M || (β0..β8)).
struct ChallengeInput {
    Bytes buf;
    void add(const Bytes& ser) { append(buf, ser); }
};

// Index aliasing used by all verifiers: the signer emits (z0,z1,z2,z3)
// while the verification displays consume (z0,z4,z5,z6).  The unique
// assignment making every β-reconstruction cancel is z4 = z1 (masks t),
// z5 = z2 (masks s2), z6 = z3 (masks d).
const Scalar& z4_of(const ModifiedSignature& s) { return s.z1; }
const Scalar& z5_of(const ModifiedSignature& s) { return s.z2; }
const Scalar& z6_of(const ModifiedSignature& s) { return s.z3; }

Scalar challenge_f(const SystemParams& params, const G1Elem& G0, const G1Elem& G1_, const G1Elem& G2_,
                   const G1Elem& G3_, const G1Elem& G5, const G2Elem& C, const G3Elem& v1,
                   const G2Elem& V2, std::string_view msg, const G1Elem& b0, const G1Elem& b1,
                   const G1Elem& b2, const G1Elem& b3, const G3Elem& b4, const G1Elem& b5,
                   const G3Elem& b6, const G2Elem& b7, const G3Elem& b8) {
    ChallengeInput in;
    in.add(G0.serialize());
    in.add(G1_.serialize());
    in.add(G2_.serialize());
    in.add(G3_.serialize());
    in.add(G5.serialize());
    in.add(C.serialize());
    in.add(v1.serialize());
    in.add(V2.serialize());
    put_str(in.buf, msg);
    in.add(b0.serialize());
    in.add(b1.serialize());
    in.add(b2.serialize());
    in.add(b3.serialize());
    in.add(b4.serialize());
    in.add(b5.serialize());
    in.add(b6.serialize());
    in.add(b7.serialize());
    in.add(b8.serialize());
    return params.ctx.hash_to_zp(HashTag::Challenge, BytesView(in.buf));
}

bool sane(const Scalar& s) { return !s.is_null(); }

template <GroupKind K>
bool sane(const Elem<K>& e) {
    return !e.is_null() && e.valid();
}

}  // namespace

std::pair<SystemParams, TeaSecret> setup(const GroupContext& ctx, Rng& rng) {
    SystemParams params;
    params.ctx = ctx;
    params.A1 = ctx.random_g1(rng);
    params.A2 = ctx.random_g1(rng);
    params.A3 = ctx.random_g1(rng);
    params.A4 = ctx.random_g1(rng);
    params.A5 = ctx.random_g1(rng);
    TeaSecret tea{ctx.random_scalar_nonzero(rng)};
    params.K_T = ctx.g2_generator().pow(tea.x_T);
    return {std::move(params), std::move(tea)};
}

GmKey keygen_gm(const SystemParams& params, const TeaSecret& tea, std::string_view id_R, Rng& rng) {
    if (id_R.empty()) throw std::invalid_argument("empty GM identity");
    Scalar r = params.ctx.random_scalar_nonzero(rng);
    G2Elem C = params.B().pow(r);
    Scalar x_R = r + hash_gm(params, C, id_R) * tea.x_T;
    return GmKey{std::string(id_R), std::move(C), std::move(x_R)};
}

OpenerKey keygen_tsd(const SystemParams& params, const TeaSecret& tea, std::string_view id_O) {
    if (id_O.empty()) throw std::invalid_argument("empty opener identity");
    return OpenerKey{std::string(id_O), params.ctx.hash_to_g1(HashTag::Opener, id_O).pow(tea.x_T)};
}

VehicleKey keygen_vehicle(const SystemParams& params, const TeaSecret& tea, std::string_view id_V) {
    if (id_V.empty()) throw std::invalid_argument("empty vehicle identity");
    return VehicleKey{std::string(id_V), params.ctx.hash_to_g1(HashTag::Vehicle, id_V).pow(tea.x_T)};
}

G2Elem group_value_S(const SystemParams& params, const G2Elem& C, std::string_view id_R) {
    return C * params.K_T.pow(hash_gm(params, C, id_R));
}

PoKTranscript pok_prove(const SystemParams& params, const VehicleKey& vk, BytesView nonce, Rng& rng) {
    G1Elem U = params.ctx.random_g1(rng);
    G3Elem R = params.ctx.pair(U, params.B());
    Bytes cin = R.serialize();
    put_str(cin, vk.id_V);
    put_bytes(cin, nonce);
    Scalar c = params.ctx.hash_to_zp(HashTag::Challenge, BytesView(cin));
    return PoKTranscript{std::move(R), U * vk.x_V.pow(c), Bytes(nonce.begin(), nonce.end())};
}

bool pok_verify(const SystemParams& params, std::string_view id_V, const PoKTranscript& transcript) {
    if (!sane(transcript.R) || !sane(transcript.V)) return false;
    Bytes cin = transcript.R.serialize();
    put_str(cin, id_V);
    put_bytes(cin, transcript.nonce);
    Scalar c = params.ctx.hash_to_zp(HashTag::Challenge, BytesView(cin));
    G3Elem lhs = params.ctx.pair(transcript.V, params.B());
    G3Elem rhs = transcript.R *
                 params.ctx.pair(params.ctx.hash_to_g1(HashTag::Vehicle, id_V), params.K_T).pow(c);
    return lhs == rhs;
}

std::pair<MembershipCertificate, RegistrationRecord> join_issue(
    const GmKey& gm, const SystemParams& params, std::string_view id_V,
    const PoKTranscript& transcript, Rng& rng) {
    if (!pok_verify(params, id_V, transcript))
        throw std::invalid_argument("join refused: proof of knowledge did not verify");

    G1Elem HV = params.ctx.hash_to_g1(HashTag::Vehicle, id_V);
    Scalar t = params.ctx.random_scalar_nonzero(rng);
    while ((t + gm.x_R).is_zero()) t = params.ctx.random_scalar_nonzero(rng);

    G1Elem D = (params.A5 / HV).pow((t + gm.x_R).inverse());
    G3Elem W = params.ctx.pair(HV, params.B());

    MembershipCertificate cert{D, t, gm.C};
    RegistrationRecord record{std::string(id_V), std::move(D), std::move(t), std::move(W)};
    return {std::move(cert), std::move(record)};
}

bool join_verify(const SystemParams& params, std::string_view id_V, const G1Elem& D,
                 const Scalar& t, const G2Elem& C, std::string_view id_R) {
    if (!sane(D) || !sane(C) || !sane(t)) return false;
    G2Elem S = group_value_S(params, C, id_R);
    G1Elem HV = params.ctx.hash_to_g1(HashTag::Vehicle, id_V);
    G3Elem lhs = params.ctx.pair(params.A5, params.B());
    G3Elem rhs = params.ctx.pair(D, params.B()).pow(t) * params.ctx.pair(D, S) *
                 params.ctx.pair(HV, params.B());
    return lhs == rhs;
}

Signature sign(const SystemParams& params, const VehicleCredential& cred, std::string_view id_O,
               std::string_view id_R, std::string_view msg, Rng& rng) {
    const GroupContext& ctx = params.ctx;
    G1Elem A = params.A();
    G2Elem B = params.B();
    G1Elem HV = ctx.hash_to_g1(HashTag::Vehicle, cred.key.id_V);
    G1Elem HO = ctx.hash_to_g1(HashTag::Opener, id_O);

    Signature sig;
    sig.C = cred.C;
    sig.S = group_value_S(params, cred.C, id_R);

    // step 1: blinded credential
    Scalar s1 = ctx.random_scalar_nonzero(rng);
    sig.Gamma0 = A.pow(s1);
    sig.Gamma1 = cred.key.x_V * params.A1.pow(s1);
    sig.Gamma2 = HV * params.A2.pow(s1);
    sig.Gamma3 = cred.D * params.A3.pow(s1);
    sig.Gamma5 = sig.Gamma3.pow(cred.t) * params.A4.pow(s1);
    Scalar s2 = cred.t * s1;

    // step 2: opener hook — v1 hides W = e(H_V(ID_V),B) under a fresh d
    Scalar d = ctx.random_scalar_nonzero(rng);
    G3Elem eHOKT = ctx.pair(HO, params.K_T);
    sig.v1 = ctx.pair(HV, B) * eHOKT.pow(d);
    sig.V2 = B.pow(d);

    // step 3: commitments
    Scalar r1 = ctx.random_scalar_nonzero(rng);
    Scalar r2 = ctx.random_scalar_nonzero(rng);
    Scalar r3 = ctx.random_scalar_nonzero(rng);
    Scalar r4 = ctx.random_scalar_nonzero(rng);
    G1Elem R1 = ctx.random_g1(rng);
    G1Elem R2 = ctx.random_g1(rng);
    G1Elem R3 = ctx.random_g1(rng);

    sig.beta0 = A.pow(r1);
    sig.beta1 = R1 * params.A1.pow(r1);
    sig.beta2 = R2 * params.A2.pow(r1);
    sig.beta3 = R3 * params.A3.pow(r1);
    sig.beta5 = sig.Gamma3.pow(r3) * params.A4.pow(r1);
    sig.beta7 = B.pow(r4);
    sig.beta4 = (ctx.pair(params.A1, B).inverse() * ctx.pair(params.A2, params.K_T)).pow(r1);
    sig.beta6 = ctx.pair(params.A3, B).pow(r2) *
                (ctx.pair(params.A3, sig.S) * ctx.pair(params.A2 * params.A4, B)).pow(r1);
    sig.beta8 = eHOKT.pow(r4) * ctx.pair(params.A2, B).pow(-r1);

    // step 4: challenge
    sig.f = challenge_f(params, sig.Gamma0, sig.Gamma1, sig.Gamma2, sig.Gamma3, sig.Gamma5, sig.C,
                        sig.v1, sig.V2, msg, sig.beta0, sig.beta1, sig.beta2, sig.beta3, sig.beta4,
                        sig.beta5, sig.beta6, sig.beta7, sig.beta8);

    // step 5: responses
    sig.z0 = r1 - sig.f * s1;
    sig.z1 = r3 - sig.f * cred.t;
    sig.z2 = r2 - sig.f * s2;
    sig.z3 = r4 - sig.f * d;
    sig.Z1 = R1 * cred.key.x_V.pow(-sig.f);
    sig.Z2 = R2 * HV.pow(-sig.f);
    sig.Z3 = R3 * cred.D.pow(-sig.f);
    return sig;
}

ModifiedSignature to_modified(const Signature& sig) {
    ModifiedSignature m;
    m.Gamma0 = sig.Gamma0;
    m.Gamma1 = sig.Gamma1;
    m.Gamma2 = sig.Gamma2;
    m.Gamma3 = sig.Gamma3;
    m.Gamma5 = sig.Gamma5;
    m.z0 = sig.z0;
    m.z1 = sig.z1;
    m.z2 = sig.z2;
    m.z3 = sig.z3;
    m.Z1 = sig.Z1;
    m.Z2 = sig.Z2;
    m.Z3 = sig.Z3;
    m.beta4 = sig.beta4;
    m.beta6 = sig.beta6;
    m.beta8 = sig.beta8;
    m.f = sig.f;
    m.C = sig.C;
    m.v1 = sig.v1;
    m.V2 = sig.V2;
    return m;
}

bool verify_individual_original(const SystemParams& params, const Signature& sig,
                                std::string_view msg, std::string_view id_O, std::string_view id_R) {
    const GroupContext& ctx = params.ctx;
    // membership checks on everything this verifier consumes, before any
    // pairing work
    if (!sane(sig.Gamma0) || !sane(sig.Gamma1) || !sane(sig.Gamma2) || !sane(sig.Gamma3) ||
        !sane(sig.Gamma5) || !sane(sig.Z1) || !sane(sig.Z2) || !sane(sig.Z3) || !sane(sig.C) ||
        !sane(sig.v1) || !sane(sig.V2) || !sane(sig.z0) || !sane(sig.z1) || !sane(sig.z2) ||
        !sane(sig.z3) || !sane(sig.f) || sig.f.is_zero())
        return false;

    G1Elem A = params.A();
    G2Elem B = params.B();
    G2Elem S = group_value_S(params, sig.C, id_R);
    G1Elem HO = ctx.hash_to_g1(HashTag::Opener, id_O);

    // the three pairing-products the signature commits to
    G3Elem Gamma4 = ctx.pair(sig.Gamma1, B).inverse() * ctx.pair(sig.Gamma2, params.K_T);
    G3Elem Gamma6 = ctx.pair(params.A5, B).inverse() * ctx.pair(sig.Gamma3, S) *
                    ctx.pair(sig.Gamma2 * sig.Gamma5, B);
    G3Elem Gamma8 = sig.v1 * ctx.pair(sig.Gamma2, B).inverse();

    const Scalar& z4 = sig.z1;
    const Scalar& z5 = sig.z2;
    const Scalar& z6 = sig.z3;

    G1Elem b0 = A.pow(sig.z0) * sig.Gamma0.pow(sig.f);
    G1Elem b1 = sig.Z1 * params.A1.pow(sig.z0) * sig.Gamma1.pow(sig.f);
    G1Elem b2 = sig.Z2 * params.A2.pow(sig.z0) * sig.Gamma2.pow(sig.f);
    G1Elem b3 = sig.Z3 * params.A3.pow(sig.z0) * sig.Gamma3.pow(sig.f);
    G1Elem b5 = sig.Gamma3.pow(z4) * params.A4.pow(sig.z0) * sig.Gamma5.pow(sig.f);
    G2Elem b7 = B.pow(z6) * sig.V2.pow(sig.f);
    G3Elem b4 = (ctx.pair(params.A1, B).inverse() * ctx.pair(params.A2, params.K_T)).pow(sig.z0) *
                Gamma4.pow(sig.f);
    G3Elem b6 = ctx.pair(params.A3, B).pow(z5) *
                (ctx.pair(params.A3, S) * ctx.pair(params.A2 * params.A4, B)).pow(sig.z0) *
                Gamma6.pow(sig.f);
    G3Elem b8 = ctx.pair(HO, params.K_T).pow(z6) * ctx.pair(params.A2, B).pow(-sig.z0) *
                Gamma8.pow(sig.f);

    Scalar f = challenge_f(params, sig.Gamma0, sig.Gamma1, sig.Gamma2, sig.Gamma3, sig.Gamma5,
                           sig.C, sig.v1, sig.V2, msg, b0, b1, b2, b3, b4, b5, b6, b7, b8);
    return f == sig.f;
}

bool check_modified_challenge(const SystemParams& params, const ModifiedSignature& sig,
                              std::string_view msg) {
    if (!sane(sig.Gamma0) || !sane(sig.Gamma1) || !sane(sig.Gamma2) || !sane(sig.Gamma3) ||
        !sane(sig.Gamma5) || !sane(sig.Z1) || !sane(sig.Z2) || !sane(sig.Z3) || !sane(sig.beta4) ||
        !sane(sig.beta6) || !sane(sig.beta8) || !sane(sig.C) || !sane(sig.v1) || !sane(sig.V2) ||
        !sane(sig.z0) || !sane(sig.z1) || !sane(sig.z2) || !sane(sig.z3) || !sane(sig.f) ||
        sig.f.is_zero())
        return false;

    G1Elem A = params.A();
    G2Elem B = params.B();
    const Scalar& z4 = z4_of(sig);
    const Scalar& z6 = z6_of(sig);

    G1Elem b0 = A.pow(sig.z0) * sig.Gamma0.pow(sig.f);
    G1Elem b1 = sig.Z1 * params.A1.pow(sig.z0) * sig.Gamma1.pow(sig.f);
    G1Elem b2 = sig.Z2 * params.A2.pow(sig.z0) * sig.Gamma2.pow(sig.f);
    G1Elem b3 = sig.Z3 * params.A3.pow(sig.z0) * sig.Gamma3.pow(sig.f);
    G1Elem b5 = sig.Gamma3.pow(z4) * params.A4.pow(sig.z0) * sig.Gamma5.pow(sig.f);
    G2Elem b7 = B.pow(z6) * sig.V2.pow(sig.f);

    Scalar f = challenge_f(params, sig.Gamma0, sig.Gamma1, sig.Gamma2, sig.Gamma3, sig.Gamma5,
                           sig.C, sig.v1, sig.V2, msg, b0, b1, b2, b3, sig.beta4, b5, sig.beta6,
                           b7, sig.beta8);
    return f == sig.f;
}

bool verify_individual_modified(const SystemParams& params, const ModifiedSignature& sig,
                                std::string_view msg, std::string_view id_O, std::string_view id_R) {
    const GroupContext& ctx = params.ctx;
    if (!check_modified_challenge(params, sig, msg)) return false;

    G2Elem B = params.B();
    G2Elem S = group_value_S(params, sig.C, id_R);
    G1Elem HO = ctx.hash_to_g1(HashTag::Opener, id_O);

    const Scalar& z5 = z5_of(sig);
    const Scalar& z6 = z6_of(sig);

    // pairing checks for the transmitted (β4, β6, β8)
    G3Elem want4 = (ctx.pair(params.A1, B).inverse() * ctx.pair(params.A2, params.K_T)).pow(sig.z0) *
                   (ctx.pair(sig.Gamma1, B).inverse() * ctx.pair(sig.Gamma2, params.K_T)).pow(sig.f);
    if (sig.beta4 != want4) return false;

    G3Elem want6 = ctx.pair(params.A3, B).pow(z5) *
                   (ctx.pair(params.A3, S) * ctx.pair(params.A2 * params.A4, B)).pow(sig.z0) *
                   (ctx.pair(params.A5, B).inverse() * ctx.pair(sig.Gamma3, S) *
                    ctx.pair(sig.Gamma2 * sig.Gamma5, B))
                       .pow(sig.f);
    if (sig.beta6 != want6) return false;

    G3Elem want8 = ctx.pair(HO, params.K_T).pow(z6) * ctx.pair(params.A2, B).pow(-sig.z0) *
                   (sig.v1 * ctx.pair(sig.Gamma2, B).inverse()).pow(sig.f);
    return sig.beta8 == want8;
}

namespace {

constexpr std::uint8_t kWireVersion = 0x01;
constexpr std::uint8_t kFormFull = 0x00;
constexpr std::uint8_t kFormModified = 0x01;

BytesView next_element(BytesView wire, std::size_t& pos) {
    std::size_t start = pos;
    (void)read_frame(wire, pos);  // validates framing, advances pos
    return wire.subspan(start, pos - start);
}

}  // namespace

Bytes serialize_signature(const Signature& sig) {
    Bytes out;
    append_u8(out, kWireVersion);
    append_u8(out, kFormFull);
    for (const Bytes& b :
         {sig.Gamma0.serialize(), sig.Gamma1.serialize(), sig.Gamma2.serialize(),
          sig.Gamma3.serialize(), sig.Gamma5.serialize(), sig.z0.serialize(), sig.z1.serialize(),
          sig.z2.serialize(), sig.z3.serialize(), sig.Z1.serialize(), sig.Z2.serialize(),
          sig.Z3.serialize(), sig.f.serialize(), sig.C.serialize(), sig.v1.serialize(),
          sig.V2.serialize(), sig.beta0.serialize(), sig.beta1.serialize(), sig.beta2.serialize(),
          sig.beta3.serialize(), sig.beta4.serialize(), sig.beta5.serialize(),
          sig.beta6.serialize(), sig.beta7.serialize(), sig.beta8.serialize()})
        append(out, b);
    return out;
}

Bytes serialize_signature(const ModifiedSignature& sig) {
    Bytes out;
    append_u8(out, kWireVersion);
    append_u8(out, kFormModified);
    for (const Bytes& b :
         {sig.Gamma0.serialize(), sig.Gamma1.serialize(), sig.Gamma2.serialize(),
          sig.Gamma3.serialize(), sig.Gamma5.serialize(), sig.z0.serialize(), sig.z1.serialize(),
          sig.z2.serialize(), sig.z3.serialize(), sig.Z1.serialize(), sig.Z2.serialize(),
          sig.Z3.serialize(), sig.beta4.serialize(), sig.beta6.serialize(), sig.beta8.serialize(),
          sig.f.serialize(), sig.C.serialize(), sig.v1.serialize(), sig.V2.serialize()})
        append(out, b);
    return out;
}

Signature parse_full_signature(const SystemParams& params, BytesView wire, std::string_view id_R) {
    if (wire.size() < 2 || wire[0] != kWireVersion || wire[1] != kFormFull)
        throw std::invalid_argument("not a full-form signature blob");
    const GroupContext& ctx = params.ctx;
    std::size_t pos = 2;
    Signature sig;
    sig.Gamma0 = ctx.parse_g1(next_element(wire, pos));
    sig.Gamma1 = ctx.parse_g1(next_element(wire, pos));
    sig.Gamma2 = ctx.parse_g1(next_element(wire, pos));
    sig.Gamma3 = ctx.parse_g1(next_element(wire, pos));
    sig.Gamma5 = ctx.parse_g1(next_element(wire, pos));
    sig.z0 = ctx.parse_scalar(next_element(wire, pos));
    sig.z1 = ctx.parse_scalar(next_element(wire, pos));
    sig.z2 = ctx.parse_scalar(next_element(wire, pos));
    sig.z3 = ctx.parse_scalar(next_element(wire, pos));
    sig.Z1 = ctx.parse_g1(next_element(wire, pos));
    sig.Z2 = ctx.parse_g1(next_element(wire, pos));
    sig.Z3 = ctx.parse_g1(next_element(wire, pos));
    sig.f = ctx.parse_scalar(next_element(wire, pos));
    sig.C = ctx.parse_g2(next_element(wire, pos));
    sig.v1 = ctx.parse_g3(next_element(wire, pos));
    sig.V2 = ctx.parse_g2(next_element(wire, pos));
    sig.beta0 = ctx.parse_g1(next_element(wire, pos));
    sig.beta1 = ctx.parse_g1(next_element(wire, pos));
    sig.beta2 = ctx.parse_g1(next_element(wire, pos));
    sig.beta3 = ctx.parse_g1(next_element(wire, pos));
    sig.beta4 = ctx.parse_g3(next_element(wire, pos));
    sig.beta5 = ctx.parse_g1(next_element(wire, pos));
    sig.beta6 = ctx.parse_g3(next_element(wire, pos));
    sig.beta7 = ctx.parse_g2(next_element(wire, pos));
    sig.beta8 = ctx.parse_g3(next_element(wire, pos));
    if (pos != wire.size()) throw std::invalid_argument("trailing bytes after signature");
    sig.S = group_value_S(params, sig.C, id_R);
    return sig;
}

ModifiedSignature parse_modified_signature(const GroupContext& ctx, BytesView wire) {
    if (wire.size() < 2 || wire[0] != kWireVersion || wire[1] != kFormModified)
        throw std::invalid_argument("not a modified-form signature blob");
    std::size_t pos = 2;
    ModifiedSignature sig;
    sig.Gamma0 = ctx.parse_g1(next_element(wire, pos));
    sig.Gamma1 = ctx.parse_g1(next_element(wire, pos));
    sig.Gamma2 = ctx.parse_g1(next_element(wire, pos));
    sig.Gamma3 = ctx.parse_g1(next_element(wire, pos));
    sig.Gamma5 = ctx.parse_g1(next_element(wire, pos));
    sig.z0 = ctx.parse_scalar(next_element(wire, pos));
    sig.z1 = ctx.parse_scalar(next_element(wire, pos));
    sig.z2 = ctx.parse_scalar(next_element(wire, pos));
    sig.z3 = ctx.parse_scalar(next_element(wire, pos));
    sig.Z1 = ctx.parse_g1(next_element(wire, pos));
    sig.Z2 = ctx.parse_g1(next_element(wire, pos));
    sig.Z3 = ctx.parse_g1(next_element(wire, pos));
    sig.beta4 = ctx.parse_g3(next_element(wire, pos));
    sig.beta6 = ctx.parse_g3(next_element(wire, pos));
    sig.beta8 = ctx.parse_g3(next_element(wire, pos));
    sig.f = ctx.parse_scalar(next_element(wire, pos));
    sig.C = ctx.parse_g2(next_element(wire, pos));
    sig.v1 = ctx.parse_g3(next_element(wire, pos));
    sig.V2 = ctx.parse_g2(next_element(wire, pos));
    if (pos != wire.size()) throw std::invalid_argument("trailing bytes after signature");
    return sig;
}

std::size_t signature_element_count(BytesView wire) {
    if (wire.size() < 2) throw std::invalid_argument("blob too short");
    std::size_t pos = 2;
    std::size_t count = 0;
    while (pos < wire.size()) {
        (void)read_frame(wire, pos);
        ++count;
    }
    return count;
}

}  // namespace vanetsig
