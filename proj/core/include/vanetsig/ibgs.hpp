#ifndef VANETSIG_IBGS_HPP_
#define VANETSIG_IBGS_HPP_

// Identity-based group signatures for vehicle networks.
//
// Cast of entities:
//  * TEA — trusted escrow authority; owns the master secret x_T and
//    issues every private key in the system.
//  * GM — group manager (one per vehicle group, e.g. an RSU); admits
//    vehicles via the join protocol and hands out membership
//    certificates (D, t, C).
//  * TSD — traffic security division; the opening authority that can
//    de-anonymize a signature (see opener.hpp).
//  * Vehicle — signs road messages anonymously under its group.
//
// A signature exists in two forms: the full form carries the complete
// commitment vector β0..β8; the trimmed form drops everything a
// verifier can recompute cheaply and keeps only the three pairing-heavy
// commitments (β4, β6, β8), which is what the batch verifier consumes.

#include <string>
#include <string_view>
#include <utility>

#include "vanetsig/algebra.hpp"

namespace vanetsig {

struct SystemParams {
    GroupContext ctx;
    G1Elem A1, A2, A3, A4, A5;
    G2Elem K_T;  // = B^{x_T}

    G1Elem A() const { return ctx.g1_generator(); }
    G2Elem B() const { return ctx.g2_generator(); }
};

struct TeaSecret {
    Scalar x_T;
};

struct GmKey {
    std::string id_R;
    G2Elem C;    // = B^r for the r folded into x_R
    Scalar x_R;  // = r + H_R(C||ID_R)·x_T
};

struct OpenerKey {
    std::string id_O;
    G1Elem x_O;  // = H_O(ID_O)^{x_T}
};

struct VehicleKey {
    std::string id_V;
    G1Elem x_V;  // = H_V(ID_V)^{x_T}
};

// Membership certificate issued by the GM in the join protocol.
struct MembershipCertificate {
    G1Elem D;  // = (A5 / H_V(ID_V))^{1/(t + x_R)}
    Scalar t;
    G2Elem C;
};

// What the GM records at join time; the opener resolves signatures back
// to identities through W.
struct RegistrationRecord {
    std::string id_V;
    G1Elem D;
    Scalar t;
    G3Elem W;  // = e(H_V(ID_V), B)
};

struct VehicleCredential {
    VehicleKey key;
    G1Elem D;
    Scalar t;
    G2Elem C;
};

// Full signature. S is kept as a convenience field but never
// transmitted: any verifier recomputes S = C·K_T^{H_R(C||ID_R)} from C
// and the group identity, so the wire format carries 25 elements.
struct Signature {
    G1Elem Gamma0, Gamma1, Gamma2, Gamma3, Gamma5;
    Scalar z0, z1, z2, z3;
    G1Elem Z1, Z2, Z3;
    Scalar f;
    G2Elem C;
    G3Elem v1;
    G2Elem V2;
    G1Elem beta0, beta1, beta2, beta3, beta5;
    G3Elem beta4, beta6, beta8;
    G2Elem beta7;
    G2Elem S;
};

// Trimmed signature for batch verification: 19 transmitted elements.
struct ModifiedSignature {
    G1Elem Gamma0, Gamma1, Gamma2, Gamma3, Gamma5;
    Scalar z0, z1, z2, z3;
    G1Elem Z1, Z2, Z3;
    G3Elem beta4, beta6, beta8;
    Scalar f;
    G2Elem C;
    G3Elem v1;
    G2Elem V2;
};

inline constexpr std::size_t kFullSignatureElements = 25;
inline constexpr std::size_t kModifiedSignatureElements = 19;

// --- lifecycle ---------------------------------------------------------

std::pair<SystemParams, TeaSecret> setup(const GroupContext& ctx, Rng& rng);

GmKey keygen_gm(const SystemParams& params, const TeaSecret& tea, std::string_view id_R, Rng& rng);
OpenerKey keygen_tsd(const SystemParams& params, const TeaSecret& tea, std::string_view id_O);
VehicleKey keygen_vehicle(const SystemParams& params, const TeaSecret& tea, std::string_view id_V);

// S = C·K_T^{H_R(C||ID_R)} — the group's public verification value,
// equal to B^{x_R}.
G2Elem group_value_S(const SystemParams& params, const G2Elem& C, std::string_view id_R);

// Sigma-protocol proof of knowledge of x_V, run by a vehicle toward the
// GM before joining: commitment R = e(U,B) for uniform U, challenge
// c = H(R || ID_V || nonce), response V = U·x_V^c.  The verifier checks
// e(V,B) = R·e(H_V(ID_V),K_T)^c.
struct PoKTranscript {
    G3Elem R;
    G1Elem V;
    Bytes nonce;
};

PoKTranscript pok_prove(const SystemParams& params, const VehicleKey& vk, BytesView nonce, Rng& rng);
bool pok_verify(const SystemParams& params, std::string_view id_V, const PoKTranscript& transcript);

// GM side of the join protocol.  Throws std::invalid_argument if the
// transcript does not verify.  The returned record must be inserted
// into the opener's registration table by the caller.
std::pair<MembershipCertificate, RegistrationRecord> join_issue(
    const GmKey& gm, const SystemParams& params, std::string_view id_V,
    const PoKTranscript& transcript, Rng& rng);

// Vehicle side: checks e(A5,B) = e(D,B)^t·e(D,S)·e(H_V(ID_V),B).
bool join_verify(const SystemParams& params, std::string_view id_V, const G1Elem& D,
                 const Scalar& t, const G2Elem& C, std::string_view id_R);

// --- signing and verification ------------------------------------------

Signature sign(const SystemParams& params, const VehicleCredential& cred, std::string_view id_O,
               std::string_view id_R, std::string_view msg, Rng& rng);

ModifiedSignature to_modified(const Signature& sig);

bool verify_individual_original(const SystemParams& params, const Signature& sig,
                                std::string_view msg, std::string_view id_O, std::string_view id_R);

bool verify_individual_modified(const SystemParams& params, const ModifiedSignature& sig,
                                std::string_view msg, std::string_view id_O, std::string_view id_R);

// The pairing-free half of modified verification: membership checks,
// reconstruction of (β0..β3, β5, β7), and the challenge-hash
// comparison.  This is "verification part 1" of the batch pipeline;
// verify_individual_modified is this plus the three pairing checks.
bool check_modified_challenge(const SystemParams& params, const ModifiedSignature& sig,
                              std::string_view msg);

// --- wire format --------------------------------------------------------
//
// [version=0x01][form][elements...] where form 0x00 = full (25
// elements) and 0x01 = modified (19 elements); each element is the
// length-prefixed encoding of the algebra layer, in the order fixed by
// the signature displays (Γ·, z·, Z·, (β4,β6,β8 for modified), f, C,
// v1, V2, (β0..β8 trailing for full)).

Bytes serialize_signature(const Signature& sig);
Bytes serialize_signature(const ModifiedSignature& sig);

// Full parse needs the group identity to recompute S.
Signature parse_full_signature(const SystemParams& params, BytesView wire, std::string_view id_R);
ModifiedSignature parse_modified_signature(const GroupContext& ctx, BytesView wire);

// Number of length-prefixed element frames in a signature wire blob.
std::size_t signature_element_count(BytesView wire);

}  // namespace vanetsig

#endif  // VANETSIG_IBGS_HPP_
