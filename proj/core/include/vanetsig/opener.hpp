#ifndef VANETSIG_OPENER_HPP_
#define VANETSIG_OPENER_HPP_

// Doubtable-message verification: the TSD can strip the anonymity of a
// valid signature.  v1 = e(H_V(ID_V),B)·e(H_O(ID_O),K_T)^d and
// V2 = B^d, so the opener key x_O = H_O(ID_O)^{x_T} cancels the mask:
//
//   υ = v1 / e(x_O, V2) = e(H_V(ID_V), B) = W
//
// and W indexes the registration table built up at join time.  The
// opener also emits a justification ω — a proof of knowledge of x_O
// tying υ to the signature — that anyone can judge without learning
// x_O.  Revocation is a digest set consulted by the batch verifier.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "vanetsig/ibgs.hpp"

namespace vanetsig {

// Justification proof ω.  z1p is a group element: it carries the
// blinded opener key H_O^{r1'}·x_O^{-f'}, not a scalar response.
struct OpeningProof {
    G1Elem Gamma0p;  // x_O·A^{s0'}
    Scalar fp;
    Scalar z0p;      // r0' - f'·s0'
    G1Elem z1p;
    G3Elem upsilon;  // disclosed υ = W
};

enum class OpenStatus { ok, invalid_signature, not_found };
const char* to_string(OpenStatus s);

struct OpenResult {
    OpenStatus status = OpenStatus::invalid_signature;
    std::string id_V;    // set iff status == ok
    OpeningProof proof;  // set iff status == ok
};

// Registration table: W-indexed, append-only.  Records loaded from
// disk carry the W digest but not W itself (the file stores only the
// digest), so lookups work identically while the G3 element stays
// absent.
class RegistrationTable {
  public:
    // False if this W is already registered (re-join of the same
    // vehicle identity); the first record wins.
    bool insert(const RegistrationRecord& record);

    std::optional<RegistrationRecord> find(const G3Elem& W) const;
    std::optional<RegistrationRecord> find_by_digest(BytesView w_digest) const;
    std::size_t size() const { return records_.size(); }

    // One record per line: w_digest_hex id_v_hex d_hex t_hex.
    void save(const std::string& path) const;
    static RegistrationTable load(const GroupContext& ctx, const std::string& path);
    // Append-only persistence: write one record line without touching
    // the rest of the file.
    static void append_record(const std::string& path, const RegistrationRecord& record);

  private:
    std::map<Bytes, RegistrationRecord> records_;  // key = SHA-256 of W encoding
};

Bytes registration_digest(const G3Elem& W);

class RevocationList {
  public:
    void revoke(std::string_view id_V);  // stamps with current unix time
    void revoke(std::string_view id_V, std::int64_t unix_time);
    bool is_revoked(std::string_view id_V) const;
    std::size_t size() const { return entries_.size(); }

    // One entry per line: id_digest_hex unix_time.
    void save(const std::string& path) const;
    static RevocationList load(const std::string& path);

  private:
    std::map<Bytes, std::int64_t> entries_;  // key = SHA-256 of the identity
};

// Open a signature: verify it, cancel the opener mask, look up W,
// and produce the justification.  Overloads for both signature forms.
OpenResult open(const SystemParams& params, const OpenerKey& opener, const Signature& sig,
                std::string_view msg, std::string_view id_R, const RegistrationTable& table,
                Rng& rng);
OpenResult open(const SystemParams& params, const OpenerKey& opener, const ModifiedSignature& sig,
                std::string_view msg, std::string_view id_R, const RegistrationTable& table,
                Rng& rng);

// Judge the claim "this signature opens to id_V".  Recomputes
// υ = e(H_V(id_V),B), derives Γ1' = e(Γ0',V2)/(v1/υ) and
// Γ2' = e(Γ0',B)/e(H_O(id_O),K_T), reconstructs the commitments from
// the responses, and checks the challenge hash.  The signed message is
// not consumed: ω binds to (v1, V2) and those bind to the message
// through the signature's own challenge.
bool judge(const SystemParams& params, const OpeningProof& proof, const Signature& sig,
           std::string_view id_V, std::string_view id_O);
bool judge(const SystemParams& params, const OpeningProof& proof, const ModifiedSignature& sig,
           std::string_view id_V, std::string_view id_O);

// Wire form of ω: [version][form=0x02] then the five elements framed.
Bytes serialize_proof(const OpeningProof& proof);
OpeningProof parse_proof(const GroupContext& ctx, BytesView wire);

}  // namespace vanetsig

#endif  // VANETSIG_OPENER_HPP_
