#ifndef VANETSIG_BATCH_HPP_
#define VANETSIG_BATCH_HPP_

// Batch verification of trimmed signatures.
//
// Verification splits into two stages.  Part 1 is pairing-free: per
// signature, reconstruct the cheap commitments, check the challenge
// hash, and fold the signature into five aggregate slots
// (M, B, K, Q, ν) weighted by a short random exponent δ.  Part 2 is the
// shared finalization: one product equation with exactly three pairings
//
//   Π M_i = e(Π B_i, B) · e(Π K_i, K_T) · e(Π Q_i, S) · Π ν_i
//
// regardless of how many signatures are in the batch.  A failed batch
// can be bisected to isolate the offending signatures while keeping the
// pairing count logarithmic.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vanetsig/ibgs.hpp"

namespace vanetsig {

class RevocationList;  // opener.hpp

// Per-signature aggregation state after verification part 1.
struct BatchItem {
    G3Elem M;   // (β4·β6·β8)^δ
    G1Elem B;   // (ξ_b·ζ_b·χ_b)^δ — the three B-paired factors of the expansion
    G1Elem K;   // (ξ_k·χ_k)^δ
    G1Elem Q;   // ζ_s^δ
    G3Elem nu;  // v1^{f·δ}
    Scalar delta;
    bool hash_ok = false;
    Bytes group_digest;  // SHA-256 of the C encoding; one batch = one group
};

struct BatchPolicy {
    int l = 20;  // δ bit-length; single-forgery escape probability 2^{-l}
    bool isolate_on_failure = true;
    std::size_t max_batch = 1024;
};

enum class VerdictReason { ok, hash_fail, batch_fail, revoked };
struct Verdict {
    bool accepted = false;
    VerdictReason reason = VerdictReason::batch_fail;
};
const char* to_string(VerdictReason r);

// A signature as it arrives at a verifier.  sender_id is an optional
// disclosed transport-level identity used only for revocation
// screening; the signature itself stays anonymous.
struct SignedMessage {
    ModifiedSignature sig;
    std::string msg;
    std::string id_R;  // group the signer claims; fixes S
    std::optional<std::string> sender_id;
};

// Instrumentation for tests and reports.
struct BatchStats {
    std::size_t buckets = 0;
    std::size_t s_computations = 0;
    std::size_t finalize_calls = 0;
    std::size_t isolation_steps = 0;
};

// Uniform δ in [1, 2^l): zero is excluded so no signature is silently
// erased from the combination.
Scalar draw_delta(const GroupContext& ctx, int l, Rng& rng);

// The generic small-exponent test: given claimed pairs (a_j, y_j) and a
// base g, draw δ_j ∈ [0, 2^l) and check g^{Σ a_j δ_j} = Π y_j^{δ_j}.
// A single wrong pair survives with probability 2^{-l}.  Empty input
// accepts vacuously.
template <GroupKind K>
bool small_exponent_test(const GroupContext& ctx,
                         std::span<const std::pair<Scalar, Elem<K>>> pairs, const Elem<K>& g,
                         int l, Rng& rng);

// Verification part 1 for one signature.  Performs no pairings.
BatchItem precompute_item(const SystemParams& params, const ModifiedSignature& sig,
                          std::string_view msg, const Scalar& delta, const G2Elem& S,
                          std::string_view id_O);

// Verification part 2.  Exactly 3 pairings.  Preconditions: every item
// has hash_ok set and all items share one group digest; violations
// throw std::invalid_argument.  Empty input accepts vacuously.
bool batch_finalize(const SystemParams& params, std::span<const BatchItem> items, const G2Elem& S);

// Partition indices by the C field (one bucket per group), preserving
// arrival order inside each bucket.
std::vector<std::pair<Bytes, std::vector<std::size_t>>> bucket_by_group(
    std::span<const SignedMessage> sigs);

// Full pipeline: revocation screen, bucket, precompute, finalize, and
// (optionally) bisect failing buckets down to individual culprits.
std::vector<Verdict> verify_batch(const SystemParams& params, std::span<const SignedMessage> sigs,
                                  const BatchPolicy& policy, std::string_view id_O, Rng& rng,
                                  const RevocationList* revoked = nullptr,
                                  BatchStats* stats = nullptr);

// --- implementation of the template ------------------------------------

namespace detail {
// l independent bits as an integer in [0, 2^l).
Int draw_bits(Rng& rng, int l);
void check_l(int l);
}  // namespace detail

template <GroupKind K>
bool small_exponent_test(const GroupContext& ctx,
                         std::span<const std::pair<Scalar, Elem<K>>> pairs, const Elem<K>& g,
                         int l, Rng& rng) {
    detail::check_l(l);
    if (pairs.empty()) return true;
    Scalar acc = ctx.scalar(0);
    Elem<K> y;
    bool first = true;
    for (const auto& [aj, yj] : pairs) {
        Scalar delta = ctx.scalar(detail::draw_bits(rng, l));
        acc = acc + aj * delta;
        Elem<K> term = yj.pow(delta);
        y = first ? term : y * term;
        first = false;
    }
    return g.pow(acc) == y;
}

}  // namespace vanetsig

#endif  // VANETSIG_BATCH_HPP_
