#include "vanetsig/batch.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "vanetsig/opener.hpp"

namespace vanetsig {

namespace detail {

void check_l(int l) {
    if (l < 1 || l > 128)
        throw std::invalid_argument("small-exponent bit length outside [1,128]");
}

Int draw_bits(Rng& rng, int l) {
    int words = (l + 63) / 64;
    Int v = 0;
    for (int i = 0; i < words; ++i) {
        v <<= 64;
        v += Int(static_cast<std::uint64_t>(rng()));
    }
    v >>= words * 64 - l;
    return v;
}

}  // namespace detail

const char* to_string(VerdictReason r) {
    switch (r) {
        case VerdictReason::ok: return "ok";
        case VerdictReason::hash_fail: return "hash_fail";
        case VerdictReason::batch_fail: return "batch_fail";
        case VerdictReason::revoked: return "revoked";
    }
    return "?";
}

Scalar draw_delta(const GroupContext& ctx, int l, Rng& rng) {
    detail::check_l(l);
    Int v = detail::draw_bits(rng, l);
    while (v == 0) v = detail::draw_bits(rng, l);
    return ctx.scalar(v);
}

namespace {

// One batch = one (C, S) pair; the digest is what batch_finalize
// compares to refuse accidental cross-group merges.
Bytes group_digest_of(const G2Elem& C, const G2Elem& S) {
    Bytes buf;
    append_framed(buf, C.serialize());
    append_framed(buf, S.serialize());
    return sha256(buf);
}

}  // namespace

BatchItem precompute_item(const SystemParams& params, const ModifiedSignature& sig,
                          std::string_view msg, const Scalar& delta, const G2Elem& S,
                          std::string_view id_O) {
    const GroupContext& ctx = params.ctx;
    BatchItem item;
    item.delta = delta;
    item.group_digest = group_digest_of(sig.C, S);
    item.hash_ok = check_modified_challenge(params, sig, msg);
    if (!item.hash_ok) return item;  // rejected before any aggregation work

    const Scalar& f = sig.f;
    const Scalar& z0 = sig.z0;
    const Scalar& z5 = sig.z2;  // z5 masks s2 = t·s1 (same aliasing as the verifiers)
    const Scalar& z6 = sig.z3;  // z6 masks d
    Scalar nf = -f;
    Scalar nz0 = -z0;

    // the factor split of want4·want6·want8 by pairing partner
    G1Elem xi_b = params.A1.pow(nz0) * sig.Gamma1.pow(nf);
    G1Elem xi_k = params.A2.pow(z0) * sig.Gamma2.pow(f);
    G1Elem zeta_b = params.A3.pow(z5) * params.A2.pow(z0) * params.A4.pow(z0) *
                    params.A5.pow(nf) * sig.Gamma2.pow(f) * sig.Gamma5.pow(f);
    G1Elem zeta_s = params.A3.pow(z0) * sig.Gamma3.pow(f);
    G1Elem chi_b = params.A2.pow(nz0) * sig.Gamma2.pow(nf);
    G1Elem chi_k = ctx.hash_to_g1(HashTag::Opener, id_O).pow(z6);

    item.M = (sig.beta4 * sig.beta6 * sig.beta8).pow(delta);
    item.B = (xi_b * zeta_b * chi_b).pow(delta);
    item.K = (xi_k * chi_k).pow(delta);
    item.Q = zeta_s.pow(delta);
    item.nu = sig.v1.pow(f * delta);
    return item;
}

bool batch_finalize(const SystemParams& params, std::span<const BatchItem> items, const G2Elem& S) {
    if (items.empty()) return true;
    for (const BatchItem& item : items) {
        if (!item.hash_ok)
            throw std::invalid_argument("batch contains an item that failed its challenge check");
        if (item.group_digest != items.front().group_digest)
            throw std::invalid_argument("batch mixes signatures from different groups");
    }

    G3Elem M = items.front().M;
    G1Elem Bp = items.front().B;
    G1Elem Kp = items.front().K;
    G1Elem Qp = items.front().Q;
    G3Elem nu = items.front().nu;
    for (std::size_t i = 1; i < items.size(); ++i) {
        M = M * items[i].M;
        Bp = Bp * items[i].B;
        Kp = Kp * items[i].K;
        Qp = Qp * items[i].Q;
        nu = nu * items[i].nu;
    }

    const GroupContext& ctx = params.ctx;
    G3Elem rhs = ctx.pair(Bp, params.B()) * ctx.pair(Kp, params.K_T) * ctx.pair(Qp, S) * nu;
    return M == rhs;
}

std::vector<std::pair<Bytes, std::vector<std::size_t>>> bucket_by_group(
    std::span<const SignedMessage> sigs) {
    std::vector<std::pair<Bytes, std::vector<std::size_t>>> out;
    std::map<Bytes, std::size_t> slot;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        // key on (C, ID_R) jointly: S depends on both, so a shared C with
        // differing group identities must not land in one bucket
        Bytes key;
        append_framed(key, sigs[i].sig.C.serialize());
        append_framed(key, as_bytes(sigs[i].id_R));
        key = sha256(key);
        auto [it, fresh] = slot.try_emplace(key, out.size());
        if (fresh) out.emplace_back(key, std::vector<std::size_t>{});
        out[it->second].second.push_back(i);
    }
    return out;
}

namespace {

// Mark every index in the range with one verdict.
void mark(std::vector<Verdict>& verdicts, std::span<const std::size_t> idxs, bool ok,
          VerdictReason reason) {
    for (std::size_t idx : idxs) verdicts[idx] = Verdict{ok, reason};
}

// Finalize a chunk; on failure either reject wholesale or bisect until
// the culprits are singled out.
void resolve(const SystemParams& params, const G2Elem& S, const BatchPolicy& policy,
             std::span<const BatchItem> items, std::span<const std::size_t> idxs,
             std::vector<Verdict>& verdicts, BatchStats* stats) {
    if (stats) ++stats->finalize_calls;
    if (batch_finalize(params, items, S)) {
        mark(verdicts, idxs, true, VerdictReason::ok);
        return;
    }
    if (items.size() == 1 || !policy.isolate_on_failure) {
        mark(verdicts, idxs, false, VerdictReason::batch_fail);
        return;
    }
    if (stats) ++stats->isolation_steps;
    std::size_t mid = items.size() / 2;
    resolve(params, S, policy, items.first(mid), idxs.first(mid), verdicts, stats);
    resolve(params, S, policy, items.subspan(mid), idxs.subspan(mid), verdicts, stats);
}

}  // namespace

std::vector<Verdict> verify_batch(const SystemParams& params, std::span<const SignedMessage> sigs,
                                  const BatchPolicy& policy, std::string_view id_O, Rng& rng,
                                  const RevocationList* revoked, BatchStats* stats) {
    detail::check_l(policy.l);
    if (policy.max_batch == 0) throw std::invalid_argument("max_batch must be positive");

    std::vector<Verdict> verdicts(sigs.size());
    std::vector<bool> screened(sigs.size(), false);
    if (revoked) {
        for (std::size_t i = 0; i < sigs.size(); ++i) {
            if (sigs[i].sender_id && revoked->is_revoked(*sigs[i].sender_id)) {
                verdicts[i] = Verdict{false, VerdictReason::revoked};
                screened[i] = true;
            }
        }
    }

    auto buckets = bucket_by_group(sigs);
    if (stats) stats->buckets = buckets.size();
    for (auto& [digest, idxs] : buckets) {
        G2Elem S;
        std::vector<BatchItem> items;
        std::vector<std::size_t> alive;
        for (std::size_t idx : idxs) {
            if (screened[idx]) continue;
            if (S.is_null()) {
                S = group_value_S(params, sigs[idx].sig.C, sigs[idx].id_R);
                if (stats) ++stats->s_computations;
            }
            BatchItem item =
                precompute_item(params, sigs[idx].sig, sigs[idx].msg,
                                draw_delta(params.ctx, policy.l, rng), S, id_O);
            if (!item.hash_ok) {
                verdicts[idx] = Verdict{false, VerdictReason::hash_fail};
                continue;
            }
            items.push_back(std::move(item));
            alive.push_back(idx);
        }
        for (std::size_t start = 0; start < items.size(); start += policy.max_batch) {
            std::size_t len = std::min(policy.max_batch, items.size() - start);
            resolve(params, S, policy, std::span<const BatchItem>(items).subspan(start, len),
                    std::span<const std::size_t>(alive).subspan(start, len), verdicts, stats);
        }
    }
    return verdicts;
}

}  // namespace vanetsig
