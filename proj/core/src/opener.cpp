#include "vanetsig/opener.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vanetsig {

namespace {

bool sane(const Scalar& s) { return !s.is_null(); }

template <GroupKind K>
bool sane(const Elem<K>& e) {
    return !e.is_null() && e.valid();
}

// f' = H((Γ0',Γ1',Γ2') || (β0',β1',β2') || v1 || V2 || υ)
Scalar proof_challenge(const GroupContext& ctx, const G1Elem& G0, const G3Elem& G1_,
                       const G3Elem& G2_, const G1Elem& b0, const G3Elem& b1, const G3Elem& b2,
                       const G3Elem& v1, const G2Elem& V2, const G3Elem& upsilon) {
    Bytes buf;
    append(buf, G0.serialize());
    append(buf, G1_.serialize());
    append(buf, G2_.serialize());
    append(buf, b0.serialize());
    append(buf, b1.serialize());
    append(buf, b2.serialize());
    append(buf, v1.serialize());
    append(buf, V2.serialize());
    append(buf, upsilon.serialize());
    return ctx.hash_to_zp(HashTag::Challenge, BytesView(buf));
}

// The justification proves knowledge of (x_O, s0') with
// Γ0' = x_O·A^{s0'} and e(x_O,V2) = v1/υ, e(x_O,B) = e(H_O,K_T).
// Γ1' = e(A,V2)^{s0'} and Γ2' = e(A,B)^{s0'} are the blinded residues
// a judge can recompute from Γ0' alone.
OpeningProof prove_opening(const SystemParams& params, const OpenerKey& opener, const G3Elem& v1,
                           const G2Elem& V2, const G3Elem& upsilon, Rng& rng) {
    const GroupContext& ctx = params.ctx;
    G1Elem A = params.A();
    G1Elem HO = ctx.hash_to_g1(HashTag::Opener, opener.id_O);

    Scalar s0 = ctx.random_scalar_nonzero(rng);
    G1Elem Gamma0p = opener.x_O * A.pow(s0);
    G3Elem Gamma1p = ctx.pair(A, V2).pow(s0);
    G3Elem Gamma2p = ctx.pair(A, params.B()).pow(s0);

    Scalar r0 = ctx.random_scalar_nonzero(rng);
    Scalar r1 = ctx.random_scalar_nonzero(rng);
    G1Elem beta0p = HO.pow(r1) * A.pow(r0);
    G3Elem beta1p = ctx.pair(A, V2).pow(r0);
    G3Elem beta2p = ctx.pair(A, params.B()).pow(r0);

    Scalar fp = proof_challenge(ctx, Gamma0p, Gamma1p, Gamma2p, beta0p, beta1p, beta2p, v1, V2,
                                upsilon);
    OpeningProof proof;
    proof.Gamma0p = std::move(Gamma0p);
    proof.fp = fp;
    proof.z0p = r0 - fp * s0;
    proof.z1p = HO.pow(r1) * opener.x_O.pow(-fp);
    proof.upsilon = upsilon;
    return proof;
}

OpenResult open_core(const SystemParams& params, const OpenerKey& opener, const G3Elem& v1,
                     const G2Elem& V2, const RegistrationTable& table, Rng& rng) {
    G3Elem upsilon = v1 / params.ctx.pair(opener.x_O, V2);
    auto record = table.find(upsilon);
    if (!record) return OpenResult{OpenStatus::not_found, {}, {}};
    OpenResult result;
    result.status = OpenStatus::ok;
    result.id_V = record->id_V;
    result.proof = prove_opening(params, opener, v1, V2, upsilon, rng);
    return result;
}

bool judge_core(const SystemParams& params, const OpeningProof& proof, const G3Elem& v1,
                const G2Elem& V2, std::string_view id_V, std::string_view id_O) {
    const GroupContext& ctx = params.ctx;
    if (!sane(proof.Gamma0p) || !sane(proof.z1p) || !sane(proof.upsilon) || !sane(proof.fp) ||
        !sane(proof.z0p) || proof.fp.is_zero())
        return false;
    if (!sane(v1) || !sane(V2)) return false;

    // identity binding: the disclosed υ must be this vehicle's W
    G3Elem upsilon = ctx.pair(ctx.hash_to_g1(HashTag::Vehicle, id_V), params.B());
    if (proof.upsilon != upsilon) return false;

    G1Elem A = params.A();
    G3Elem upsilonp = v1 / upsilon;
    G3Elem Gamma1p = ctx.pair(proof.Gamma0p, V2) / upsilonp;
    G3Elem Gamma2p = ctx.pair(proof.Gamma0p, params.B()) /
                     ctx.pair(ctx.hash_to_g1(HashTag::Opener, id_O), params.K_T);

    G1Elem beta0p = proof.z1p * proof.Gamma0p.pow(proof.fp) * A.pow(proof.z0p);
    G3Elem beta1p = ctx.pair(A, V2).pow(proof.z0p) * Gamma1p.pow(proof.fp);
    G3Elem beta2p = ctx.pair(A, params.B()).pow(proof.z0p) * Gamma2p.pow(proof.fp);

    Scalar fp = proof_challenge(ctx, proof.Gamma0p, Gamma1p, Gamma2p, beta0p, beta1p, beta2p, v1,
                                V2, proof.upsilon);
    return fp == proof.fp;
}

std::string hex_field(BytesView b) { return to_hex(b); }

Bytes field_bytes(const std::string& hex) { return from_hex(hex); }

}  // namespace

const char* to_string(OpenStatus s) {
    switch (s) {
        case OpenStatus::ok: return "ok";
        case OpenStatus::invalid_signature: return "invalid_signature";
        case OpenStatus::not_found: return "not_found";
    }
    return "?";
}

Bytes registration_digest(const G3Elem& W) { return sha256(W.serialize()); }

bool RegistrationTable::insert(const RegistrationRecord& record) {
    return records_.try_emplace(registration_digest(record.W), record).second;
}

std::optional<RegistrationRecord> RegistrationTable::find(const G3Elem& W) const {
    return find_by_digest(registration_digest(W));
}

std::optional<RegistrationRecord> RegistrationTable::find_by_digest(BytesView w_digest) const {
    auto it = records_.find(Bytes(w_digest.begin(), w_digest.end()));
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

namespace {

std::string record_line(const Bytes& digest, const RegistrationRecord& record) {
    std::ostringstream line;
    line << hex_field(digest) << ' ' << hex_field(as_bytes(record.id_V)) << ' '
         << hex_field(record.D.serialize()) << ' ' << hex_field(record.t.serialize());
    return line.str();
}

}  // namespace

void RegistrationTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write registration table: " + path);
    for (const auto& [digest, record] : records_) out << record_line(digest, record) << '\n';
}

void RegistrationTable::append_record(const std::string& path, const RegistrationRecord& record) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to registration table: " + path);
    out << record_line(registration_digest(record.W), record) << '\n';
}

RegistrationTable RegistrationTable::load(const GroupContext& ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read registration table: " + path);
    RegistrationTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string digest_hex, id_hex, d_hex, t_hex, extra;
        if (!(fields >> digest_hex >> id_hex >> d_hex >> t_hex) || (fields >> extra))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 4 fields (w_digest id_v D t)");
        RegistrationRecord record;
        Bytes id = field_bytes(id_hex);
        record.id_V = as_string(BytesView(id));
        record.D = ctx.parse_g1(BytesView(field_bytes(d_hex)));
        record.t = ctx.parse_scalar(BytesView(field_bytes(t_hex)));
        // W itself is not persisted; the digest key is enough for lookup
        if (!table.records_.try_emplace(field_bytes(digest_hex), std::move(record)).second)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": duplicate W digest");
    }
    return table;
}

void RevocationList::revoke(std::string_view id_V) {
    revoke(id_V, std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::system_clock::now().time_since_epoch())
                     .count());
}

void RevocationList::revoke(std::string_view id_V, std::int64_t unix_time) {
    entries_.try_emplace(sha256(as_bytes(id_V)), unix_time);  // first revocation wins
}

bool RevocationList::is_revoked(std::string_view id_V) const {
    return entries_.count(sha256(as_bytes(id_V))) != 0;
}

void RevocationList::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write revocation list: " + path);
    for (const auto& [digest, when] : entries_) out << hex_field(digest) << ' ' << when << '\n';
}

RevocationList RevocationList::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read revocation list: " + path);
    RevocationList list;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string digest_hex, extra;
        std::int64_t when = 0;
        if (!(fields >> digest_hex >> when) || (fields >> extra))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 2 fields (id_digest unix_time)");
        list.entries_.try_emplace(field_bytes(digest_hex), when);
    }
    return list;
}

OpenResult open(const SystemParams& params, const OpenerKey& opener, const Signature& sig,
                std::string_view msg, std::string_view id_R, const RegistrationTable& table,
                Rng& rng) {
    if (!verify_individual_original(params, sig, msg, opener.id_O, id_R))
        return OpenResult{OpenStatus::invalid_signature, {}, {}};
    return open_core(params, opener, sig.v1, sig.V2, table, rng);
}

OpenResult open(const SystemParams& params, const OpenerKey& opener, const ModifiedSignature& sig,
                std::string_view msg, std::string_view id_R, const RegistrationTable& table,
                Rng& rng) {
    if (!verify_individual_modified(params, sig, msg, opener.id_O, id_R))
        return OpenResult{OpenStatus::invalid_signature, {}, {}};
    return open_core(params, opener, sig.v1, sig.V2, table, rng);
}

bool judge(const SystemParams& params, const OpeningProof& proof, const Signature& sig,
           std::string_view id_V, std::string_view id_O) {
    return judge_core(params, proof, sig.v1, sig.V2, id_V, id_O);
}

bool judge(const SystemParams& params, const OpeningProof& proof, const ModifiedSignature& sig,
           std::string_view id_V, std::string_view id_O) {
    return judge_core(params, proof, sig.v1, sig.V2, id_V, id_O);
}

namespace {
constexpr std::uint8_t kWireVersion = 0x01;
constexpr std::uint8_t kFormProof = 0x02;
}  // namespace

Bytes serialize_proof(const OpeningProof& proof) {
    Bytes out;
    append_u8(out, kWireVersion);
    append_u8(out, kFormProof);
    for (const Bytes& b : {proof.Gamma0p.serialize(), proof.fp.serialize(), proof.z0p.serialize(),
                           proof.z1p.serialize(), proof.upsilon.serialize()})
        append(out, b);
    return out;
}

OpeningProof parse_proof(const GroupContext& ctx, BytesView wire) {
    if (wire.size() < 2 || wire[0] != kWireVersion || wire[1] != kFormProof)
        throw std::invalid_argument("not a justification-proof blob");
    std::size_t pos = 2;
    auto next = [&](std::size_t& p) {
        std::size_t start = p;
        (void)read_frame(wire, p);
        return wire.subspan(start, p - start);
    };
    OpeningProof proof;
    proof.Gamma0p = ctx.parse_g1(next(pos));
    proof.fp = ctx.parse_scalar(next(pos));
    proof.z0p = ctx.parse_scalar(next(pos));
    proof.z1p = ctx.parse_g1(next(pos));
    proof.upsilon = ctx.parse_g3(next(pos));
    if (pos != wire.size()) throw std::invalid_argument("trailing bytes after proof");
    return proof;
}

}  // namespace vanetsig
