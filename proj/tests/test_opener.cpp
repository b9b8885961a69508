#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "testutil.hpp"
#include "vanetsig/opener.hpp"

using namespace vanetsig;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/vanetsig-test-" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("opening a signature recovers the signer and the judge concurs") {
    TestBed bed(401);
    std::vector<TestBed::Member> members;
    RegistrationTable table;
    for (int i = 0; i < 3; ++i) {
        members.push_back(bed.enroll("veh-" + std::to_string(i)));
        CHECK(table.insert(members.back().record));
    }
    CHECK_FALSE(table.insert(members[0].record));  // re-join keeps the first record
    CHECK(table.size() == 3);

    const Int p = bed.ctx.order();
    for (int tr = 0; tr < 100; ++tr) {
        const auto& member = members[tr % members.size()];
        std::string msg = "event-" + std::to_string(tr);
        Signature sig =
            sign(bed.params, member.cred, bed.opener.id_O, bed.gm.id_R, msg, bed.rng);

        OpenResult res = open(bed.params, bed.opener, sig, msg, bed.gm.id_R, table, bed.rng);
        REQUIRE(res.status == OpenStatus::ok);
        CHECK(res.id_V == member.cred.key.id_V);
        CHECK(res.proof.upsilon == member.record.W);
        CHECK(judge(bed.params, res.proof, sig, res.id_V, bed.opener.id_O));

        // exponent oracle: log υ = log H_V(ID_V) · log B
        Int lu = *bed.ctx.known_log(res.proof.upsilon);
        Int lh = *bed.ctx.known_log(bed.ctx.hash_to_g1(HashTag::Vehicle, res.id_V));
        Int lb = *bed.ctx.known_log(bed.params.B());
        CHECK(lu == mod(lh * lb, p));

        // the trimmed form opens identically
        ModifiedSignature m = to_modified(sig);
        OpenResult res2 = open(bed.params, bed.opener, m, msg, bed.gm.id_R, table, bed.rng);
        REQUIRE(res2.status == OpenStatus::ok);
        CHECK(res2.id_V == res.id_V);
        CHECK(judge(bed.params, res2.proof, m, res2.id_V, bed.opener.id_O));
    }
}

TEST_CASE("the judge binds a justification to the claimed identity") {
    TestBed bed(402);
    RegistrationTable table;
    auto alice = bed.enroll("veh-alice");
    auto bob = bed.enroll("veh-bob");
    table.insert(alice.record);
    table.insert(bob.record);

    for (int tr = 0; tr < 100; ++tr) {
        std::string msg = "claim-" + std::to_string(tr);
        Signature sig = sign(bed.params, alice.cred, bed.opener.id_O, bed.gm.id_R, msg, bed.rng);
        OpenResult res = open(bed.params, bed.opener, sig, msg, bed.gm.id_R, table, bed.rng);
        REQUIRE(res.status == OpenStatus::ok);
        CHECK(res.id_V == "veh-alice");
        CHECK(judge(bed.params, res.proof, sig, "veh-alice", bed.opener.id_O));
        // pinning the signature on the other member must not stick
        CHECK_FALSE(judge(bed.params, res.proof, sig, "veh-bob", bed.opener.id_O));
    }

    // a proof is also bound to its signature's (v1, V2)
    Signature s1 = sign(bed.params, alice.cred, bed.opener.id_O, bed.gm.id_R, "m1", bed.rng);
    Signature s2 = sign(bed.params, alice.cred, bed.opener.id_O, bed.gm.id_R, "m2", bed.rng);
    OpenResult r1 = open(bed.params, bed.opener, s1, "m1", bed.gm.id_R, table, bed.rng);
    REQUIRE(r1.status == OpenStatus::ok);
    CHECK_FALSE(judge(bed.params, r1.proof, s2, "veh-alice", bed.opener.id_O));
    // and to the opener identity
    CHECK_FALSE(judge(bed.params, r1.proof, s1, "veh-alice", "tsd-2"));
}

TEST_CASE("corrupted justifications are rejected") {
    TestBed bed(403);
    RegistrationTable table;
    auto member = bed.enroll("veh-1");
    table.insert(member.record);

    Signature sig = sign(bed.params, member.cred, bed.opener.id_O, bed.gm.id_R, "msg", bed.rng);
    OpenResult res = open(bed.params, bed.opener, sig, "msg", bed.gm.id_R, table, bed.rng);
    REQUIRE(res.status == OpenStatus::ok);
    REQUIRE(judge(bed.params, res.proof, sig, "veh-1", bed.opener.id_O));

    G1Elem A = bed.params.A();
    auto reject = [&](OpeningProof p) {
        CHECK_FALSE(judge(bed.params, p, sig, "veh-1", bed.opener.id_O));
    };
    OpeningProof p = res.proof;
    p.z0p = p.z0p + bed.ctx.scalar(1);
    reject(p);
    p = res.proof;
    p.z1p = p.z1p * A;
    reject(p);
    p = res.proof;
    p.Gamma0p = p.Gamma0p * A;
    reject(p);
    p = res.proof;
    p.fp = p.fp + bed.ctx.scalar(1);
    reject(p);
    p = res.proof;
    p.upsilon = p.upsilon * bed.ctx.g3_generator();
    reject(p);
}

TEST_CASE("opening refuses invalid signatures and unknown signers") {
    TestBed bed(404);
    RegistrationTable table;
    auto known = bed.enroll("veh-known");
    auto ghost = bed.enroll("veh-ghost");  // joined, but never registered
    table.insert(known.record);

    Signature sig = sign(bed.params, known.cred, bed.opener.id_O, bed.gm.id_R, "msg", bed.rng);
    CHECK(open(bed.params, bed.opener, sig, "other msg", bed.gm.id_R, table, bed.rng).status ==
          OpenStatus::invalid_signature);
    CHECK(open(bed.params, bed.opener, to_modified(sig), "other msg", bed.gm.id_R, table, bed.rng)
              .status == OpenStatus::invalid_signature);

    Signature anon = sign(bed.params, ghost.cred, bed.opener.id_O, bed.gm.id_R, "msg", bed.rng);
    OpenResult res = open(bed.params, bed.opener, anon, "msg", bed.gm.id_R, table, bed.rng);
    CHECK(res.status == OpenStatus::not_found);
    CHECK(res.id_V.empty());
}

TEST_CASE("registration table persists across save, append, and reload") {
    TestBed bed(405);
    auto m1 = bed.enroll("veh-1");
    auto m2 = bed.enroll("veh-2");
    auto m3 = bed.enroll("veh-3");

    RegistrationTable table;
    table.insert(m1.record);
    table.insert(m2.record);

    TempFile file("regtable");
    table.save(file.path);
    RegistrationTable::append_record(file.path, m3.record);

    RegistrationTable loaded = RegistrationTable::load(bed.ctx, file.path);
    CHECK(loaded.size() == 3);
    for (const auto* rec : {&m1.record, &m2.record, &m3.record}) {
        auto found = loaded.find(rec->W);
        REQUIRE(found.has_value());
        CHECK(found->id_V == rec->id_V);
        CHECK(found->D == rec->D);
        CHECK(found->t == rec->t);
        CHECK(loaded.find_by_digest(registration_digest(rec->W)).has_value());
    }
    CHECK_FALSE(loaded.find(bed.ctx.g3_generator()).has_value());

    // a loaded table serves open() exactly like the in-memory one
    Signature sig = sign(bed.params, m3.cred, bed.opener.id_O, bed.gm.id_R, "m", bed.rng);
    OpenResult res = open(bed.params, bed.opener, sig, "m", bed.gm.id_R, loaded, bed.rng);
    REQUIRE(res.status == OpenStatus::ok);
    CHECK(res.id_V == "veh-3");

    // duplicate and malformed lines are load errors
    RegistrationTable::append_record(file.path, m3.record);
    CHECK_THROWS_AS((void)RegistrationTable::load(bed.ctx, file.path), std::runtime_error);
    {
        std::ofstream out(file.path, std::ios::trunc);
        out << "deadbeef cafe\n";
    }
    CHECK_THROWS_AS((void)RegistrationTable::load(bed.ctx, file.path), std::runtime_error);
    CHECK_THROWS_AS((void)RegistrationTable::load(bed.ctx, "/nonexistent/notthere"),
                    std::runtime_error);
}

TEST_CASE("revocation survives persistence") {
    RevocationList list;
    list.revoke("veh-1", 1700000000);
    list.revoke("veh-2");
    CHECK(list.is_revoked("veh-1"));
    CHECK(list.is_revoked("veh-2"));
    CHECK_FALSE(list.is_revoked("veh-3"));
    CHECK(list.size() == 2);

    list.revoke("veh-1", 1800000000);  // re-revocation keeps the first stamp
    CHECK(list.size() == 2);

    TempFile file("revocations");
    list.save(file.path);
    RevocationList loaded = RevocationList::load(file.path);
    CHECK(loaded.size() == 2);
    CHECK(loaded.is_revoked("veh-1"));
    CHECK(loaded.is_revoked("veh-2"));
    CHECK_FALSE(loaded.is_revoked("veh-3"));

    // the original timestamp is what hits the disk
    std::ifstream in(file.path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(all.find("1700000000") != std::string::npos);
    CHECK(all.find("1800000000") == std::string::npos);

    {
        std::ofstream out(file.path, std::ios::trunc);
        out << "nothex notanumber\n";
    }
    CHECK_THROWS((void)RevocationList::load(file.path));
}

TEST_CASE("justification proofs survive the wire") {
    TestBed bed(406);
    RegistrationTable table;
    auto member = bed.enroll("veh-1");
    table.insert(member.record);
    Signature sig = sign(bed.params, member.cred, bed.opener.id_O, bed.gm.id_R, "m", bed.rng);
    OpenResult res = open(bed.params, bed.opener, sig, "m", bed.gm.id_R, table, bed.rng);
    REQUIRE(res.status == OpenStatus::ok);

    Bytes wire = serialize_proof(res.proof);
    OpeningProof parsed = parse_proof(bed.ctx, wire);
    CHECK(parsed.Gamma0p == res.proof.Gamma0p);
    CHECK(parsed.fp == res.proof.fp);
    CHECK(parsed.z0p == res.proof.z0p);
    CHECK(parsed.z1p == res.proof.z1p);
    CHECK(parsed.upsilon == res.proof.upsilon);
    CHECK(judge(bed.params, parsed, sig, "veh-1", bed.opener.id_O));
    CHECK(serialize_proof(parsed) == wire);

    Bytes bad = wire;
    bad[1] = 0x00;  // full-signature form byte, not a proof
    CHECK_THROWS_AS((void)parse_proof(bed.ctx, bad), std::invalid_argument);
    Bytes trunc(wire.begin(), wire.end() - 3);
    CHECK_THROWS_AS((void)parse_proof(bed.ctx, trunc), std::invalid_argument);
    Bytes trailing = wire;
    trailing.push_back(0x00);
    CHECK_THROWS_AS((void)parse_proof(bed.ctx, trailing), std::invalid_argument);
}

TEST_CASE("opening works end to end on the curve backend") {
    TestBed bed(407, make_curve_context("ss256"));
    RegistrationTable table;
    auto member = bed.enroll("veh-c");
    table.insert(member.record);

    Signature sig = sign(bed.params, member.cred, bed.opener.id_O, bed.gm.id_R, "kv", bed.rng);
    OpenResult res = open(bed.params, bed.opener, sig, "kv", bed.gm.id_R, table, bed.rng);
    REQUIRE(res.status == OpenStatus::ok);
    CHECK(res.id_V == "veh-c");
    CHECK(res.proof.upsilon == member.record.W);
    CHECK(judge(bed.params, res.proof, sig, "veh-c", bed.opener.id_O));
    CHECK_FALSE(judge(bed.params, res.proof, sig, "veh-d", bed.opener.id_O));
}
