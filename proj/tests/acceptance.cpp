// Release gate: one self-contained check per shipped claim, one line of
// output each.  Exits nonzero if any claim fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "testutil.hpp"
#include "vanetsig/batch.hpp"
#include "vanetsig/opener.hpp"
#include "vanetsig/scheduler.hpp"

using namespace vanetsig;

namespace {

int g_failures = 0;

void report(int idx, bool ok, const std::string& detail) {
    std::printf("%s %d: %s\n", ok ? "PASS" : "FAIL", idx, detail.c_str());
    if (!ok) ++g_failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

ModifiedSignature tweak_z2(const GroupContext& ctx, ModifiedSignature m) {
    m.z2 = m.z2 + ctx.scalar(1);
    return m;
}

ModifiedSignature tweak_gamma2(const SystemParams& params, ModifiedSignature m) {
    m.Gamma2 = m.Gamma2 * params.A1;
    return m;
}

ModifiedSignature sign_modified(TestBed& bed, const TestBed::Member& member,
                                const std::string& msg) {
    return to_modified(sign(bed.params, member.cred, bed.opener.id_O, bed.gm.id_R, msg, bed.rng));
}

// 1. fixed four-job instance reproduces the reference metrics table
void check_schedule_table() {
    const std::vector<Job> jobs = {
        {1, 1, 3, 2, 1}, {2, 2, 6, 2, 1}, {3, 3, 4, 2, 1}, {4, 8, 11, 2, 1}};
    const std::vector<int> order = {1, 3, 2, 4};
    auto t0 = std::chrono::steady_clock::now();
    ScheduleResult res = schedule_metrics(jobs, order);
    double ms = ms_since(t0);

    std::map<int, ScheduledJob> by_id;
    for (const ScheduledJob& row : res.jobs) by_id[row.id] = row;
    const long long want_C[] = {3, 7, 5, 10};
    const long long want_L[] = {0, 1, 1, -1};
    const int want_U[] = {0, 1, 1, 0};
    bool ok = res.jobs.size() == 4;
    for (int id = 1; ok && id <= 4; ++id) {
        const ScheduledJob& row = by_id[id];
        ok = row.C == want_C[id - 1] && row.L == want_L[id - 1] && row.U == want_U[id - 1];
    }
    ok = ok && res.C_max == 10 && res.L_max == 1 && ms < 1.0;

    std::ostringstream d;
    d << "four-job metrics table exact (C_max=" << res.C_max << ", L_max=" << res.L_max << ") in "
      << ms << " ms";
    report(1, ok, d.str());
}

// 2. finalization costs 3 pairings at every batch size; the per-signature
//    path costs at least 11
void check_pairing_counts() {
    TestBed bed(2001);
    auto member = bed.enroll("veh-acc2");
    G2Elem S;
    std::vector<ModifiedSignature> sigs;
    std::vector<std::string> msgs;
    for (int i = 0; i < 1000; ++i) {
        msgs.push_back("acc2-" + std::to_string(i));
        sigs.push_back(sign_modified(bed, member, msgs.back()));
    }
    S = group_value_S(bed.params, sigs[0].C, bed.gm.id_R);

    bool ok = true;
    std::ostringstream d;
    double ms_1000 = 0;
    for (std::size_t n : {std::size_t(1), std::size_t(10), std::size_t(100), std::size_t(1000)}) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<BatchItem> items;
        for (std::size_t i = 0; i < n; ++i)
            items.push_back(precompute_item(bed.params, sigs[i], msgs[i],
                                            draw_delta(bed.ctx, 20, bed.rng), S,
                                            bed.opener.id_O));
        bed.ctx.reset_pairing_count();
        bool accepted = batch_finalize(bed.params, items, S);
        std::uint64_t pairings = bed.ctx.pairing_count();
        double ms = ms_since(t0);
        if (n == 1000) ms_1000 = ms;
        ok = ok && accepted && pairings == 3 && (n != 1000 || ms < 5000.0);
        d << "n=" << n << ":" << pairings << "p ";
    }

    Signature one = sign(bed.params, member.cred, bed.opener.id_O, bed.gm.id_R, "solo", bed.rng);
    bed.ctx.reset_pairing_count();
    bool indiv_ok =
        verify_individual_original(bed.params, one, "solo", bed.opener.id_O, bed.gm.id_R);
    std::uint64_t indiv = bed.ctx.pairing_count();
    ok = ok && indiv_ok && indiv >= 11;

    d << "individual=" << indiv << "p, n=1000 in " << ms_1000 << " ms";
    report(2, ok, d.str());
}

// 3. the trimmed form carries 19 elements vs 25 and fewer bytes on every backend
void check_signature_sizes() {
    bool ok = true;
    std::ostringstream d;
    for (const char* backend : {"transparent", "ss256", "ss512"}) {
        GroupContext ctx = std::string(backend) == "transparent"
                               ? make_transparent_context(33)
                               : make_curve_context(backend);
        TestBed bed(33, ctx);
        auto member = bed.enroll("veh-acc3");
        Signature sig =
            sign(bed.params, member.cred, bed.opener.id_O, bed.gm.id_R, "size probe", bed.rng);
        Bytes full_wire = serialize_signature(sig);
        Bytes mod_wire = serialize_signature(to_modified(sig));
        std::size_t nf = signature_element_count(full_wire);
        std::size_t nm = signature_element_count(mod_wire);
        ok = ok && nf == 25 && nm == 19 && mod_wire.size() < full_wire.size();
        d << backend << "=" << nm << "/" << nf << " elems " << mod_wire.size() << "/"
          << full_wire.size() << "B ";
    }
    report(3, ok, d.str());
}

// 4. 200 fresh end-to-end chains all verify everywhere
void check_completeness_chains() {
    int passed = 0;
    for (int i = 0; i < 200; ++i) {
        TestBed bed(4000 + i);
        auto member = bed.enroll("veh-" + std::to_string(i));
        std::string msg = "chain-" + std::to_string(i);

        bool ok = join_verify(bed.params, member.cred.key.id_V, member.cred.D, member.cred.t,
                              member.cred.C, bed.gm.id_R);
        Signature sig = sign(bed.params, member.cred, bed.opener.id_O, bed.gm.id_R, msg, bed.rng);
        ok = ok && verify_individual_original(bed.params, sig, msg, bed.opener.id_O, bed.gm.id_R);
        ModifiedSignature mod = to_modified(sig);
        ok = ok && verify_individual_modified(bed.params, mod, msg, bed.opener.id_O, bed.gm.id_R);

        SignedMessage sm;
        sm.sig = mod;
        sm.msg = msg;
        sm.id_R = bed.gm.id_R;
        std::vector<SignedMessage> batch{sm};
        BatchPolicy policy;
        auto verdicts = verify_batch(bed.params, batch, policy, bed.opener.id_O, bed.rng);
        ok = ok && verdicts.size() == 1 && verdicts[0].accepted;
        if (ok) ++passed;
    }
    std::ostringstream d;
    d << passed << "/200 chains pass join, both verifies, and a single-item batch";
    report(4, passed == 200, d.str());
}

// 5. batch verdicts equal per-signature verdicts over a corrupted population
void check_batch_equivalence() {
    TestBed bed(5001);
    GmKey gm2 = keygen_gm(bed.params, bed.tea, "gm-2", bed.rng);
    std::vector<TestBed::Member> members{bed.enroll("veh-a"), bed.enroll("veh-b"),
                                         bed.enroll(gm2, "veh-c"), bed.enroll(gm2, "veh-d")};
    std::vector<std::string> rids{bed.gm.id_R, bed.gm.id_R, "gm-2", "gm-2"};

    std::vector<SignedMessage> msgs;
    for (int i = 0; i < 500; ++i) {
        std::size_t who = std::size_t(i) % members.size();
        std::string msg = "pop-" + std::to_string(i);
        ModifiedSignature sig = to_modified(
            sign(bed.params, members[who].cred, bed.opener.id_O, rids[who], msg, bed.rng));
        switch (i % 10) {
            case 3: sig = tweak_z2(bed.ctx, sig); break;
            case 7: sig = tweak_gamma2(bed.params, sig); break;
            case 9: msg += "?"; break;  // signed body altered in transit
            default: break;
        }
        SignedMessage sm;
        sm.sig = std::move(sig);
        sm.msg = std::move(msg);
        sm.id_R = rids[who];
        msgs.push_back(std::move(sm));
    }

    BatchPolicy policy;
    policy.l = 20;
    auto verdicts = verify_batch(bed.params, msgs, policy, bed.opener.id_O, bed.rng);
    int mismatches = 0;
    for (std::size_t i = 0; i < msgs.size(); ++i) {
        bool indiv = verify_individual_modified(bed.params, msgs[i].sig, msgs[i].msg,
                                                bed.opener.id_O, msgs[i].id_R);
        if (indiv != verdicts[i].accepted) ++mismatches;
    }
    std::ostringstream d;
    d << mismatches << " verdict disagreements across 500 mixed signatures at l=20";
    report(5, mismatches == 0, d.str());
}

// 6. measured false-accept rate of the short-exponent check tracks 2^-l
void check_soundness_curve() {
    GroupContext ctx = make_transparent_context(61);
    Rng rng(61);
    G1Elem g = ctx.g1_generator();
    bool ok = true;
    std::ostringstream d;
    for (int l : {1, 2, 4}) {
        int accepts = 0;
        const int trials = 10000;
        for (int t = 0; t < trials; ++t) {
            std::vector<std::pair<Scalar, G1Elem>> items;
            for (int j = 0; j < 4; ++j) {
                Scalar a = ctx.random_scalar(rng);
                items.emplace_back(a, g.pow(a));
            }
            items[std::size_t(t) % 4].second = items[std::size_t(t) % 4].second * g;  // forged
            if (small_exponent_test<GroupKind::G1>(ctx, items, g, l, rng)) ++accepts;
        }
        double rate = double(accepts) / trials;
        double bound = 1.5 * std::pow(2.0, -l);
        ok = ok && rate <= bound;
        d << "l=" << l << ":" << rate << "<=" << bound << " ";
    }
    report(6, ok, d.str());
}

// 7. the selection DP is exactly optimal against exhaustive search
void check_dp_optimality() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(7007);
    std::uniform_int_distribution<int> n_d(1, 8), p_d(1, 4), r_d(0, 12), slack_d(0, 10),
        w_d(0, 9);
    int agreed = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = n_d(rng);
        long long p = p_d(rng);
        std::vector<Job> jobs;
        for (int i = 0; i < n; ++i) {
            Job j;
            j.id = i + 1;
            j.r = r_d(rng);
            j.p = p;
            j.d = j.r + p + slack_d(rng);
            j.w = w_d(rng);
            jobs.push_back(j);
        }
        if (dp_max_weight(jobs).weight == brute_force_oracle(jobs)) ++agreed;
    }
    double ms = ms_since(t0);
    std::ostringstream d;
    d << agreed << "/200 random instances match exhaustive search in " << ms << " ms";
    report(7, agreed == 200 && ms < 60000.0, d.str());
}

// 8. opening always names the true signer and survives the judge;
//    swapped identities never do
void check_opening() {
    TestBed bed(8001);
    RegistrationTable table;
    std::vector<TestBed::Member> members;
    std::vector<std::string> names;
    for (int i = 0; i < 10; ++i) {
        names.push_back("veh-o" + std::to_string(i));
        members.push_back(bed.enroll(names.back()));
        table.insert(members.back().record);
    }

    int opened = 0, judged = 0, swap_rejected = 0;
    for (int i = 0; i < 100; ++i) {
        std::size_t who = std::size_t(i) % members.size();
        std::string msg = "open-" + std::to_string(i);
        Signature sig =
            sign(bed.params, members[who].cred, bed.opener.id_O, bed.gm.id_R, msg, bed.rng);
        OpenResult res = open(bed.params, bed.opener, sig, msg, bed.gm.id_R, table, bed.rng);
        if (res.status == OpenStatus::ok && res.id_V == names[who]) ++opened;
        if (res.status == OpenStatus::ok &&
            judge(bed.params, res.proof, sig, res.id_V, bed.opener.id_O))
            ++judged;
        std::string other = names[(who + 1) % names.size()];
        if (res.status == OpenStatus::ok &&
            !judge(bed.params, res.proof, sig, other, bed.opener.id_O))
            ++swap_rejected;
    }
    std::ostringstream d;
    d << opened << "/100 correct signer, " << judged << "/100 proofs accepted, " << swap_rejected
      << "/100 swapped identities rejected";
    report(8, opened == 100 && judged == 100 && swap_rejected == 100, d.str());
}

// 9. the batch-size sweep walks every prefix of an honest stream and
//    stops at the first prefix containing a forgery
void check_sweep() {
    TestBed bed(9001);
    auto member = bed.enroll("veh-s");
    Scalar one = bed.ctx.scalar(1);
    std::vector<ModifiedSignature> sigs;
    std::vector<std::string> msgs;
    std::vector<TimedItem> items;
    G2Elem S;
    for (int i = 0; i < 8; ++i) {
        msgs.push_back("sw-" + std::to_string(i));
        sigs.push_back(sign_modified(bed, member, msgs.back()));
        if (i == 0) S = group_value_S(bed.params, sigs[0].C, bed.gm.id_R);
        TimedItem ti;
        ti.item = precompute_item(bed.params, sigs.back(), msgs.back(), one, S, bed.opener.id_O);
        ti.C = i + 1;
        ti.d = i + 3;
        items.push_back(std::move(ti));
    }
    SweepCostModel model;
    auto honest = batch_size_sweep(bed.params, items, S, 5, model);
    bool ok = honest.size() == 7;
    for (std::size_t i = 0; i < honest.size(); ++i)
        ok = ok && honest[i].b == i + 2 && honest[i].ok;

    auto forged = items;
    forged[2].item =
        precompute_item(bed.params, tweak_z2(bed.ctx, sigs[2]), msgs[2], one, S, bed.opener.id_O);
    auto stopped = batch_size_sweep(bed.params, forged, S, 5, model);
    ok = ok && stopped.size() == 2 && stopped[0].ok && stopped[1].b == 3 && !stopped[1].ok;

    std::ostringstream d;
    d << honest.size() << " honest prefix records; forgery at position 3 stops the sweep at b="
      << (stopped.empty() ? 0 : stopped.back().b);
    report(9, ok, d.str());
}

}  // namespace

int main() {
    check_schedule_table();
    check_pairing_counts();
    check_signature_sizes();
    check_completeness_chains();
    check_batch_equivalence();
    check_soundness_curve();
    check_dp_optimality();
    check_opening();
    check_sweep();
    std::printf("SUMMARY %d/9 passed\n", 9 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
