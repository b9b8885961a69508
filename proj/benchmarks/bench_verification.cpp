#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "vanetsig/batch.hpp"
#include "vanetsig/ibgs.hpp"

using namespace vanetsig;

namespace {

// provisioned system with one group and a pool of signed messages
struct Fixture {
    GroupContext ctx = make_transparent_context(99);
    Rng rng{99};
    SystemParams params;
    TeaSecret tea;
    GmKey gm;
    OpenerKey opener;
    G2Elem S;
    std::vector<Signature> full;
    std::vector<SignedMessage> msgs;

    explicit Fixture(std::size_t n) {
        auto [p, t] = setup(ctx, rng);
        params = p;
        tea = t;
        gm = keygen_gm(params, tea, "gm-1", rng);
        opener = keygen_tsd(params, tea, "tsd-1");
        S = group_value_S(params, gm.C, gm.id_R);

        VehicleKey vk = keygen_vehicle(params, tea, "veh-1");
        PoKTranscript pok = pok_prove(params, vk, as_bytes("enroll"), rng);
        auto [cert, rec] = join_issue(gm, params, "veh-1", pok, rng);
        VehicleCredential cred{std::move(vk), cert.D, cert.t, cert.C};

        for (std::size_t i = 0; i < n; ++i) {
            std::string msg = "payload-" + std::to_string(i);
            Signature sig = sign(params, cred, opener.id_O, gm.id_R, msg, rng);
            SignedMessage sm;
            sm.sig = to_modified(sig);
            sm.msg = msg;
            sm.id_R = gm.id_R;
            full.push_back(std::move(sig));
            msgs.push_back(std::move(sm));
        }
    }
};

void BM_sign(benchmark::State& state) {
    Fixture fx(1);
    VehicleKey vk = keygen_vehicle(fx.params, fx.tea, "veh-2");
    PoKTranscript pok = pok_prove(fx.params, vk, as_bytes("enroll"), fx.rng);
    auto [cert, rec] = join_issue(fx.gm, fx.params, "veh-2", pok, fx.rng);
    VehicleCredential cred{std::move(vk), cert.D, cert.t, cert.C};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sign(fx.params, cred, fx.opener.id_O, fx.gm.id_R, "payload", fx.rng));
    }
}
BENCHMARK(BM_sign);

void BM_verify_individual_original(benchmark::State& state) {
    Fixture fx(1);
    fx.ctx.reset_pairing_count();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_individual_original(fx.params, fx.full[0],
                                                            fx.msgs[0].msg, fx.opener.id_O,
                                                            fx.gm.id_R));
    }
    state.counters["pairings/op"] =
        double(fx.ctx.pairing_count()) / double(state.iterations());
}
BENCHMARK(BM_verify_individual_original);

void BM_verify_individual_modified(benchmark::State& state) {
    Fixture fx(1);
    fx.ctx.reset_pairing_count();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_individual_modified(fx.params, fx.msgs[0].sig,
                                                            fx.msgs[0].msg, fx.opener.id_O,
                                                            fx.gm.id_R));
    }
    state.counters["pairings/op"] =
        double(fx.ctx.pairing_count()) / double(state.iterations());
}
BENCHMARK(BM_verify_individual_modified);

void BM_precompute_item(benchmark::State& state) {
    Fixture fx(1);
    Scalar delta = fx.ctx.scalar(123456);
    for (auto _ : state) {
        benchmark::DoNotOptimize(precompute_item(fx.params, fx.msgs[0].sig, fx.msgs[0].msg, delta,
                                                 fx.S, fx.opener.id_O));
    }
}
BENCHMARK(BM_precompute_item);

// full batch path: per-message precomputation plus one finalization;
// pairings/msg shows the 3/n amortization against 13 per individual check
void BM_verify_batch(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    Fixture fx(n);
    BatchPolicy policy;
    policy.max_batch = n;
    Rng delta_rng(7);
    fx.ctx.reset_pairing_count();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            verify_batch(fx.params, fx.msgs, policy, fx.opener.id_O, delta_rng));
    }
    state.counters["pairings/msg"] =
        double(fx.ctx.pairing_count()) / double(state.iterations()) / double(n);
    state.SetItemsProcessed(std::int64_t(state.iterations() * n));
}
BENCHMARK(BM_verify_batch)->Arg(1)->Arg(8)->Arg(64)->Arg(256);

// finalization alone: the 3-pairing step over prebuilt items
void BM_batch_finalize(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    Fixture fx(n);
    std::vector<BatchItem> items;
    Scalar one = fx.ctx.scalar(1);
    for (std::size_t i = 0; i < n; ++i)
        items.push_back(precompute_item(fx.params, fx.msgs[i].sig, fx.msgs[i].msg, one, fx.S,
                                        fx.opener.id_O));
    for (auto _ : state) {
        benchmark::DoNotOptimize(batch_finalize(fx.params, items, fx.S));
    }
    state.SetItemsProcessed(std::int64_t(state.iterations() * n));
}
BENCHMARK(BM_batch_finalize)->Arg(1)->Arg(8)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
