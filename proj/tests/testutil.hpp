#ifndef VANETSIG_TESTS_TESTUTIL_HPP_
#define VANETSIG_TESTS_TESTUTIL_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vanetsig/ibgs.hpp"

// A provisioned system: authority, one GM, one opener, and a helper to
// enroll vehicles.  Defaults to the transparent backend so tests can
// lean on the exponent oracle.
struct TestBed {
    vanetsig::GroupContext ctx;
    vanetsig::SystemParams params;
    vanetsig::TeaSecret tea;
    vanetsig::GmKey gm;
    vanetsig::OpenerKey opener;
    vanetsig::Rng rng;

    explicit TestBed(std::uint64_t seed, vanetsig::GroupContext c = {}) : rng(seed) {
        ctx = c ? c : vanetsig::make_transparent_context(seed);
        auto [p, t] = vanetsig::setup(ctx, rng);
        params = p;
        tea = t;
        gm = vanetsig::keygen_gm(params, tea, "gm-1", rng);
        opener = vanetsig::keygen_tsd(params, tea, "tsd-1");
    }

    struct Member {
        vanetsig::VehicleCredential cred;
        vanetsig::RegistrationRecord record;
    };

    Member enroll(std::string_view id_V) { return enroll(gm, id_V); }

    Member enroll(const vanetsig::GmKey& g, std::string_view id_V) {
        vanetsig::VehicleKey vk = vanetsig::keygen_vehicle(params, tea, id_V);
        vanetsig::PoKTranscript pok =
            vanetsig::pok_prove(params, vk, vanetsig::as_bytes("enroll"), rng);
        auto [cert, rec] = vanetsig::join_issue(g, params, id_V, pok, rng);
        return Member{vanetsig::VehicleCredential{std::move(vk), cert.D, cert.t, cert.C},
                      std::move(rec)};
    }
};

// Pearson chi-square statistic for observed bucket counts against a
// uniform expectation.
inline double chi_square_uniform(const std::vector<std::size_t>& buckets, std::size_t total) {
    double expected = static_cast<double>(total) / static_cast<double>(buckets.size());
    double stat = 0.0;
    for (std::size_t n : buckets) {
        double d = static_cast<double>(n) - expected;
        stat += d * d / expected;
    }
    return stat;
}

// Upper critical value of chi-square with 15 degrees of freedom at
// significance 0.01.
inline constexpr double kChi2Crit15Df01 = 30.578;

#endif  // VANETSIG_TESTS_TESTUTIL_HPP_
