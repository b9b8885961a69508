#include <set>

#include "doctest.h"
#include "testutil.hpp"
#include "vanetsig/algebra.hpp"

using namespace vanetsig;

TEST_CASE("transparent pairing matches exponent arithmetic") {
    GroupContext ctx = make_transparent_context(7);
    const Int& p = ctx.order();
    Rng rng(1);

    G1Elem A = ctx.g1_generator();
    G2Elem B = ctx.g2_generator();
    G3Elem t = ctx.g3_generator();
    CHECK(ctx.pair(A, B) == t);

    for (int i = 0; i < 100; ++i) {
        Scalar a = ctx.random_scalar_nonzero(rng);
        Scalar b = ctx.random_scalar_nonzero(rng);
        CHECK(ctx.pair(A.pow(a), B.pow(b)) == t.pow(a * b));
    }

    // exponent oracle: log of a pairing is the product of the input logs
    for (int i = 0; i < 500; ++i) {
        G1Elem x = A.pow(ctx.random_scalar(rng));
        G2Elem y = B.pow(ctx.random_scalar(rng));
        Int lx = *ctx.known_log(x);
        Int ly = *ctx.known_log(y);
        CHECK(*ctx.known_log(ctx.pair(x, y)) == mod(lx * ly, p));
    }
}

TEST_CASE("transparent group laws through the oracle") {
    GroupContext ctx = make_transparent_context(11);
    const Int& p = ctx.order();
    Rng rng(2);
    G1Elem A = ctx.g1_generator();

    for (int i = 0; i < 200; ++i) {
        G1Elem x = ctx.random_g1(rng);
        G1Elem y = ctx.random_g1(rng);
        CHECK(*ctx.known_log(x * y) == mod(*ctx.known_log(x) + *ctx.known_log(y), p));
        CHECK(*ctx.known_log(x.inverse()) == mod(-*ctx.known_log(x), p));
        CHECK((x * x.inverse()).is_identity());
        CHECK(x / y == x * y.inverse());
    }
    Scalar k = ctx.scalar(12345);
    CHECK(*ctx.known_log(A.pow(k)) == mod(*ctx.known_log(A) * k.value(), p));
}

TEST_CASE("curve pairing is bilinear and non-degenerate") {
    GroupContext ctx = make_curve_context("ss256");
    Rng rng(3);

    G1Elem A = ctx.g1_generator();
    G2Elem B = ctx.g2_generator();
    G3Elem t = ctx.pair(A, B);
    CHECK(t == ctx.g3_generator());
    CHECK_FALSE(t.is_identity());
    CHECK(t.pow(ctx.order()).is_identity());
    CHECK(ctx.known_log(A) == std::nullopt);

    for (int i = 0; i < 6; ++i) {
        Scalar a = ctx.random_scalar_nonzero(rng);
        Scalar b = ctx.random_scalar_nonzero(rng);
        CHECK(ctx.pair(A.pow(a), B.pow(b)) == t.pow(a * b));
    }
    CHECK(ctx.pair(A.inverse(), B) == t.inverse());
    CHECK(ctx.pair(A, B.inverse()) * t == ctx.g3_identity());
    CHECK(ctx.pair(ctx.g1_identity(), B).is_identity());
}

TEST_CASE("pairing counter tracks pairing evaluations only") {
    GroupContext ctx = make_transparent_context(5);
    Rng rng(4);
    ctx.reset_pairing_count();
    CHECK(ctx.pairing_count() == 0);

    G1Elem x = ctx.random_g1(rng);
    G2Elem y = ctx.g2_generator().pow(ctx.random_scalar(rng));
    (void)(x * x);
    (void)x.pow(Int(99));
    (void)ctx.hash_to_g1(HashTag::Vehicle, "nothing");
    CHECK(ctx.pairing_count() == 0);

    (void)ctx.pair(x, y);
    (void)pairing(x, y);
    CHECK(ctx.pairing_count() == 2);
    ctx.reset_pairing_count();
    CHECK(ctx.pairing_count() == 0);
}

TEST_CASE("hashes are deterministic with separated domains") {
    for (std::string backend : {"transparent", "curve"}) {
        GroupContext ctx = backend == "transparent" ? make_transparent_context(9)
                                                    : make_curve_context("ss256");
        CAPTURE(backend);
        CHECK(ctx.hash_to_g1(HashTag::Vehicle, "veh-1") == ctx.hash_to_g1(HashTag::Vehicle, "veh-1"));
        CHECK(ctx.hash_to_g1(HashTag::Vehicle, "veh-1") != ctx.hash_to_g1(HashTag::Vehicle, "veh-2"));
        CHECK(ctx.hash_to_g1(HashTag::Vehicle, "id") != ctx.hash_to_g1(HashTag::Opener, "id"));
        CHECK(ctx.hash_to_g1(HashTag::Opener, "op-1").valid());
        CHECK_FALSE(ctx.hash_to_g1(HashTag::Opener, "op-1").is_identity());

        CHECK(ctx.hash_to_zp(HashTag::Gm, "m") == ctx.hash_to_zp(HashTag::Gm, "m"));
        CHECK(ctx.hash_to_zp(HashTag::Gm, "m") != ctx.hash_to_zp(HashTag::Challenge, "m"));
        Scalar s = ctx.hash_to_zp(HashTag::Challenge, "m2");
        CHECK(s.value() > 0);
        CHECK(s.value() < ctx.order());

        CHECK_THROWS_AS((void)ctx.hash_to_g1(HashTag::Gm, "x"), std::invalid_argument);
    }
}

TEST_CASE("vehicle and opener hashes do not collide over 1000 inputs") {
    GroupContext ctx = make_transparent_context(10);
    for (int i = 0; i < 1000; ++i) {
        std::string id = "node-" + std::to_string(i);
        CHECK(ctx.hash_to_g1(HashTag::Vehicle, id) != ctx.hash_to_g1(HashTag::Opener, id));
    }
}

TEST_CASE("scalar hash is uniform across 16 buckets (chi-square, 0.01)") {
    GroupContext ctx = make_transparent_context(12);
    const std::size_t samples = 4096;
    std::vector<std::size_t> buckets(16, 0);
    for (std::size_t i = 0; i < samples; ++i) {
        Scalar s = ctx.hash_to_zp(HashTag::Challenge, "sample-" + std::to_string(i));
        // bucket by value range, not low bits, so reduction bias would show
        Int idx = (s.value() * 16) / ctx.order();
        buckets[static_cast<std::size_t>(idx)]++;
    }
    double stat = chi_square_uniform(buckets, samples);
    CAPTURE(stat);
    CHECK(stat < kChi2Crit15Df01);
}

TEST_CASE("serialization round-trips on both backends") {
    Rng rng(13);
    for (std::string backend : {"transparent", "curve"}) {
        GroupContext ctx = backend == "transparent" ? make_transparent_context(14)
                                                    : make_curve_context("ss256");
        CAPTURE(backend);
        for (int i = 0; i < 8; ++i) {
            G1Elem x = ctx.random_g1(rng);
            CHECK(ctx.parse_g1(x.serialize()) == x);
            G2Elem y = ctx.g2_generator().pow(ctx.random_scalar_nonzero(rng));
            CHECK(ctx.parse_g2(y.serialize()) == y);
            G3Elem z = ctx.pair(x, y);
            CHECK(ctx.parse_g3(z.serialize()) == z);
            Scalar s = ctx.random_scalar(rng);
            CHECK(ctx.parse_scalar(s.serialize()) == s);
        }
        CHECK(ctx.parse_g1(ctx.g1_identity().serialize()).is_identity());
        CHECK(ctx.parse_g3(ctx.g3_identity().serialize()).is_identity());

        // malformed inputs must throw, not crash or accept
        Bytes good = ctx.random_g1(rng).serialize();
        Bytes truncated(good.begin(), good.end() - 1);
        CHECK_THROWS_AS((void)ctx.parse_g1(truncated), std::invalid_argument);
        Bytes trailing = good;
        trailing.push_back(0);
        CHECK_THROWS_AS((void)ctx.parse_g1(trailing), std::invalid_argument);
        CHECK_THROWS_AS((void)ctx.parse_g1(Bytes{}), std::invalid_argument);
    }
}

TEST_CASE("curve parser rejects points outside the prime-order subgroup") {
    GroupContext ctx = make_curve_context("ss256");

    // Find some curve point by brute force; with cofactor ~2^97 it is
    // essentially never in the order-r subgroup.
    Int q("0x1595ceb961c831b493aca2c646aecfc4c8ada7683023d84d99a35f01650c751e3");
    std::size_t fq_bytes = 33;
    Int x = 1;
    for (;; ++x) {
        Int rhs = mod(x * x * x + x, q);
        Int y = powmod(rhs, (q + 1) / 4, q);
        if (mulmod(y, y, q) == rhs && rhs != 0) {
            Bytes payload;
            append_u8(payload, 0x04);
            append(payload, to_be_bytes_fixed(x, fq_bytes));
            append(payload, to_be_bytes_fixed(y, fq_bytes));
            Bytes framed;
            append_framed(framed, payload);
            CHECK_THROWS_AS((void)ctx.parse_g1(framed), std::invalid_argument);
            break;
        }
    }

    // off-curve point
    Bytes payload;
    append_u8(payload, 0x04);
    append(payload, to_be_bytes_fixed(Int(5), fq_bytes));
    append(payload, to_be_bytes_fixed(Int(5), fq_bytes));
    Bytes framed;
    append_framed(framed, payload);
    CHECK_THROWS_AS((void)ctx.parse_g1(framed), std::invalid_argument);

    // target-group value outside the order-r subgroup
    Bytes tg;
    Bytes tp;
    append(tp, to_be_bytes_fixed(Int(2), fq_bytes));
    append(tp, to_be_bytes_fixed(Int(0), fq_bytes));
    append_framed(tg, tp);
    CHECK_THROWS_AS((void)ctx.parse_g3(tg), std::invalid_argument);
}

TEST_CASE("scalar field arithmetic") {
    GroupContext ctx = make_transparent_context(15);
    Rng rng(16);
    for (int i = 0; i < 50; ++i) {
        Scalar a = ctx.random_scalar(rng);
        Scalar b = ctx.random_scalar_nonzero(rng);
        CHECK((a + b) - b == a);
        CHECK(b * b.inverse() == ctx.scalar(1));
        CHECK(a + (-a) == ctx.scalar(0));
        CHECK(b.value() != 0);
    }
    CHECK_THROWS_AS((void)ctx.scalar(0).inverse(), std::domain_error);
}

TEST_CASE("modulus of the transparent backend must be an odd prime") {
    CHECK_THROWS_AS((void)make_transparent_context(1, Int(15)), std::invalid_argument);
    CHECK_THROWS_AS((void)make_transparent_context(1, Int(1)), std::invalid_argument);
    CHECK_THROWS_AS((void)make_transparent_context(1, Int(2)), std::invalid_argument);
    GroupContext small = make_transparent_context(1, Int(1048583));
    CHECK(small.order() == 1048583);
}

TEST_CASE("contexts rebuild from their descriptors") {
    GroupContext t = make_transparent_context(42);
    GroupContext t2 = context_from_descriptor(t.descriptor());
    CHECK(t2.name() == "transparent");
    CHECK(t2.order() == t.order());
    // generators derive from the seed, so they must round-trip too
    CHECK(t2.g1_generator().serialize() == t.g1_generator().serialize());

    GroupContext c = make_curve_context("ss256");
    GroupContext c2 = context_from_descriptor(c.descriptor());
    CHECK(c2.name() == "curve");
    CHECK(c2.order() == c.order());

    CHECK_THROWS_AS((void)context_from_descriptor("granite p=7"), std::invalid_argument);
    CHECK_THROWS_AS((void)context_from_descriptor("curve id=nope"), std::invalid_argument);
    CHECK_THROWS_AS((void)context_from_descriptor("transparent p=10 seed=1"), std::invalid_argument);
}

TEST_CASE("source-group homomorphism commutes with the pairing") {
    for (std::string backend : {"transparent", "curve"}) {
        GroupContext ctx = backend == "transparent" ? make_transparent_context(17)
                                                    : make_curve_context("ss256");
        CAPTURE(backend);
        Rng rng(18);
        G1Elem x = ctx.random_g1(rng);
        G1Elem y = ctx.random_g1(rng);
        CHECK(ctx.lift_to_g2(x * y) == ctx.lift_to_g2(x) * ctx.lift_to_g2(y));
        CHECK(ctx.pair(x, ctx.lift_to_g2(y)) == ctx.pair(y, ctx.lift_to_g2(x)));
    }
}

TEST_CASE("random scalars and elements stay in range") {
    GroupContext ctx = make_transparent_context(19, Int(1048583));
    Rng rng(20);
    std::set<Int> seen;
    for (int i = 0; i < 300; ++i) {
        Scalar s = ctx.random_scalar_nonzero(rng);
        CHECK(s.value() > 0);
        CHECK(s.value() < ctx.order());
        seen.insert(s.value());
        CHECK_FALSE(ctx.random_g1(rng).is_identity());
    }
    CHECK(seen.size() > 250);  // no gross degeneracy in the sampler
}
