#include <doctest.h>

#include "leakyamd/amd.hpp"
#include "leakyamd/bounds.hpp"

using namespace lamd;

namespace {

// Independent security oracle: best fraction of randomness values fooled by a
// single fixed nonzero offset, maximized over messages and offsets.
Rational amd_exhaustive_forge_probability(const AmdParams& p) {
    uint64_t M = p.message_count();
    uint64_t G = p.group_count();
    uint64_t best = 0;
    for (uint64_t mi = 0; mi < M; ++mi) {
        Vec m = vec_unpack(mi, p.d, p.q);
        for (uint64_t di = 1; di < G; ++di) {
            Vec delta = vec_unpack(di, p.d + 2, p.q);
            uint64_t cnt = 0;
            for (uint64_t r = 0; r < p.q; ++r) {
                Vec tampered = vec_add(amd_encode(m, FieldElem(r, p.q), p), delta);
                auto dec = amd_decode(tampered, p);
                if (dec.has_value() && !(*dec == m)) ++cnt;
            }
            best = std::max(best, cnt);
        }
    }
    return Rational::from_count(best, p.q);
}

}  // namespace

TEST_SUITE("amd") {

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(AmdParams::create(7, 1));
    CHECK_THROWS_AS(AmdParams::create(5, 3), std::invalid_argument);  // q divides d+2
    CHECK_THROWS_AS(AmdParams::create(6, 1), std::invalid_argument);  // q not prime
    CHECK_THROWS_AS(AmdParams::create(7, 0), std::invalid_argument);
}

TEST_CASE("encode examples") {
    AmdParams p = AmdParams::create(7, 1);
    CHECK(amd_encode(Vec(7, {0}), FieldElem(0, 7), p) == Vec(7, {0, 0, 0}));
    CHECK(amd_encode(Vec(7, {2}), FieldElem(3, 7), p) == Vec(7, {2, 3, 5}));
    CHECK_THROWS_AS(amd_encode(Vec(7, {2, 2}), FieldElem(3, 7), p), std::invalid_argument);
}

TEST_CASE("decode examples") {
    AmdParams p = AmdParams::create(7, 1);
    CHECK(amd_decode(Vec(7, {2, 3, 5}), p) == Vec(7, {2}));
    CHECK_FALSE(amd_decode(Vec(7, {2, 3, 4}), p).has_value());
    CHECK(amd_decode(Vec(7, {0, 0, 0}), p) == Vec(7, {0}));
    CHECK_THROWS_AS(amd_decode(Vec(7, {2, 3}), p), std::invalid_argument);
}

TEST_CASE("round trip exhaustive") {
    for (auto [q, d] : std::vector<std::pair<uint64_t, size_t>>{{7, 1}, {11, 1}, {7, 2}, {11, 2}}) {
        AmdParams p = AmdParams::create(q, d);
        for (uint64_t mi = 0; mi < p.message_count(); ++mi) {
            Vec m = vec_unpack(mi, d, q);
            for (uint64_t r = 0; r < q; ++r) {
                auto dec = amd_decode(amd_encode(m, FieldElem(r, q), p), p);
                REQUIRE(dec.has_value());
                CHECK(*dec == m);
            }
        }
    }
}

TEST_CASE("forge probability at most (d+1)/q, exhaustively") {
    for (auto [q, d] : std::vector<std::pair<uint64_t, size_t>>{{7, 1}, {5, 1}, {11, 1}}) {
        AmdParams p = AmdParams::create(q, d);
        CHECK(amd_exhaustive_forge_probability(p) <= p.delta());
    }
    // The polynomial tag admits an offset with two fooled randomness values,
    // so the bound is met with equality at q=7, d=1.
    CHECK(amd_exhaustive_forge_probability(AmdParams::create(7, 1)) == Rational(2, 7));
}

TEST_CASE("group size consistency with the strong lower bound") {
    for (auto [q, d] : std::vector<std::pair<uint64_t, size_t>>{{7, 1}, {5, 1}, {11, 2}, {13, 3}}) {
        AmdParams p = AmdParams::create(q, d);
        double min_delta = bounds::amd_strong_min_delta(p.message_count(), p.group_count());
        CHECK(p.delta().to_double() >= min_delta - bounds::kSlack);
    }
}

}  // TEST_SUITE
