#include <doctest.h>

#include <cmath>

#include "leakyamd/bounds.hpp"

using namespace lamd;
using namespace lamd::bounds;

TEST_SUITE("bounds") {

TEST_CASE("minimum delta for a given group size") {
    CHECK(amd_weak_min_delta(1, 13) == Rational(0));
    CHECK(amd_weak_min_delta(7, 13) == Rational(1, 2));
    CHECK_THROWS_AS(amd_weak_min_delta(7, 1), std::invalid_argument);

    CHECK(amd_strong_min_delta(1, 343) == 0.0);
    double d = amd_strong_min_delta(7, 343);
    CHECK(d == doctest::Approx(std::sqrt(6.0 / 342.0)));
    // the q=7, d=1 polynomial-tag code sits above the floor
    CHECK(2.0 / 7.0 >= d);
}

TEST_CASE("strong leaky-storage rate bound") {
    auto rep = strong_rho_bound_check(4, 1, 0.25, 0.4, 5);
    CHECK(rep.satisfied);
    CHECK(rep.lhs == 1.0);
    CHECK(rep.rhs == doctest::Approx(3.0 + (2.0 * std::log2(0.4) - 1.0) / std::log2(5.0)));

    // rho = 0 reduces to the plain strong bound: k <= n + (2 log d - 1)/log q
    auto flat = strong_rho_bound_check(3, 1, 0.0, 2.0 / 7.0, 7);
    CHECK(flat.satisfied);

    // delta = 1 keeps the right side finite
    auto vac = strong_rho_bound_check(4, 1, 0.25, 1.0, 5);
    CHECK(vac.rhs == doctest::Approx(3.0 - 1.0 / std::log2(5.0)));

    CHECK_THROWS_AS(strong_rho_bound_check(4, 1, 0.25, 0.0, 5), std::invalid_argument);
}

TEST_CASE("strong group-size form") {
    auto rep = strong_rho_table_check(4, 1, 0.25, 0.4, 5);
    CHECK(rep.satisfied);  // 5^3 = 125 >= 4/0.16 + 1 = 26
}

TEST_CASE("weak leaky-storage bounds") {
    auto reps = weak_rho_bound_check(3, 2, 1.0 / 3.0, 0.3, 11);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].satisfied);  // 11^(1-2) <= 0.3
    CHECK(reps[1].satisfied);  // 120/1330 <= 0.3

    // no redundancy, no security: the random-offset inequality forces delta = 1
    auto degenerate = weak_rho_bound_check(3, 3, 0.0, 0.999, 7);
    CHECK_FALSE(degenerate[1].satisfied);

    // full leakage with k = n fails the entropy inequality for delta < 1
    auto full = weak_rho_bound_check(3, 3, 1.0, 0.5, 7);
    CHECK_FALSE(full[0].satisfied);
}

TEST_CASE("randomness-leakage conversions") {
    CHECK(llr_strong_max_rho(0.0, 3.0, 3, 7) == 0.0);
    // alpha r = rho n log q is an exact trade
    double rho = llr_strong_max_rho(0.5, std::log2(7.0), 3, 7);
    CHECK(rho == doctest::Approx(0.5 / 3.0));

    auto conv = rho_strong_convert(0.0, 3, 7, 0.25);
    CHECK(conv.min_r_bits == doctest::Approx(2.0));
    CHECK(conv.max_alpha == 0.0);
}

TEST_CASE("round trip through the conversions never widens rho") {
    size_t n = 3;
    uint64_t q = 7;
    double r_bits = std::log2(7.0);
    for (double alpha : {0.1, 0.3, 0.5, 0.9}) {
        double delta = (2.0 / 7.0) * std::pow(7.0, alpha);  // tag family at this alpha
        double rho = llr_strong_max_rho(alpha, r_bits, n, q);
        auto back = rho_strong_convert(rho, n, q, delta);
        CHECK(back.min_r_bits <= r_bits + kSlack);
        double rho2 = llr_strong_max_rho(back.max_alpha, back.min_r_bits, n, q);
        CHECK(rho2 <= rho + kSlack);
        if (delta <= 1.0)  // no alpha clamping, the trade is exact
            CHECK(rho2 == doctest::Approx(rho).epsilon(1e-12));
    }
}

TEST_CASE("strong corollary stays below 1/n for the tag family") {
    size_t n = 3;
    for (double alpha : {0.0, 0.2, 0.5, 0.8}) {
        double delta = 2.0 * std::pow(7.0, alpha - 1.0);
        double rho = corollary_strong_max_rho(n, 7, delta);
        CHECK(rho == doctest::Approx(alpha / 3.0));
        CHECK(rho < 1.0 / 3.0);
    }
}

TEST_CASE("weak conversions") {
    CHECK(llr_weak_max_rho(0.0, 2, 3) == 0.0);
    CHECK(llr_weak_max_rho(0.3, 2, 3) == doctest::Approx(0.2));
    CHECK(llr_weak_max_rho(1.0, 3, 3) == doctest::Approx(1.0));
    CHECK(llr_weak_max_alpha(0.2, 2, 3) == doctest::Approx(0.3));
}

TEST_CASE("weak corollary") {
    // delta = 2/q makes the numerator vanish
    CHECK(corollary_weak_max_rho(3, 11, 2.0 / 11.0) == doctest::Approx(0.0));
    CHECK(corollary_weak_max_rho(3, 11, 0.5) > 0.0);
}

TEST_CASE("randomness-leakage table rows") {
    auto g = llr_table_bounds(1, 0.25, 0.5);
    CHECK(g.strong_min_g == doctest::Approx(1.0));
    CHECK(g.weak_min_g == doctest::Approx(1.0));

    auto g2 = llr_table_bounds(49, 0.25, 0.5);
    double c = 1.0 - std::exp(-1.0);
    CHECK(g2.strong_min_g == doctest::Approx(48.0 * c / std::pow(0.25, 4.0) + 1.0));
    CHECK(g2.weak_min_g ==
          doctest::Approx(std::max(48.0 * c / std::pow(0.25, 2.0) + 1.0,
                                   std::pow(49.0, 0.5) * 48.0 * c / 0.25 + 1.0)));

    CHECK_THROWS_AS(llr_table_bounds(49, 0.25, 1.0), std::invalid_argument);
}

TEST_CASE("rate ceiling and tag overhead") {
    CHECK(wt2_rate_bound(Rational(0)) == Rational(1));
    CHECK(wt2_rate_bound(Rational(1, 4)) == Rational(3, 4));
    // the composed family at desk scale: rate 1/4 under ceiling 3/4
    CHECK(Rational(1, 4) <= wt2_rate_bound(Rational(1, 4)));

    CHECK(tag_overhead_bits(7, 1, 3) == doctest::Approx(2.0 * std::log2(7.0)));
    CHECK_THROWS_AS(tag_overhead_bits(7, 3, 1), std::invalid_argument);
}

}  // TEST_SUITE
