#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nsk/analysis.hpp"
#include "nsk/errors.hpp"
#include "nsk/polynomial.hpp"

using namespace nsk;

TEST_CASE("closed-form rate") {
    RateValue r29 = rate_closed_form(2, 9);
    CHECK(r29.carriers == BigUint(127));
    CHECK(r29.modulus == BigUint(977));
    CHECK(r29.rate == doctest::Approx(127.0 / 977.0));

    RateValue r21 = rate_closed_form(2, 1);
    CHECK(r21.carriers == BigUint(2));
    CHECK(r21.modulus == BigUint(3));

    // recompute over F_3 by enumeration
    auto all = enumerate_irreducibles(PrimeField(3), 3);
    std::size_t degsum = 0;
    for (const auto& f : all) degsum += (std::size_t)f.degree();
    RateValue r33 = rate_closed_form(3, 3);
    CHECK(r33.carriers == BigUint((unsigned long)all.size()));
    CHECK(r33.modulus == BigUint((unsigned long)(degsum + 1)));
    CHECK(r33.rate ==
          doctest::Approx((double)all.size() / ((degsum + 1) * std::log2(3.0))));
}

TEST_CASE("percent rendering") {
    CHECK(render_percent(131.0 / 1024.0) == "12.8%");
    CHECK(render_percent(9.0 / 35.0) == "25.7%");
    CHECK(render_percent2(8.0 / 23.0) == "34.78%");
}

TEST_CASE("block fill planning") {
    // base N=9 sums to 976; block 1024 needs 47 more: three 10s and one 17
    auto fill = plan_block_fill(2, 9, 1024);
    REQUIRE(fill.size() == 4);
    CHECK(fill[0] == 10);
    CHECK(fill[1] == 10);
    CHECK(fill[2] == 10);
    CHECK(fill[3] == 17);
    // exact base: nothing to add
    CHECK(plan_block_fill(2, 9, 977).empty());
}

TEST_CASE("matching table reproduces the published block rows") {
    auto report = matching_table(2, {1024, 2048, 4096, 8192});
    REQUIRE(report.rows.size() == 4);
    CHECK(report.rows[0].L == 131);
    CHECK(report.rows[1].L == 233);
    CHECK(report.rows[2].L == 418);
    CHECK(report.rows[3].L == 759);
    CHECK(report.rows[0].percent == "12.8%");
    CHECK(report.rows[1].percent == "11.4%");
    CHECK(report.rows[2].percent == "10.2%"); // 418/4096, exact rendering
    for (const auto& row : report.rows) {
        CHECK(row.modulus_bits >= 1024);
        CHECK(row.rate == doctest::Approx((double)row.L / row.modulus_bits));
    }
}

TEST_CASE("asymptotic ratio tends to one from above") {
    CHECK(asymptotic_ratio(2, 30) > 1.0);
    CHECK(asymptotic_ratio(2, 30) < 1.1);
    for (std::size_t N = 20; N < 60; ++N)
        CHECK(asymptotic_ratio(2, N) > asymptotic_ratio(2, N + 1));
    // N=1: L=q, deg h = q+1, ratio = q/(q+1)
    CHECK(asymptotic_ratio(3, 1) == doctest::Approx(3.0 / 4.0));
}

TEST_CASE("prime sieve") {
    CHECK(primes_below(2).empty());
    CHECK(primes_below(20) ==
          std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(primes_below(1 << 16).size() == 6542);
}

TEST_CASE("integer-scheme rate at desk scale") {
    RateValue m3 = nsk_int_rate(3);
    CHECK(m3.carriers == BigUint(4)); // 2, 3, 5, 7
    CHECK(m3.modulus == BigUint(8));  // next_prime(210) = 211, 8 bits
    CHECK(m3.rate == doctest::Approx(0.5));

    RateValue m1 = nsk_int_rate(1);
    CHECK(m1.carriers == BigUint(1));
    CHECK(m1.modulus == BigUint(2)); // p = 3

    CHECK_THROWS_AS(nsk_int_rate(25), SieveTooLarge);
}

TEST_CASE("both schemes have comparable rates at matched size") {
    double poly_rate = rate_closed_form(2, 16).rate;
    double int_rate = nsk_int_rate(16).rate;
    CHECK(std::fabs(poly_rate - int_rate) / poly_rate < 0.20);
}
