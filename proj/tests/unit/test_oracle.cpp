#include <doctest.h>

#include <modcf/errors.hpp>

#include "oracle.hpp"

using namespace modcf;

TEST_CASE("subset counter examples")
{
    CHECK(oracle::brute_g(1) == 1);
    CHECK(oracle::brute_g(2) == 2);
    CHECK(oracle::brute_g(4) == 11);
    CHECK(oracle::brute_nathanson_phi(2) == 2);
    CHECK(oracle::brute_nathanson_phi(3) == 6);
    CHECK(oracle::brute_nathanson_phi(4) == 12);
    CHECK_THROWS_AS(oracle::brute_g(0), UsageError);
    CHECK_THROWS_AS(oracle::brute_g(23), UsageError);
    CHECK_THROWS_AS(oracle::brute_nathanson_phi(1), UsageError);
}

TEST_CASE("difference identity between the two subset counts")
{
    for (unsigned n = 2; n <= 21; ++n) {
        CAPTURE(n);
        CHECK(2 * (oracle::brute_g(n + 1) - oracle::brute_g(n)) == oracle::brute_nathanson_phi(n + 1));
    }
}

TEST_CASE("divisor sums and convolution")
{
    CHECK(oracle::brute_divisor_sum(1, 3) == 1);
    CHECK(oracle::brute_divisor_sum(12, 1) == 28);
    const oracle::Fn sigma = [](std::uint64_t d) { return oracle::brute_divisor_sum(d, 1); };
    const oracle::Fn phi = [](std::uint64_t d) { return oracle::brute_phi(d); };
    CHECK(oracle::brute_convolution(sigma, phi, 3) == 6);
    CHECK(oracle::brute_convolution(sigma, phi, 4) == 12);
    CHECK_THROWS_AS(oracle::brute_divisor_sum(1000001, 1), UsageError);
}
