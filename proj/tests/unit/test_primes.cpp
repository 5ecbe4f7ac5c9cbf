#include <doctest.h>

#include <modcf/errors.hpp>
#include <modcf/factored_integer.hpp>
#include <modcf/primes.hpp>

#include "oracle.hpp"

using namespace modcf;

TEST_CASE("is_prime agrees with trial division below 10^5")
{
    for (std::uint64_t n = 0; n < 100000; ++n) {
        REQUIRE(is_prime(n) == oracle::brute_is_prime(n));
    }
}

TEST_CASE("is_prime on 64-bit edge cases")
{
    CHECK(is_prime(std::uint64_t{2305843009213693951}));   // 2^61 - 1
    CHECK_FALSE(is_prime(std::uint64_t{3215031751}));      // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(std::uint64_t{3825123056546413051}));
    CHECK(is_prime(std::uint64_t{18446744073709551557ULL})); // largest 64-bit prime
    CHECK_FALSE(is_prime(std::uint64_t{18446744073709551615ULL}));
}

TEST_CASE("big-integer primality reports its certification")
{
    const auto small = is_prime(BigInt(1000003));
    CHECK(small.prime);
    CHECK(small.certification == Certification::deterministic);

    const BigInt m89 = pow2(89) - 1;
    const auto big = is_prime(m89);
    CHECK(big.prime);
    CHECK(big.certification == Certification::probabilistic);

    CHECK_FALSE(is_prime(m89 * 3).prime);
    CHECK_FALSE(is_prime(pow2(67) - 1).prime); // 193707721 * 761838257287
}

TEST_CASE("factor_u64 reconstructs its input")
{
    const std::uint64_t samples[] = {1, 2, 12, 97, 1001, 600851475143ULL, 999999000001ULL,
                                     4611686014132420609ULL /* (2^31 - 1)^2 */, 18446744073709551615ULL};
    for (std::uint64_t n : samples) {
        std::uint64_t product = 1;
        std::uint64_t last = 0;
        for (const auto& [p, e] : factor_u64(n)) {
            CHECK(is_prime(p));
            CHECK(p > last);
            last = p;
            for (unsigned i = 0; i < e; ++i) {
                product *= p;
            }
        }
        CHECK(product == n);
    }
    for (std::uint64_t n = 1; n < 5000; ++n) {
        const auto got = factor_u64(n);
        REQUIRE(got == oracle::brute_factor(n));
    }
}

TEST_CASE("primes_up_to")
{
    const auto ps = primes_up_to(100);
    CHECK(ps.size() == 25);
    CHECK(ps.front() == 2);
    CHECK(ps.back() == 97);
    CHECK(primes_up_to(1).empty());
}

TEST_CASE("FactoredInteger invariants")
{
    const auto f = FactoredInteger::factor(360);
    CHECK(f.value() == 360);
    REQUIRE(f.factors().size() == 3);
    CHECK(f.factors()[0] == PrimePower{2, 3});
    CHECK(f.factors()[2] == PrimePower{5, 1});
    CHECK_FALSE(f.is_squarefree());
    CHECK(FactoredInteger::factor(30).is_squarefree());
    CHECK(FactoredInteger::factor(1).factors().empty());
    CHECK_THROWS_AS(FactoredInteger::factor(0), UsageError);

    CHECK_THROWS_AS(FactoredInteger::from_factors({{3, 1}, {2, 1}}), UsageError);
    CHECK_THROWS_AS(FactoredInteger::from_factors({{2, 0}}), UsageError);
    CHECK_THROWS_AS(FactoredInteger::from_factors({{4, 1}}), UsageError);

    const BigInt big = pow2(89) - 1;
    const auto pq = FactoredInteger::from_factors({{2, 1}, {big, 1}});
    CHECK(pq.value() == 2 * big);
    CHECK(pq.certification() == Certification::probabilistic);

    const auto prod = FactoredInteger::factor(12).coprime_product(FactoredInteger::factor(35));
    CHECK(prod.value() == 420);
    CHECK(prod.distinct_primes() == 4);
    CHECK_THROWS_AS(FactoredInteger::factor(6).coprime_product(FactoredInteger::factor(10)), UsageError);
}

TEST_CASE("parse_bigint")
{
    CHECK(parse_bigint("123456789012345678901234567890") == BigInt("123456789012345678901234567890"));
    CHECK(parse_bigint("-7") == -7);
    CHECK_THROWS_AS(parse_bigint(""), UsageError);
    CHECK_THROWS_AS(parse_bigint("12a"), UsageError);
}
