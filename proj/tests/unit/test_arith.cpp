#include <doctest.h>

#include <modcf/arith.hpp>
#include <modcf/errors.hpp>
#include <modcf/factored_integer.hpp>
#include <modcf/primes.hpp>
#include <modcf/qseries.hpp>
#include <modcf/sieve.hpp>

#include "oracle.hpp"

using namespace modcf;

namespace {

std::uint64_t residue(const ArithFunction& f, std::uint64_t n, std::uint64_t m)
{
    return mod_eval(f, FactoredInteger::factor(n), ModulusContext(m));
}

} // namespace

TEST_CASE("mobius")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    const auto table = mobius_table(5000);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        REQUIRE(mobius(n) == oracle::brute_mobius(n));
        REQUIRE(table[n] == oracle::brute_mobius(n));
    }
}

TEST_CASE("single-value examples")
{
    CHECK(sigma_k(1, 5) == 1);
    CHECK(sigma_k(6, 1) == 12);
    CHECK(sigma_k(2, 11) == 2049);
    CHECK(sigma_k(6, 0) == 4);
    CHECK(euler_phi(10) == 4);
    CHECK(jordan_totient(3, 2) == 7);
    CHECK(unitary_phi(12) == 6);
    CHECK(sigma_conv_phi(3) == 6);
    CHECK_THROWS_AS(jordan_totient(1, 5), DomainError);
    CHECK_THROWS_AS(jordan_totient(2, 5), DomainError);
    CHECK_THROWS_AS(ArithFunction::jordan(4), DomainError);

    CHECK(nathanson_phi(1) == 2);
    CHECK(nathanson_phi(2) == 2);
    CHECK(nathanson_phi(4) == 12);
    CHECK(nathanson_phi(7) == 126);
    CHECK(nathanson_g(1) == 1);
    CHECK(nathanson_g(3) == 5);
    CHECK(nathanson_g(4) == 11);
}

TEST_CASE("values agree with the brute-force references")
{
    const oracle::Fn sigma1 = [](std::uint64_t d) { return oracle::brute_divisor_sum(d, 1); };
    const oracle::Fn phi = [](std::uint64_t d) { return oracle::brute_phi(d); };
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        for (unsigned k : {0U, 1U, 3U, 11U}) {
            REQUIRE(sigma_k(n, k) == oracle::brute_divisor_sum(n, k));
        }
        REQUIRE(euler_phi(n) == oracle::brute_phi(n));
        REQUIRE(jordan_totient(3, n) == oracle::brute_jordan(3, n));
        REQUIRE(jordan_totient(5, n) == oracle::brute_jordan(5, n));
        REQUIRE(unitary_phi(n) == oracle::brute_unitary_phi(n));
        REQUIRE(sigma_conv_phi(n) == oracle::brute_convolution(sigma1, phi, n));
    }
    CHECK(oracle::brute_convolution(sigma1, phi, 4) == 12);
}

TEST_CASE("Nathanson formulas agree with subset counting")
{
    for (unsigned n = 2; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(nathanson_phi(n) == oracle::brute_nathanson_phi(n));
        CHECK(nathanson_g(n) == oracle::brute_g(n));
    }
    CHECK(nathanson_g(1) == oracle::brute_g(1));
}

TEST_CASE("multiplicativity on coprime pairs up to 1000")
{
    const std::uint64_t limit = 1000;
    const std::vector<ArithFunction> fns = {ArithFunction::sigma(0),     ArithFunction::sigma(1),
                                            ArithFunction::sigma(3),     ArithFunction::phi(),
                                            ArithFunction::jordan(3),    ArithFunction::jordan(5),
                                            ArithFunction::unitary_phi(), ArithFunction::sigma_conv_phi()};
    for (const auto& f : fns) {
        CAPTURE(f.name());
        const auto table = sieve_range(f, 1, limit * limit);
        for (std::uint64_t a = 1; a <= limit; ++a) {
            for (std::uint64_t b = a; b <= limit; ++b) {
                if (gcd_u64(a, b) == 1) {
                    REQUIRE(table[a * b - 1] == table[a - 1] * table[b - 1]);
                }
            }
        }
    }
}

TEST_CASE("Phi(p) divides Phi(n) whenever p | n")
{
    const auto phi = sieve_range(ArithFunction::nathanson_phi(), 1, 2000);
    for (std::uint64_t p : primes_up_to(31)) {
        for (std::uint64_t n = p; n <= 2000; n += p) {
            REQUIRE(phi[n - 1] % phi[p - 1] == 0);
        }
    }
}

TEST_CASE("2 (g(n+1) - g(n)) = Phi(n+1), and Phi(n) is even")
{
    const auto g = sieve_range(ArithFunction::nathanson_g(), 1, 2001);
    const auto phi = sieve_range(ArithFunction::nathanson_phi(), 1, 2001);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        REQUIRE(2 * (g[n] - g[n - 1]) == phi[n]);
    }
    for (std::uint64_t n = 2; n <= 2000; ++n) {
        REQUIRE(phi[n - 1] % 2 == 0);
    }
}

TEST_CASE("exact_eval matches the dedicated functions")
{
    CHECK(exact_eval(ArithFunction::tau(), 6) == -6048);
    CHECK(exact_eval(ArithFunction::eisenstein(14), 2) == -196632);
    CHECK(exact_eval(ArithFunction::half_nathanson_phi(), 3) == 3);
    CHECK(exact_eval(ArithFunction::half_nathanson_phi(), 1) == 1);
    CHECK(exact_eval(ArithFunction::mobius(), 6) == 1);
    for (std::uint64_t n = 1; n <= 300; ++n) {
        REQUIRE(exact_eval(ArithFunction::nathanson_g(), n) == nathanson_g(n));
        REQUIRE(exact_eval(ArithFunction::sigma_conv_phi(), n) == sigma_conv_phi(n));
    }
}

TEST_CASE("mod_eval examples and errors")
{
    CHECK(residue(ArithFunction::phi(), 14, 3) == 0);
    CHECK(residue(ArithFunction::tau(), 2, 5) == 1);
    CHECK(residue(ArithFunction::half_nathanson_phi(), 3, 5) == 3);
    CHECK_THROWS_AS(residue(ArithFunction::tau(), 2, 6), UnsupportedCongruenceError);
    CHECK_THROWS_AS(residue(ArithFunction::tau(), 3, 4), UnsupportedCongruenceError);
    CHECK_THROWS_AS(residue(ArithFunction::tau(), 2, 8), DomainError);
    CHECK(residue(ArithFunction::tau(), 3, 8) == mod_u64(BigInt(252), 8));
    CHECK_THROWS_AS(ModulusContext(1), UsageError);
    CHECK_THROWS_AS(ModulusContext(0), UsageError);
}

TEST_CASE("mod_eval agrees with exact values for n <= 10^4")
{
    const std::uint64_t limit = 10000;
    const std::vector<std::uint64_t> moduli = {2, 3, 4, 5, 7, 8, 9, 10, 12, 691, 1000000007};
    const std::vector<ArithFunction> fns = {
        ArithFunction::sigma(1),      ArithFunction::sigma(3),        ArithFunction::sigma(11),
        ArithFunction::phi(),         ArithFunction::jordan(3),       ArithFunction::jordan(7),
        ArithFunction::unitary_phi(), ArithFunction::sigma_conv_phi(), ArithFunction::nathanson_phi(),
        ArithFunction::half_nathanson_phi(), ArithFunction::eisenstein(4), ArithFunction::eisenstein(6),
        ArithFunction::eisenstein(8), ArithFunction::eisenstein(10),  ArithFunction::eisenstein(14),
    };
    std::vector<FactoredInteger> factored;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        factored.push_back(FactoredInteger::factor(n));
    }
    for (const auto& f : fns) {
        CAPTURE(f.name());
        const auto exact = sieve_range(f, 1, limit);
        for (std::uint64_t m : moduli) {
            CAPTURE(m);
            const ModulusContext ctx(m);
            for (std::uint64_t n = 1; n <= limit; ++n) {
                REQUIRE(mod_eval(f, factored[n - 1], ctx) == mod_u64(exact[n - 1], m));
            }
        }
    }

    const auto tau = delta_expansion(limit);
    for (std::uint64_t m : {5, 7, 8, 9, 691}) {
        const ModulusContext ctx(m);
        for (std::uint64_t n = 1; n <= limit; ++n) {
            if (m == 8 && n % 2 == 0) {
                continue;
            }
            REQUIRE(mod_eval(ArithFunction::tau(), factored[n - 1], ctx) == mod_u64(tau[n - 1], m));
        }
    }
}

TEST_CASE("mod_eval at products of large primes")
{
    // p = 2^61 - 1, q = 2^89 - 1; phi(pq) = (p - 1)(q - 1), sigma(pq) = (p + 1)(q + 1).
    const BigInt p = pow2(61) - 1;
    const BigInt q = pow2(89) - 1;
    const auto n = FactoredInteger::from_factors({{p, 1}, {q, 1}});
    for (std::uint64_t m : {3, 7, 10, 691, 1000000007}) {
        const ModulusContext ctx(m);
        CHECK(mod_eval(ArithFunction::phi(), n, ctx) == mod_u64((p - 1) * (q - 1), m));
        CHECK(mod_eval(ArithFunction::sigma(1), n, ctx) == mod_u64((p + 1) * (q + 1), m));
        CHECK(mod_eval(ArithFunction::unitary_phi(), n, ctx) == mod_u64((p - 1) * (q - 1), m));
        CHECK(mod_eval(ArithFunction::sigma_conv_phi(), n, ctx) == mod_u64(4 * p * q, m));
        // Phi(pq) = 2^(pq) - 2^p - 2^q + 2
        const BigInt two = 2;
        const BigInt mm = m;
        const BigInt pq = p * q;
        const BigInt a = powm(two, pq, mm), b = powm(two, p, mm), c = powm(two, q, mm);
        const BigInt expected = a + 2 * mm - b - c + 2;
        CHECK(mod_eval(ArithFunction::nathanson_phi(), n, ctx) == mod_u64(expected, m));
    }
    // tau(pq) == pq sigma1(pq) (mod 5)
    CHECK(mod_eval(ArithFunction::tau(), n, ModulusContext(5)) == mod_u64(p * q * (p + 1) * (q + 1), 5));
}

TEST_CASE("sieve_range examples, ranges and budget")
{
    const auto phi = sieve_range(ArithFunction::phi(), 1, 5);
    CHECK(phi == std::vector<BigInt>{1, 1, 2, 2, 4});
    CHECK(sieve_range(ArithFunction::sigma(1), 1, 1) == std::vector<BigInt>{1});
    CHECK(sieve_range(ArithFunction::nathanson_phi(), 2, 4, ModulusContext(5)) == std::vector<std::uint64_t>{2, 1, 2});

    CHECK_THROWS_AS(sieve_range(ArithFunction::phi(), 0, 5), UsageError);
    CHECK_THROWS_AS(sieve_range(ArithFunction::phi(), 6, 5), UsageError);
    SieveOptions tight;
    tight.max_span = 100;
    CHECK_THROWS_AS(sieve_range(ArithFunction::phi(), 1, 101, tight), ResourceError);
    CHECK_THROWS_AS(sieve_range(ArithFunction::nathanson_g(), 150, 160, tight), ResourceError);

    // Segment boundaries and offset ranges behave like single evaluations.
    SieveOptions small_segments;
    small_segments.segment = 37;
    const std::uint64_t lo = 999900, hi = 1000100;
    for (const auto& f : {ArithFunction::sigma(2), ArithFunction::jordan(3), ArithFunction::sigma_conv_phi(),
                          ArithFunction::mobius(), ArithFunction::nathanson_phi()}) {
        CAPTURE(f.name());
        const auto exact = sieve_range(f, lo, hi, small_segments);
        const auto mod = sieve_range(f, lo, hi, ModulusContext(97), small_segments);
        for (std::uint64_t n = lo; n <= hi; ++n) {
            REQUIRE(exact[n - lo] == exact_eval(f, n));
            REQUIRE(mod[n - lo] == mod_u64(exact[n - lo], 97));
        }
    }
    const auto g = sieve_range(ArithFunction::nathanson_g(), 40, 60);
    const auto gm = sieve_range(ArithFunction::nathanson_g(), 40, 60, ModulusContext(9));
    for (std::uint64_t n = 40; n <= 60; ++n) {
        CHECK(g[n - 40] == nathanson_g(n));
        CHECK(gm[n - 40] == mod_u64(nathanson_g(n), 9));
    }
    const auto tau = sieve_range(ArithFunction::tau(), 3, 5, ModulusContext(4));
    CHECK(tau == std::vector<std::uint64_t>{0, 0, 2});
}

TEST_CASE("function names round-trip")
{
    for (const auto& f : {ArithFunction::mobius(), ArithFunction::sigma(1), ArithFunction::sigma(11),
                          ArithFunction::phi(), ArithFunction::jordan(3), ArithFunction::unitary_phi(),
                          ArithFunction::sigma_conv_phi(), ArithFunction::nathanson_phi(),
                          ArithFunction::half_nathanson_phi(), ArithFunction::nathanson_g(), ArithFunction::tau(),
                          ArithFunction::eisenstein(10)}) {
        CHECK(ArithFunction::parse(f.name()) == f);
    }
    CHECK(ArithFunction::parse("sigma") == ArithFunction::sigma(1));
    CHECK(ArithFunction::parse("tau_mod") == ArithFunction::tau());
    CHECK_THROWS_AS(ArithFunction::parse("zeta"), UsageError);
    CHECK_THROWS_AS(ArithFunction::parse("eis12"), DomainError);
}
