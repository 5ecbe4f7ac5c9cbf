#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <modcf/bigint.hpp>

namespace modcf {

enum class Certification {
    deterministic,
    probabilistic,
};

struct PrimalityResult {
    bool prime = false;
    Certification certification = Certification::deterministic;
};

/// Deterministic Miller-Rabin; the base set {2, ..., 37} is exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Exact for n < 2^64. Larger inputs run `rounds` strong-probable-prime tests
/// with fixed-seed random bases and report Certification::probabilistic.
PrimalityResult is_prime(const BigInt& n, unsigned rounds = 64);

/// Prime factorization of a 64-bit integer as ascending (prime, exponent) pairs.
/// Trial division for small factors, Pollard-Brent rho for the rest.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// Primes <= limit, by the sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

} // namespace modcf
