#pragma once

// Prime-power building blocks shared by single-value and sieve evaluation.

#include <cstdint>
#include <span>

#include <modcf/arith.hpp>

namespace modcf::detail {

/// f(p^e) exactly, for the multiplicative kinds (sigma, phi, jordan, unitary_phi, sigma_conv_phi).
BigInt local_exact(const ArithFunction& f, const BigInt& p, unsigned e);

/// f(p^e) mod m given only p mod m; same kinds as local_exact.
std::uint64_t local_mod(const ArithFunction& f, std::uint64_t p_mod, unsigned e, std::uint64_t m);

bool is_multiplicative(FunctionKind kind);

struct SmallPrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

/// Phi(n) mod m from the distinct primes of n (n itself fits in 64 bits).
std::uint64_t nathanson_phi_mod(std::uint64_t n, std::span<const SmallPrimePower> factors, std::uint64_t m);

/// f(n) mod m for a 64-bit n with known factorization. Covers every kind
/// mod_eval covers, with tau restricted the same way.
std::uint64_t residue_from_small_factors(const ArithFunction& f, std::uint64_t n,
                                         std::span<const SmallPrimePower> factors, std::uint64_t m);

/// Exact f(n) from a 64-bit factorization, for the multiplicative kinds and mobius.
BigInt exact_from_small_factors(const ArithFunction& f, std::span<const SmallPrimePower> factors);

/// Validates the (m, n parity) restrictions of the tau congruences.
void check_tau_congruence_modulus(std::uint64_t m, bool n_is_even);

} // namespace modcf::detail
