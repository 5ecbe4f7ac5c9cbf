#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <modcf/bigint.hpp>
#include <modcf/primes.hpp>

namespace modcf {

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// A positive integer together with its complete prime factorization.
///
/// Invariants: the product of prime^exponent equals value(); primes are
/// strictly increasing; every exponent is at least 1. Primes above 2^64 are
/// only probabilistically certified, which certification() reports.
class FactoredInteger {
public:
    /// The integer 1 (empty factorization).
    FactoredInteger();

    /// Factors n >= 1 completely; throws UsageError for n == 0.
    static FactoredInteger factor(std::uint64_t n);

    /// Validates and adopts a caller-provided factorization. Throws UsageError
    /// when primes are not strictly increasing, an exponent is zero, or a
    /// listed "prime" fails the primality test.
    static FactoredInteger from_factors(std::vector<PrimePower> factors, unsigned mr_rounds = 64);

    const BigInt& value() const { return value_; }
    std::span<const PrimePower> factors() const { return factors_; }
    Certification certification() const { return certification_; }

    bool is_squarefree() const;
    std::size_t distinct_primes() const { return factors_.size(); }

    /// Product of two coprime factored integers. Throws UsageError if they share a prime.
    FactoredInteger coprime_product(const FactoredInteger& other) const;

private:
    BigInt value_ = 1;
    std::vector<PrimePower> factors_;
    Certification certification_ = Certification::deterministic;
};

} // namespace modcf
