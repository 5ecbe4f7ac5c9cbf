#pragma once

#include <cstdint>
#include <vector>

#include <modcf/arith.hpp>
#include <modcf/bigint.hpp>

namespace modcf {

struct SieveOptions {
    /// Largest admissible number of output values (hi - lo + 1). For
    /// nathanson_g a Mobius prefix table is built as well, so hi itself is checked.
    std::uint64_t max_span = std::uint64_t{1} << 24;
    /// Internal segment length of the factorization sieve.
    std::uint64_t segment = std::uint64_t{1} << 16;
};

/// Exact f(n) for lo <= n <= hi, element-wise equal to exact_eval.
/// Throws UsageError unless 1 <= lo <= hi, ResourceError past the budget.
std::vector<BigInt> sieve_range(const ArithFunction& f, std::uint64_t lo, std::uint64_t hi,
                                const SieveOptions& options = {});

/// f(n) mod m for lo <= n <= hi. tau is reduced from the exact Delta
/// expansion here, so every modulus and every n is allowed.
std::vector<std::uint64_t> sieve_range(const ArithFunction& f, std::uint64_t lo, std::uint64_t hi,
                                       const ModulusContext& ctx, const SieveOptions& options = {});

/// mu(1..limit) with mu[0] = 0, by a linear sieve.
std::vector<std::int8_t> mobius_table(std::uint64_t limit);

} // namespace modcf
