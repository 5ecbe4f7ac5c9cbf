#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <modcf/bigint.hpp>

namespace modcf {

/// Integer power series sum_{i=0}^{N} c_i q^i, arithmetic taken mod q^(N+1).
class TruncatedIntSeries {
public:
    /// The zero series of truncation order N.
    explicit TruncatedIntSeries(std::size_t order);

    /// Adopts coefficients c_0.., padding with zeros up to the order.
    /// Throws UsageError if more than order + 1 coefficients are given.
    TruncatedIntSeries(std::vector<BigInt> coeffs, std::size_t order);

    static TruncatedIntSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
    std::span<const BigInt> coeffs() const { return coeffs_; }
    void set(std::size_t i, BigInt value) { coeffs_.at(i) = std::move(value); }

    TruncatedIntSeries& operator+=(const TruncatedIntSeries& other);
    TruncatedIntSeries& operator-=(const TruncatedIntSeries& other);

    friend TruncatedIntSeries operator+(TruncatedIntSeries a, const TruncatedIntSeries& b) { return a += b; }
    friend TruncatedIntSeries operator-(TruncatedIntSeries a, const TruncatedIntSeries& b) { return a -= b; }

    bool operator==(const TruncatedIntSeries&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Truncated product. Schoolbook convolution that skips zero coefficients and
/// accumulates in 128-bit integers whenever a coefficient-size bound proves
/// that cannot overflow; big integers otherwise. Results are exact either way.
/// Quadratic in N: fine up to roughly 10^5 terms. Throws UsageError on
/// mismatched truncation orders.
TruncatedIntSeries series_mul(const TruncatedIntSeries& a, const TruncatedIntSeries& b);

TruncatedIntSeries operator*(const TruncatedIntSeries& a, const TruncatedIntSeries& b);

/// a^e by binary exponentiation, e >= 1.
TruncatedIntSeries series_pow(const TruncatedIntSeries& a, std::uint64_t e);

/// prod_{n>=1} (1 - q^n) mod q^(order+1), written down directly from the
/// pentagonal number theorem: sum_k (-1)^k q^(k(3k-1)/2).
TruncatedIntSeries euler_product(std::size_t order);

struct DeltaOptions {
    std::uint64_t max_terms = 100000;
};

/// tau(1), ..., tau(count) from Delta = q prod (1 - q^n)^24, exactly.
/// Throws UsageError for count == 0 and ResourceError above options.max_terms.
std::vector<BigInt> delta_expansion(std::uint64_t count, const DeltaOptions& options = {});

/// n-th q-coefficient of the normalized Eisenstein series E_w (n >= 1):
/// 240 sigma_3, -504 sigma_5, 480 sigma_7, -264 sigma_9, -24 sigma_13.
BigInt eisenstein_coeff(unsigned weight, std::uint64_t n);

struct CongruenceSample {
    std::uint64_t n = 0;
    std::uint64_t tau_residue = 0;
    std::uint64_t formula_residue = 0;
};

struct CongruenceLine {
    std::uint64_t modulus = 0;
    std::string rule;
    std::uint64_t checked = 0;
    std::vector<CongruenceSample> violations;
    std::optional<CongruenceSample> last;
};

struct TauCongruenceReport {
    std::uint64_t N = 0;
    std::vector<CongruenceLine> lines;

    bool ok() const;
};

/// Compares exact tau(n), n <= N, against n sigma_1 (5), n sigma_3 (7),
/// sigma_1 (8, odd n), n^2 sigma_1 (9) and sigma_11 (691).
TauCongruenceReport verify_tau_congruences(std::uint64_t N);

} // namespace modcf
