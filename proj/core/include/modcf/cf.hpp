#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <modcf/bigint.hpp>
#include <modcf/errors.hpp>
#include <modcf/streams.hpp>

namespace modcf {

struct EnclosureOptions {
    /// Refinement never goes past this many digits (PrecisionCeilingError).
    std::uint64_t ceiling = 1000000;
    /// Growth schedule D <- max(D + step, ceil(log10 n) + step).
    std::uint64_t step = 4;
};

/// Exact rational interval [low, low + 10^-D] containing
/// theta = sum_r digit_r 10^-r, with low = sum_{r <= D} digit_r 10^-r.
/// Digits are at most 9, so the tail never exceeds 10^-D.
class ThetaEnclosure {
public:
    explicit ThetaEnclosure(std::shared_ptr<DigitSource> source, EnclosureOptions options = {});

    std::uint64_t precision() const { return digits_; }
    /// low * 10^D.
    const BigInt& low_numerator() const { return low_numerator_; }
    /// 10^D.
    const BigInt& denominator() const { return denominator_; }
    const EnclosureOptions& options() const { return options_; }
    DigitSource& source() { return *source_; }

    /// Extends to D digits (no-op when already there).
    void refine_to(std::uint64_t digits);

private:
    std::shared_ptr<DigitSource> source_;
    EnclosureOptions options_;
    std::uint64_t digits_ = 0;
    BigInt low_numerator_ = 0;
    BigInt denominator_ = 1;
};

struct FloorResult {
    BigInt value;
    std::uint64_t digits_used = 0;
};

/// floor(n theta), refining the enclosure until floor(n low) equals
/// floor(n (low + 10^-D)). The value does not depend on the schedule.
FloorResult floor_n_theta(ThetaEnclosure& enclosure, std::uint64_t n);

/// [0; d_1, ..., d_n] with exact convergents p_i / q_i.
/// Seeds (p_-1, p_0) = (1, 0) and (q_-1, q_0) = (0, 1).
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::uint64_t k);

    /// Appends d_{n+1}; throws DomainError unless 1 <= d <= k.
    void push_back(std::uint64_t d);

    std::uint64_t k() const { return k_; }
    std::size_t size() const { return quotients_.size(); }
    std::span<const std::uint64_t> quotients() const { return quotients_; }
    /// p_i and q_i for 0 <= i <= size().
    const BigInt& p(std::size_t i) const { return p_.at(i); }
    const BigInt& q(std::size_t i) const { return q_.at(i); }

private:
    std::uint64_t k_;
    std::vector<std::uint64_t> quotients_;
    std::vector<BigInt> p_{0};
    std::vector<BigInt> q_{1};
};

struct CfOptions {
    std::uint64_t max_k = 256;
};

/// d_n = 1 + (floor(n theta) mod k) for n = 1..count. Throws UsageError
/// for k < 2 or k > options.max_k; propagates PrecisionCeilingError.
ContinuedFraction abd_quotients(ThetaEnclosure& enclosure, std::uint64_t k, std::uint64_t count,
                                const CfOptions& options = {});

/// Appends quotients until cf.size() == count, continuing the same construction.
void extend_abd_quotients(ContinuedFraction& cf, ThetaEnclosure& enclosure, std::uint64_t count);

/// Not enough quotients for the requested number of certified digits.
class InsufficientQuotientsError : public UsageError {
public:
    InsufficientQuotientsError(std::uint64_t required_n, const std::string& what)
        : UsageError(what)
        , required_n_(required_n)
    {
    }
    std::uint64_t required_n() const { return required_n_; }

private:
    std::uint64_t required_n_;
};

struct AlphaDecimals {
    /// "0.d1d2...": alpha truncated (not rounded) to `digits` places.
    std::string decimal;
    std::uint64_t digits = 0;
    /// Certificate: |alpha - p_n/q_n| < 1/(q_n q_{n+1}) < 10^-bound_exponent.
    std::uint64_t n = 0;
    BigInt p_n;
    BigInt q_n;
    BigInt q_next;
    std::uint64_t bound_exponent = 0;
};

/// Certified truncation of alpha = [0; d_1, d_2, ...] given its first
/// cf.size() quotients. Uses the least n with q_n q_{n+1} > 10^(digits+2)
/// for which both ends of p_n/q_n +- 1/(q_n q_{n+1}) truncate alike.
/// Throws InsufficientQuotientsError naming a sufficient n otherwise.
AlphaDecimals alpha_decimals(const ContinuedFraction& cf, std::uint64_t digits);

/// Decimals of the finite fraction [0; d_1, ..., d_n] = p_n / q_n itself,
/// truncated to `digits` places. Exact; no certificate needed.
std::string finite_value_decimals(const ContinuedFraction& cf, std::uint64_t digits);

/// floor(num / den * 10^digits) rendered as "I.FFFF"; den > 0, num >= 0.
std::string decimal_truncate(const BigInt& num, const BigInt& den, std::uint64_t digits);

} // namespace modcf
