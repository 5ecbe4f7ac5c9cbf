#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <modcf/errors.hpp>

namespace modcf {

/// Outcome of an eventual-periodicity scan of a finite prefix.
///
/// periodic: seq[n + L] == seq[n] for all N <= n <= prefix_len - L (1-based),
/// with (L, N) minimal in lexicographic order among L <= l_max, N <= n_max.
/// no_period: no such pair within the bounds.
struct PeriodReport {
    enum class Outcome { periodic, no_period };

    Outcome outcome = Outcome::no_period;
    std::uint64_t start = 0;  // N, when periodic
    std::uint64_t length = 0; // L, when periodic
    std::uint64_t n_max = 0;
    std::uint64_t l_max = 0;
    std::uint64_t prefix_len = 0;

    bool periodic() const { return outcome == Outcome::periodic; }
    bool operator==(const PeriodReport&) const = default;
};

std::string to_string(const PeriodReport& report);

/// Minimal (L, N) eventual period of seq within the bounds, O(len * l_max).
/// For each L, the smallest admissible N is one past the last mismatch
/// seq[n] != seq[n + L]. Throws UsageError unless len >= n_max + 2 l_max.
template <typename T>
PeriodReport scan_period(std::span<const T> seq, std::uint64_t n_max, std::uint64_t l_max)
{
    const std::uint64_t len = seq.size();
    if (len < n_max + 2 * l_max) {
        throw UsageError("scan_period: prefix of length " + std::to_string(len) + " is shorter than n_max + 2 l_max = "
                         + std::to_string(n_max + 2 * l_max));
    }
    PeriodReport report;
    report.n_max = n_max;
    report.l_max = l_max;
    report.prefix_len = len;
    for (std::uint64_t L = 1; L <= l_max; ++L) {
        // 0-based: mismatch at i means seq[i] != seq[i + L]; N = last mismatch + 2 (1-based).
        std::uint64_t start = 1;
        for (std::uint64_t i = len - L; i-- > 0;) {
            if (seq[i] != seq[i + L]) {
                start = i + 2;
                break;
            }
        }
        if (start <= n_max) {
            report.outcome = PeriodReport::Outcome::periodic;
            report.start = start;
            report.length = L;
            return report;
        }
    }
    return report;
}

/// Brute-force reference: checks the definition for every (L, N) with
/// N, L <= len / 3, in lexicographic order. Quadratic-or-worse; tests only.
template <typename T>
PeriodReport minimal_period_oracle(std::span<const T> seq)
{
    const std::uint64_t len = seq.size();
    const std::uint64_t bound = len / 3;
    PeriodReport report;
    report.n_max = bound;
    report.l_max = bound;
    report.prefix_len = len;
    for (std::uint64_t L = 1; L <= bound; ++L) {
        for (std::uint64_t N = 1; N <= bound; ++N) {
            bool holds = true;
            for (std::uint64_t n = N; n + L <= len; ++n) {
                if (seq[n - 1] != seq[n + L - 1]) {
                    holds = false;
                    break;
                }
            }
            if (holds) {
                report.outcome = PeriodReport::Outcome::periodic;
                report.start = N;
                report.length = L;
                return report;
            }
        }
    }
    return report;
}

} // namespace modcf
