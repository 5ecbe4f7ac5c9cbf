#include <modcf/sieve.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <span>

#include <modcf/errors.hpp>
#include <modcf/primes.hpp>
#include <modcf/qseries.hpp>

#include "local_factors.hpp"

namespace modcf {

namespace {

using detail::SmallPrimePower;

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

/// Complete factorizations of every integer in [lo, hi], stored flat.
class SegmentFactorization {
public:
    SegmentFactorization(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base_primes)
        : lo_(lo)
    {
        const std::size_t len = hi - lo + 1;
        std::vector<std::uint64_t> rem(len);
        std::vector<std::uint8_t> count(len, 0);
        auto reset = [&] {
            for (std::size_t i = 0; i < len; ++i) {
                rem[i] = lo + i;
            }
        };
        auto sweep = [&](auto&& on_factor) {
            for (std::uint32_t p : base_primes) {
                if (std::uint64_t{p} * p > hi) {
                    break;
                }
                std::uint64_t start = (lo + p - 1) / p * p;
                for (std::uint64_t j = start; j <= hi; j += p) {
                    std::size_t i = j - lo;
                    unsigned e = 0;
                    while (rem[i] % p == 0) {
                        rem[i] /= p;
                        ++e;
                    }
                    on_factor(i, p, e);
                }
            }
        };

        reset();
        sweep([&](std::size_t i, std::uint64_t, unsigned) { ++count[i]; });
        offsets_.assign(len + 1, 0);
        for (std::size_t i = 0; i < len; ++i) {
            offsets_[i + 1] = offsets_[i] + count[i] + (rem[i] > 1 ? 1 : 0);
        }
        factors_.resize(offsets_[len]);
        std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
        reset();
        sweep([&](std::size_t i, std::uint64_t p, unsigned e) { factors_[cursor[i]++] = {p, e}; });
        for (std::size_t i = 0; i < len; ++i) {
            if (rem[i] > 1) {
                factors_[cursor[i]++] = {rem[i], 1};
            }
        }
    }

    std::span<const SmallPrimePower> at(std::uint64_t n) const
    {
        std::size_t i = n - lo_;
        return std::span<const SmallPrimePower>(factors_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
    }

private:
    std::uint64_t lo_;
    std::vector<std::uint32_t> offsets_;
    std::vector<SmallPrimePower> factors_;
};

void check_range(std::uint64_t lo, std::uint64_t hi, const SieveOptions& options, bool whole_prefix)
{
    if (lo < 1 || lo > hi) {
        throw UsageError("sieve_range needs 1 <= lo <= hi");
    }
    if (hi >= (std::uint64_t{1} << 62)) {
        throw UsageError("sieve_range is limited to hi < 2^62");
    }
    const std::uint64_t span = whole_prefix ? hi : hi - lo + 1;
    if (span > options.max_span) {
        throw ResourceError("sieve_range span " + std::to_string(span) + " exceeds the budget of "
                            + std::to_string(options.max_span));
    }
}

/// Calls visit(n, factors) for n = lo..hi, segment by segment.
template <typename Visit>
void for_each_factored(std::uint64_t lo, std::uint64_t hi, const SieveOptions& options, Visit&& visit)
{
    const auto base = primes_up_to(static_cast<std::uint32_t>(isqrt(hi) + 1));
    const std::uint64_t seg = std::max<std::uint64_t>(options.segment, 1);
    for (std::uint64_t a = lo; a <= hi;) {
        std::uint64_t b = std::min(hi, a + seg - 1);
        SegmentFactorization fact(a, b, base);
        for (std::uint64_t n = a; n <= b; ++n) {
            visit(n, fact.at(n));
        }
        if (b == hi) {
            break;
        }
        a = b + 1;
    }
}

/// Calls visit(d, mu(d) == -1) for every squarefree divisor d of the factored number.
template <typename Visit>
void for_each_squarefree_divisor(std::span<const SmallPrimePower> fs, Visit&& visit)
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fs.size()); ++mask) {
        std::uint64_t d = 1;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                d *= fs[i].prime;
            }
        }
        visit(d, std::popcount(mask) % 2 == 1);
    }
}

// nathanson_g over a range: the grouped formula at lo, then forward
// differences. In sum_d mu(d) (2^floor(n/d) - 1) the d-th term changes
// between n - 1 and n exactly when d | n, by mu(d) 2^(n/d - 1).

std::vector<std::int64_t> mertens_prefix(std::uint64_t limit)
{
    auto mu = mobius_table(limit);
    std::vector<std::int64_t> mertens(limit + 1, 0);
    for (std::uint64_t i = 1; i <= limit; ++i) {
        mertens[i] = mertens[i - 1] + mu[i];
    }
    return mertens;
}

} // namespace

std::vector<std::int8_t> mobius_table(std::uint64_t limit)
{
    std::vector<std::int8_t> mu(limit + 1, 1);
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(limit + 1, false);
    mu[0] = 0;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            if (i * p > limit) {
                break;
            }
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return mu;
}

std::vector<BigInt> sieve_range(const ArithFunction& f, std::uint64_t lo, std::uint64_t hi,
                                const SieveOptions& options)
{
    const bool prefix = f.kind == FunctionKind::nathanson_g;
    check_range(lo, hi, options, prefix);
    std::vector<BigInt> out;
    out.reserve(hi - lo + 1);

    switch (f.kind) {
    case FunctionKind::tau: {
        auto taus = delta_expansion(hi);
        out.assign(taus.begin() + static_cast<std::ptrdiff_t>(lo - 1), taus.end());
        return out;
    }
    case FunctionKind::nathanson_g: {
        const auto mertens = mertens_prefix(lo);
        BigInt g = 0;
        for (std::uint64_t d = 1; d <= lo;) {
            const std::uint64_t q = lo / d;
            const std::uint64_t last = lo / q;
            const std::int64_t weight = mertens[last] - mertens[d - 1];
            if (weight != 0) {
                g += (pow2(q) - 1) * weight;
            }
            d = last + 1;
        }
        out.push_back(g);
        if (lo < hi) {
            for_each_factored(lo + 1, hi, options, [&](std::uint64_t n, std::span<const SmallPrimePower> fs) {
                for_each_squarefree_divisor(fs, [&](std::uint64_t d, bool odd) {
                    if (odd) {
                        g -= pow2(n / d - 1);
                    } else {
                        g += pow2(n / d - 1);
                    }
                });
                out.push_back(g);
            });
        }
        return out;
    }
    default:
        break;
    }

    for_each_factored(lo, hi, options, [&](std::uint64_t n, std::span<const SmallPrimePower> fs) {
        switch (f.kind) {
        case FunctionKind::nathanson_phi:
        case FunctionKind::half_nathanson_phi: {
            BigInt sum = 0;
            for_each_squarefree_divisor(fs, [&](std::uint64_t d, bool odd) {
                if (odd) {
                    sum -= pow2(n / d);
                } else {
                    sum += pow2(n / d);
                }
            });
            if (f.kind == FunctionKind::half_nathanson_phi) {
                sum /= 2;
            }
            out.push_back(std::move(sum));
            break;
        }
        case FunctionKind::eisenstein:
            out.push_back(detail::exact_from_small_factors(ArithFunction::sigma(f.param - 1), fs)
                          * eisenstein_scale(f.param));
            break;
        default:
            out.push_back(detail::exact_from_small_factors(f, fs));
            break;
        }
    });
    return out;
}

std::vector<std::uint64_t> sieve_range(const ArithFunction& f, std::uint64_t lo, std::uint64_t hi,
                                       const ModulusContext& ctx, const SieveOptions& options)
{
    const bool prefix = f.kind == FunctionKind::nathanson_g;
    check_range(lo, hi, options, prefix);
    const std::uint64_t m = ctx.m();
    std::vector<std::uint64_t> out;
    out.reserve(hi - lo + 1);

    switch (f.kind) {
    case FunctionKind::tau: {
        auto taus = delta_expansion(hi);
        for (std::uint64_t n = lo; n <= hi; ++n) {
            out.push_back(mod_u64(taus[n - 1], m));
        }
        return out;
    }
    case FunctionKind::nathanson_g: {
        const auto mertens = mertens_prefix(lo);
        std::uint64_t g = 0;
        for (std::uint64_t d = 1; d <= lo;) {
            const std::uint64_t q = lo / d;
            const std::uint64_t last = lo / q;
            const std::int64_t weight = mertens[last] - mertens[d - 1];
            const std::uint64_t w_mod = weight >= 0 ? static_cast<std::uint64_t>(weight) % m
                                                    : detail::submod(0, static_cast<std::uint64_t>(-weight) % m, m);
            const std::uint64_t term = detail::submod(detail::powmod(2, q, m), 1 % m, m);
            g = detail::addmod(g, detail::mulmod(w_mod, term, m), m);
            d = last + 1;
        }
        out.push_back(g);
        if (lo < hi) {
            for_each_factored(lo + 1, hi, options, [&](std::uint64_t n, std::span<const SmallPrimePower> fs) {
                for_each_squarefree_divisor(fs, [&](std::uint64_t d, bool odd) {
                    const std::uint64_t t = detail::powmod(2, n / d - 1, m);
                    g = odd ? detail::submod(g, t, m) : detail::addmod(g, t, m);
                });
                out.push_back(g);
            });
        }
        return out;
    }
    default:
        break;
    }

    for_each_factored(lo, hi, options, [&](std::uint64_t n, std::span<const SmallPrimePower> fs) {
        out.push_back(detail::residue_from_small_factors(f, n, fs, m));
    });
    return out;
}

} // namespace modcf
