#include <modcf/cf.hpp>

namespace modcf {

namespace {

std::uint64_t ceil_log10(std::uint64_t n)
{
    std::uint64_t e = 0;
    BigInt p = 1;
    while (p < n) {
        p *= 10;
        ++e;
    }
    return e;
}

BigInt pow10(std::uint64_t e)
{
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(e));
}

} // namespace

ThetaEnclosure::ThetaEnclosure(std::shared_ptr<DigitSource> source, EnclosureOptions options)
    : source_(std::move(source))
    , options_(options)
{
    if (!source_) {
        throw UsageError("ThetaEnclosure needs a digit source");
    }
    if (options_.step == 0) {
        throw UsageError("enclosure growth step must be positive");
    }
}

void ThetaEnclosure::refine_to(std::uint64_t digits)
{
    if (digits <= digits_) {
        return;
    }
    if (digits > options_.ceiling) {
        throw PrecisionCeilingError("theta enclosure would need " + std::to_string(digits)
                                    + " digits, above the ceiling of " + std::to_string(options_.ceiling));
    }
    // Append digits in chunks of up to 18 to keep big-integer work per digit low.
    while (digits_ < digits) {
        const std::uint64_t chunk = std::min<std::uint64_t>(18, digits - digits_);
        std::uint64_t packed = 0, scale = 1;
        for (std::uint64_t i = 1; i <= chunk; ++i) {
            const std::uint8_t d = source_->digit(digits_ + i);
            if (d > 9) {
                throw DomainError("digit source produced " + std::to_string(d) + " (digits must be 0..9)");
            }
            packed = packed * 10 + d;
            scale *= 10;
        }
        low_numerator_ = low_numerator_ * scale + packed;
        denominator_ *= scale;
        digits_ += chunk;
    }
}

FloorResult floor_n_theta(ThetaEnclosure& enclosure, std::uint64_t n)
{
    if (n == 0) {
        throw UsageError("floor_n_theta needs n >= 1");
    }
    const auto& opts = enclosure.options();
    for (;;) {
        const BigInt lower = enclosure.low_numerator() * n / enclosure.denominator();
        const BigInt upper = (enclosure.low_numerator() + 1) * n / enclosure.denominator();
        if (lower == upper) {
            return {lower, enclosure.precision()};
        }
        const std::uint64_t D = enclosure.precision();
        std::uint64_t next = std::max(D + opts.step, ceil_log10(n) + opts.step);
        if (next > opts.ceiling) {
            if (D >= opts.ceiling) {
                throw PrecisionCeilingError("floor(" + std::to_string(n) + " theta) undecided at the precision ceiling of "
                                            + std::to_string(opts.ceiling) + " digits");
            }
            next = opts.ceiling;
        }
        enclosure.refine_to(next);
    }
}

ContinuedFraction::ContinuedFraction(std::uint64_t k)
    : k_(k)
{
    if (k < 1) {
        throw UsageError("continued fraction bound k must be positive");
    }
}

void ContinuedFraction::push_back(std::uint64_t d)
{
    if (d < 1 || d > k_) {
        throw DomainError("partial quotient " + std::to_string(d) + " outside [1, " + std::to_string(k_) + "]");
    }
    const std::size_t n = quotients_.size();
    const BigInt p_prev2 = n == 0 ? BigInt(1) : p_[n - 1];
    const BigInt q_prev2 = n == 0 ? BigInt(0) : q_[n - 1];
    p_.push_back(p_[n] * d + p_prev2);
    q_.push_back(q_[n] * d + q_prev2);
    quotients_.push_back(d);
}

void extend_abd_quotients(ContinuedFraction& cf, ThetaEnclosure& enclosure, std::uint64_t count)
{
    const BigInt k = cf.k();
    for (std::uint64_t n = cf.size() + 1; n <= count; ++n) {
        const FloorResult f = floor_n_theta(enclosure, n);
        cf.push_back(1 + static_cast<std::uint64_t>(f.value % k));
    }
}

ContinuedFraction abd_quotients(ThetaEnclosure& enclosure, std::uint64_t k, std::uint64_t count,
                                const CfOptions& options)
{
    if (k < 2) {
        throw UsageError("k must be at least 2, got " + std::to_string(k));
    }
    if (k > options.max_k) {
        throw UsageError("k = " + std::to_string(k) + " exceeds the configured maximum " + std::to_string(options.max_k));
    }
    ContinuedFraction cf(k);
    extend_abd_quotients(cf, enclosure, count);
    return cf;
}

std::string decimal_truncate(const BigInt& num, const BigInt& den, std::uint64_t digits)
{
    if (den <= 0 || num < 0) {
        throw UsageError("decimal_truncate needs num >= 0 and den > 0");
    }
    const BigInt scale = pow10(digits);
    const BigInt t = num * scale / den;
    std::string out = BigInt(t / scale).str();
    if (digits > 0) {
        std::string frac = BigInt(t % scale).str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

std::string finite_value_decimals(const ContinuedFraction& cf, std::uint64_t digits)
{
    return decimal_truncate(cf.p(cf.size()), cf.q(cf.size()), digits);
}

AlphaDecimals alpha_decimals(const ContinuedFraction& cf, std::uint64_t digits)
{
    const BigInt target = pow10(digits + 2);
    const BigInt scale = pow10(digits);
    for (std::size_t n = 1; n < cf.size(); ++n) {
        const BigInt& qn = cf.q(n);
        const BigInt& qn1 = cf.q(n + 1);
        const BigInt denom = qn * qn1;
        if (denom <= target) {
            continue;
        }
        // alpha lies within (p_n q_{n+1} -+ 1) / (q_n q_{n+1}).
        const BigInt centre = cf.p(n) * qn1;
        const BigInt lo = (centre - 1) * scale / denom;
        const BigInt hi = (centre + 1) * scale / denom;
        if (lo != hi) {
            continue;
        }
        AlphaDecimals out;
        out.decimal = decimal_truncate(cf.p(n), qn, digits);
        out.digits = digits;
        out.n = n;
        out.p_n = cf.p(n);
        out.q_n = qn;
        out.q_next = qn1;
        out.bound_exponent = denom.str().size() - 1;
        return out;
    }
    // q_n >= F_{n+1}, so F_{n+1} F_{n+2} > 10^(digits+2) suffices for the size bound.
    std::uint64_t need = 1;
    BigInt a = 1, b = 2;
    while (a * b <= target) {
        BigInt c = a + b;
        a = b;
        b = c;
        ++need;
    }
    need = std::max<std::uint64_t>(need + 1, cf.size() + 1);
    throw InsufficientQuotientsError(need, "extend quotients: " + std::to_string(digits)
                                               + " certified digits need at least n = " + std::to_string(need)
                                               + " quotients (have " + std::to_string(cf.size()) + ")");
}

} // namespace modcf
