#include <modcf/qseries.hpp>

#include <algorithm>
#include <bit>
#include <limits>

#include <modcf/arith.hpp>
#include <modcf/errors.hpp>
#include <modcf/sieve.hpp>

namespace modcf {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

i128 to_i128(const BigInt& x)
{
    BigInt ax = boost::multiprecision::abs(x);
    const auto lo = static_cast<std::uint64_t>(ax & std::numeric_limits<std::uint64_t>::max());
    const auto hi = static_cast<std::uint64_t>(ax >> 64);
    const u128 v = (static_cast<u128>(hi) << 64) | lo;
    return x < 0 ? -static_cast<i128>(v) : static_cast<i128>(v);
}

BigInt from_i128(i128 x)
{
    const bool negative = x < 0;
    const u128 v = negative ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
    BigInt r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(v);
    return negative ? BigInt(-r) : r;
}

struct Profile {
    std::size_t bits = 0;
    std::vector<std::size_t> nonzero;
};

Profile profile(std::span<const BigInt> c)
{
    Profile p;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) {
            p.nonzero.push_back(i);
            p.bits = std::max<std::size_t>(p.bits, boost::multiprecision::msb(boost::multiprecision::abs(c[i])) + 1);
        }
    }
    return p;
}

template <typename T>
void convolve(std::span<const T> a, std::span<const std::size_t> a_nz, std::span<const T> b,
              std::span<const std::size_t> b_nz, std::vector<T>& out, bool square)
{
    const std::size_t n = out.size() - 1;
    if (square) {
        for (std::size_t idx = 0; idx < a_nz.size(); ++idx) {
            const std::size_t i = a_nz[idx];
            if (2 * i > n) {
                break;
            }
            out[2 * i] += a[i] * a[i];
            const T twice = a[i] + a[i];
            for (std::size_t jdx = idx + 1; jdx < a_nz.size(); ++jdx) {
                const std::size_t j = a_nz[jdx];
                if (i + j > n) {
                    break;
                }
                out[i + j] += twice * a[j];
            }
        }
        return;
    }
    // Walk the sparser operand's non-zeros against the other's non-zeros.
    const bool a_sparser = a_nz.size() <= b_nz.size();
    auto s = a_sparser ? a : b;
    auto s_nz = a_sparser ? a_nz : b_nz;
    auto d = a_sparser ? b : a;
    auto d_nz = a_sparser ? b_nz : a_nz;
    for (std::size_t i : s_nz) {
        const T& si = s[i];
        for (std::size_t j : d_nz) {
            if (i + j > n) {
                break;
            }
            out[i + j] += si * d[j];
        }
    }
}

} // namespace

TruncatedIntSeries::TruncatedIntSeries(std::size_t order)
    : coeffs_(order + 1)
{
}

TruncatedIntSeries::TruncatedIntSeries(std::vector<BigInt> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() > order + 1) {
        throw UsageError("more coefficients than the truncation order allows");
    }
    coeffs_.resize(order + 1);
}

TruncatedIntSeries TruncatedIntSeries::one(std::size_t order)
{
    TruncatedIntSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedIntSeries& TruncatedIntSeries::operator+=(const TruncatedIntSeries& other)
{
    if (other.order() != order()) {
        throw UsageError("series truncation orders differ");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

TruncatedIntSeries& TruncatedIntSeries::operator-=(const TruncatedIntSeries& other)
{
    if (other.order() != order()) {
        throw UsageError("series truncation orders differ");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

TruncatedIntSeries series_mul(const TruncatedIntSeries& a, const TruncatedIntSeries& b)
{
    if (a.order() != b.order()) {
        throw UsageError("series_mul: truncation orders differ (" + std::to_string(a.order()) + " vs "
                         + std::to_string(b.order()) + ")");
    }
    const std::size_t n = a.order();
    const bool square = &a == &b || a == b;
    const Profile pa = profile(a.coeffs());
    const Profile pb = square ? pa : profile(b.coeffs());
    TruncatedIntSeries result(n);
    if (pa.nonzero.empty() || pb.nonzero.empty()) {
        return result;
    }

    const std::size_t terms = std::min(pa.nonzero.size(), pb.nonzero.size());
    const auto term_bits = static_cast<std::size_t>(std::bit_width(terms));
    if (pa.bits + pb.bits + term_bits + 1 <= 126) {
        std::vector<i128> ai(n + 1), bi(n + 1), out(n + 1, 0);
        for (std::size_t i : pa.nonzero) {
            ai[i] = to_i128(a[i]);
        }
        for (std::size_t i : pb.nonzero) {
            bi[i] = to_i128(b[i]);
        }
        convolve<i128>(ai, pa.nonzero, bi, pb.nonzero, out, square);
        for (std::size_t i = 0; i <= n; ++i) {
            if (out[i] != 0) {
                result.set(i, from_i128(out[i]));
            }
        }
        return result;
    }

    std::vector<BigInt> out(n + 1);
    convolve<BigInt>(a.coeffs(), pa.nonzero, b.coeffs(), pb.nonzero, out, square);
    return TruncatedIntSeries(std::move(out), n);
}

TruncatedIntSeries operator*(const TruncatedIntSeries& a, const TruncatedIntSeries& b)
{
    return series_mul(a, b);
}

TruncatedIntSeries series_pow(const TruncatedIntSeries& a, std::uint64_t e)
{
    if (e == 0) {
        throw UsageError("series_pow needs a positive exponent");
    }
    std::optional<TruncatedIntSeries> result;
    TruncatedIntSeries base = a;
    for (;;) {
        if (e & 1U) {
            result = result ? series_mul(*result, base) : base;
        }
        e >>= 1U;
        if (e == 0) {
            break;
        }
        base = series_mul(base, base);
    }
    return *result;
}

TruncatedIntSeries euler_product(std::size_t order)
{
    TruncatedIntSeries s(order);
    s.set(0, 1);
    for (std::size_t k = 1;; ++k) {
        const std::size_t e1 = k * (3 * k - 1) / 2;
        const std::size_t e2 = k * (3 * k + 1) / 2;
        if (e1 > order) {
            break;
        }
        const BigInt sign = (k % 2 == 0) ? 1 : -1;
        s.set(e1, sign);
        if (e2 <= order) {
            s.set(e2, sign);
        }
    }
    return s;
}

std::vector<BigInt> delta_expansion(std::uint64_t count, const DeltaOptions& options)
{
    if (count == 0) {
        throw UsageError("delta_expansion needs at least one term");
    }
    if (count > options.max_terms) {
        throw ResourceError("delta_expansion of " + std::to_string(count) + " terms exceeds the budget of "
                            + std::to_string(options.max_terms));
    }
    const std::size_t order = count - 1;
    const auto eta24 = series_pow(euler_product(order), 24);
    auto c = eta24.coeffs();
    return {c.begin(), c.end()};
}

BigInt eisenstein_coeff(unsigned weight, std::uint64_t n)
{
    const std::int64_t scale = eisenstein_scale(weight);
    if (n == 0) {
        throw UsageError("eisenstein_coeff is defined here for n >= 1 (the constant term is 1)");
    }
    return sigma_k(n, weight - 1) * scale;
}

bool TauCongruenceReport::ok() const
{
    return std::all_of(lines.begin(), lines.end(), [](const CongruenceLine& l) { return l.violations.empty(); });
}

TauCongruenceReport verify_tau_congruences(std::uint64_t N)
{
    if (N == 0) {
        throw UsageError("verify_tau_congruences needs N >= 1");
    }
    const auto tau = delta_expansion(N);
    const auto s1 = sieve_range(ArithFunction::sigma(1), 1, N);
    const auto s3 = sieve_range(ArithFunction::sigma(3), 1, N);
    const auto s11 = sieve_range(ArithFunction::sigma(11), 1, N);

    TauCongruenceReport report;
    report.N = N;
    struct Rule {
        std::uint64_t modulus;
        const char* text;
        bool odd_only;
        BigInt (*formula)(std::uint64_t n, const BigInt& s1, const BigInt& s3, const BigInt& s11);
    };
    const Rule rules[] = {
        {5, "n*sigma1(n)", false, [](std::uint64_t n, const BigInt& a, const BigInt&, const BigInt&) { return BigInt(n) * a; }},
        {7, "n*sigma3(n)", false, [](std::uint64_t n, const BigInt&, const BigInt& b, const BigInt&) { return BigInt(n) * b; }},
        {8, "sigma1(n), n odd", true, [](std::uint64_t, const BigInt& a, const BigInt&, const BigInt&) { return a; }},
        {9, "n^2*sigma1(n)", false, [](std::uint64_t n, const BigInt& a, const BigInt&, const BigInt&) { return BigInt(n) * n * a; }},
        {691, "sigma11(n)", false, [](std::uint64_t, const BigInt&, const BigInt&, const BigInt& c) { return c; }},
    };
    for (const Rule& rule : rules) {
        CongruenceLine line;
        line.modulus = rule.modulus;
        line.rule = rule.text;
        for (std::uint64_t n = 1; n <= N; ++n) {
            if (rule.odd_only && n % 2 == 0) {
                continue;
            }
            CongruenceSample sample{n, mod_u64(tau[n - 1], rule.modulus),
                                    mod_u64(rule.formula(n, s1[n - 1], s3[n - 1], s11[n - 1]), rule.modulus)};
            ++line.checked;
            if (sample.tau_residue != sample.formula_residue) {
                line.violations.push_back(sample);
            }
            line.last = sample;
        }
        report.lines.push_back(std::move(line));
    }
    return report;
}

} // namespace modcf
