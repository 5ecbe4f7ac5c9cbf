#include <modcf/arith.hpp>

#include <array>
#include <bit>
#include <charconv>
#include <limits>
#include <vector>

#include <modcf/errors.hpp>
#include <modcf/qseries.hpp>

#include "local_factors.hpp"

namespace modcf {

namespace {

// Phi and g are exact big integers of about n bits.
constexpr std::uint64_t exact_nathanson_limit = std::uint64_t{1} << 24;

void check_jordan_order(unsigned k)
{
    if (k < 3 || k % 2 == 0) {
        throw DomainError("Jordan totient order must be an odd integer >= 3, got " + std::to_string(k));
    }
}

std::vector<detail::SmallPrimePower> small_factors(std::uint64_t n)
{
    std::vector<detail::SmallPrimePower> out;
    for (auto [p, e] : factor_u64(n)) {
        out.push_back({p, e});
    }
    return out;
}

void require_positive(std::uint64_t n)
{
    if (n == 0) {
        throw UsageError("arithmetic functions are defined for n >= 1");
    }
}

} // namespace

ModulusContext::ModulusContext(std::uint64_t m, std::optional<std::uint64_t> k_of_m)
    : m_(m)
    , k_of_m_(k_of_m)
{
    if (m < 2) {
        throw UsageError("modulus must be >= 2, got " + std::to_string(m));
    }
    if (k_of_m && *k_of_m < 1) {
        throw UsageError("K(m) must be >= 1");
    }
}

ArithFunction ArithFunction::jordan(unsigned k)
{
    check_jordan_order(k);
    return {FunctionKind::jordan, k};
}

ArithFunction ArithFunction::eisenstein(unsigned weight)
{
    eisenstein_scale(weight);
    return {FunctionKind::eisenstein, weight};
}

std::string ArithFunction::name() const
{
    switch (kind) {
    case FunctionKind::mobius: return "mobius";
    case FunctionKind::sigma: return "sigma" + std::to_string(param);
    case FunctionKind::phi: return "phi";
    case FunctionKind::jordan: return "jordan" + std::to_string(param);
    case FunctionKind::unitary_phi: return "unitary_phi";
    case FunctionKind::sigma_conv_phi: return "sigma_conv_phi";
    case FunctionKind::nathanson_phi: return "nathanson_phi";
    case FunctionKind::half_nathanson_phi: return "half_phi";
    case FunctionKind::nathanson_g: return "nathanson_g";
    case FunctionKind::tau: return "tau";
    case FunctionKind::eisenstein: return "eis" + std::to_string(param);
    }
    return "?";
}

ArithFunction ArithFunction::parse(std::string_view name)
{
    auto suffix_number = [&](std::string_view prefix) -> std::optional<unsigned> {
        if (name.substr(0, prefix.size()) != prefix) {
            return std::nullopt;
        }
        auto rest = name.substr(prefix.size());
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
        if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) {
            return std::nullopt;
        }
        return value;
    };

    if (name == "mobius" || name == "mu") return mobius();
    if (name == "sigma") return sigma(1);
    if (name == "phi") return phi();
    if (name == "unitary_phi") return unitary_phi();
    if (name == "sigma_conv_phi") return sigma_conv_phi();
    if (name == "nathanson_phi") return nathanson_phi();
    if (name == "half_phi" || name == "half_nathanson_phi") return half_nathanson_phi();
    if (name == "nathanson_g" || name == "g") return nathanson_g();
    if (name == "tau" || name == "tau_mod") return tau();
    if (auto k = suffix_number("sigma")) return sigma(*k);
    if (auto k = suffix_number("jordan")) return jordan(*k);
    if (auto w = suffix_number("eis")) return eisenstein(*w);
    throw UsageError("unknown arithmetic function '" + std::string(name) + "'");
}

std::int64_t eisenstein_scale(unsigned weight)
{
    switch (weight) {
    case 4: return 240;
    case 6: return -504;
    case 8: return 480;
    case 10: return -264;
    case 14: return -24;
    default:
        throw DomainError("Eisenstein weight must be one of 4, 6, 8, 10, 14; got " + std::to_string(weight));
    }
}

namespace detail {

bool is_multiplicative(FunctionKind kind)
{
    switch (kind) {
    case FunctionKind::sigma:
    case FunctionKind::phi:
    case FunctionKind::jordan:
    case FunctionKind::unitary_phi:
    case FunctionKind::sigma_conv_phi:
        return true;
    default:
        return false;
    }
}

BigInt local_exact(const ArithFunction& f, const BigInt& p, unsigned e)
{
    using boost::multiprecision::pow;
    switch (f.kind) {
    case FunctionKind::sigma: {
        BigInt pk = pow(p, f.param);
        BigInt term = 1, sum = 0;
        for (unsigned i = 0; i <= e; ++i) {
            sum += term;
            term *= pk;
        }
        return sum;
    }
    case FunctionKind::phi:
        return pow(p, e - 1) * (p - 1);
    case FunctionKind::jordan: {
        BigInt pk = pow(p, f.param);
        return pow(pk, e - 1) * (pk - 1);
    }
    case FunctionKind::unitary_phi:
        return pow(p, e) - 1;
    case FunctionKind::sigma_conv_phi: {
        // sum_{i=0}^{e} sigma(p^i) phi(p^(e-i))
        BigInt sum = 0, sigma_i = 0, p_i = 1;
        for (unsigned i = 0; i <= e; ++i) {
            sigma_i += p_i;
            unsigned rest = e - i;
            BigInt phi_rest = rest == 0 ? BigInt(1) : pow(p, rest - 1) * (p - 1);
            sum += sigma_i * phi_rest;
            p_i *= p;
        }
        return sum;
    }
    default:
        throw DomainError(f.name() + " is not handled as a multiplicative function");
    }
}

std::uint64_t local_mod(const ArithFunction& f, std::uint64_t p_mod, unsigned e, std::uint64_t m)
{
    p_mod %= m;
    const std::uint64_t one = 1 % m;
    switch (f.kind) {
    case FunctionKind::sigma: {
        std::uint64_t pk = powmod(p_mod, f.param, m);
        std::uint64_t term = one, sum = 0;
        for (unsigned i = 0; i <= e; ++i) {
            sum = addmod(sum, term, m);
            term = mulmod(term, pk, m);
        }
        return sum;
    }
    case FunctionKind::phi:
        return mulmod(powmod(p_mod, e - 1, m), submod(p_mod, one, m), m);
    case FunctionKind::jordan: {
        std::uint64_t pk = powmod(p_mod, f.param, m);
        return mulmod(powmod(pk, e - 1, m), submod(pk, one, m), m);
    }
    case FunctionKind::unitary_phi:
        return submod(powmod(p_mod, e, m), one, m);
    case FunctionKind::sigma_conv_phi: {
        std::uint64_t sum = 0, sigma_i = 0, p_i = one;
        const std::uint64_t p_minus_1 = submod(p_mod, one, m);
        for (unsigned i = 0; i <= e; ++i) {
            sigma_i = addmod(sigma_i, p_i, m);
            unsigned rest = e - i;
            std::uint64_t phi_rest = rest == 0 ? one : mulmod(powmod(p_mod, rest - 1, m), p_minus_1, m);
            sum = addmod(sum, mulmod(sigma_i, phi_rest, m), m);
            p_i = mulmod(p_i, p_mod, m);
        }
        return sum;
    }
    default:
        throw DomainError(f.name() + " is not handled as a multiplicative function");
    }
}

void check_tau_congruence_modulus(std::uint64_t m, bool n_is_even)
{
    if (m != 5 && m != 7 && m != 8 && m != 9 && m != 691) {
        throw UnsupportedCongruenceError("tau mod " + std::to_string(m)
                                         + " has no supported congruence (moduli: 5, 7, 8, 9, 691)");
    }
    if (m == 8 && n_is_even) {
        throw DomainError("the tau congruence mod 8 holds only for odd n");
    }
}

std::uint64_t nathanson_phi_mod(std::uint64_t n, std::span<const SmallPrimePower> factors, std::uint64_t m)
{
    const std::size_t k = factors.size();
    std::uint64_t sum = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::uint64_t d = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                d *= factors[i].prime;
            }
        }
        std::uint64_t term = powmod(2, n / d, m);
        sum = (std::popcount(mask) % 2 == 0) ? addmod(sum, term, m) : submod(sum, term, m);
    }
    return sum;
}

namespace {

std::uint64_t multiplicative_mod(const ArithFunction& f, std::span<const SmallPrimePower> factors, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    for (const auto& pe : factors) {
        r = mulmod(r, local_mod(f, pe.prime % m, pe.exponent, m), m);
    }
    return r;
}

std::uint64_t tau_congruence_mod(std::uint64_t n_mod, std::span<const SmallPrimePower> factors, std::uint64_t m)
{
    switch (m) {
    case 5: return mulmod(n_mod, multiplicative_mod(ArithFunction::sigma(1), factors, m), m);
    case 7: return mulmod(n_mod, multiplicative_mod(ArithFunction::sigma(3), factors, m), m);
    case 8: return multiplicative_mod(ArithFunction::sigma(1), factors, m);
    case 9: return mulmod(mulmod(n_mod, n_mod, m), multiplicative_mod(ArithFunction::sigma(1), factors, m), m);
    default: return multiplicative_mod(ArithFunction::sigma(11), factors, m);
    }
}

} // namespace

std::uint64_t residue_from_small_factors(const ArithFunction& f, std::uint64_t n,
                                         std::span<const SmallPrimePower> factors, std::uint64_t m)
{
    switch (f.kind) {
    case FunctionKind::mobius: {
        for (const auto& pe : factors) {
            if (pe.exponent > 1) {
                return 0;
            }
        }
        return factors.size() % 2 == 0 ? 1 % m : m - 1;
    }
    case FunctionKind::nathanson_phi:
        return nathanson_phi_mod(n, factors, m);
    case FunctionKind::half_nathanson_phi:
        return nathanson_phi_mod(n, factors, 2 * m) / 2;
    case FunctionKind::tau:
        check_tau_congruence_modulus(m, n % 2 == 0);
        return tau_congruence_mod(n % m, factors, m);
    case FunctionKind::eisenstein:
        return mulmod(mod_u64(BigInt(eisenstein_scale(f.param)), m),
                      multiplicative_mod(ArithFunction::sigma(f.param - 1), factors, m), m);
    case FunctionKind::nathanson_g:
        throw DomainError("nathanson_g is not determined by the factorization of n; use sieve_range");
    default:
        return multiplicative_mod(f, factors, m);
    }
}

BigInt exact_from_small_factors(const ArithFunction& f, std::span<const SmallPrimePower> factors)
{
    if (f.kind == FunctionKind::mobius) {
        for (const auto& pe : factors) {
            if (pe.exponent > 1) {
                return 0;
            }
        }
        return factors.size() % 2 == 0 ? 1 : -1;
    }
    BigInt r = 1;
    for (const auto& pe : factors) {
        r *= local_exact(f, BigInt(pe.prime), pe.exponent);
    }
    return r;
}

} // namespace detail

int mobius(std::uint64_t n)
{
    require_positive(n);
    auto fs = small_factors(n);
    return static_cast<int>(detail::exact_from_small_factors(ArithFunction::mobius(), fs));
}

BigInt sigma_k(std::uint64_t n, unsigned k)
{
    require_positive(n);
    return detail::exact_from_small_factors(ArithFunction::sigma(k), small_factors(n));
}

BigInt euler_phi(std::uint64_t n)
{
    require_positive(n);
    return detail::exact_from_small_factors(ArithFunction::phi(), small_factors(n));
}

BigInt jordan_totient(unsigned k, std::uint64_t n)
{
    check_jordan_order(k);
    require_positive(n);
    return detail::exact_from_small_factors(ArithFunction::jordan(k), small_factors(n));
}

BigInt unitary_phi(std::uint64_t n)
{
    require_positive(n);
    return detail::exact_from_small_factors(ArithFunction::unitary_phi(), small_factors(n));
}

BigInt sigma_conv_phi(std::uint64_t n)
{
    require_positive(n);
    return detail::exact_from_small_factors(ArithFunction::sigma_conv_phi(), small_factors(n));
}

namespace {

BigInt multiplicative_exact(const ArithFunction& f, const FactoredInteger& n)
{
    BigInt r = 1;
    for (const auto& pe : n.factors()) {
        r *= detail::local_exact(f, pe.prime, pe.exponent);
    }
    return r;
}

} // namespace

BigInt sigma_k(const FactoredInteger& n, unsigned k) { return multiplicative_exact(ArithFunction::sigma(k), n); }
BigInt euler_phi(const FactoredInteger& n) { return multiplicative_exact(ArithFunction::phi(), n); }
BigInt jordan_totient(unsigned k, const FactoredInteger& n) { return multiplicative_exact(ArithFunction::jordan(k), n); }
BigInt unitary_phi(const FactoredInteger& n) { return multiplicative_exact(ArithFunction::unitary_phi(), n); }
BigInt sigma_conv_phi(const FactoredInteger& n) { return multiplicative_exact(ArithFunction::sigma_conv_phi(), n); }

BigInt nathanson_phi(std::uint64_t n)
{
    require_positive(n);
    if (n > exact_nathanson_limit) {
        throw ResourceError("exact nathanson_phi is limited to n <= 2^24");
    }
    auto fs = small_factors(n);
    BigInt sum = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fs.size()); ++mask) {
        std::uint64_t d = 1;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                d *= fs[i].prime;
            }
        }
        if (std::popcount(mask) % 2 == 0) {
            sum += pow2(n / d);
        } else {
            sum -= pow2(n / d);
        }
    }
    return sum;
}

BigInt nathanson_g(std::uint64_t n)
{
    require_positive(n);
    if (n > exact_nathanson_limit) {
        throw ResourceError("exact nathanson_g is limited to n <= 2^24");
    }
    // Mertens prefix sums M(x) = sum_{d <= x} mu(d), then group the d with equal floor(n/d).
    std::vector<int> mu(n + 1, 1);
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint64_t> primes;
    mu[0] = 0;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (std::uint64_t p : primes) {
            if (i * p > n) {
                break;
            }
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    std::vector<std::int64_t> mertens(n + 1, 0);
    for (std::uint64_t i = 1; i <= n; ++i) {
        mertens[i] = mertens[i - 1] + mu[i];
    }
    BigInt sum = 0;
    for (std::uint64_t d = 1; d <= n;) {
        std::uint64_t q = n / d;
        std::uint64_t last = n / q;
        std::int64_t weight = mertens[last] - mertens[d - 1];
        if (weight != 0) {
            sum += (pow2(q) - 1) * weight;
        }
        d = last + 1;
    }
    return sum;
}

std::uint64_t mod_eval(const ArithFunction& f, const FactoredInteger& x, const ModulusContext& ctx)
{
    using detail::addmod;
    using detail::mulmod;
    using detail::submod;
    const std::uint64_t m = ctx.m();

    if (x.value() <= std::numeric_limits<std::uint64_t>::max()) {
        std::vector<detail::SmallPrimePower> fs;
        for (const auto& pe : x.factors()) {
            fs.push_back({static_cast<std::uint64_t>(pe.prime), pe.exponent});
        }
        return detail::residue_from_small_factors(f, static_cast<std::uint64_t>(x.value()), fs, m);
    }

    // Large n: the same formulas, with big exponents where the value of n itself enters.
    auto multiplicative = [&](const ArithFunction& g, std::uint64_t mod) {
        std::uint64_t r = 1 % mod;
        for (const auto& pe : x.factors()) {
            r = mulmod(r, detail::local_mod(g, mod_u64(pe.prime, mod), pe.exponent, mod), mod);
        }
        return r;
    };
    auto phi_mod = [&](std::uint64_t mod) {
        const auto fs = x.factors();
        std::uint64_t sum = 0;
        const BigInt big_mod = mod;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fs.size()); ++mask) {
            BigInt d = 1;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                if (mask & (std::uint64_t{1} << i)) {
                    d *= fs[i].prime;
                }
            }
            auto term = static_cast<std::uint64_t>(boost::multiprecision::powm(BigInt(2), x.value() / d, big_mod));
            sum = (std::popcount(mask) % 2 == 0) ? addmod(sum, term, mod) : submod(sum, term, mod);
        }
        return sum;
    };

    switch (f.kind) {
    case FunctionKind::mobius:
        if (!x.is_squarefree()) {
            return 0;
        }
        return x.distinct_primes() % 2 == 0 ? 1 % m : m - 1;
    case FunctionKind::nathanson_phi:
        return phi_mod(m);
    case FunctionKind::half_nathanson_phi:
        return phi_mod(2 * m) / 2;
    case FunctionKind::tau: {
        const std::uint64_t n_mod = mod_u64(x.value(), m);
        detail::check_tau_congruence_modulus(m, x.value() % 2 == 0);
        switch (m) {
        case 5: return mulmod(n_mod, multiplicative(ArithFunction::sigma(1), m), m);
        case 7: return mulmod(n_mod, multiplicative(ArithFunction::sigma(3), m), m);
        case 8: return multiplicative(ArithFunction::sigma(1), m);
        case 9: return mulmod(mulmod(n_mod, n_mod, m), multiplicative(ArithFunction::sigma(1), m), m);
        default: return multiplicative(ArithFunction::sigma(11), m);
        }
    }
    case FunctionKind::eisenstein:
        return mulmod(mod_u64(BigInt(eisenstein_scale(f.param)), m),
                      multiplicative(ArithFunction::sigma(f.param - 1), m), m);
    case FunctionKind::nathanson_g:
        throw DomainError("nathanson_g is not determined by the factorization of n");
    default:
        return multiplicative(f, m);
    }
}

BigInt exact_eval(const ArithFunction& f, std::uint64_t n)
{
    require_positive(n);
    switch (f.kind) {
    case FunctionKind::nathanson_phi: return nathanson_phi(n);
    case FunctionKind::half_nathanson_phi: return nathanson_phi(n) / 2;
    case FunctionKind::nathanson_g: return nathanson_g(n);
    case FunctionKind::tau: return delta_expansion(n).back();
    case FunctionKind::eisenstein: return eisenstein_coeff(f.param, n);
    default: return detail::exact_from_small_factors(f, small_factors(n));
    }
}

} // namespace modcf
