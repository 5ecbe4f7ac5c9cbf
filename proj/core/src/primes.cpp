#include <modcf/primes.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <numeric>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include <modcf/errors.hpp>

namespace modcf {

BigInt parse_bigint(const std::string& text)
{
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) {
        throw UsageError("expected an integer, got '" + text + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw UsageError("expected an integer, got '" + text + "'");
        }
    }
    return BigInt(text);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    return std::gcd(a, b);
}

namespace {

bool strong_probable_prime(std::uint64_t n, std::uint64_t base)
{
    base %= n;
    if (base == 0) {
        return true;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    std::uint64_t x = detail::powmod(base, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned i = 1; i < s; ++i) {
        x = detail::mulmod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

std::uint64_t pollard_brent(std::uint64_t n)
{
    if (n % 2 == 0) {
        return 2;
    }
    std::mt19937_64 gen(0x5eed);
    for (;;) {
        std::uint64_t y = gen() % (n - 1) + 1;
        std::uint64_t c = gen() % (n - 1) + 1;
        const std::uint64_t m = 128;
        std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
        auto step = [&](std::uint64_t v) { return detail::addmod(detail::mulmod(v, v, n), c, n); };
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = step(y);
            }
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    q = detail::mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            }
            r <<= 1U;
        }
        if (g == n) {
            do {
                ys = step(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    static constexpr std::array<std::uint64_t, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : bases) {
        if (n % p == 0) {
            return n == p;
        }
    }
    return std::all_of(bases.begin(), bases.end(), [n](std::uint64_t a) { return strong_probable_prime(n, a); });
}

PrimalityResult is_prime(const BigInt& n, unsigned rounds)
{
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        if (n < 0) {
            return {false, Certification::deterministic};
        }
        return {is_prime(static_cast<std::uint64_t>(n)), Certification::deterministic};
    }
    std::mt19937 gen(0x9e3779b9U);
    return {boost::multiprecision::miller_rabin_test(n, rounds, gen), Certification::probabilistic};
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> result;
    if (n <= 1) {
        return result;
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (std::uint64_t p : primes) {
        if (!result.empty() && result.back().first == p) {
            ++result.back().second;
        } else {
            result.emplace_back(p, 1U);
        }
    }
    return result;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit)
{
    std::vector<std::uint32_t> primes;
    if (limit < 2) {
        return primes;
    }
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

} // namespace modcf
