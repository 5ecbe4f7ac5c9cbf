#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace modcf {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x)
{
    return x.str();
}

/// Non-negative residue of x modulo m (m >= 1).
inline std::uint64_t mod_u64(const BigInt& x, std::uint64_t m)
{
    BigInt r = x % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<std::uint64_t>(r);
}

inline BigInt pow2(std::uint64_t e)
{
    BigInt r = 1;
    r <<= e;
    return r;
}

/// Parses a decimal integer; throws UsageError on malformed input.
BigInt parse_bigint(const std::string& text);

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return a >= b ? a - b : m - (b - a);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    if (m == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= m;
    while (e > 0) {
        if (e & 1U) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        e >>= 1U;
    }
    return result;
}

} // namespace detail

} // namespace modcf
