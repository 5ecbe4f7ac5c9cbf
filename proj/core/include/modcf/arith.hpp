#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <modcf/bigint.hpp>
#include <modcf/factored_integer.hpp>

namespace modcf {

/// Residue modulus m >= 2 and, optionally, the K(m) used by the
/// divisibility criterion (primes p == 1 mod K(m)).
class ModulusContext {
public:
    explicit ModulusContext(std::uint64_t m, std::optional<std::uint64_t> k_of_m = std::nullopt);

    std::uint64_t m() const { return m_; }
    std::optional<std::uint64_t> k_of_m() const { return k_of_m_; }

private:
    std::uint64_t m_;
    std::optional<std::uint64_t> k_of_m_;
};

enum class FunctionKind {
    mobius,
    sigma,              // sigma_k, param = k
    phi,
    jordan,             // J_k, param = k (odd, >= 3)
    unitary_phi,
    sigma_conv_phi,     // Dirichlet convolution sigma * phi
    nathanson_phi,
    half_nathanson_phi, // Phi(n) / 2
    nathanson_g,
    tau,
    eisenstein,         // n-th q-coefficient of E_w, param = w
};

/// Tag naming one arithmetic function, with its integer parameter where it has one.
struct ArithFunction {
    FunctionKind kind = FunctionKind::phi;
    unsigned param = 0;

    static ArithFunction mobius() { return {FunctionKind::mobius, 0}; }
    static ArithFunction sigma(unsigned k) { return {FunctionKind::sigma, k}; }
    static ArithFunction phi() { return {FunctionKind::phi, 0}; }
    static ArithFunction jordan(unsigned k);
    static ArithFunction unitary_phi() { return {FunctionKind::unitary_phi, 0}; }
    static ArithFunction sigma_conv_phi() { return {FunctionKind::sigma_conv_phi, 0}; }
    static ArithFunction nathanson_phi() { return {FunctionKind::nathanson_phi, 0}; }
    static ArithFunction half_nathanson_phi() { return {FunctionKind::half_nathanson_phi, 0}; }
    static ArithFunction nathanson_g() { return {FunctionKind::nathanson_g, 0}; }
    static ArithFunction tau() { return {FunctionKind::tau, 0}; }
    static ArithFunction eisenstein(unsigned weight);

    /// Canonical name: "phi", "sigma1", "jordan3", "eis4", "tau", ...
    std::string name() const;

    /// Inverse of name(). "sigma" alone means sigma1. Throws UsageError on unknown names.
    static ArithFunction parse(std::string_view name);

    bool operator==(const ArithFunction&) const = default;
};

/// q-coefficient scale of E_w: 240, -504, 480, -264, -24 for w = 4, 6, 8, 10, 14.
/// Throws DomainError for any other weight.
std::int64_t eisenstein_scale(unsigned weight);

int mobius(std::uint64_t n);
BigInt sigma_k(std::uint64_t n, unsigned k);
BigInt euler_phi(std::uint64_t n);
/// Throws DomainError unless k is odd and >= 3.
BigInt jordan_totient(unsigned k, std::uint64_t n);
BigInt unitary_phi(std::uint64_t n);
BigInt sigma_conv_phi(std::uint64_t n);

BigInt sigma_k(const FactoredInteger& n, unsigned k);
BigInt euler_phi(const FactoredInteger& n);
BigInt jordan_totient(unsigned k, const FactoredInteger& n);
BigInt unitary_phi(const FactoredInteger& n);
BigInt sigma_conv_phi(const FactoredInteger& n);

/// sum_{d | n} mu(d) 2^(n/d). Note nathanson_phi(1) == 2 by this formula.
BigInt nathanson_phi(std::uint64_t n);
/// sum_{d=1}^{n} mu(d) (2^floor(n/d) - 1).
BigInt nathanson_g(std::uint64_t n);

/// Residue in [0, m) of f at an integer of known factorization.
///
/// Supported: sigma, phi, jordan, unitary_phi, sigma_conv_phi, nathanson_phi,
/// half_nathanson_phi, eisenstein (through sigma_{w-1}) and tau. tau is
/// evaluated through its classical congruences and so only for
/// m in {5, 7, 8, 9, 691}; m = 8 additionally needs odd n.
std::uint64_t mod_eval(const ArithFunction& f, const FactoredInteger& x, const ModulusContext& ctx);

/// Exact value of f(n) for any tag; tau goes through the Delta expansion.
BigInt exact_eval(const ArithFunction& f, std::uint64_t n);

} // namespace modcf
