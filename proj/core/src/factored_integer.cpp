#include <modcf/factored_integer.hpp>

#include <modcf/errors.hpp>

namespace modcf {

FactoredInteger::FactoredInteger() = default;

FactoredInteger FactoredInteger::factor(std::uint64_t n)
{
    if (n == 0) {
        throw UsageError("cannot factor 0");
    }
    FactoredInteger out;
    out.value_ = n;
    for (auto [p, e] : factor_u64(n)) {
        out.factors_.push_back({BigInt(p), e});
    }
    return out;
}

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors, unsigned mr_rounds)
{
    FactoredInteger out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        if (f.exponent == 0) {
            throw UsageError("factor " + f.prime.str() + " has exponent 0");
        }
        if (i > 0 && !(factors[i - 1].prime < f.prime)) {
            throw UsageError("primes must be strictly increasing");
        }
        auto check = is_prime(f.prime, mr_rounds);
        if (!check.prime) {
            throw UsageError(f.prime.str() + " is not prime");
        }
        if (check.certification == Certification::probabilistic) {
            out.certification_ = Certification::probabilistic;
        }
        out.value_ *= boost::multiprecision::pow(f.prime, f.exponent);
    }
    out.factors_ = std::move(factors);
    return out;
}

bool FactoredInteger::is_squarefree() const
{
    for (const auto& f : factors_) {
        if (f.exponent > 1) {
            return false;
        }
    }
    return true;
}

FactoredInteger FactoredInteger::coprime_product(const FactoredInteger& other) const
{
    FactoredInteger out;
    out.value_ = value_ * other.value_;
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < other.factors_.size()) {
        if (j == other.factors_.size() || (i < factors_.size() && factors_[i].prime < other.factors_[j].prime)) {
            out.factors_.push_back(factors_[i++]);
        } else if (i == factors_.size() || other.factors_[j].prime < factors_[i].prime) {
            out.factors_.push_back(other.factors_[j++]);
        } else {
            throw UsageError("coprime_product: operands share the prime " + factors_[i].prime.str());
        }
    }
    if (certification_ == Certification::probabilistic || other.certification_ == Certification::probabilistic) {
        out.certification_ = Certification::probabilistic;
    }
    return out;
}

} // namespace modcf
