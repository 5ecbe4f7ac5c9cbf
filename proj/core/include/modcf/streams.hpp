#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <modcf/arith.hpp>
#include <modcf/sieve.hpp>

namespace modcf {

enum class StreamSource {
    tau,
    eis4,
    eis6,
    eis8,
    eis10,
    eis14,
    nathanson_phi,
    nathanson_g,
    phi,
    sigma,
    sigma_conv_phi,
    jordan,
    unitary_phi,
};

enum class StreamVariant {
    direct,           // f(r) mod m
    nested_mod_10,    // (f(r) mod m) mod 10
    half_then_nested, // ((Phi(r)/2) mod m) mod 10
};

/// A residue sequence r -> f(r) mod m, optionally scaled by a unit and
/// reduced again mod 10.
///
/// Text form: NAME '%' M [ '>dec' ] [ '*' LAMBDA ], e.g. "tau%5",
/// "nathanson_phi%7>dec", "half_phi%9>dec", "jordan3%8", "phi%5*2".
struct StreamSpec {
    StreamSource source = StreamSource::phi;
    std::uint64_t m = 2;
    StreamVariant variant = StreamVariant::direct;
    std::optional<std::uint64_t> scale;
    std::optional<unsigned> jordan_order;

    /// The arithmetic function whose residues feed the stream.
    ArithFunction function() const;

    bool operator==(const StreamSpec&) const = default;
};

/// Parses the text form. Grammar errors throw UsageError; no parameter
/// bounds are checked here.
StreamSpec parse_stream_spec(std::string_view text);

std::string to_string(const StreamSpec& spec);

/// Structural checks every stream must pass: m >= 2, the variant fits the
/// source, gcd(scale, m) = 1, Jordan order odd and >= 3. Throws DomainError.
void validate_residue_stream(const StreamSpec& spec);

/// validate_residue_stream plus the parameter ranges under which the stream
/// defines decimal digits of a non-periodic expansion:
///   tau: m in {5,7,8,9}; eis4: 7; eis6: 5; eis8: 7; eis10, eis14: 5 or 7;
///   nathanson_phi / nathanson_g nested: odd m >= 5, m != 3 (mod 10)
///     (direct only while m <= 10);
///   phi, jordan, unitary_phi: 3 <= m <= 10; sigma, sigma_conv_phi: 7 <= m <= 10.
void validate_digit_stream(const StreamSpec& spec);

/// Stream values for first <= r <= last (1-based), after scaling and nesting.
std::vector<std::uint64_t> stream_values(const StreamSpec& spec, std::uint64_t first, std::uint64_t last,
                                         const SieveOptions& sieve = {});

/// The r-th decimal digit of theta = sum_r digit_r 10^-r. Validates as a digit stream.
std::uint8_t digit_at(const StreamSpec& spec, std::uint64_t r);

/// Anything that can hand out decimal digits d_1, d_2, ... of a number in [0, 1].
class DigitSource {
public:
    virtual ~DigitSource() = default;
    /// r >= 1; result in [0, 9].
    virtual std::uint8_t digit(std::uint64_t r) = 0;
    virtual std::string description() const = 0;
};

struct StreamOptions {
    std::uint64_t block = std::uint64_t{1} << 16;
    SieveOptions sieve;
};

/// Memoized residue sequence, extended block by block on demand.
/// Single owner while extending; a materialized prefix never changes.
class ResidueStream {
public:
    explicit ResidueStream(StreamSpec spec, StreamOptions options = {});

    const StreamSpec& spec() const { return spec_; }
    std::uint64_t at(std::uint64_t r);
    std::span<const std::uint64_t> prefix(std::uint64_t length);
    std::uint64_t materialized() const { return values_.size(); }

private:
    void extend_to(std::uint64_t length);

    StreamSpec spec_;
    StreamOptions options_;
    std::vector<std::uint64_t> values_;
};

/// A validated digit stream (see validate_digit_stream).
class DigitStream : public DigitSource {
public:
    explicit DigitStream(StreamSpec spec, StreamOptions options = {});

    const StreamSpec& spec() const { return residues_.spec(); }
    std::uint8_t digit(std::uint64_t r) override;
    std::vector<std::uint8_t> prefix(std::uint64_t length);
    std::string description() const override { return to_string(spec()); }

private:
    ResidueStream residues_;
};

/// The stream r -> (lambda f(r)) mod m (then nested per variant). Requires
/// spec.scale; throws DomainError when gcd(lambda, m) != 1.
DigitStream scaled_stream(const StreamSpec& spec, StreamOptions options = {});

} // namespace modcf
