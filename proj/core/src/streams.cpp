#include <modcf/streams.hpp>

#include <algorithm>
#include <charconv>

#include <modcf/errors.hpp>
#include <modcf/primes.hpp>
#include <modcf/qseries.hpp>

namespace modcf {

namespace {

struct SourceName {
    StreamSource source;
    std::string_view name;
};

constexpr SourceName source_names[] = {
    {StreamSource::tau, "tau"},
    {StreamSource::eis4, "eis4"},
    {StreamSource::eis6, "eis6"},
    {StreamSource::eis8, "eis8"},
    {StreamSource::eis10, "eis10"},
    {StreamSource::eis14, "eis14"},
    {StreamSource::nathanson_phi, "nathanson_phi"},
    {StreamSource::nathanson_g, "nathanson_g"},
    {StreamSource::phi, "phi"},
    {StreamSource::sigma, "sigma"},
    {StreamSource::sigma_conv_phi, "sigma_conv_phi"},
    {StreamSource::unitary_phi, "unitary_phi"},
};

std::uint64_t parse_u64(std::string_view text, std::string_view what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError("stream spec: bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

bool nested_modulus_ok(std::uint64_t m)
{
    return m >= 5 && m % 2 == 1 && m % 10 != 3;
}

std::string spec_error(const StreamSpec& spec, const std::string& why)
{
    return "stream " + to_string(spec) + ": " + why;
}

} // namespace

ArithFunction StreamSpec::function() const
{
    switch (source) {
    case StreamSource::tau: return ArithFunction::tau();
    case StreamSource::eis4: return ArithFunction::eisenstein(4);
    case StreamSource::eis6: return ArithFunction::eisenstein(6);
    case StreamSource::eis8: return ArithFunction::eisenstein(8);
    case StreamSource::eis10: return ArithFunction::eisenstein(10);
    case StreamSource::eis14: return ArithFunction::eisenstein(14);
    case StreamSource::nathanson_phi:
        return variant == StreamVariant::half_then_nested ? ArithFunction::half_nathanson_phi()
                                                          : ArithFunction::nathanson_phi();
    case StreamSource::nathanson_g: return ArithFunction::nathanson_g();
    case StreamSource::phi: return ArithFunction::phi();
    case StreamSource::sigma: return ArithFunction::sigma(1);
    case StreamSource::sigma_conv_phi: return ArithFunction::sigma_conv_phi();
    case StreamSource::jordan: return {FunctionKind::jordan, jordan_order.value_or(0)};
    case StreamSource::unitary_phi: return ArithFunction::unitary_phi();
    }
    throw DomainError("unknown stream source");
}

StreamSpec parse_stream_spec(std::string_view text)
{
    StreamSpec spec;
    const auto pct = text.find('%');
    if (pct == std::string_view::npos) {
        throw UsageError("stream spec '" + std::string(text) + "' lacks '%<modulus>'");
    }
    const std::string_view name = text.substr(0, pct);
    std::string_view rest = text.substr(pct + 1);

    std::optional<std::uint64_t> scale;
    if (auto star = rest.find('*'); star != std::string_view::npos) {
        scale = parse_u64(rest.substr(star + 1), "scale");
        rest = rest.substr(0, star);
    }
    bool dec = false;
    if (auto gt = rest.find('>'); gt != std::string_view::npos) {
        if (rest.substr(gt) != ">dec") {
            throw UsageError("stream spec: unknown variant suffix '" + std::string(rest.substr(gt)) + "'");
        }
        dec = true;
        rest = rest.substr(0, gt);
    }
    spec.m = parse_u64(rest, "modulus");
    spec.scale = scale;

    if (name == "half_phi") {
        if (!dec) {
            throw UsageError("half_phi streams are decimal-nested; write half_phi%" + std::string(rest) + ">dec");
        }
        spec.source = StreamSource::nathanson_phi;
        spec.variant = StreamVariant::half_then_nested;
        return spec;
    }
    spec.variant = dec ? StreamVariant::nested_mod_10 : StreamVariant::direct;
    if (name.starts_with("jordan")) {
        spec.source = StreamSource::jordan;
        spec.jordan_order = static_cast<unsigned>(parse_u64(name.substr(6), "Jordan order"));
        return spec;
    }
    for (const auto& entry : source_names) {
        if (entry.name == name) {
            spec.source = entry.source;
            return spec;
        }
    }
    throw UsageError("stream spec: unknown source '" + std::string(name) + "'");
}

std::string to_string(const StreamSpec& spec)
{
    std::string out;
    if (spec.variant == StreamVariant::half_then_nested) {
        out = "half_phi";
    } else if (spec.source == StreamSource::jordan) {
        out = "jordan" + (spec.jordan_order ? std::to_string(*spec.jordan_order) : std::string("?"));
    } else {
        for (const auto& entry : source_names) {
            if (entry.source == spec.source) {
                out = entry.name;
            }
        }
    }
    out += "%" + std::to_string(spec.m);
    if (spec.variant != StreamVariant::direct) {
        out += ">dec";
    }
    if (spec.scale) {
        out += "*" + std::to_string(*spec.scale);
    }
    return out;
}

void validate_residue_stream(const StreamSpec& spec)
{
    if (spec.m < 2) {
        throw DomainError(spec_error(spec, "modulus must be >= 2"));
    }
    const bool phi_or_g = spec.source == StreamSource::nathanson_phi || spec.source == StreamSource::nathanson_g;
    if (spec.variant == StreamVariant::nested_mod_10 && !phi_or_g) {
        throw DomainError(spec_error(spec, "the >dec variant exists only for nathanson_phi and nathanson_g"));
    }
    if (spec.variant == StreamVariant::half_then_nested && spec.source != StreamSource::nathanson_phi) {
        throw DomainError(spec_error(spec, "the halved variant exists only for nathanson_phi"));
    }
    if (spec.source == StreamSource::jordan) {
        if (!spec.jordan_order || *spec.jordan_order < 3 || *spec.jordan_order % 2 == 0) {
            throw DomainError(spec_error(spec, "Jordan order must be an odd integer >= 3"));
        }
    } else if (spec.jordan_order) {
        throw DomainError(spec_error(spec, "only Jordan streams take an order"));
    }
    if (spec.scale && gcd_u64(*spec.scale, spec.m) != 1) {
        throw DomainError(spec_error(spec, "scale must be a unit: gcd(" + std::to_string(*spec.scale) + ", "
                                               + std::to_string(spec.m) + ") != 1"));
    }
}

void validate_digit_stream(const StreamSpec& spec)
{
    validate_residue_stream(spec);
    const std::uint64_t m = spec.m;
    auto require = [&](bool ok, const char* why) {
        if (!ok) {
            throw DomainError(spec_error(spec, why));
        }
    };
    switch (spec.source) {
    case StreamSource::tau:
        require(m == 5 || m == 7 || m == 8 || m == 9, "tau digit streams need m in {5, 7, 8, 9}");
        break;
    case StreamSource::eis4:
    case StreamSource::eis8:
        require(m == 7, "this Eisenstein digit stream needs m = 7");
        break;
    case StreamSource::eis6:
        require(m == 5, "eis6 digit streams need m = 5");
        break;
    case StreamSource::eis10:
    case StreamSource::eis14:
        require(m == 5 || m == 7, "this Eisenstein digit stream needs m in {5, 7}");
        break;
    case StreamSource::nathanson_phi:
    case StreamSource::nathanson_g:
        require(nested_modulus_ok(m), "needs odd m >= 5 with m != 3 (mod 10)");
        require(spec.variant != StreamVariant::direct || m <= 10, "direct residues mod m > 10 are not digits; use >dec");
        break;
    case StreamSource::phi:
    case StreamSource::jordan:
    case StreamSource::unitary_phi:
        require(m >= 3 && m <= 10, "needs 3 <= m <= 10");
        break;
    case StreamSource::sigma:
    case StreamSource::sigma_conv_phi:
        require(m >= 7 && m <= 10, "needs 7 <= m <= 10");
        break;
    }
}

std::vector<std::uint64_t> stream_values(const StreamSpec& spec, std::uint64_t first, std::uint64_t last,
                                         const SieveOptions& sieve)
{
    validate_residue_stream(spec);
    auto values = sieve_range(spec.function(), first, last, ModulusContext(spec.m), sieve);
    const std::uint64_t lambda = spec.scale.value_or(1) % spec.m;
    for (auto& v : values) {
        if (lambda != 1) {
            v = detail::mulmod(v, lambda, spec.m);
        }
        if (spec.variant != StreamVariant::direct) {
            v %= 10;
        }
    }
    return values;
}

std::uint8_t digit_at(const StreamSpec& spec, std::uint64_t r)
{
    validate_digit_stream(spec);
    if (r == 0) {
        throw UsageError("digit positions start at 1");
    }
    return static_cast<std::uint8_t>(stream_values(spec, r, r).front());
}

ResidueStream::ResidueStream(StreamSpec spec, StreamOptions options)
    : spec_(std::move(spec))
    , options_(options)
{
    validate_residue_stream(spec_);
    if (options_.block == 0) {
        throw UsageError("stream block size must be positive");
    }
}

std::uint64_t ResidueStream::at(std::uint64_t r)
{
    if (r == 0) {
        throw UsageError("stream positions start at 1");
    }
    extend_to(r);
    return values_[r - 1];
}

std::span<const std::uint64_t> ResidueStream::prefix(std::uint64_t length)
{
    extend_to(length);
    return std::span<const std::uint64_t>(values_).first(length);
}

void ResidueStream::extend_to(std::uint64_t length)
{
    const std::uint64_t have = values_.size();
    if (length <= have) {
        return;
    }
    std::uint64_t target = 0;
    std::uint64_t first = have + 1;
    if (spec_.source == StreamSource::tau) {
        // The Delta expansion is recomputed from scratch, so grow geometrically.
        target = std::max({length, 2 * have, std::uint64_t{64}});
        first = 1;
    } else {
        target = (length + options_.block - 1) / options_.block * options_.block;
    }
    auto fresh = stream_values(spec_, first, target, options_.sieve);
    if (first == 1) {
        values_ = std::move(fresh);
    } else {
        values_.insert(values_.end(), fresh.begin(), fresh.end());
    }
}

DigitStream::DigitStream(StreamSpec spec, StreamOptions options)
    : residues_((validate_digit_stream(spec), std::move(spec)), options)
{
}

std::uint8_t DigitStream::digit(std::uint64_t r)
{
    return static_cast<std::uint8_t>(residues_.at(r));
}

std::vector<std::uint8_t> DigitStream::prefix(std::uint64_t length)
{
    auto p = residues_.prefix(length);
    return {p.begin(), p.end()};
}

DigitStream scaled_stream(const StreamSpec& spec, StreamOptions options)
{
    if (!spec.scale) {
        throw UsageError("scaled_stream needs a scale");
    }
    return DigitStream(spec, options);
}

} // namespace modcf
