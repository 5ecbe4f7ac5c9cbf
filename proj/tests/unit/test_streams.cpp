#include <doctest.h>

#include <modcf/errors.hpp>
#include <modcf/period.hpp>
#include <modcf/qseries.hpp>
#include <modcf/streams.hpp>

using namespace modcf;

namespace {

// Digit streams covering every source and admissible modulus family.
std::vector<std::string> digit_stream_matrix()
{
    std::vector<std::string> out = {"tau%5", "tau%7", "tau%8", "tau%9", "eis4%7", "eis6%5", "eis8%7",
                                    "eis10%5", "eis10%7", "eis14%5", "eis14%7"};
    for (int m : {5, 7, 9, 11, 15, 17}) {
        out.push_back("nathanson_phi%" + std::to_string(m) + ">dec");
        out.push_back("half_phi%" + std::to_string(m) + ">dec");
        out.push_back("nathanson_g%" + std::to_string(m) + ">dec");
    }
    for (int m = 3; m <= 10; ++m) {
        out.push_back("phi%" + std::to_string(m));
        out.push_back("jordan3%" + std::to_string(m));
        out.push_back("unitary_phi%" + std::to_string(m));
    }
    for (int m = 7; m <= 10; ++m) {
        out.push_back("sigma%" + std::to_string(m));
        out.push_back("sigma_conv_phi%" + std::to_string(m));
    }
    return out;
}

} // namespace

TEST_CASE("spec text form")
{
    const auto s = parse_stream_spec("nathanson_phi%7>dec");
    CHECK(s.source == StreamSource::nathanson_phi);
    CHECK(s.m == 7);
    CHECK(s.variant == StreamVariant::nested_mod_10);
    const auto h = parse_stream_spec("half_phi%9>dec");
    CHECK(h.source == StreamSource::nathanson_phi);
    CHECK(h.variant == StreamVariant::half_then_nested);
    const auto j = parse_stream_spec("jordan3%8");
    CHECK(j.source == StreamSource::jordan);
    CHECK(j.jordan_order == 3U);
    const auto p = parse_stream_spec("phi%5*2");
    CHECK(p.scale == 2U);

    for (const auto& text : {"tau%5", "nathanson_phi%7>dec", "half_phi%9>dec", "jordan3%8", "phi%5*2", "eis14%7",
                             "sigma%7", "sigma_conv_phi%10", "nathanson_g%5>dec", "unitary_phi%3", "tau%691"}) {
        CHECK(to_string(parse_stream_spec(text)) == text);
    }
    for (const auto& bad : {"", "tau", "tau%", "tau%x", "foo%5", "phi%5*", "phi%5>hex", "phi%5*2*3", "half_phi%5"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_stream_spec(bad), UsageError);
    }
}

TEST_CASE("validation")
{
    auto digit_ok = [](const char* text) {
        validate_digit_stream(parse_stream_spec(text));
        return true;
    };
    for (const auto& text : digit_stream_matrix()) {
        CAPTURE(text);
        CHECK(digit_ok(text.c_str()));
    }
    for (const auto& bad : {"tau%6", "tau%691", "eis4%5", "eis6%7", "phi%2", "phi%11", "sigma%6", "sigma%11",
                            "nathanson_phi%13>dec", "nathanson_phi%23>dec", "nathanson_g%4>dec",
                            "nathanson_phi%11", "phi%5>dec", "phi%6*2", "phi%5*5", "jordan3%11"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(validate_digit_stream(parse_stream_spec(bad)), DomainError);
    }
    // Residue streams only need the structural checks.
    validate_residue_stream(parse_stream_spec("tau%691"));
    validate_residue_stream(parse_stream_spec("phi%1000"));
    CHECK_THROWS_AS(validate_residue_stream(parse_stream_spec("phi%4*2")), DomainError);
    CHECK_THROWS_AS(validate_residue_stream(parse_stream_spec("jordan2%5")), DomainError);
}

TEST_CASE("digit examples")
{
    CHECK(digit_at(parse_stream_spec("tau%5"), 4) == 3);
    CHECK(digit_at(parse_stream_spec("phi%3"), 1) == 1);
    CHECK(digit_at(parse_stream_spec("nathanson_phi%7>dec"), 4) == 5);
    CHECK(digit_at(parse_stream_spec("half_phi%7>dec"), 1) == 1);
    CHECK(digit_at(parse_stream_spec("half_phi%7>dec"), 4) == 6);
    CHECK(digit_at(parse_stream_spec("phi%5*2"), 3) == 4);
    CHECK_THROWS_AS(digit_at(parse_stream_spec("phi%5*5"), 1), DomainError);
    CHECK_THROWS_AS(scaled_stream(parse_stream_spec("phi%5*5")), DomainError);
    CHECK_THROWS_AS(scaled_stream(parse_stream_spec("phi%5")), UsageError);

    DigitStream tau5(parse_stream_spec("tau%5"));
    CHECK(tau5.prefix(5) == std::vector<std::uint8_t>{1, 1, 2, 3, 0});
}

TEST_CASE("digits are in range and deterministic")
{
    const std::uint64_t len = 10000;
    for (const auto& text : digit_stream_matrix()) {
        CAPTURE(text);
        const auto spec = parse_stream_spec(text);
        DigitStream a(spec);
        StreamOptions small_blocks;
        small_blocks.block = 97;
        DigitStream b(spec, small_blocks);
        // Different access patterns: sequential versus strided-then-sequential.
        b.digit(len);
        b.digit(1234);
        const auto pa = a.prefix(len);
        const auto pb = b.prefix(len);
        REQUIRE(pa == pb);
        for (auto d : pa) {
            REQUIRE(d <= 9);
        }
    }
}

TEST_CASE("tau digits agree with the Delta expansion")
{
    const auto tau = delta_expansion(1000);
    for (std::uint64_t m : {5, 7, 8, 9}) {
        DigitStream s(parse_stream_spec("tau%" + std::to_string(m)));
        for (std::uint64_t r = 1; r <= 1000; ++r) {
            REQUIRE(s.digit(r) == mod_u64(tau[r - 1], m));
        }
    }
}

TEST_CASE("scaling by 1 is the identity and scaling preserves period reports")
{
    const auto plain = stream_values(parse_stream_spec("phi%7"), 1, 1000);
    CHECK(stream_values(parse_stream_spec("phi%7*1"), 1, 1000) == plain);
    for (const auto& [base, lambda] : std::vector<std::pair<std::string, int>>{
             {"phi%7", 3}, {"sigma%9", 2}, {"tau%691", 5}, {"jordan3%10", 7}, {"unitary_phi%8", 3}}) {
        const auto a = stream_values(parse_stream_spec(base), 1, 1000);
        const auto b = stream_values(parse_stream_spec(base + "*" + std::to_string(lambda)), 1, 1000);
        const auto ra = scan_period(std::span<const std::uint64_t>(a), 50, 100);
        const auto rb = scan_period(std::span<const std::uint64_t>(b), 50, 100);
        CHECK(ra == rb);
        CHECK(minimal_period_oracle(std::span<const std::uint64_t>(a))
              == minimal_period_oracle(std::span<const std::uint64_t>(b)));
    }
}

TEST_CASE("ResidueStream grows on demand")
{
    StreamOptions opts;
    opts.block = 10;
    ResidueStream s(parse_stream_spec("tau%691"), opts);
    CHECK(s.at(2) == 667);
    const auto first = std::vector<std::uint64_t>(s.prefix(5).begin(), s.prefix(5).end());
    s.at(500);
    CHECK(s.materialized() >= 500);
    const auto again = s.prefix(5);
    CHECK(std::equal(first.begin(), first.end(), again.begin()));
}
