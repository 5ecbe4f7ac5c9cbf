#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <modcf/arith.hpp>
#include <modcf/cf.hpp>
#include <modcf/errors.hpp>
#include <modcf/period.hpp>
#include <modcf/qseries.hpp>
#include <modcf/sieve.hpp>
#include <modcf/streams.hpp>
#include <modcf/witness.hpp>

namespace modcf::cli {

namespace {

using nlohmann::json;

constexpr const char* schema_id = "modcf/1";
constexpr const char* seed_note =
    "deterministic: no randomness except fixed-seed Miller-Rabin bases for integers above 2^64";

struct Io {
    std::ostream& out;
    std::ostream& err;
    bool json_mode = false;
    bool progress = false;

    void note(const std::string& line) const
    {
        if (progress) {
            err << line << '\n';
        }
    }
};

std::optional<std::uint64_t> env_u64(const char* name)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    std::uint64_t value = 0;
    const std::string text(raw);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError(std::string(name) + " must be a non-negative integer, got '" + text + "'");
    }
    return value;
}

// Flag beats environment beats default.
std::uint64_t setting(const std::optional<std::uint64_t>& flag, const char* env, std::uint64_t fallback)
{
    if (flag) {
        return *flag;
    }
    if (auto v = env_u64(env)) {
        return *v;
    }
    return fallback;
}

ArithFunction resolve_function(const std::string& name, const std::optional<unsigned>& k)
{
    if (name == "jordan") {
        if (!k) {
            throw UsageError("jordan needs --k");
        }
        return ArithFunction::jordan(*k);
    }
    if (name == "sigma" && k) {
        return ArithFunction::sigma(*k);
    }
    if (name == "eis" || name == "eisenstein") {
        if (!k) {
            throw UsageError(name + " needs --k (the weight)");
        }
        return ArithFunction::eisenstein(*k);
    }
    if (k && name != "sigma") {
        throw UsageError("--k does not apply to " + name);
    }
    return ArithFunction::parse(name);
}

void emit(const Io& io, const std::string& command, json parameters, json result)
{
    json doc;
    doc["schema"] = schema_id;
    doc["command"] = command;
    doc["parameters"] = std::move(parameters);
    doc["result"] = std::move(result);
    doc["tool_version"] = MODCF_VERSION;
    doc["seed"] = seed_note;
    io.out << doc.dump(2) << '\n';
}

// ---- fn ----

struct FnArgs {
    std::string f;
    std::optional<std::uint64_t> n;
    std::vector<std::uint64_t> range;
    std::optional<unsigned> k;
    std::optional<std::uint64_t> m;
    bool csv = false;
    std::optional<std::uint64_t> max_span;
};

int cmd_fn(const Io& io, const FnArgs& a)
{
    if (a.n.has_value() == !a.range.empty()) {
        throw UsageError("fn needs exactly one of --n or --range");
    }
    const ArithFunction f = resolve_function(a.f, a.k);
    const std::uint64_t lo = a.n ? *a.n : a.range[0];
    const std::uint64_t hi = a.n ? *a.n : a.range[1];
    SieveOptions opts;
    if (a.max_span) {
        opts.max_span = *a.max_span;
    }

    std::vector<std::string> values;
    if (a.m) {
        const ModulusContext ctx(*a.m);
        for (auto v : sieve_range(f, lo, hi, ctx, opts)) {
            values.push_back(std::to_string(v));
        }
    } else {
        for (const auto& v : sieve_range(f, lo, hi, opts)) {
            values.push_back(v.str());
        }
    }

    if (io.json_mode) {
        json params = {{"f", f.name()}, {"lo", lo}, {"hi", hi}};
        if (a.m) {
            params["m"] = *a.m;
        }
        json rows = json::array();
        for (std::uint64_t n = lo; n <= hi; ++n) {
            rows.push_back({{"n", n}, {"value", values[n - lo]}});
        }
        emit(io, "fn", params, {{"function", f.name()}, {"values", rows}});
    } else if (a.csv) {
        io.out << "n," << (a.m ? "residue" : "value") << '\n';
        for (std::uint64_t n = lo; n <= hi; ++n) {
            io.out << n << ',' << values[n - lo] << '\n';
        }
    } else {
        const int width = static_cast<int>(std::to_string(hi).size());
        for (std::uint64_t n = lo; n <= hi; ++n) {
            io.out << std::setw(width) << n << "  " << values[n - lo] << '\n';
        }
    }
    return exit_ok;
}

// ---- scan ----

struct ScanArgs {
    std::string stream;
    std::string values;
    std::optional<std::uint64_t> len;
    std::uint64_t nmax = 50;
    std::uint64_t lmax = 200;
};

std::vector<std::uint64_t> parse_values(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw UsageError("--values expects comma-separated non-negative integers, got '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

int cmd_scan(const Io& io, const ScanArgs& a)
{
    if (a.stream.empty() == a.values.empty()) {
        throw UsageError("scan needs exactly one of --stream or --values");
    }
    std::vector<std::uint64_t> seq;
    json params = {{"nmax", a.nmax}, {"lmax", a.lmax}};
    if (!a.stream.empty()) {
        const StreamSpec spec = parse_stream_spec(a.stream);
        validate_residue_stream(spec);
        const std::uint64_t len = a.len.value_or(10000);
        if (len == 0) {
            throw UsageError("--len must be positive");
        }
        io.note("scan: materializing " + std::to_string(len) + " terms of " + to_string(spec));
        seq = stream_values(spec, 1, len);
        params["stream"] = to_string(spec);
        params["len"] = len;
    } else {
        seq = parse_values(a.values);
        if (a.len) {
            if (*a.len > seq.size()) {
                throw UsageError("--len exceeds the number of --values");
            }
            seq.resize(*a.len);
        }
        params["values"] = seq;
        params["len"] = seq.size();
    }
    io.note("scan: checking periods up to L = " + std::to_string(a.lmax));
    const PeriodReport r = scan_period(std::span<const std::uint64_t>(seq), a.nmax, a.lmax);

    if (io.json_mode) {
        json result = {{"report", to_string(r)}, {"prefix_len", r.prefix_len}};
        if (r.periodic()) {
            result["outcome"] = "periodic";
            result["N"] = r.start;
            result["L"] = r.length;
        } else {
            result["outcome"] = "no_period_up_to";
            result["N_max"] = r.n_max;
            result["L_max"] = r.l_max;
        }
        emit(io, "scan", params, result);
    } else {
        io.out << to_string(r) << '\n';
    }
    return r.periodic() ? exit_violation : exit_ok;
}

// ---- witness ----

struct WitnessArgs {
    std::string f;
    std::optional<unsigned> k;
    std::uint64_t m = 0;
    std::uint64_t L = 1;
    std::uint64_t N = 1;
    std::string criterion;
    std::optional<std::uint64_t> prime_budget;
    std::optional<std::uint64_t> j_budget;
    unsigned mr_rounds = 64;
};

json check_json(const WitnessCheck& c)
{
    return {{"n1_is_p", c.n1_is_p},       {"n1_at_least_N", c.n1_at_least_N}, {"p_prime", c.p_prime},
            {"q_prime", c.q_prime},       {"q_form", c.q_form},               {"q_in_class", c.q_in_class},
            {"n2_is_pq", c.n2_is_pq},     {"L_divides", c.L_divides},         {"residues_match", c.residues_match},
            {"residues_differ", c.residues_differ}};
}

int cmd_witness(const Io& io, const WitnessArgs& a)
{
    const ArithFunction f = resolve_function(a.f, a.k);
    Criterion criterion;
    if (a.criterion.empty()) {
        const auto supported = supported_criteria(f, a.m);
        if (supported.empty()) {
            throw DomainError(f.name() + " mod " + std::to_string(a.m) + " is not in the witness hypothesis table");
        }
        criterion = supported.front();
    } else {
        criterion = parse_criterion(a.criterion);
    }
    WitnessOptions opts;
    opts.prime_budget = setting(a.prime_budget, "MODCF_PRIME_BUDGET", opts.prime_budget);
    opts.j_budget = setting(a.j_budget, "MODCF_J_BUDGET", opts.j_budget);
    opts.mr_rounds = a.mr_rounds;

    io.note("witness: searching " + f.name() + " mod " + std::to_string(a.m) + ", L = " + std::to_string(a.L));
    const Witness w = witness_violation(f, a.m, a.L, a.N, criterion, opts);
    const WitnessCheck check = verify_witness(w, opts.mr_rounds);
    const bool verified = check.ok();

    if (io.json_mode) {
        json params = {{"f", f.name()},
                       {"m", a.m},
                       {"L", a.L},
                       {"N", a.N},
                       {"criterion", to_string(criterion)},
                       {"prime_budget", opts.prime_budget},
                       {"j_budget", opts.j_budget}};
        json result = {{"criterion", to_string(w.criterion)},
                       {"f", w.f.name()},
                       {"m", w.m},
                       {"L", w.L},
                       {"N", w.N},
                       {"K", w.k_of_m},
                       {"p_N", w.p_N.str()},
                       {"j_prime", w.j_prime},
                       {"q", w.q.str()},
                       {"n1", w.n1.str()},
                       {"n2", w.n2.str()},
                       {"r1", w.r1 ? json(*w.r1) : json(nullptr)},
                       {"r2", w.r2 ? json(*w.r2) : json(nullptr)},
                       {"residue1", w.residue1},
                       {"residue2", w.residue2},
                       {"certification",
                        w.certification == Certification::deterministic ? "deterministic" : "probabilistic"},
                       {"primes_tried", w.primes_tried},
                       {"checks", check_json(check)},
                       {"verified", verified}};
        emit(io, "witness", params, result);
    } else {
        io.out << "criterion     " << to_string(w.criterion) << '\n'
               << "f             " << w.f.name() << " mod " << w.m << '\n'
               << "L, N          " << w.L << ", " << w.N << '\n'
               << "K(m)          " << w.k_of_m << '\n'
               << "p_N           " << w.p_N << '\n'
               << "j'            " << w.j_prime << '\n'
               << "q             " << w.q << '\n'
               << "n1            " << w.n1 << '\n'
               << "n2            " << w.n2 << '\n';
        if (w.r1) {
            io.out << "r1, r2        " << *w.r1 << ", " << *w.r2 << '\n';
        }
        io.out << "f(n1) mod m   " << w.residue1 << '\n'
               << "f(n2) mod m   " << w.residue2 << '\n'
               << "certification "
               << (w.certification == Certification::deterministic ? "deterministic" : "probabilistic") << '\n'
               << "verified      " << (verified ? "yes" : "NO") << '\n';
    }
    return verified ? exit_ok : exit_violation;
}

// ---- alpha ----

struct AlphaArgs {
    std::string stream;
    std::uint64_t k = 2;
    std::uint64_t count = 1000;
    std::uint64_t digits = 50;
    std::optional<std::uint64_t> ceiling;
    std::uint64_t step = 4;
    std::uint64_t max_k = 256;
};

int cmd_alpha(const Io& io, const AlphaArgs& a)
{
    const StreamSpec spec = parse_stream_spec(a.stream);
    validate_digit_stream(spec);
    if (a.count == 0 || a.digits == 0) {
        throw UsageError("--count and --digits must be positive");
    }
    EnclosureOptions enc_opts;
    enc_opts.ceiling = setting(a.ceiling, "MODCF_PRECISION_CEILING", enc_opts.ceiling);
    enc_opts.step = a.step;
    CfOptions cf_opts;
    cf_opts.max_k = a.max_k;

    ThetaEnclosure enc(std::make_shared<DigitStream>(spec), enc_opts);
    io.note("alpha: extracting " + std::to_string(a.count) + " partial quotients");
    const ContinuedFraction cf = abd_quotients(enc, a.k, a.count, cf_opts);
    io.note("alpha: theta enclosure used " + std::to_string(enc.precision()) + " digits");
    const AlphaDecimals dec = alpha_decimals(cf, a.digits);

    if (io.json_mode) {
        json params = {{"stream", to_string(spec)},
                       {"k", a.k},
                       {"count", a.count},
                       {"digits", a.digits},
                       {"precision_ceiling", enc_opts.ceiling}};
        const std::size_t head = std::min<std::size_t>(cf.size(), 20);
        json result = {{"stream", to_string(spec)},
                       {"k", a.k},
                       {"count", a.count},
                       {"digits", a.digits},
                       {"decimal", dec.decimal},
                       {"p_n", dec.p_n.str()},
                       {"q_n", dec.q_n.str()},
                       {"certificate",
                        {{"n", dec.n}, {"q_n", dec.q_n.str()}, {"q_next", dec.q_next.str()},
                         {"bound_exponent", dec.bound_exponent}}},
                       {"quotients_head", std::vector<std::uint64_t>(cf.quotients().begin(),
                                                                     cf.quotients().begin() + head)},
                       {"enclosure_digits", enc.precision()}};
        emit(io, "alpha", params, result);
    } else {
        io.out << "alpha  " << dec.decimal << '\n'
               << "stream " << to_string(spec) << ", k = " << a.k << ", " << a.count << " quotients\n"
               << "certificate: |alpha - p_n/q_n| < 1/(q_n q_{n+1}) < 10^-" << dec.bound_exponent
               << " at n = " << dec.n << '\n';
    }
    return exit_ok;
}

// ---- congruence ----

int cmd_congruence(const Io& io, std::uint64_t N)
{
    if (N == 0) {
        throw UsageError("--N must be positive");
    }
    io.note("congruence: expanding Delta to " + std::to_string(N) + " terms");
    const TauCongruenceReport report = verify_tau_congruences(N);

    if (io.json_mode) {
        json lines = json::array();
        for (const auto& line : report.lines) {
            auto sample = [](const CongruenceSample& s) {
                return json{{"n", s.n}, {"tau", s.tau_residue}, {"formula", s.formula_residue}};
            };
            json v = json::array();
            for (const auto& s : line.violations) {
                v.push_back(sample(s));
            }
            lines.push_back({{"modulus", line.modulus},
                             {"rule", line.rule},
                             {"checked", line.checked},
                             {"violations", v},
                             {"last", line.last ? sample(*line.last) : json(nullptr)}});
        }
        emit(io, "congruence", {{"N", N}}, {{"N", N}, {"ok", report.ok()}, {"lines", lines}});
    } else {
        for (const auto& line : report.lines) {
            io.out << "mod " << std::left << std::setw(4) << line.modulus << " tau(n) == " << std::setw(17)
                   << line.rule << std::right << " checked " << std::setw(6) << line.checked << "  violations "
                   << line.violations.size();
            if (line.last) {
                io.out << "  (n = " << line.last->n << ": " << line.last->tau_residue << " = "
                       << line.last->formula_residue << ")";
            }
            io.out << '\n';
        }
        io.out << (report.ok() ? "all congruences hold" : "VIOLATIONS FOUND") << '\n';
    }
    return report.ok() ? exit_ok : exit_violation;
}

void report_error(const Io& io, const std::string& command, const char* kind, const std::string& message)
{
    io.err << "error: " << message << '\n';
    if (io.json_mode) {
        json doc;
        doc["schema"] = schema_id;
        doc["command"] = command;
        doc["error"] = {{"kind", kind}, {"message", message}};
        doc["tool_version"] = MODCF_VERSION;
        io.out << doc.dump(2) << '\n';
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Arithmetic functions, residue periodicity and certified continued fractions", "modcf"};
    app.require_subcommand(1);
    app.set_version_flag("--version", MODCF_VERSION);

    bool json_mode = false;
    bool progress = false;
    app.add_flag("--json", json_mode, "Emit the versioned JSON document instead of text");
    app.add_flag("--progress", progress, "Progress notes on stderr");
    app.fallthrough();

    FnArgs fn;
    auto* fn_cmd = app.add_subcommand("fn", "Evaluate an arithmetic function");
    fn_cmd->add_option("--f", fn.f, "Function name (phi, sigma, jordan, tau, nathanson_phi, ...)")->required();
    auto* n_opt = fn_cmd->add_option("--n", fn.n, "Single argument");
    auto* range_opt = fn_cmd->add_option("--range", fn.range, "LO HI")->expected(2);
    n_opt->excludes(range_opt);
    fn_cmd->add_option("--k", fn.k, "Parameter: sigma_k, jordan order or Eisenstein weight");
    fn_cmd->add_option("--m", fn.m, "Print residues mod m instead of exact values");
    fn_cmd->add_flag("--csv", fn.csv, "CSV output");
    fn_cmd->add_option("--max-span", fn.max_span, "Largest range the sieve may materialize");

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Search a residue stream for an eventual period");
    scan_cmd->add_option("--stream", scan.stream, "Stream spec, e.g. tau%5 or half_phi%7>dec");
    scan_cmd->add_option("--values", scan.values, "Explicit comma-separated sequence instead of a stream");
    scan_cmd->add_option("--len", scan.len, "Prefix length (default 10000 for streams)");
    scan_cmd->add_option("--nmax", scan.nmax, "Largest start index N")->capture_default_str();
    scan_cmd->add_option("--lmax", scan.lmax, "Largest period L")->capture_default_str();

    WitnessArgs wit;
    auto* wit_cmd = app.add_subcommand("witness", "Construct an explicit non-periodicity witness");
    wit_cmd->add_option("--f", wit.f, "Function name")->required();
    wit_cmd->add_option("--k", wit.k, "Jordan order, sigma index or Eisenstein weight");
    wit_cmd->add_option("--m", wit.m, "Modulus")->required();
    wit_cmd->add_option("--L", wit.L, "Period to refute")->capture_default_str();
    wit_cmd->add_option("--N", wit.N, "Start index to refute")->capture_default_str();
    wit_cmd->add_option("--criterion", wit.criterion, "divisibility or multiplicative (default: first supported)");
    wit_cmd->add_option("--prime-budget", wit.prime_budget, "Candidate primes p_N (env MODCF_PRIME_BUDGET)");
    wit_cmd->add_option("--j-budget", wit.j_budget, "Values of j' per prime (env MODCF_J_BUDGET)");
    wit_cmd->add_option("--mr-rounds", wit.mr_rounds, "Miller-Rabin rounds above 2^64")->capture_default_str();

    AlphaArgs alpha;
    auto* alpha_cmd = app.add_subcommand("alpha", "Certified decimals of the continued fraction built from a digit stream");
    alpha_cmd->add_option("--stream", alpha.stream, "Digit stream spec")->required();
    alpha_cmd->add_option("--k", alpha.k, "Quotient bound k >= 2")->capture_default_str();
    alpha_cmd->add_option("--count", alpha.count, "Number of partial quotients")->capture_default_str();
    alpha_cmd->add_option("--digits", alpha.digits, "Certified decimal places")->capture_default_str();
    alpha_cmd->add_option("--precision-ceiling", alpha.ceiling, "Digit ceiling for theta (env MODCF_PRECISION_CEILING)");
    alpha_cmd->add_option("--step", alpha.step, "Enclosure growth step")->capture_default_str();
    alpha_cmd->add_option("--max-k", alpha.max_k, "Upper bound accepted for --k")->capture_default_str();

    std::uint64_t congruence_n = 10000;
    auto* cong_cmd = app.add_subcommand("congruence", "Check the tau congruences mod 5, 7, 8, 9, 691");
    cong_cmd->add_option("--N", congruence_n, "Check n <= N")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << MODCF_VERSION << '\n';
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const Io io{out, err, json_mode, progress};
    std::string command = "?";
    try {
        if (*fn_cmd) {
            command = "fn";
            return cmd_fn(io, fn);
        }
        if (*scan_cmd) {
            command = "scan";
            return cmd_scan(io, scan);
        }
        if (*wit_cmd) {
            command = "witness";
            return cmd_witness(io, wit);
        }
        if (*alpha_cmd) {
            command = "alpha";
            return cmd_alpha(io, alpha);
        }
        command = "congruence";
        return cmd_congruence(io, congruence_n);
    } catch (const UsageError& e) {
        report_error(io, command, "usage", e.what());
        return exit_usage;
    } catch (const DomainError& e) {
        report_error(io, command, "domain", e.what());
        return exit_domain;
    } catch (const ResourceError& e) {
        report_error(io, command, "resource", e.what());
        return exit_resource;
    } catch (const std::exception& e) {
        report_error(io, command, "internal", e.what());
        return exit_internal;
    }
}

} // namespace modcf::cli
