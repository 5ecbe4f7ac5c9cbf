#include <modcf/witness.hpp>

#include <modcf/errors.hpp>

namespace modcf {

namespace {

std::uint64_t euler_phi_u64(std::uint64_t m)
{
    std::uint64_t result = m;
    for (auto [p, e] : factor_u64(m)) {
        result = result / p * (p - 1);
    }
    return result;
}

std::uint64_t eisenstein_r2_raw(unsigned weight)
{
    // sigma_{w-1}(2) = 2^(w-1) + 1
    return (std::uint64_t{1} << (weight - 1)) + 1;
}

std::optional<Hypothesis> find_hypothesis(const ArithFunction& f, std::uint64_t m, Criterion criterion)
{
    Hypothesis h;
    h.f = f;
    h.criterion_function = f;
    h.m = m;
    h.criterion = criterion;

    switch (f.kind) {
    case FunctionKind::phi:
    case FunctionKind::jordan:
    case FunctionKind::unitary_phi:
        if (m < 3) {
            return std::nullopt;
        }
        h.progression_modulus = m;
        h.prime_class = m - 1;
        if (criterion == Criterion::divisibility) {
            h.basis = "K(m)=m; m | f(q) for q == 1 (mod m); f(p) == m-2 for p == m-1 (mod m)";
        } else {
            h.r1 = 0;
            h.r2 = m - 2;
            h.basis = "r1=0 at q == 1 (mod m); r2=m-2 at p == m-1 (mod m)";
        }
        return h;

    case FunctionKind::nathanson_phi:
        if (criterion != Criterion::divisibility || m < 5 || m % 2 == 0) {
            return std::nullopt;
        }
        h.progression_modulus = euler_phi_u64(m);
        h.prime_class = h.progression_modulus - 1;
        h.basis = "K(m)=phi(m); 2^p-2 == 0 for p == 1 (mod phi(m)); == (m-3)/2 for p == phi(m)-1; Phi(p) | Phi(n)";
        return h;

    case FunctionKind::sigma:
    case FunctionKind::sigma_conv_phi: {
        if (criterion != Criterion::multiplicative || m < 7 || (f.kind == FunctionKind::sigma && f.param != 1)) {
            return std::nullopt;
        }
        std::uint64_t r = 2;
        while (r <= m - 2 && gcd_u64(r, m) != 1) {
            ++r;
        }
        h.progression_modulus = m;
        h.prime_class = r;
        h.r1 = 2;
        if (f.kind == FunctionKind::sigma) {
            h.r2 = (r + 1) % m;
            h.basis = "r1=2 at q == 1 (mod m); r2=r+1 at p == r (mod m), r=" + std::to_string(r);
        } else {
            h.r2 = (2 * r) % m;
            h.basis = "r1=2 at q == 1 (mod m); r2=2r at p == r (mod m), r=" + std::to_string(r);
        }
        return h;
    }

    case FunctionKind::tau: {
        if (criterion != Criterion::multiplicative) {
            return std::nullopt;
        }
        struct Row {
            std::uint64_t m, prime_class, r2;
        };
        static constexpr Row rows[] = {{5, 2, 1}, {7, 2, 4}, {8, 3, 4}, {9, 2, 3}, {691, 2, 667}};
        for (const Row& row : rows) {
            if (row.m == m) {
                h.progression_modulus = m;
                h.prime_class = row.prime_class;
                h.r1 = 2;
                h.r2 = row.r2;
                h.basis = "tau congruence mod " + std::to_string(m) + "; r1=2, r2=" + std::to_string(row.r2)
                    + " at p == " + std::to_string(row.prime_class) + " (mod m)";
                return h;
            }
        }
        return std::nullopt;
    }

    case FunctionKind::eisenstein: {
        if (criterion != Criterion::multiplicative || m < 3) {
            return std::nullopt;
        }
        const auto scale = static_cast<std::uint64_t>(std::abs(eisenstein_scale(f.param)));
        const std::uint64_t r2 = eisenstein_r2_raw(f.param) % m;
        if (gcd_u64(scale, m) != 1 || r2 == 0) {
            return std::nullopt;
        }
        h.criterion_function = ArithFunction::sigma(f.param - 1);
        h.progression_modulus = m;
        h.prime_class = 2;
        h.r1 = 2;
        h.r2 = r2;
        h.basis = "E_" + std::to_string(f.param) + " = c*sigma_" + std::to_string(f.param - 1)
            + " with c a unit; r1=2, r2=2^" + std::to_string(f.param - 1) + "+1 at p == 2 (mod m)";
        return h;
    }

    default:
        return std::nullopt;
    }
}

} // namespace

std::string to_string(Criterion c)
{
    return c == Criterion::divisibility ? "divisibility" : "multiplicative";
}

Criterion parse_criterion(const std::string& name)
{
    if (name == "divisibility") {
        return Criterion::divisibility;
    }
    if (name == "multiplicative") {
        return Criterion::multiplicative;
    }
    throw UsageError("criterion must be 'divisibility' or 'multiplicative', got '" + name + "'");
}

std::vector<Criterion> supported_criteria(const ArithFunction& f, std::uint64_t m)
{
    std::vector<Criterion> out;
    for (Criterion c : {Criterion::divisibility, Criterion::multiplicative}) {
        if (find_hypothesis(f, m, c)) {
            out.push_back(c);
        }
    }
    return out;
}

Hypothesis lookup_hypothesis(const ArithFunction& f, std::uint64_t m, Criterion criterion)
{
    auto h = find_hypothesis(f, m, criterion);
    if (!h) {
        throw DomainError("no " + to_string(criterion) + " hypothesis for " + f.name() + " mod " + std::to_string(m));
    }
    return *h;
}

Witness witness_violation(const ArithFunction& f, std::uint64_t m, std::uint64_t L, std::uint64_t N,
                          Criterion criterion, const WitnessOptions& options)
{
    if (L == 0 || N == 0) {
        throw UsageError("witness_violation needs L >= 1 and N >= 1");
    }
    const Hypothesis h = lookup_hypothesis(f, m, criterion);
    const ModulusContext ctx(m);
    const std::uint64_t step = h.progression_modulus;

    Witness w;
    w.criterion = criterion;
    w.f = f;
    w.m = m;
    w.L = L;
    w.N = N;
    w.k_of_m = step;
    w.r1 = h.r1;
    w.r2 = h.r2;

    std::uint64_t start = std::max<std::uint64_t>(N, 2);
    std::uint64_t x = start + (h.prime_class + step - start % step) % step;
    for (;; x += step) {
        if (x >= (std::uint64_t{1} << 62)) {
            throw BudgetExhaustedError("witness not found within budget: prime search left the 62-bit range");
        }
        if (!is_prime(x)) {
            continue;
        }
        if (++w.primes_tried > options.prime_budget) {
            throw BudgetExhaustedError("witness not found within budget: " + std::to_string(options.prime_budget)
                                       + " candidate primes examined");
        }
        const auto fp = FactoredInteger::factor(x);
        const std::uint64_t value = mod_eval(h.criterion_function, fp, ctx);
        const bool accepted = criterion == Criterion::divisibility ? value != 0 : value == *h.r2;
        if (!accepted) {
            continue;
        }

        const BigInt p = x;
        const BigInt stride = BigInt(step) * p * L;
        for (std::uint64_t j = 1; j <= options.j_budget; ++j) {
            BigInt q = 1 + stride * j;
            auto primality = is_prime(q, options.mr_rounds);
            if (!primality.prime) {
                continue;
            }
            auto n2 = FactoredInteger::from_factors({{p, 1}, {q, 1}}, options.mr_rounds);
            const std::uint64_t residue1 = mod_eval(f, fp, ctx);
            const std::uint64_t residue2 = mod_eval(f, n2, ctx);
            if (residue1 == residue2) {
                // Only possible if q is a pseudoprime; keep searching.
                continue;
            }
            w.p_N = p;
            w.j_prime = j;
            w.q = std::move(q);
            w.n1 = p;
            w.n2 = n2.value();
            w.residue1 = residue1;
            w.residue2 = residue2;
            w.certification = primality.certification;
            return w;
        }
        throw BudgetExhaustedError("witness not found within budget: no prime 1 + K j' p L for j' <= "
                                   + std::to_string(options.j_budget) + " with p = " + std::to_string(x));
    }
}

WitnessCheck verify_witness(const Witness& w, unsigned mr_rounds)
{
    WitnessCheck c;
    c.n1_is_p = w.n1 == w.p_N;
    c.n1_at_least_N = w.n1 >= w.N;
    c.p_prime = is_prime(w.p_N, mr_rounds).prime;
    c.q_prime = is_prime(w.q, mr_rounds).prime;
    c.q_form = w.q == 1 + BigInt(w.k_of_m) * w.j_prime * w.p_N * w.L;
    const std::uint64_t class_modulus = w.criterion == Criterion::divisibility ? w.k_of_m : w.m;
    c.q_in_class = class_modulus > 0 && w.q % class_modulus == 1 % class_modulus;
    c.n2_is_pq = w.n2 == w.p_N * w.q;
    c.L_divides = w.L > 0 && (w.n2 - w.n1) % w.L == 0;
    if (c.p_prime && c.q_prime && w.p_N < w.q) {
        const ModulusContext ctx(w.m);
        auto n1 = FactoredInteger::from_factors({{w.p_N, 1}}, mr_rounds);
        auto n2 = FactoredInteger::from_factors({{w.p_N, 1}, {w.q, 1}}, mr_rounds);
        const std::uint64_t r1 = mod_eval(w.f, n1, ctx);
        const std::uint64_t r2 = mod_eval(w.f, n2, ctx);
        c.residues_match = r1 == w.residue1 && r2 == w.residue2;
        c.residues_differ = r1 != r2;
    }
    return c;
}

} // namespace modcf
