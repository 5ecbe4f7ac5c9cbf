#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <modcf/arith.hpp>
#include <modcf/bigint.hpp>
#include <modcf/primes.hpp>

namespace modcf {

/// Which general non-periodicity criterion a witness realizes.
///
/// divisibility: m | f(q) for primes q == 1 (mod K(m)), and f(p) | f(n) when p | n.
/// multiplicative: f(q) == r1 (mod m) for primes q == 1 (mod m), f(p) == r2 for
/// infinitely many primes p, r2 != r2 r1 (mod m), f multiplicative on squarefrees.
enum class Criterion { divisibility, multiplicative };

std::string to_string(Criterion c);
/// Throws UsageError on unknown names.
Criterion parse_criterion(const std::string& name);

/// One row of the built-in hypothesis table: how a criterion instantiates for (f, m).
struct Hypothesis {
    ArithFunction f;
    /// The function the criterion is applied to. Equal to f except for
    /// Eisenstein series, whose criterion runs on sigma_{w-1} and transfers
    /// to E_w because the scale is a unit mod m.
    ArithFunction criterion_function;
    std::uint64_t m = 0;
    Criterion criterion = Criterion::divisibility;
    /// K(m) for divisibility; m itself for multiplicative.
    std::uint64_t progression_modulus = 0;
    /// p_N is searched among primes p == prime_class (mod progression_modulus).
    std::uint64_t prime_class = 0;
    /// Multiplicative criterion: f(q) == r1 for q == 1 (mod m), f(p_N) == r2.
    std::optional<std::uint64_t> r1;
    std::optional<std::uint64_t> r2;
    /// Short human-readable account of the instantiation.
    std::string basis;
};

/// The criteria the table supports for (f, m), primary one first.
/// Empty when the pair is not covered.
std::vector<Criterion> supported_criteria(const ArithFunction& f, std::uint64_t m);

/// Looks up the table row; throws DomainError when (f, m, criterion) is not covered.
///
/// Rows: phi, jordan_k (odd k >= 3), unitary_phi for m >= 3 (both criteria,
/// K(m) = m, class m - 1, r1 = 0, r2 = m - 2); nathanson_phi for odd m >= 5
/// (divisibility, K(m) = phi(m), class phi(m) - 1); sigma and sigma_conv_phi
/// for m >= 7 (multiplicative, class r = least unit in [2, m - 2], r1 = 2,
/// r2 = r + 1 resp. 2r); tau for m in {5, 7, 8, 9, 691} through its
/// congruences; eis_w through sigma_{w-1} for m >= 3 coprime to the E_w
/// scale and not dividing 2^(w-1) + 1.
Hypothesis lookup_hypothesis(const ArithFunction& f, std::uint64_t m, Criterion criterion);

/// Explicit refutation of "f(n + L) == f(n) (mod m) for all n >= N".
struct Witness {
    Criterion criterion = Criterion::divisibility;
    ArithFunction f;
    std::uint64_t m = 0;
    std::uint64_t L = 0;
    std::uint64_t N = 0;
    std::uint64_t k_of_m = 0;
    BigInt p_N;
    std::uint64_t j_prime = 0;
    BigInt q; // 1 + k_of_m * j_prime * p_N * L
    BigInt n1; // p_N
    BigInt n2; // p_N * q
    std::optional<std::uint64_t> r1;
    std::optional<std::uint64_t> r2;
    std::uint64_t residue1 = 0; // f(n1) mod m
    std::uint64_t residue2 = 0; // f(n2) mod m
    Certification certification = Certification::deterministic;
    std::uint64_t primes_tried = 0;
};

struct WitnessOptions {
    std::uint64_t prime_budget = 100000; // candidate primes p_N examined
    std::uint64_t j_budget = 100000;     // values of j' examined per p_N
    unsigned mr_rounds = 64;             // for q above 2^64
};

/// Builds the witness constructively: the least prime
/// p_N >= N in the table's class with f(p_N) != 0 (divisibility) or
/// f(p_N) == r2 (multiplicative), then the least j' with
/// q = 1 + K j' p_N L prime, then f at n1 = p_N and n2 = p_N q via mod_eval.
/// Throws DomainError for pairs outside the table and BudgetExhaustedError
/// when a budget runs out.
Witness witness_violation(const ArithFunction& f, std::uint64_t m, std::uint64_t L, std::uint64_t N,
                          Criterion criterion, const WitnessOptions& options = {});

/// Independent re-check of every witness invariant, recomputing
/// primality and both residues from scratch.
struct WitnessCheck {
    bool n1_is_p = false;
    bool n1_at_least_N = false;
    bool p_prime = false;
    bool q_prime = false;
    bool q_form = false;       // q == 1 + K j' p_N L
    bool q_in_class = false;   // q == 1 (mod K) resp. (mod m)
    bool n2_is_pq = false;
    bool L_divides = false;    // L | n2 - n1
    bool residues_match = false;
    bool residues_differ = false;

    bool ok() const
    {
        return n1_is_p && n1_at_least_N && p_prime && q_prime && q_form && q_in_class && n2_is_pq && L_divides
            && residues_match && residues_differ;
    }
};

WitnessCheck verify_witness(const Witness& w, unsigned mr_rounds = 64);

} // namespace modcf
