#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fermat/lucas.hpp"
#include "fermat/modulus.hpp"
#include "fermat/report.hpp"
#include "fermat/symbols.hpp"

namespace fermat {

enum class Classification { prime, composite };
enum class Method { llt_fermat, pepin, llt_mersenne, rank_certificate, trial_division };

std::string_view to_string(Classification c);
std::string_view to_string(Method m);

struct Verdict {
    Classification classification = Classification::composite;
    Method method = Method::llt_fermat;
    /// Final nonzero residue for composite squaring-chain and Pepin verdicts.
    std::optional<BigInt> witness;
    /// False for seeds other than 5, which carry no correctness guarantee.
    bool proven = true;

    bool is_prime() const noexcept { return classification == Classification::prime; }
};

/// F_n = 2^(2^n) + 1 with n >= 1.
struct FermatNumber {
    unsigned n;
    BigInt value;

    /// Throws PreconditionError for n = 0.
    static FermatNumber make(unsigned n);
};

struct LltOptions {
    long seed = 5;
    /// Required for any seed other than 5.
    bool experimental = false;
};

/// Largest n for which s_sequence keeps every residue.
inline constexpr unsigned kTraceCap = 6;

struct SSequenceTrace {
    unsigned n = 0;
    long seed = 5;
    /// S_0..S_{2^n - 2} mod F_n when traced; otherwise only the final residue.
    std::vector<BigInt> residues;
    BigInt final_residue;
};

/// S_0 = seed, S_i = S_{i-1}^2 - 2 mod F_n for i up to 2^n - 2, using the
/// fold reduction for 2^(2^n) + 1.
SSequenceTrace s_sequence(unsigned n, bool keep_trace, const LltOptions& options = {});

/// F_n is prime iff S_{2^n - 2} = 0 (mod F_n) for seed 5.
Verdict fermat_llt(unsigned n, const LltOptions& options = {});

/// F_n is prime iff 3^((F_n - 1)/2) = -1 (mod F_n). Uses generic modular
/// exponentiation so it shares no reduction code with fermat_llt.
Verdict pepin(unsigned n);

/// M_q = 2^q - 1 is prime iff it divides S_{q-2}, S_0 = 4. q must be an odd prime.
Verdict mersenne_llt(unsigned long q);

struct RankResult {
    std::uint64_t m = 0;
    std::optional<std::uint64_t> omega;
    std::uint64_t cap = 0;
};

inline constexpr std::uint64_t kDefaultRankCap = 1'000'000;

/// Least k in [1, cap] with m | Ubar_k, stepping the recurrence mod m.
/// Requires m >= 2 and gcd(m, Q) = 1.
RankResult rank_of_apparition(const LucasParams& params, std::uint64_t m,
                              std::uint64_t cap = kDefaultRankCap);

/// N - 1 rank certificate: prime when Ubar_{N-1} = 0 and Ubar_{(N-1)/q} != 0
/// for every prime q | N - 1; composite when Ubar_{N-1} != 0 and
/// (R/N)(D/N) = +1. `n_minus_1_primes` lists the q; it may be empty when N - 1
/// is a power of two. Throws Inconclusive when Ubar_{N-1} vanishes but some
/// (N-1)/q condition fails, or when Ubar_{N-1} != 0 with (R/N)(D/N) = -1.
Verdict certify_via_rank(const LucasParams& params, const BigInt& n,
                         std::span<const BigInt> n_minus_1_primes = {});

struct CongruenceReport {
    std::uint64_t p = 0;
    SymbolTriple symbols;
    std::vector<CheckResult> checks;

    bool all_pass() const { return fermat::all_pass(checks); }
};

/// Lehmer congruences at an odd prime p with p not dividing QRD:
///   Ubar_p = eps, Vbar_p = sigma, p | Ubar_{p - sigma eps},
///   Vbar_{p - sigma eps} = 2 sigma Q^((1 - sigma eps)/2),
///   and p | Vbar_h (sigma = -tau) or p | Ubar_h (sigma = tau), h = (p - sigma eps)/2.
CongruenceReport lehmer_congruence_checks(const LucasParams& params, std::uint64_t p);

struct AppendixReport {
    unsigned n = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const { return fermat::all_pass(checks); }
};

/// The nine Ubar and nine Vbar residues at F_n - 5 .. F_n + 3, n in {2, 3, 4}.
AppendixReport appendix_residues(const LucasParams& params, unsigned n);

/// Expected balanced residues at offsets -5..+3 from F_n.
inline constexpr int kAppendixU[9] = {5, 6, 1, 1, 0, -1, -1, -6, -5};
inline constexpr int kAppendixV[9] = {-23, -4, -5, -1, -2, -1, -5, -4, -23};

/// Smallest prime factor of n that is <= bound (n itself when prime and <= bound).
std::optional<std::uint64_t> trial_division(std::uint64_t n, std::uint64_t bound);

bool is_small_prime(std::uint64_t n);

} // namespace fermat
