#pragma once

// Batch kernels. Each *_serial function is the reference the OpenMP version
// is tested against; both return results in input order.

#include <cstdint>
#include <optional>
#include <vector>

#include "fermat/lucas.hpp"
#include "fermat/primality.hpp"

namespace fermat {

struct FermatClassification {
    unsigned n = 0;
    Verdict llt;
    Verdict pepin;

    bool agree() const { return llt.classification == pepin.classification; }
};

/// fermat_llt and pepin for every n in [first, last].
std::vector<FermatClassification> classify_fermat_range_serial(unsigned first, unsigned last);
std::vector<FermatClassification> classify_fermat_range(unsigned first, unsigned last);

/// Odd primes p < p_limit with p not dividing QRD.
std::vector<std::uint64_t> congruence_primes(const LucasParams& params, std::uint64_t p_limit);

std::vector<CongruenceReport> congruence_sweep_serial(const LucasParams& params, std::uint64_t p_limit);
std::vector<CongruenceReport> congruence_sweep(const LucasParams& params, std::uint64_t p_limit);

struct ReductionMismatch {
    std::uint64_t sample = 0;
    BigInt input;
    BigInt special;
    BigInt generic;
};

struct ReductionCrossCheck {
    unsigned n = 0;
    std::uint64_t samples = 0;
    std::uint64_t mismatches = 0;
    std::optional<ReductionMismatch> first_mismatch;
};

/// Deterministic input for sample i: a handful of edge values first, then
/// signed random integers of up to 2(2^n) + 2 bits.
BigInt reduction_sample(unsigned n, std::uint64_t seed, std::uint64_t i);

/// reduce_fermat_form against reduce_generic modulo F_n on `samples` inputs.
ReductionCrossCheck reduction_crosscheck_serial(unsigned n, std::uint64_t samples, std::uint64_t seed);
ReductionCrossCheck reduction_crosscheck(unsigned n, std::uint64_t samples, std::uint64_t seed);

struct RankSweepFailure {
    std::uint64_t m = 0;
    std::uint64_t k = 0;
};

/// For 2 <= m <= m_max coprime to 2Q with omega(m) <= omega_limit, checks
/// m | Ubar_k <=> omega(m) | k for 1 <= k <= k_max. Returns every violation.
std::vector<RankSweepFailure> rank_divisibility_sweep_serial(const LucasParams& params, std::uint64_t m_max,
                                                             std::uint64_t k_max, std::uint64_t omega_limit);
std::vector<RankSweepFailure> rank_divisibility_sweep(const LucasParams& params, std::uint64_t m_max,
                                                      std::uint64_t k_max, std::uint64_t omega_limit);

} // namespace fermat
