#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/report.hpp"

namespace fermat {

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const { return fermat::all_pass(checks); }
};

struct VerifyOptions {
    // identities
    unsigned long doubling_max = 100;
    unsigned long m_max = 9;
    unsigned long n_max = 9;
    unsigned long gcd_max = 200;
    unsigned long parity_max = 200;
    unsigned long bridge_k_max = 12;
    // congruences
    std::uint64_t p_limit = 2000;
    // appendix
    std::vector<unsigned> appendix_ns{2, 3, 4};
    unsigned long alternate_max = 60;
    // rank
    std::uint64_t rank_m_max = 200;
    std::uint64_t rank_k_max = 2000;
    std::uint64_t rank_omega_limit = 5000;
    unsigned long rank_exact_max = 60;
    std::uint64_t existence_m_max = 500;
    std::uint64_t existence_cap = 1'000'000;
    // traces
    unsigned equivalence_n_max = 8;
};

inline constexpr std::array<std::string_view, 5> kSuiteNames{"identities", "congruences", "appendix",
                                                              "rank", "traces"};

SuiteReport verify_identities(const VerifyOptions& options = {});
SuiteReport verify_congruences(const VerifyOptions& options = {});
SuiteReport verify_appendix(const VerifyOptions& options = {});
SuiteReport verify_rank(const VerifyOptions& options = {});
SuiteReport verify_traces(const VerifyOptions& options = {});

/// Dispatch by name; nullopt for an unknown suite.
std::optional<SuiteReport> run_suite(std::string_view name, const VerifyOptions& options = {});

/// Seed-5 chains S_0 .. S_{2^n - 2} mod F_n for n = 2, 3, 4, as canonical residues.
const std::vector<long>& reference_trace(unsigned n);

} // namespace fermat
