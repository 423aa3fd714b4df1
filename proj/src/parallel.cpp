#include "fermat/parallel.hpp"

#include <exception>
#include <mutex>
#include <numeric>
#include <random>

#include <omp.h>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

// Runs body(i) for i in [0, count) across threads; the first exception is rethrown.
template <class Body>
void parallel_for(std::int64_t count, Body body)
{
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
}

void check_range(unsigned first, unsigned last)
{
    if (first == 0 || first > last)
        throw PreconditionError("classify_fermat_range: need 1 <= first <= last");
}

} // namespace

std::vector<FermatClassification> classify_fermat_range_serial(unsigned first, unsigned last)
{
    check_range(first, last);
    std::vector<FermatClassification> out;
    for (unsigned n = first; n <= last; ++n)
        out.push_back({n, fermat_llt(n), pepin(n)});
    return out;
}

std::vector<FermatClassification> classify_fermat_range(unsigned first, unsigned last)
{
    check_range(first, last);
    const std::int64_t count = last - first + 1;
    // One task per (n, test); the largest n are scheduled first.
    std::vector<FermatClassification> out(count);
    parallel_for(2 * count, [&](std::int64_t t) {
        const auto slot = count - 1 - t / 2;
        const unsigned n = first + static_cast<unsigned>(slot);
        out[slot].n = n;
        if (t % 2 == 0)
            out[slot].llt = fermat_llt(n);
        else
            out[slot].pepin = pepin(n);
    });
    return out;
}

std::vector<std::uint64_t> congruence_primes(const LucasParams& params, std::uint64_t p_limit)
{
    const BigInt qrd = BigInt(static_cast<long>(params.q())) * static_cast<long>(params.r()) *
                     static_cast<long>(params.d());
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 3; p < p_limit; p += 2) {
        if (is_small_prime(p) && !mpz_divisible_ui_p(qrd.get_mpz_t(), p))
            out.push_back(p);
    }
    return out;
}

std::vector<CongruenceReport> congruence_sweep_serial(const LucasParams& params, std::uint64_t p_limit)
{
    std::vector<CongruenceReport> out;
    for (const auto p : congruence_primes(params, p_limit))
        out.push_back(lehmer_congruence_checks(params, p));
    return out;
}

std::vector<CongruenceReport> congruence_sweep(const LucasParams& params, std::uint64_t p_limit)
{
    const auto primes = congruence_primes(params, p_limit);
    std::vector<CongruenceReport> out(primes.size());
    parallel_for(static_cast<std::int64_t>(primes.size()),
                 [&](std::int64_t i) { out[i] = lehmer_congruence_checks(params, primes[i]); });
    return out;
}

BigInt reduction_sample(unsigned n, std::uint64_t seed, std::uint64_t i)
{
    const std::uint64_t m = std::uint64_t(1) << n;
    const BigInt f = fermat_number(n);
    switch (i) {
    case 0: return 0;
    case 1: return 1;
    case 2: return -1;
    case 3: return f - 1;
    case 4: return f;
    case 5: return f + 1;
    case 6: return -f;
    case 7: return (f - 1) * (f - 1);
    case 8: return (f - 1) * (f - 1) - 2;
    case 9: return f * f;
    default: break;
    }

    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
    const std::uint64_t bits = rng() % (2 * m + 3);
    const std::size_t words = static_cast<std::size_t>((bits + 63) / 64);
    std::vector<std::uint64_t> limbs(words);
    for (auto& w : limbs)
        w = rng();
    BigInt x;
    if (words != 0) {
        mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, limbs.data());
        mpz_tdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    }
    if (rng() & 1)
        x = -x;
    return x;
}

namespace {

bool compare_one(unsigned n, std::uint64_t seed, std::uint64_t i, const BigInt& f,
                 ReductionMismatch& mismatch)
{
    const std::uint64_t m = std::uint64_t(1) << n;
    BigInt input = reduction_sample(n, seed, i);
    BigInt special = input;
    BigInt generic = input;
    reduce_fermat_form(special, m);
    reduce_generic(generic, f);
    if (special == generic)
        return true;
    mismatch = {i, std::move(input), std::move(special), std::move(generic)};
    return false;
}

} // namespace

ReductionCrossCheck reduction_crosscheck_serial(unsigned n, std::uint64_t samples, std::uint64_t seed)
{
    const BigInt f = fermat_number(n);
    ReductionCrossCheck out{n, samples, 0, std::nullopt};
    ReductionMismatch mismatch;
    for (std::uint64_t i = 0; i < samples; ++i) {
        if (!compare_one(n, seed, i, f, mismatch)) {
            ++out.mismatches;
            if (!out.first_mismatch)
                out.first_mismatch = mismatch;
        }
    }
    return out;
}

ReductionCrossCheck reduction_crosscheck(unsigned n, std::uint64_t samples, std::uint64_t seed)
{
    const BigInt f = fermat_number(n);
    std::vector<char> ok(samples, 1);
    std::vector<ReductionMismatch> found(samples);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(samples); ++i)
        ok[i] = compare_one(n, seed, static_cast<std::uint64_t>(i), f, found[i]);

    ReductionCrossCheck out{n, samples, 0, std::nullopt};
    for (std::uint64_t i = 0; i < samples; ++i) {
        if (ok[i])
            continue;
        ++out.mismatches;
        if (!out.first_mismatch)
            out.first_mismatch = found[i];
    }
    return out;
}

namespace {

void rank_divisibility_one(const LucasParams& params, std::uint64_t m, std::uint64_t k_max,
                           std::uint64_t omega_limit, std::vector<RankSweepFailure>& failures)
{
    const auto rank = rank_of_apparition(params, m, omega_limit);
    if (!rank.omega)
        return;
    const std::uint64_t omega = *rank.omega;

    using u128 = unsigned __int128;
    const auto mod = [m](std::int64_t v) {
        const auto r = v % static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
    };
    const std::uint64_t r = mod(params.r());
    const std::uint64_t neg_q = (m - mod(params.q())) % m;
    std::uint64_t prev = 0;
    std::uint64_t cur = 1;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        const bool divides = cur == 0;
        if (divides != (k % omega == 0))
            failures.push_back({m, k});
        const std::uint64_t mult = (k % 2 == 0) ? r : 1;
        const auto next = static_cast<std::uint64_t>(
            (static_cast<u128>(mult) * cur + static_cast<u128>(neg_q) * prev) % m);
        prev = cur;
        cur = next;
    }
}

std::vector<std::uint64_t> rank_moduli(const LucasParams& params, std::uint64_t m_max)
{
    const auto q_abs = static_cast<std::uint64_t>(params.q() < 0 ? -params.q() : params.q());
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 3; m <= m_max; m += 2)
        if (std::gcd(m, q_abs) == 1)
            out.push_back(m);
    return out;
}

} // namespace

std::vector<RankSweepFailure> rank_divisibility_sweep_serial(const LucasParams& params, std::uint64_t m_max,
                                                             std::uint64_t k_max, std::uint64_t omega_limit)
{
    std::vector<RankSweepFailure> failures;
    for (const auto m : rank_moduli(params, m_max))
        rank_divisibility_one(params, m, k_max, omega_limit, failures);
    return failures;
}

std::vector<RankSweepFailure> rank_divisibility_sweep(const LucasParams& params, std::uint64_t m_max,
                                                      std::uint64_t k_max, std::uint64_t omega_limit)
{
    const auto moduli = rank_moduli(params, m_max);
    std::vector<std::vector<RankSweepFailure>> per_m(moduli.size());
    parallel_for(static_cast<std::int64_t>(moduli.size()), [&](std::int64_t i) {
        rank_divisibility_one(params, moduli[i], k_max, omega_limit, per_m[i]);
    });
    std::vector<RankSweepFailure> failures;
    for (auto& f : per_m)
        failures.insert(failures.end(), f.begin(), f.end());
    return failures;
}

} // namespace fermat
