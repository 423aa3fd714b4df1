#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fermat/modulus.hpp"
#include "fermat/quadratic_ring.hpp"

namespace fermat {

/// Lehmer parameters P = sqrt(R), Q with discriminant D = R - 4Q.
class LucasParams {
public:
    /// Throws PreconditionError unless R > 0 is a non-square, Q != 0,
    /// gcd(R, Q) = 1 and D != 0.
    LucasParams(std::int64_t r, std::int64_t q);

    /// (sqrt(7), 1): the parameters behind the seed-5 Fermat test.
    static LucasParams standard() { return {7, 1}; }
    /// (sqrt(3), -1): the companion parameters reachable by swapping odd-index values.
    static LucasParams alternate() { return {3, -1}; }

    std::int64_t r() const noexcept { return r_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t d() const noexcept { return r_ - 4 * q_; }

    RingCtx exact_ring() const { return RingCtx(r_); }

    friend bool operator==(const LucasParams&, const LucasParams&) = default;

private:
    std::int64_t r_;
    std::int64_t q_;
};

/// Highest index evaluated without a modulus.
inline constexpr unsigned long kExactCap = 10'000;

/// U_n and V_n as elements of Z[sqrt(R)].
struct UVPair {
    QuadInt u;
    QuadInt v;
};

/// Integer normalizations at one index: the sqrt(R) factor is divided out of
/// U when n is even and out of V when n is odd.
struct LehmerPair {
    BigInt index;
    BigInt u_bar;
    BigInt v_bar;

    friend bool operator==(const LehmerPair&, const LehmerPair&) = default;
};

/// Exact U_n, V_n by the three-term recurrence. n <= kExactCap.
UVPair uv_exact(const LucasParams& params, unsigned long n);

/// Exact U_i, V_i for i = 0..max in one pass. max <= kExactCap.
std::vector<UVPair> uv_exact_prefix(const LucasParams& params, unsigned long max);

/// Throws ParityMismatch when the component that must vanish at this parity does not.
LehmerPair normalize(const LucasParams& params, unsigned long n, const UVPair& uv);

/// normalize(uv_exact_prefix(...)) for rows 0..max.
std::vector<LehmerPair> lehmer_table_exact(const LucasParams& params, unsigned long max);

/// (Ubar_n mod N, Vbar_n mod N) by left-to-right binary doubling; O(log n)
/// multiplications. Requires gcd(N, 2Q) = 1.
LehmerPair uv_mod(const LucasParams& params, const BigInt& n, const Modulus& modulus);

/// Rows 0..max mod N by the stepping recurrence; cheaper than repeated uv_mod for dense ranges.
std::vector<LehmerPair> lehmer_range_mod(const LucasParams& params, unsigned long max,
                                         const Modulus& modulus);

/// Vbar at index 2^(k+1) mod N. For (7, 1) and (3, -1) this is the k-th term of
/// the seed-5 squaring chain S_0 = 5, S_i = S_{i-1}^2 - 2.
BigInt s_from_v(const LucasParams& params, unsigned long k, const Modulus& modulus);

/// 2^(m-1) U_{mn} == sum_i C(m, 2i+1) D^i U_n^(2i+1) V_n^(m-2i-1), exactly.
bool check_sum_identity_u(const LucasParams& params, unsigned long m, unsigned long n);
/// 2^(m-1) V_{mn} == sum_i C(m, 2i) D^i U_n^(2i) V_n^(m-2i), exactly.
bool check_sum_identity_v(const LucasParams& params, unsigned long m, unsigned long n);

/// gcd(Ubar_n, Vbar_n) from exact values.
BigInt gcd_uv(const LucasParams& params, unsigned long n);

/// Whether g divides 2 * Q^n.
bool divides_two_q_pow(const LucasParams& params, unsigned long n, const BigInt& g);

/// The (sqrt(3), -1) pair at index n rebuilt from (sqrt(7), 1) pairs: even
/// indices copy through, odd indices swap Ubar and Vbar. `pairs` is searched by index.
LehmerPair alternate_params_pair(unsigned long n, std::span<const LehmerPair> pairs);

} // namespace fermat
