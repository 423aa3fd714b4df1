#include "fermat/primality.hpp"

#include <numeric>
#include <string>

#include "fermat/errors.hpp"

namespace fermat {

std::string_view to_string(Classification c)
{
    return c == Classification::prime ? "prime" : "composite";
}

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::llt_fermat:
        return "llt-fermat";
    case Method::pepin:
        return "pepin";
    case Method::llt_mersenne:
        return "llt-mersenne";
    case Method::rank_certificate:
        return "rank-certificate";
    case Method::trial_division:
        return "trial-division";
    }
    return "unknown";
}

FermatNumber FermatNumber::make(unsigned n)
{
    if (n == 0)
        throw PreconditionError("Fermat index must be >= 1");
    return {n, fermat_number(n)};
}

namespace {

Verdict from_residue(const BigInt& residue, const BigInt& prime_value, Method method)
{
    Verdict v;
    v.method = method;
    if (residue == prime_value) {
        v.classification = Classification::prime;
    } else {
        v.classification = Classification::composite;
        v.witness = residue;
    }
    return v;
}

} // namespace

SSequenceTrace s_sequence(unsigned n, bool keep_trace, const LltOptions& options)
{
    if (n == 0)
        throw PreconditionError("Fermat index must be >= 1");
    if (options.seed != 5 && !options.experimental)
        throw PreconditionError("seed " + std::to_string(options.seed) +
                                " is unproven; pass the experimental flag to use it");
    if (keep_trace && n > kTraceCap)
        throw CapExceeded("s_sequence: tracing is limited to n <= " + std::to_string(kTraceCap));

    const Modulus modulus = Modulus::fermat(n);
    SSequenceTrace out;
    out.n = n;
    out.seed = options.seed;

    BigInt s = static_cast<long>(options.seed);
    modulus.reduce(s);
    const std::uint64_t steps = (std::uint64_t(1) << n) - 2;
    if (keep_trace) {
        out.residues.reserve(steps + 1);
        out.residues.push_back(s);
    }
    for (std::uint64_t i = 0; i < steps; ++i) {
        mpz_mul(s.get_mpz_t(), s.get_mpz_t(), s.get_mpz_t());
        s -= 2;
        modulus.reduce(s);
        if (keep_trace)
            out.residues.push_back(s);
    }
    if (!keep_trace)
        out.residues.push_back(s);
    out.final_residue = std::move(s);
    return out;
}

Verdict fermat_llt(unsigned n, const LltOptions& options)
{
    const SSequenceTrace trace = s_sequence(n, false, options);
    Verdict v = from_residue(trace.final_residue, BigInt(0), Method::llt_fermat);
    v.proven = options.seed == 5;
    return v;
}

Verdict pepin(unsigned n)
{
    const FermatNumber f = FermatNumber::make(n);
    BigInt e;
    mpz_setbit(e.get_mpz_t(), (mp_bitcnt_t(1) << n) - 1);
    BigInt r;
    const BigInt three = 3;
    mpz_powm(r.get_mpz_t(), three.get_mpz_t(), e.get_mpz_t(), f.value.get_mpz_t());
    return from_residue(r, f.value - 1, Method::pepin);
}

bool is_small_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    const auto f = trial_division(n, n);
    return f && *f == n;
}

Verdict mersenne_llt(unsigned long q)
{
    if (q < 3 || !is_small_prime(q))
        throw PreconditionError("Mersenne exponent must be an odd prime, got " + std::to_string(q));
    BigInt m;
    mpz_setbit(m.get_mpz_t(), q);
    m -= 1;
    BigInt s = 4;
    for (unsigned long i = 0; i < q - 2; ++i) {
        s *= s;
        s -= 2;
        reduce_generic(s, m);
    }
    return from_residue(s, BigInt(0), Method::llt_mersenne);
}

RankResult rank_of_apparition(const LucasParams& params, std::uint64_t m, std::uint64_t cap)
{
    if (m < 2)
        throw PreconditionError("rank_of_apparition: m must be >= 2");
    const auto q_abs = static_cast<std::uint64_t>(params.q() < 0 ? -params.q() : params.q());
    if (std::gcd(m, q_abs) != 1)
        throw PreconditionError("rank_of_apparition: gcd(m, Q) must be 1");

    using u128 = unsigned __int128;
    const auto reduce_signed = [m](std::int64_t v) {
        const auto r = v % static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
    };
    const std::uint64_t r = reduce_signed(params.r());
    // subtracting Q*x is adding (m - Q mod m)*x
    const std::uint64_t neg_q = (m - reduce_signed(params.q())) % m;

    RankResult out{m, std::nullopt, cap};
    std::uint64_t prev = 0; // Ubar_0
    std::uint64_t cur = 1;  // Ubar_1
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (cur == 0) {
            out.omega = k;
            return out;
        }
        const std::uint64_t mult = (k % 2 == 0) ? r : 1;
        const auto next = static_cast<std::uint64_t>(
            (static_cast<u128>(mult) * cur + static_cast<u128>(neg_q) * prev) % m);
        prev = cur;
        cur = next;
    }
    return out;
}

Verdict certify_via_rank(const LucasParams& params, const BigInt& n,
                         std::span<const BigInt> n_minus_1_primes)
{
    if (n < 3)
        throw PreconditionError("certify_via_rank: N must be >= 3");
    BigInt g;
    const BigInt two_qrd = BigInt(2) * static_cast<long>(params.q()) *
                           static_cast<long>(params.r()) * static_cast<long>(params.d());
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), two_qrd.get_mpz_t());
    if (g != 1)
        throw PreconditionError("certify_via_rank: gcd(N, 2QRD) must be 1");

    const BigInt n_minus_1 = n - 1;
    std::vector<BigInt> primes(n_minus_1_primes.begin(), n_minus_1_primes.end());
    if (primes.empty()) {
        if (mpz_popcount(n_minus_1.get_mpz_t()) != 1)
            throw PreconditionError("certify_via_rank: factorization of N - 1 required");
        primes.emplace_back(2);
    }
    BigInt rest = n_minus_1;
    for (const auto& q : primes) {
        if (q < 2 || !mpz_divisible_p(n_minus_1.get_mpz_t(), q.get_mpz_t()) ||
            mpz_probab_prime_p(q.get_mpz_t(), 30) == 0)
            throw PreconditionError("certify_via_rank: " + q.get_str() + " is not a prime divisor of N - 1");
        mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
    }
    if (rest != 1)
        throw PreconditionError("certify_via_rank: supplied primes do not factor N - 1 completely");

    const Modulus modulus(n);
    const LehmerPair top = uv_mod(params, n_minus_1, modulus);
    Verdict v;
    v.method = Method::rank_certificate;
    if (sgn(top.u_bar) != 0) {
        // A prime N divides Ubar_{N - sigma eps}; the N - 1 index only applies when sigma eps = +1.
        const SymbolTriple s = symbol_triple(params, n);
        if (s.sigma * s.epsilon != 1)
            throw Inconclusive("certify_via_rank: (R/N)(D/N) = -1, so the N - 1 test does not apply");
        v.classification = Classification::composite;
        v.witness = top.u_bar;
        return v;
    }
    for (const auto& q : primes) {
        const LehmerPair sub = uv_mod(params, n_minus_1 / q, modulus);
        if (sgn(sub.u_bar) == 0)
            throw Inconclusive("certify_via_rank: Ubar_{(N-1)/" + q.get_str() +
                               "} = 0 (mod N); the certificate proves nothing");
    }
    v.classification = Classification::prime;
    return v;
}

namespace {

CheckResult congruence(std::string name, const BigInt& value, const BigInt& expected,
                       const BigInt& modulus)
{
    BigInt diff = value - expected;
    const bool ok = mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t()) != 0;
    return {std::move(name), ok,
            "got " + balanced(value, modulus).get_str() + ", want " + expected.get_str()};
}

} // namespace

CongruenceReport lehmer_congruence_checks(const LucasParams& params, std::uint64_t p)
{
    if (p < 3 || !is_small_prime(p))
        throw PreconditionError("lehmer_congruence_checks: p must be an odd prime");
    const BigInt qrd = BigInt(static_cast<long>(params.q())) * static_cast<long>(params.r()) *
                     static_cast<long>(params.d());
    if (mpz_divisible_ui_p(qrd.get_mpz_t(), p))
        throw PreconditionError("lehmer_congruence_checks: p divides QRD");

    CongruenceReport out;
    out.p = p;
    const BigInt pb(static_cast<unsigned long>(p));
    out.symbols = symbol_triple(params, pb);
    const int eps = out.symbols.epsilon;
    const int sigma = out.symbols.sigma;
    const int tau = out.symbols.tau;
    const int se = sigma * eps;
    const Modulus modulus(pb);
    const auto at = [&](std::uint64_t i) { return uv_mod(params, BigInt(static_cast<unsigned long>(i)), modulus); };

    const std::string ps = std::to_string(p);
    const LehmerPair at_p = at(p);
    out.checks.push_back(congruence("Ubar_p = eps (p=" + ps + ")", at_p.u_bar, eps, pb));
    out.checks.push_back(congruence("Vbar_p = sigma (p=" + ps + ")", at_p.v_bar, sigma, pb));

    const std::uint64_t shifted = se == 1 ? p - 1 : p + 1;
    const LehmerPair at_shift = at(shifted);
    out.checks.push_back(congruence("p | Ubar_{p-sigma*eps} (p=" + ps + ")", at_shift.u_bar, 0, pb));
    const BigInt q_factor = se == 1 ? BigInt(1) : BigInt(static_cast<long>(params.q()));
    out.checks.push_back(congruence("Vbar_{p-sigma*eps} = 2 sigma Q^((1-sigma*eps)/2) (p=" + ps + ")",
                                    at_shift.v_bar, 2 * sigma * q_factor, pb));

    const LehmerPair at_half = at(shifted / 2);
    if (sigma == -tau)
        out.checks.push_back(congruence("p | Vbar_{(p-sigma*eps)/2} (p=" + ps + ")", at_half.v_bar, 0, pb));
    else
        out.checks.push_back(congruence("p | Ubar_{(p-sigma*eps)/2} (p=" + ps + ")", at_half.u_bar, 0, pb));
    return out;
}

AppendixReport appendix_residues(const LucasParams& params, unsigned n)
{
    if (n < 2 || n > 4)
        throw PreconditionError("appendix_residues: n must be 2, 3 or 4");
    const Modulus modulus = Modulus::fermat(n);
    const BigInt& f = modulus.value();

    AppendixReport out;
    out.n = n;
    std::vector<LehmerPair> rows;
    for (int off = -5; off <= 3; ++off)
        rows.push_back(uv_mod(params, f + off, modulus));

    const auto label = [](const char* which, int off) {
        std::string s = std::string(which) + "_{F_n";
        if (off != 0)
            s += (off > 0 ? "+" : "-") + std::to_string(off > 0 ? off : -off);
        return s + "}";
    };
    for (int k = 0; k < 9; ++k)
        out.checks.push_back(congruence(label("Ubar", k - 5), rows[k].u_bar, kAppendixU[k], f));
    for (int k = 0; k < 9; ++k)
        out.checks.push_back(congruence(label("Vbar", k - 5), rows[k].v_bar, kAppendixV[k], f));
    return out;
}

std::optional<std::uint64_t> trial_division(std::uint64_t n, std::uint64_t bound)
{
    if (n < 2)
        throw PreconditionError("trial_division: n must be >= 2");
    for (std::uint64_t d = 2; d <= bound && d <= n / d; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0)
            return d;
    }
    if (n <= bound)
        return n;
    return std::nullopt;
}

} // namespace fermat
