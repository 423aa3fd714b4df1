#include "fermat/lucas.hpp"

#include <numeric>
#include <string>

#include "fermat/errors.hpp"

namespace fermat {

LucasParams::LucasParams(std::int64_t r, std::int64_t q) : r_(r), q_(q)
{
    if (r <= 0)
        throw PreconditionError("R must be positive");
    if (mpz_perfect_square_p(BigInt(static_cast<long>(r)).get_mpz_t()))
        throw PreconditionError("R must not be a perfect square");
    if (q == 0)
        throw PreconditionError("Q must be nonzero");
    if (std::gcd(r, q) != 1)
        throw PreconditionError("R and Q must be coprime");
    if (d() == 0)
        throw PreconditionError("discriminant D = R - 4Q must be nonzero");
}

namespace {

BigInt big(std::int64_t v)
{
    return BigInt(static_cast<long>(v));
}

void check_exact_cap(unsigned long n, const char* what)
{
    if (n > kExactCap)
        throw CapExceeded(std::string(what) + ": index " + std::to_string(n) +
                          " exceeds exact cap " + std::to_string(kExactCap));
}

// sqrt(R) * (a + b sqrt(R)) = bR + a sqrt(R)
QuadInt times_root(const QuadInt& x, const BigInt& r)
{
    return {x.b * r, x.a};
}

QuadInt step(const QuadInt& cur, const QuadInt& prev, const BigInt& r, const BigInt& q)
{
    QuadInt next = times_root(cur, r);
    next.a -= q * prev.a;
    next.b -= q * prev.b;
    return next;
}

} // namespace

std::vector<UVPair> uv_exact_prefix(const LucasParams& params, unsigned long max)
{
    check_exact_cap(max, "uv_exact");
    const BigInt r = big(params.r());
    const BigInt q = big(params.q());

    std::vector<UVPair> out;
    out.reserve(max + 1);
    out.push_back({{0, 0}, {2, 0}});
    if (max == 0)
        return out;
    out.push_back({{1, 0}, QuadInt::root()});
    for (unsigned long k = 1; k < max; ++k)
        out.push_back({step(out[k].u, out[k - 1].u, r, q), step(out[k].v, out[k - 1].v, r, q)});
    return out;
}

UVPair uv_exact(const LucasParams& params, unsigned long n)
{
    check_exact_cap(n, "uv_exact");
    const BigInt r = big(params.r());
    const BigInt q = big(params.q());

    UVPair prev{{0, 0}, {2, 0}};
    if (n == 0)
        return prev;
    UVPair cur{{1, 0}, QuadInt::root()};
    for (unsigned long k = 1; k < n; ++k) {
        UVPair next{step(cur.u, prev.u, r, q), step(cur.v, prev.v, r, q)};
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

LehmerPair normalize(const LucasParams&, unsigned long n, const UVPair& uv)
{
    const bool even = n % 2 == 0;
    // even n: U = Ubar sqrt(R), V = Vbar; odd n: U = Ubar, V = Vbar sqrt(R)
    const BigInt& u_drop = even ? uv.u.a : uv.u.b;
    const BigInt& v_drop = even ? uv.v.b : uv.v.a;
    if (sgn(u_drop) != 0 || sgn(v_drop) != 0)
        throw ParityMismatch("normalize: (U, V) at index " + std::to_string(n) +
                             " has a nonzero component where its parity requires zero");
    return {BigInt(n), even ? uv.u.b : uv.u.a, even ? uv.v.a : uv.v.b};
}

std::vector<LehmerPair> lehmer_table_exact(const LucasParams& params, unsigned long max)
{
    const auto uv = uv_exact_prefix(params, max);
    std::vector<LehmerPair> out;
    out.reserve(uv.size());
    for (unsigned long i = 0; i < uv.size(); ++i)
        out.push_back(normalize(params, i, uv[i]));
    return out;
}

namespace {

void check_modulus_for(const LucasParams& params, const Modulus& modulus)
{
    BigInt g;
    const BigInt q = big(params.q());
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), modulus.value().get_mpz_t());
    if (g != 1)
        throw PreconditionError("modulus " + modulus.value().get_str() + " shares a factor with 2Q");
}

// Running Q^k mod N. Q = +-1 collapses to a sign.
class QPower {
public:
    QPower(std::int64_t q, const Modulus& modulus) : q_(q), modulus_(modulus)
    {
        if (q != 1 && q != -1) {
            q_mod_ = big(q);
            modulus_.reduce(q_mod_);
        }
    }

    void square()
    {
        if (unit())
            sign_ = 1;
        else {
            value_ *= value_;
            modulus_.reduce(value_);
        }
    }

    void times_q()
    {
        if (unit())
            sign_ *= static_cast<int>(q_);
        else {
            value_ *= q_mod_;
            modulus_.reduce(value_);
        }
    }

    // x -= 2 Q^k
    void subtract_twice(BigInt& x) const
    {
        if (unit())
            x -= 2 * sign_;
        else
            x -= 2 * value_;
    }

private:
    bool unit() const { return q_ == 1 || q_ == -1; }

    std::int64_t q_;
    const Modulus& modulus_;
    BigInt q_mod_;
    BigInt value_ = 1;
    int sign_ = 1;
};

} // namespace

LehmerPair uv_mod(const LucasParams& params, const BigInt& n, const Modulus& modulus)
{
    if (sgn(n) < 0)
        throw PreconditionError("uv_mod: negative index");
    check_modulus_for(params, modulus);

    const BigInt r = big(params.r());
    const BigInt d = big(params.d());
    const BigInt& half = modulus.half();

    BigInt u = 0;
    BigInt v = 2;
    bool odd = false; // parity of the current index k
    QPower qk(params.q(), modulus);
    BigInt t;

    const auto bits = sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
    for (auto i = bits; i-- > 0;) {
        // k -> 2k: Ubar_2k = Ubar_k Vbar_k, Vbar_2k = Vbar_k^2 (times R for odd k) - 2Q^k
        t = v * v;
        modulus.reduce(t);
        if (odd) {
            t *= r;
        }
        qk.subtract_twice(t);
        u *= v;
        modulus.reduce(u);
        v = std::move(t);
        modulus.reduce(v);
        qk.square();
        odd = false;

        if (mpz_tstbit(n.get_mpz_t(), i)) {
            // k -> k+1 with k even: 2Ubar' = R Ubar + Vbar, 2Vbar' = D Ubar + Vbar
            BigInt nu = r * u + v;
            BigInt nv = d * u + v;
            nu *= half;
            nv *= half;
            modulus.reduce(nu);
            modulus.reduce(nv);
            u = std::move(nu);
            v = std::move(nv);
            qk.times_q();
            odd = true;
        }
    }
    return {n, u, v};
}

std::vector<LehmerPair> lehmer_range_mod(const LucasParams& params, unsigned long max,
                                         const Modulus& modulus)
{
    check_modulus_for(params, modulus);
    const BigInt r = big(params.r());
    const BigInt q = big(params.q());

    std::vector<LehmerPair> out;
    out.reserve(max + 1);
    out.push_back({BigInt(0), 0, 2});
    if (max == 0)
        return out;
    out.push_back({BigInt(1), 1, 1});
    // Ubar_{k+1} = (R if k even else 1) Ubar_k - Q Ubar_{k-1}; Vbar uses the opposite parity.
    for (unsigned long k = 1; k < max; ++k) {
        const bool even = k % 2 == 0;
        BigInt u = even ? r * out[k].u_bar : out[k].u_bar;
        BigInt v = even ? out[k].v_bar : r * out[k].v_bar;
        u -= q * out[k - 1].u_bar;
        v -= q * out[k - 1].v_bar;
        modulus.reduce(u);
        modulus.reduce(v);
        out.push_back({BigInt(k + 1), std::move(u), std::move(v)});
    }
    return out;
}

BigInt s_from_v(const LucasParams& params, unsigned long k, const Modulus& modulus)
{
    BigInt index;
    mpz_setbit(index.get_mpz_t(), k + 1);
    return uv_mod(params, index, modulus).v_bar;
}

namespace {

BigInt binomial(unsigned long m, unsigned long k)
{
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), m, k);
    return out;
}

void check_identity_range(unsigned long m, unsigned long n)
{
    if (m == 0)
        throw PreconditionError("sum identity: m must be >= 1");
    if (n != 0 && m > kExactCap / n)
        throw CapExceeded("sum identity: m*n exceeds exact cap");
}

// sum_{i=0}^{floor(m/2)} C(m, 2i + offset) D^i U^(2i+offset) V^(m-2i-offset)
QuadInt binomial_sum(const LucasParams& params, unsigned long m, const UVPair& at_n,
                     unsigned long offset)
{
    const RingCtx ring = params.exact_ring();
    const BigInt d = big(params.d());
    QuadInt sum{0, 0};
    BigInt d_pow = 1;
    for (unsigned long i = 0; 2 * i + offset <= m; ++i) {
        const unsigned long j = 2 * i + offset;
        QuadInt term = qmul(ring, qpow(ring, at_n.u, j), qpow(ring, at_n.v, m - j));
        term = qscale(ring, binomial(m, j) * d_pow, term);
        sum = qadd(ring, sum, term);
        d_pow *= d;
    }
    return sum;
}

QuadInt times_pow2(const QuadInt& x, unsigned long e)
{
    QuadInt out = x;
    mpz_mul_2exp(out.a.get_mpz_t(), out.a.get_mpz_t(), e);
    mpz_mul_2exp(out.b.get_mpz_t(), out.b.get_mpz_t(), e);
    return out;
}

} // namespace

bool check_sum_identity_u(const LucasParams& params, unsigned long m, unsigned long n)
{
    check_identity_range(m, n);
    const UVPair at_n = uv_exact(params, n);
    const UVPair at_mn = uv_exact(params, m * n);
    return times_pow2(at_mn.u, m - 1) == binomial_sum(params, m, at_n, 1);
}

bool check_sum_identity_v(const LucasParams& params, unsigned long m, unsigned long n)
{
    check_identity_range(m, n);
    const UVPair at_n = uv_exact(params, n);
    const UVPair at_mn = uv_exact(params, m * n);
    return times_pow2(at_mn.v, m - 1) == binomial_sum(params, m, at_n, 0);
}

BigInt gcd_uv(const LucasParams& params, unsigned long n)
{
    const LehmerPair p = normalize(params, n, uv_exact(params, n));
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.u_bar.get_mpz_t(), p.v_bar.get_mpz_t());
    return g;
}

bool divides_two_q_pow(const LucasParams& params, unsigned long n, const BigInt& g)
{
    if (sgn(g) == 0)
        return false;
    BigInt target;
    const BigInt q = abs(big(params.q()));
    mpz_pow_ui(target.get_mpz_t(), q.get_mpz_t(), n);
    target *= 2;
    return mpz_divisible_p(target.get_mpz_t(), g.get_mpz_t()) != 0;
}

LehmerPair alternate_params_pair(unsigned long n, std::span<const LehmerPair> pairs)
{
    const BigInt index(n);
    for (const auto& p : pairs) {
        if (p.index != index)
            continue;
        if (n % 2 == 0)
            return p;
        return {p.index, p.v_bar, p.u_bar};
    }
    throw PreconditionError("alternate_params_pair: no pair at index " + std::to_string(n));
}

} // namespace fermat
