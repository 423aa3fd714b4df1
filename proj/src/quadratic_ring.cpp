#include "fermat/quadratic_ring.hpp"

#include "fermat/errors.hpp"

namespace fermat {

std::ostream& operator<<(std::ostream& os, const QuadInt& x)
{
    return os << '(' << x.a << ", " << x.b << ')';
}

namespace {

void check_radicand(const BigInt& r)
{
    if (sgn(r) <= 0)
        throw PreconditionError("radicand R must be positive");
    if (mpz_perfect_square_p(r.get_mpz_t()))
        throw PreconditionError("radicand R must not be a perfect square, got " + r.get_str());
}

} // namespace

RingCtx::RingCtx(BigInt r) : r_(std::move(r))
{
    check_radicand(r_);
}

RingCtx::RingCtx(BigInt r, Modulus modulus) : r_(std::move(r)), modulus_(std::move(modulus))
{
    check_radicand(r_);
}

void RingCtx::reduce_in_place(BigInt& x) const
{
    if (modulus_)
        modulus_->reduce(x);
}

QuadInt RingCtx::reduce(QuadInt x) const
{
    reduce_in_place(x.a);
    reduce_in_place(x.b);
    return x;
}

QuadInt qadd(const RingCtx& ctx, const QuadInt& x, const QuadInt& y)
{
    return ctx.reduce({x.a + y.a, x.b + y.b});
}

QuadInt qsub(const RingCtx& ctx, const QuadInt& x, const QuadInt& y)
{
    return ctx.reduce({x.a - y.a, x.b - y.b});
}

QuadInt qneg(const RingCtx& ctx, const QuadInt& x)
{
    return ctx.reduce({-x.a, -x.b});
}

QuadInt qmul(const RingCtx& ctx, const QuadInt& x, const QuadInt& y)
{
    BigInt bd = x.b * y.b;
    QuadInt out{x.a * y.a, x.a * y.b};
    out.b += x.b * y.a;
    if (ctx.modulus())
        ctx.modulus()->reduce(bd);
    out.a += bd * ctx.r();
    return ctx.reduce(std::move(out));
}

QuadInt qsqr(const RingCtx& ctx, const QuadInt& x)
{
    BigInt bb = x.b * x.b;
    if (ctx.modulus())
        ctx.modulus()->reduce(bb);
    QuadInt out{x.a * x.a + bb * ctx.r(), 2 * x.a * x.b};
    return ctx.reduce(std::move(out));
}

QuadInt qscale(const RingCtx& ctx, const BigInt& k, const QuadInt& x)
{
    return ctx.reduce({k * x.a, k * x.b});
}

QuadInt qpow(const RingCtx& ctx, const QuadInt& x, unsigned long e)
{
    QuadInt acc = ctx.reduce({1, 0});
    QuadInt base = ctx.reduce(x);
    while (e != 0) {
        if (e & 1)
            acc = qmul(ctx, acc, base);
        e >>= 1;
        if (e != 0)
            base = qsqr(ctx, base);
    }
    return acc;
}

QuadInt half_mod(const BigInt& modulus, const QuadInt& x)
{
    if (mpz_even_p(modulus.get_mpz_t()) || modulus < 3)
        throw PreconditionError("half_mod: modulus must be odd and >= 3, got " + modulus.get_str());
    const BigInt inv2 = (modulus + 1) / 2;
    QuadInt out{x.a * inv2, x.b * inv2};
    reduce_generic(out.a, modulus);
    reduce_generic(out.b, modulus);
    return out;
}

} // namespace fermat
