#pragma once

#include <optional>
#include <ostream>

#include "fermat/modulus.hpp"

namespace fermat {

/// a + b*sqrt(R) for the R fixed by the surrounding RingCtx.
struct QuadInt {
    BigInt a;
    BigInt b;

    QuadInt() = default;
    QuadInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

    /// sqrt(R) itself.
    static QuadInt root() { return {0, 1}; }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

    friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a == y.a && x.b == y.b; }
};

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

/// Z[sqrt(R)], optionally reduced modulo an odd N.
class RingCtx {
public:
    /// Exact ring. R must be positive and not a perfect square.
    explicit RingCtx(BigInt r);
    RingCtx(BigInt r, Modulus modulus);

    const BigInt& r() const noexcept { return r_; }
    const std::optional<Modulus>& modulus() const noexcept { return modulus_; }

    /// Canonical form: components in [0, N) under a modulus, unchanged otherwise.
    QuadInt reduce(QuadInt x) const;

private:
    void reduce_in_place(BigInt& x) const;

    BigInt r_;
    std::optional<Modulus> modulus_;
};

QuadInt qadd(const RingCtx& ctx, const QuadInt& x, const QuadInt& y);
QuadInt qsub(const RingCtx& ctx, const QuadInt& x, const QuadInt& y);
QuadInt qneg(const RingCtx& ctx, const QuadInt& x);

/// (a, b) * (c, d) = (ac + bdR, ad + bc).
QuadInt qmul(const RingCtx& ctx, const QuadInt& x, const QuadInt& y);
QuadInt qsqr(const RingCtx& ctx, const QuadInt& x);
QuadInt qscale(const RingCtx& ctx, const BigInt& k, const QuadInt& x);
QuadInt qpow(const RingCtx& ctx, const QuadInt& x, unsigned long e);

/// y with 2y == x (mod N) componentwise; N must be odd.
QuadInt half_mod(const BigInt& modulus, const QuadInt& x);

} // namespace fermat
