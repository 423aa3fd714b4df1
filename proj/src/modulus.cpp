#include "fermat/modulus.hpp"

#include "fermat/errors.hpp"

namespace fermat {

BigInt fermat_number(unsigned n)
{
    if (n > 40)
        throw PreconditionError("fermat_number: index too large to materialize");
    BigInt f;
    mpz_setbit(f.get_mpz_t(), mp_bitcnt_t(1) << n);
    f += 1;
    return f;
}

void reduce_fermat_form(BigInt& x, std::uint64_t m)
{
    // x == sign * |x| (mod 2^m + 1) is maintained across folds.
    int sign = 1;
    if (sgn(x) < 0) {
        x = -x;
        sign = -1;
    }
    BigInt hi;
    while (mpz_sizeinbase(x.get_mpz_t(), 2) > m) {
        mpz_tdiv_q_2exp(hi.get_mpz_t(), x.get_mpz_t(), m);
        mpz_tdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), m);
        x -= hi;
        if (sgn(x) < 0) {
            x = -x;
            sign = -sign;
        }
    }
    // 0 <= x < 2^m here.
    if (sign < 0 && sgn(x) != 0) {
        BigInt n;
        mpz_setbit(n.get_mpz_t(), m);
        n += 1;
        x = n - x;
    }
}

void reduce_generic(BigInt& x, const BigInt& modulus)
{
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
}

BigInt balanced(const BigInt& r, const BigInt& modulus)
{
    BigInt c = r;
    reduce_generic(c, modulus);
    if (2 * c > modulus)
        c -= modulus;
    return c;
}

namespace {

// m such that value == 2^m + 1, or 0.
std::uint64_t detect_fermat_form(const BigInt& value)
{
    BigInt t = value - 1;
    if (sgn(t) <= 0)
        return 0;
    const auto m = mpz_scan1(t.get_mpz_t(), 0);
    if (mpz_popcount(t.get_mpz_t()) != 1 || m == 0)
        return 0;
    return m;
}

} // namespace

Modulus::Modulus(BigInt value) : value_(std::move(value))
{
    if (value_ < 3 || mpz_even_p(value_.get_mpz_t()))
        throw PreconditionError("modulus must be odd and >= 3, got " + value_.get_str());
    half_ = (value_ + 1) / 2;
    fermat_exp_ = detect_fermat_form(value_);
}

Modulus Modulus::fermat(unsigned n)
{
    return Modulus(fermat_number(n));
}

void Modulus::reduce(BigInt& x) const
{
    if (fermat_exp_ != 0) {
        reduce_fermat_form(x, fermat_exp_);
        return;
    }
    reduce_generic(x, value_);
}

} // namespace fermat
