#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace fermat {

using BigInt = mpz_class;

/// 2^(2^n) + 1.
BigInt fermat_number(unsigned n);

/// Reduce x modulo 2^m + 1 into [0, 2^m] by folding x = hi*2^m + lo to lo - hi.
/// Accepts negative x and values of any size.
void reduce_fermat_form(BigInt& x, std::uint64_t m);

/// Division-based reduction into [0, N). The reference path for reduce_fermat_form.
void reduce_generic(BigInt& x, const BigInt& modulus);

/// Representative of r mod N in (-N/2, N/2].
BigInt balanced(const BigInt& r, const BigInt& modulus);

/// Odd modulus N >= 3 with a fast reduction path when N = 2^m + 1.
class Modulus {
public:
    explicit Modulus(BigInt value);

    static Modulus fermat(unsigned n);

    const BigInt& value() const noexcept { return value_; }

    /// m when the modulus is 2^m + 1, else 0.
    std::uint64_t fermat_exponent() const noexcept { return fermat_exp_; }
    bool is_fermat_form() const noexcept { return fermat_exp_ != 0; }

    /// In-place reduction into [0, N), dispatching to the special path when available.
    void reduce(BigInt& x) const;

    /// (N + 1) / 2, the inverse of 2.
    const BigInt& half() const noexcept { return half_; }

private:
    BigInt value_;
    BigInt half_;
    std::uint64_t fermat_exp_ = 0;
};

} // namespace fermat
