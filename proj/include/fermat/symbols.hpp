#pragma once

#include "fermat/lucas.hpp"
#include "fermat/modulus.hpp"

namespace fermat {

/// Jacobi symbol (a/n) for odd n >= 1 by the binary algorithm. Any integer a is
/// accepted; (a/1) = 1.
int jacobi(const BigInt& a, const BigInt& n);

/// (epsilon, sigma, tau) = ((D/n), (R/n), (Q/n)).
struct SymbolTriple {
    int epsilon = 0;
    int sigma = 0;
    int tau = 0;

    friend bool operator==(const SymbolTriple&, const SymbolTriple&) = default;
};

SymbolTriple symbol_triple(const LucasParams& params, const BigInt& n);

/// Symbols of (sqrt(7), 1) over F_n, reached through residues of F_n mod 3 and
/// mod 7 plus quadratic reciprocity instead of a Jacobi evaluation on F_n.
struct FermatSymbolDerivation {
    SymbolTriple triple;
    unsigned f_mod_3 = 0;      // always 2
    unsigned f_mod_7 = 0;      // 3 for even n, 5 for odd n
    bool even_branch = false;  // n even
};

/// Throws PreconditionError for n = 0.
FermatSymbolDerivation fermat_symbols_closed_form(unsigned n);

} // namespace fermat
