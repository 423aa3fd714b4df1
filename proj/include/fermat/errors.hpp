#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

// Input violates an operation's documented precondition (even modulus,
// n = 0 for a Fermat index, gcd condition, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact (modulus-free) evaluation requested beyond the index cap.
class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// A (U, V) pair whose vanishing component is nonzero for its index parity.
class ParityMismatch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Rank certificate where U_{N-1} vanishes but some U_{(N-1)/q} does too.
class Inconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fermat
