#ifndef KNOTCONC_NUMERIC_HPP
#define KNOTCONC_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "knotconc/errors.hpp"

namespace knotconc {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int abs(const Int& a) { return ::abs(a); }
inline Rat abs(const Rat& a) { return ::abs(a); }
inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// q = a/b, asserting the division is exact.
Int exact_div(const Int& a, const Int& b);

Int pow(const Int& base, unsigned long exp);
Rat pow(const Rat& base, long exp);

// Canonicalized num/den rational. den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

// Rationals render as "num/den", or just "num" when the denominator is 1.
// This is the only textual form the library ever emits for a rational.
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s); // inverse of rat_str

bool fits_int64(const Int& a);
std::int64_t to_int64(const Int& a); // throws when out of range

bool is_prime(const Int& n);

// n = q^r for a prime q and r >= 1? On success returns {q, r}.
struct PrimePower {
    Int prime;
    unsigned long exponent;
};
bool prime_power_decompose(const Int& n, PrimePower& out);

// Distinct prime divisors of n >= 2, ascending (trial division; desk scale).
std::vector<Int> prime_divisors(Int n);

// Primes in [2, bound], ascending.
std::vector<Int> primes_up_to(const Int& bound);

bool is_perfect_square(const Int& n);
Int isqrt(const Int& n);

} // namespace knotconc

#endif
