#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latq {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a configured resource cap is exceeded (CLI exit code 3).
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

// num/den in lowest terms with positive denominator.
Rat make_rat(Int num, Int den);

Int rat_floor(const Rat& q);
// Nearest integer, ties rounded up.
Int rat_round(const Rat& q);
bool rat_is_integer(const Rat& q);
// Representative of q mod 1 in [0,1).
Rat mod1(const Rat& q);
// Representative of q mod m in [0,m); m > 0.
Rat mod_reduce(const Rat& q, const Rat& m);
// True iff q/m is an integer.
bool divides_rat(const Rat& m, const Rat& q);
// "a" or "a/b".
std::string rat_str(const Rat& q);

bool is_prime(const Int& n);
Int mod_pow(const Int& base, const Int& exp, const Int& mod);
Int inv_mod(const Int& a, const Int& m);
// a a nonzero residue mod an odd prime p.
bool is_quadratic_residue(const Int& a, const Int& p);
// Smaller square root of a mod q for q = 3 (mod 4), a a residue.
Int sqrt_mod_3mod4(const Int& a, const Int& q);
int valuation(Int n, const Int& p);
// Trial division; |n| must fit in 64 bits.
std::vector<std::pair<Int, int>> factorize(Int n);
Int squarefree_part(const Int& n);

}  // namespace latq
