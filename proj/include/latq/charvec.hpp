#pragma once

#include "latq/gram.hpp"

namespace latq {

// Dual-lattice element in dual-basis coordinates together with its exact square.
struct Covector {
    std::vector<long long> coords;
    Rat square;
};

struct BoundReport {
    Rat min_square;
    Rat bound;
    Int delta;
    bool delta_odd;
    bool extremal;
    Covector minimizer;
};

// diag(Q) mod 2; the characteristic coset is this vector + 2 Z^n.
std::vector<int> characteristic_parity(const SymGram& g);

// Characteristic covector of globally minimal square (positive-definite forms).
// Among all minimizers returns the lexicographically smallest coordinate vector
// whose first nonzero entry is positive.
Covector min_characteristic(const SymGram& g);

// Exhaustive minimum over coset coordinates with |c_i| <= box (test oracle).
Covector brute_force_min(const SymGram& g, long long box);

BoundReport check_main_bound(const SymGram& g);

// True iff g is isometric to diag(1,...,1,delta).
bool is_extremal_form(const SymGram& g);

// Residue class of characteristic squares mod 4/delta, in [0, 4/delta).
Rat congruence_mod4(const SymGram& g);
// Residue class mod 8/delta for odd |det|, via the linking decomposition.
Rat congruence_mod8(const SymGram& g);

struct SublemmaWitness {
    std::vector<long long> k;  // one entry for variant 1, two for variants 2 and 3
    std::vector<long long> l;
    long long value;  // F at the witness
    long long limit;  // 2 p^2 or 4 q^2
};

// Finds small-value witnesses for the quadratic glueing inequalities:
// F < 2 p^2 (variant 1) or F < 4 q^2 (variants 2 and 3); a witness always
// exists for valid inputs.
// variant 1: p = 1 (mod 4), s has 3 odd entries, t empty.
// variant 2: q = 3 (mod 4), s has 6 odd entries, t has 6 even entries.
// variant 3: as variant 2 but s[5] = 0 and t[5] odd.
SublemmaWitness sublemma_witness(int variant, long long prime, const std::vector<long long>& s,
                                 const std::vector<long long>& t);

}  // namespace latq
