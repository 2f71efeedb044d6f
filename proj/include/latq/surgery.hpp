#pragma once

#include <string>

#include "latq/numeric.hpp"

namespace latq {

// Symmetric Alexander polynomial a_0 + sum_{j>0} a_j (T^j + T^{-j}),
// normalised so that the value at 1 equals 1 and the top coefficient is nonzero.
struct AlexanderPoly {
    std::vector<long long> a;  // a[0..N]
    int degree() const { return static_cast<int>(a.size()) - 1; }
};

struct Knot {
    std::string name;
    AlexanderPoly poly;
    static Knot unknot();
    static Knot torus(long long p, long long q);
    static Knot from_exponents(const std::vector<long long>& exponents);
};

AlexanderPoly alexander_from_exponents(const std::vector<long long>& exponents);
AlexanderPoly torus_alexander(long long p, long long q);
// Exponent list recovered from an alternating polynomial (validates the shape).
std::vector<long long> exponents_from_poly(const AlexanderPoly& poly);

long long torsion_from_poly(const AlexanderPoly& poly, long long i);
long long torsion_from_exponents(const std::vector<long long>& exponents, long long i);
// Count of (a,b) >= 0 with a p + b q < N - i.
long long torus_torsion_count(long long p, long long q, long long i);
// Piecewise-linear lower bound for the torsion coefficients: slope k/p on [(k-1)q, kq].
Rat torus_g(long long p, long long q, const Rat& x);

Rat d_lens(long long n, long long i);
Rat d_surgery(const Knot& k, long long coeff, long long i);

struct ObstructionRow {
    long long i;
    long long t;
    Rat d;
    Rat four_d;
};

struct ObstructionReport {
    std::string knot;
    long long n = 0;
    long long delta = 0;  // |H_1| of the surgered manifold
    std::vector<ObstructionRow> rows;
    Rat bound;
    Rat max_four_d;
    bool obstructed = false;
    bool extends_to_smaller = false;  // obstruction propagates to 0 < m <= n
    std::string hypothesis;
    std::string note;
    long long squarefree_r = 0;  // set by the square-free variant
};

// Strict test against the no-torsion bound; also runs the equivalent
// max-4d comparison and insists the two verdicts agree.
ObstructionReport obstruct_integer_surgery(const Knot& k, long long n);
// Variant with bound 1 - 1/r (or 1) for r the square-free part of n;
// no torsion-freeness hypothesis needed.
ObstructionReport obstruct_squarefree(const Knot& k, long long n);

struct TorusRange {
    long long exact_max_n;
    long long closed_form_max_n;
    long long headline_max_n;  // (p-1)(q-1) + 2
};
TorusRange torus_obstruction_range(long long p, long long q);

}  // namespace latq
