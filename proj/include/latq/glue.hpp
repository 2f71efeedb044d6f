#pragma once

#include <optional>

#include "latq/gram.hpp"
#include "latq/linking.hpp"

namespace latq {

struct Overlattice {
    SymGram gram;
    RatMat basis_in_parent;  // rows = basis vectors in parent coordinates
    Int index;               // [new : parent]
};

struct GlueStep {
    Int prime;
    Int index;                              // p, or q^2 for the quaternionic steps
    std::vector<std::vector<Rat>> vectors;  // glue vectors in stage-ambient coordinates
};

struct GlueChain {
    int stage = 1;
    std::vector<GlueStep> steps;
};

// Row-action matrices (x -> x * m) of the two generating isometries.
struct QuaternionAction {
    RatMat i_map, j_map;
};

// Adjoin a dual vector v with v^2 in Z and p v in L; index-p overlattice.
Overlattice adjoin(const SymGram& g, const std::vector<Int>& v_dual, const Int& p);

// Stage 1: glue inside one copy until the linking pairing has only
// prime-order cyclic blocks and |det| is odd or twice odd.
std::pair<Overlattice, GlueChain> chain_prime_linking(const SymGram& g);

// Stage 2: glue g + g across the two copies at p = 2 and p = 1 (mod 4);
// the remaining blocks sit at primes = 3 (mod 4) and appear twice.
std::pair<Overlattice, GlueChain> complex_glue(const SymGram& g);

// Stage 3: glue g2 + g2 pairwise at primes q = 3 (mod 4) with index q^2
// steps; the result is unimodular.
std::pair<Overlattice, GlueChain> quaternionic_glue(const SymGram& g2);

struct EmbedFourResult {
    SymGram unimodular;  // rank 4n, |det| = 1
    RatMat embedding;    // rows = basis of U in the coordinates of L^4
    Int index;           // = delta; the group index [U : L^4] is delta^2
    Int group_index;
    QuaternionAction action;  // transported to the basis of U
    GlueChain stage1, stage2, stage3;
};
EmbedFourResult embed_four_copies(const SymGram& g);

struct EmbedTwoResult {
    bool ok = false;
    Int certificate_prime = 0;  // offending prime when !ok
    std::optional<Overlattice> lattice;
    GlueChain stage1, stage2;
    std::vector<GlueStep> cross_steps;  // q = 3 (mod 4) steps pairing the two copies
};
EmbedTwoResult embed_two_copies(const SymGram& g);

// Smallest nonnegative a with a^2 = -1 mod p; p = 2 or p = 1 (mod 4).
Int sqrt_minus_one(const Int& p);
// (a, b) with a^2 + b^2 = -1 mod q built from the smallest positive nonresidue.
std::pair<Int, Int> sum_two_squares_neg_one(const Int& q);

// True iff the maps are integral isometries satisfying ii = jj = -1, ij = -ji.
bool verify_quaternionic(const SymGram& u, const QuaternionAction& action);

}  // namespace latq
