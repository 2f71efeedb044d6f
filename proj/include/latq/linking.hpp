#pragma once

#include <complex>

#include "latq/gram.hpp"

namespace latq {

struct DiscriminantGroup {
    std::vector<Int> orders;                   // d_1 | d_2 | ..., each > 1
    std::vector<std::vector<Int>> generators;  // dual-basis coordinates
};

// Block types of the orthogonal splitting of a linking pairing:
// A/B cyclic at odd primes (residue / nonresidue), cyclic 2-adic blocks,
// the two rank-2 2-adic types, and a raw fallback for unrecognised pairs.
enum class BlockKind { A, B, Cyc2, E, F, Pair2 };
const char* block_kind_name(BlockKind k);

struct PairingBlock {
    BlockKind kind;
    Int prime;
    int exponent;
    Rat gen_square;   // self-pairing of the (first) generator, mod 1
    Rat gen_square2;  // second generator, rank-2 kinds only
    std::vector<std::vector<Int>> generators;
    Int group_order() const;
    bool is_rank2() const { return kind == BlockKind::E || kind == BlockKind::F || kind == BlockKind::Pair2; }
};

DiscriminantGroup discriminant_group(const SymGram& g);
// x^T Q^{-1} y mod 1 for dual-coordinate vectors.
Rat linking_value(const SymGram& g, const std::vector<Int>& x, const std::vector<Int>& y);
// x^T Q^{-1} x mod 2; requires an even lattice.
Rat quadratic_value_even(const SymGram& g, const std::vector<Int>& x);
// Orthogonal block splitting of the linking pairing.
std::vector<PairingBlock> decompose(const SymGram& g);
// A iff p^k * gen_square is a nonzero quadratic residue mod p.
BlockKind classify_odd_cyclic(const Int& p, int exponent, const Rat& gen_square);

struct GaussSumResult {
    std::complex<double> value;      // (1/sqrt(delta)) sum over L'/L of e^{i pi u^2}
    std::complex<double> predicted;  // e^{2 pi i sigma / 8}
    bool milgram_ok;
};
GaussSumResult gauss_sum_milgram(const SymGram& g, long long cap = 100000);

// Element order in L'/L (dual coordinates).
Int element_order(const SymGram& g, const std::vector<Int>& x);

}  // namespace latq
