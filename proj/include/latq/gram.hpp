#pragma once

#include "latq/intmat.hpp"

namespace latq {

// Nondegenerate symmetric bilinear form on Z^n given by its Gram matrix.
class SymGram {
public:
    explicit SymGram(IntMat m);
    static SymGram diagonal(const std::vector<Int>& d);

    int rank() const { return m_.rows; }
    const IntMat& matrix() const { return m_; }
    const Int& at(int i, int j) const { return m_.at(i, j); }

    Int determinant() const;
    Int abs_det() const;
    bool is_degenerate() const { return determinant() == 0; }
    // (n_plus, n_minus); throws std::invalid_argument on a degenerate form.
    std::pair<int, int> signature() const;
    int signature_diff() const;
    bool is_positive_definite() const;
    // Gram matrix of the dual lattice, i.e. the exact inverse.
    RatMat dual_gram() const;
    bool is_even() const;
    std::vector<int> diag_parities() const;

    SymGram direct_sum(const SymGram& other) const;
    SymGram negated() const;

    bool operator==(const SymGram&) const = default;

private:
    IntMat m_;
};

}  // namespace latq
