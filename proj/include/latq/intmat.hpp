#pragma once

#include "latq/numeric.hpp"

namespace latq {

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
        if (r <= 0 || c <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    IntMat transposed() const;
    bool operator==(const IntMat&) const = default;
};

IntMat operator*(const IntMat& x, const IntMat& y);
IntMat operator-(const IntMat& x);

struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
        if (r <= 0 || c <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static RatMat identity(int n);
    RatMat transposed() const;
    bool is_integral() const;
    bool operator==(const RatMat&) const = default;
};

RatMat operator*(const RatMat& x, const RatMat& y);
RatMat operator-(const RatMat& x);
RatMat to_rat(const IntMat& m);
// All denominators must be 1.
IntMat to_int(const RatMat& m);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det_bareiss(IntMat m);
// Exact determinant by rational Gaussian elimination (independent route).
Rat det_rational(RatMat m);
// Exact inverse; throws std::invalid_argument on a singular matrix.
RatMat rat_inverse(RatMat m);
// Inverse of a matrix with determinant +-1; result is integral.
IntMat int_inverse_unimodular(const IntMat& u);

// u * m * v = d with d diagonal, d_1 | d_2 | ..., det(u), det(v) = +-1.
struct Snf {
    IntMat d, u, v;
};
Snf smith_normal_form(IntMat m);

// Canonical upper-triangular basis of the lattice generated by the rows.
// Requires the rows to span a rank-cols sublattice of Z^cols.
IntMat hermite_row_lattice(IntMat m);

std::vector<Rat> mat_vec(const RatMat& m, const std::vector<Rat>& x);
std::vector<Rat> vec_mat(const std::vector<Rat>& x, const RatMat& m);
Rat dot(const std::vector<Rat>& x, const std::vector<Rat>& y);

}  // namespace latq
