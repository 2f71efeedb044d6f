#pragma once

#include <functional>

#include "latq/gram.hpp"

namespace latq {

// Exact completion of squares of a positive-definite rational form:
//   f(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2
struct SquareCompletion {
    int n = 0;
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> u;

    static SquareCompletion compute(const RatMat& a);
    Rat value(const std::vector<long long>& x) const;
};

// Visits every x in offset + step*Z^n with f(x) <= radius, exactly once.
void enumerate_coset(const SquareCompletion& f, const std::vector<long long>& offset, long long step,
                     const Rat& radius,
                     const std::function<void(const std::vector<long long>&, const Rat&)>& visit);

// Minimum of f over the coset; complete search seeded with f(offset).
Rat min_on_coset(const SquareCompletion& f, const std::vector<long long>& offset, long long step);

}  // namespace latq
