#include "latq/gram.hpp"

namespace latq {

SymGram::SymGram(IntMat m) : m_(std::move(m)) {
    if (m_.rows != m_.cols) throw std::invalid_argument("Gram matrix must be square");
    if (m_.rows < 1) throw std::invalid_argument("rank must be at least 1");
    for (int i = 0; i < m_.rows; ++i)
        for (int j = i + 1; j < m_.cols; ++j)
            if (m_.at(i, j) != m_.at(j, i)) throw std::invalid_argument("Gram matrix must be symmetric");
}

SymGram SymGram::diagonal(const std::vector<Int>& d) {
    IntMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows; ++i) m.at(i, i) = d[i];
    return SymGram(std::move(m));
}

Int SymGram::determinant() const { return det_bareiss(m_); }

Int SymGram::abs_det() const { return abs(determinant()); }

std::pair<int, int> SymGram::signature() const {
    // symmetric congruence diagonalisation over Q
    const int n = m_.rows;
    RatMat a = to_rat(m_);
    int np = 0, nm = 0;
    for (int k = 0; k < n; ++k) {
        if (a.at(k, k) == 0) {
            int dj = -1;
            for (int j = k + 1; j < n; ++j)
                if (a.at(j, j) != 0) {
                    dj = j;
                    break;
                }
            if (dj >= 0) {
                for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(dj, j));
                for (int i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, dj));
            } else {
                int oj = -1;
                for (int j = k + 1; j < n; ++j)
                    if (a.at(k, j) != 0) {
                        oj = j;
                        break;
                    }
                if (oj < 0) throw std::invalid_argument("degenerate form has no signature");
                // zero diagonal block: a[k][k] becomes 2*a[k][oj] != 0
                for (int j = 0; j < n; ++j) a.at(k, j) += a.at(oj, j);
                for (int i = 0; i < n; ++i) a.at(i, k) += a.at(i, oj);
            }
        }
        const Rat piv = a.at(k, k);
        (piv > 0 ? np : nm) += 1;
        // rank-1 Schur update keeps the trailing block symmetric
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Rat f = a.at(i, k) / piv;
            for (int j = k + 1; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
        for (int i = k + 1; i < n; ++i) {
            a.at(i, k) = 0;
            a.at(k, i) = 0;
        }
    }
    return {np, nm};
}

int SymGram::signature_diff() const {
    auto [np, nm] = signature();
    return np - nm;
}

bool SymGram::is_positive_definite() const {
    if (is_degenerate()) return false;
    return signature() == std::pair<int, int>{m_.rows, 0};
}

RatMat SymGram::dual_gram() const {
    if (is_degenerate()) throw std::invalid_argument("degenerate form has no dual Gram matrix");
    return rat_inverse(to_rat(m_));
}

bool SymGram::is_even() const {
    for (int i = 0; i < m_.rows; ++i)
        if (m_.at(i, i) % 2 != 0) return false;
    return true;
}

std::vector<int> SymGram::diag_parities() const {
    std::vector<int> p(m_.rows);
    for (int i = 0; i < m_.rows; ++i) p[i] = (m_.at(i, i) % 2 == 0) ? 0 : 1;
    return p;
}

SymGram SymGram::direct_sum(const SymGram& other) const {
    const int n = rank(), m = other.rank();
    IntMat s(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.at(i, j) = m_.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s.at(n + i, n + j) = other.at(i, j);
    return SymGram(std::move(s));
}

SymGram SymGram::negated() const { return SymGram(-m_); }

}  // namespace latq
