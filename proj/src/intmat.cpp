#include "latq/intmat.hpp"

#include <algorithm>

namespace latq {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix dimension mismatch");
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

IntMat operator-(const IntMat& x) {
    IntMat r = x;
    for (auto& e : r.a) e = -e;
    return r;
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::transposed() const {
    RatMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool RatMat::is_integral() const {
    return std::all_of(a.begin(), a.end(), [](const Rat& q) { return rat_is_integer(q); });
}

RatMat operator*(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix dimension mismatch");
    RatMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

RatMat operator-(const RatMat& x) {
    RatMat r = x;
    for (auto& e : r.a) e = -e;
    return r;
}

RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

IntMat to_int(const RatMat& m) {
    IntMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) {
        if (!rat_is_integer(m.a[i])) throw std::invalid_argument("matrix entry is not an integer");
        r.a[i] = m.a[i].get_num();
    }
    return r;
}

Int det_bareiss(IntMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = m.rows;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        for (int i = k + 1; i < n; ++i) m.at(i, k) = 0;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

Rat det_rational(RatMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = m.rows;
    Rat det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            det = -det;
        }
        det *= m.at(k, k);
        Rat inv = Rat(1) / m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            Rat f = m.at(i, k) * inv;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

RatMat rat_inverse(RatMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of a non-square matrix");
    const int n = m.rows;
    RatMat inv = RatMat::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::invalid_argument("matrix is singular");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(k, j), m.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        Rat s = Rat(1) / m.at(k, k);
        for (int j = 0; j < n; ++j) {
            m.at(k, j) *= s;
            inv.at(k, j) *= s;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            Rat f = m.at(i, k);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

IntMat int_inverse_unimodular(const IntMat& u) {
    RatMat inv = rat_inverse(to_rat(u));
    if (!inv.is_integral()) throw std::invalid_argument("matrix is not unimodular");
    return to_int(inv);
}

namespace {

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void row_axpy(IntMat& m, int dst, int src, const Int& q) {
    for (int j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_axpy(IntMat& m, int dst, int src, const Int& q) {
    for (int i = 0; i < m.rows; ++i) m.at(i, dst) -= q * m.at(i, src);
}

void row_swap(IntMat& m, int i, int k) {
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(i, j), m.at(k, j));
}

void col_swap(IntMat& m, int j, int k) {
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, j), m.at(i, k));
}

}  // namespace

Snf smith_normal_form(IntMat m) {
    const int R = m.rows, C = m.cols;
    Snf s{m, IntMat::identity(R), IntMat::identity(C)};
    IntMat& d = s.d;
    const int rank_cap = std::min(R, C);
    for (int t = 0; t < rank_cap; ++t) {
        // move a smallest nonzero entry of the remaining block to (t,t)
        int pi = -1, pj = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                if (d.at(i, j) == 0) continue;
                if (pi < 0 || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != t) {
            row_swap(d, t, pi);
            row_swap(s.u, t, pi);
        }
        if (pj != t) {
            col_swap(d, t, pj);
            col_swap(s.v, t, pj);
        }
        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < R; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = fdiv(d.at(i, t), d.at(t, t));
                row_axpy(d, i, t, q);
                row_axpy(s.u, i, t, q);
                if (d.at(i, t) != 0) {
                    row_swap(d, i, t);
                    row_swap(s.u, i, t);
                    again = true;
                }
            }
            for (int j = t + 1; j < C; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = fdiv(d.at(t, j), d.at(t, t));
                col_axpy(d, j, t, q);
                col_axpy(s.v, j, t, q);
                if (d.at(t, j) != 0) {
                    col_swap(d, j, t);
                    col_swap(s.v, j, t);
                    again = true;
                }
            }
            if (!again) {
                // pivot must divide the rest of the block
                for (int i = t + 1; i < R && !again; ++i)
                    for (int j = t + 1; j < C && !again; ++j)
                        if (d.at(i, j) % d.at(t, t) != 0) {
                            row_axpy(d, t, i, Int(-1));
                            row_axpy(s.u, t, i, Int(-1));
                            again = true;
                        }
            }
        }
    }
    for (int t = 0; t < rank_cap; ++t)
        if (d.at(t, t) < 0) {
            for (int j = 0; j < C; ++j) d.at(t, j) = -d.at(t, j);
            for (int j = 0; j < R; ++j) s.u.at(t, j) = -s.u.at(t, j);
        }
    return s;
}

IntMat hermite_row_lattice(IntMat m) {
    const int R = m.rows, C = m.cols;
    if (R < C) throw std::invalid_argument("rank-deficient input: fewer rows than columns");
    int r = 0;
    for (int c = 0; c < C; ++c) {
        while (true) {
            int piv = -1;
            for (int i = r; i < R; ++i) {
                if (m.at(i, c) == 0) continue;
                if (piv < 0 || mpz_cmpabs(m.at(i, c).get_mpz_t(), m.at(piv, c).get_mpz_t()) < 0) piv = i;
            }
            if (piv < 0) throw std::invalid_argument("rank-deficient input: rows do not span full rank");
            if (piv != r) row_swap(m, r, piv);
            bool clear = true;
            for (int i = r + 1; i < R; ++i) {
                if (m.at(i, c) == 0) continue;
                row_axpy(m, i, r, fdiv(m.at(i, c), m.at(r, c)));
                if (m.at(i, c) != 0) clear = false;
            }
            if (clear) break;
        }
        if (m.at(r, c) < 0)
            for (int j = 0; j < C; ++j) m.at(r, j) = -m.at(r, j);
        for (int i = 0; i < r; ++i) row_axpy(m, i, r, fdiv(m.at(i, c), m.at(r, c)));
        ++r;
    }
    for (int i = r; i < R; ++i)
        for (int j = 0; j < C; ++j)
            if (m.at(i, j) != 0) throw std::logic_error("hermite reduction left a nonzero residual row");
    IntMat h(C, C);
    for (int i = 0; i < C; ++i)
        for (int j = 0; j < C; ++j) h.at(i, j) = m.at(i, j);
    return h;
}

std::vector<Rat> mat_vec(const RatMat& m, const std::vector<Rat>& x) {
    if (static_cast<int>(x.size()) != m.cols) throw std::invalid_argument("dimension mismatch");
    std::vector<Rat> r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * x[j];
    return r;
}

std::vector<Rat> vec_mat(const std::vector<Rat>& x, const RatMat& m) {
    if (static_cast<int>(x.size()) != m.rows) throw std::invalid_argument("dimension mismatch");
    std::vector<Rat> r(m.cols);
    for (int i = 0; i < m.rows; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < m.cols; ++j) r[j] += x[i] * m.at(i, j);
    }
    return r;
}

Rat dot(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    Rat r;
    for (size_t i = 0; i < x.size(); ++i) r += x[i] * y[i];
    return r;
}

}  // namespace latq
