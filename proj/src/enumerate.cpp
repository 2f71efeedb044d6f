#include "latq/enumerate.hpp"

namespace latq {

SquareCompletion SquareCompletion::compute(const RatMat& a) {
    if (a.rows != a.cols) throw std::invalid_argument("form matrix must be square");
    const int n = a.rows;
    SquareCompletion f;
    f.n = n;
    f.d.resize(n);
    f.u.assign(n, std::vector<Rat>(n));
    RatMat w = a;
    for (int k = 0; k < n; ++k) {
        f.d[k] = w.at(k, k);
        if (f.d[k] <= 0) throw std::invalid_argument("form is not positive definite");
        for (int j = k + 1; j < n; ++j) f.u[k][j] = w.at(k, j) / f.d[k];
        for (int i = k + 1; i < n; ++i)
            for (int j = i; j < n; ++j) {
                w.at(i, j) -= w.at(k, i) * w.at(k, j) / f.d[k];
                w.at(j, i) = w.at(i, j);
            }
    }
    return f;
}

Rat SquareCompletion::value(const std::vector<long long>& x) const {
    Rat total;
    for (int i = 0; i < n; ++i) {
        Rat t(to_int(x[i]));
        for (int j = i + 1; j < n; ++j) t += u[i][j] * Rat(to_int(x[j]));
        total += d[i] * t * t;
    }
    return total;
}

namespace {

// Depth-first zig-zag enumeration; `radius` may shrink when `minimize` is set.
struct Search {
    const SquareCompletion& f;
    const std::vector<long long>& offset;
    long long step;
    Rat radius;
    bool minimize;
    const std::function<void(const std::vector<long long>&, const Rat&)>* visit = nullptr;
    std::vector<long long> x;

    void run() {
        x.assign(f.n, 0);
        descend(f.n - 1, Rat(0));
    }

    void descend(int i, const Rat& acc) {
        if (i < 0) {
            if (minimize) {
                if (acc < radius) radius = acc;
            } else {
                (*visit)(x, acc);
            }
            return;
        }
        Rat center;  // x_i + center is the completed-square argument
        for (int j = i + 1; j < f.n; ++j) center += f.u[i][j] * Rat(to_int(x[j]));
        // nearest admissible value offset_i + step*k to -center
        Rat rk = (-center - Rat(to_int(offset[i]))) / Rat(to_int(step));
        Int k0 = rat_round(rk);
        for (int dir = 0; dir < 2; ++dir) {
            Int k = (dir == 0) ? k0 : k0 - 1;
            while (true) {
                Rat xi = Rat(to_int(offset[i])) + Rat(to_int(step)) * Rat(k);
                Rat arg = xi + center;
                Rat tot = acc + f.d[i] * arg * arg;
                bool prune = minimize ? (tot >= radius) : (tot > radius);
                if (prune) break;  // moving outward only increases the term
                if (!xi.get_num().fits_slong_p())
                    throw std::overflow_error("enumeration coordinate exceeds 64 bits");
                x[i] = mpz_get_si(xi.get_num().get_mpz_t());
                descend(i - 1, tot);
                k += (dir == 0) ? 1 : -1;
            }
        }
    }
};

}  // namespace

void enumerate_coset(const SquareCompletion& f, const std::vector<long long>& offset, long long step,
                     const Rat& radius,
                     const std::function<void(const std::vector<long long>&, const Rat&)>& visit) {
    if (static_cast<int>(offset.size()) != f.n) throw std::invalid_argument("offset dimension mismatch");
    if (step <= 0) throw std::invalid_argument("step must be positive");
    if (radius < 0) return;
    Search s{f, offset, step, radius, false, &visit, {}};
    s.run();
}

Rat min_on_coset(const SquareCompletion& f, const std::vector<long long>& offset, long long step) {
    if (static_cast<int>(offset.size()) != f.n) throw std::invalid_argument("offset dimension mismatch");
    if (step <= 0) throw std::invalid_argument("step must be positive");
    Search s{f, offset, step, f.value(offset), true, nullptr, {}};
    s.run();
    return s.radius;
}

}  // namespace latq
