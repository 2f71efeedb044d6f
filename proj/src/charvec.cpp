#include "latq/charvec.hpp"

#include <algorithm>

#include "latq/enumerate.hpp"
#include "latq/linking.hpp"

namespace latq {

std::vector<int> characteristic_parity(const SymGram& g) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    return g.diag_parities();
}

namespace {

void require_positive_definite(const SymGram& g) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    if (!g.is_positive_definite())
        throw std::invalid_argument("form must be positive definite (negate a negative-definite form first)");
}

bool first_nonzero_positive(const std::vector<long long>& v) {
    for (long long c : v) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return true;  // the zero vector
}

Covector pick_canonical(std::vector<std::vector<long long>> candidates, const Rat& square) {
    std::erase_if(candidates, [](const std::vector<long long>& v) { return !first_nonzero_positive(v); });
    if (candidates.empty()) throw std::logic_error("minimizer set is empty");
    auto best = std::min_element(candidates.begin(), candidates.end());
    return Covector{*best, square};
}

// c^T A c evaluated directly (kept free of the enumeration machinery).
Rat quad_value(const RatMat& a, const std::vector<long long>& c) {
    Rat total;
    for (int i = 0; i < a.rows; ++i) {
        if (c[i] == 0) continue;
        Rat row;
        for (int j = 0; j < a.cols; ++j)
            if (c[j] != 0) row += a.at(i, j) * Rat(to_int(c[j]));
        total += Rat(to_int(c[i])) * row;
    }
    return total;
}

}  // namespace

Covector min_characteristic(const SymGram& g) {
    require_positive_definite(g);
    const RatMat a = g.dual_gram();
    const SquareCompletion f = SquareCompletion::compute(a);
    std::vector<long long> parity;
    for (int p : g.diag_parities()) parity.push_back(p);
    const Rat best = min_on_coset(f, parity, 2);
    std::vector<std::vector<long long>> minimizers;
    enumerate_coset(f, parity, 2, best, [&](const std::vector<long long>& x, const Rat& val) {
        if (val == best) minimizers.push_back(x);
    });
    return pick_canonical(std::move(minimizers), best);
}

Covector brute_force_min(const SymGram& g, long long box) {
    require_positive_definite(g);
    if (box < 0) throw std::invalid_argument("box must be nonnegative");
    const int n = g.rank();
    const RatMat a = g.dual_gram();
    const std::vector<int> parity = g.diag_parities();
    // admissible values per coordinate
    std::vector<std::vector<long long>> values(n);
    for (int i = 0; i < n; ++i) {
        for (long long v = -box; v <= box; ++v)
            if (((v % 2) + 2) % 2 == parity[i]) values[i].push_back(v);
        if (values[i].empty()) throw std::invalid_argument("box too small to contain the coset");
    }
    std::vector<size_t> idx(n, 0);
    std::vector<long long> c(n);
    bool have = false;
    Rat best;
    std::vector<std::vector<long long>> minimizers;
    while (true) {
        for (int i = 0; i < n; ++i) c[i] = values[i][idx[i]];
        Rat val = quad_value(a, c);
        if (!have || val < best) {
            have = true;
            best = val;
            minimizers.assign(1, c);
        } else if (val == best) {
            minimizers.push_back(c);
        }
        int i = 0;
        for (; i < n; ++i) {
            if (++idx[i] < values[i].size()) break;
            idx[i] = 0;
        }
        if (i == n) break;
    }
    return pick_canonical(std::move(minimizers), best);
}

BoundReport check_main_bound(const SymGram& g) {
    require_positive_definite(g);
    const int n = g.rank();
    const Int delta = g.abs_det();
    const bool odd = (delta % 2 != 0);
    Rat bound(to_int(n - 1));
    if (odd) bound += make_rat(1, delta);
    Covector mc = min_characteristic(g);
    const bool extremal = is_extremal_form(g);
    if (mc.square > bound) throw std::logic_error("minimal characteristic square exceeds the bound");
    if (mc.square == bound && !extremal) throw std::logic_error("bound attained by a non-extremal form");
    return BoundReport{mc.square, bound, delta, odd, extremal, std::move(mc)};
}

bool is_extremal_form(const SymGram& g) {
    require_positive_definite(g);
    const int n = g.rank();
    // Unit vectors of a positive-definite lattice are pairwise orthogonal up to
    // sign, so they span an orthonormal direct summand; the form is extremal
    // iff the complement has rank at most 1.
    const SquareCompletion f = SquareCompletion::compute(to_rat(g.matrix()));
    std::vector<long long> zero(n, 0);
    long long unit_count = 0;
    enumerate_coset(f, zero, 1, Rat(1), [&](const std::vector<long long>&, const Rat& val) {
        if (val == 1) ++unit_count;
    });
    if (unit_count % 2 != 0) throw std::logic_error("unit vectors must come in +- pairs");
    return unit_count / 2 >= n - 1;
}

Rat congruence_mod4(const SymGram& g) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    const Int delta = g.abs_det();
    Rat value(to_int(g.signature_diff() - 1));
    if (delta % 2 != 0) value += make_rat(1, delta);
    return mod_reduce(value, make_rat(4, delta));
}

Rat congruence_mod8(const SymGram& g) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    const Int delta = g.abs_det();
    if (delta % 2 == 0) throw std::invalid_argument("mod-8 congruence requires odd determinant");
    Rat value(to_int(g.signature_diff()));
    for (const PairingBlock& b : decompose(g)) {
        if (b.exponent % 2 == 0) continue;
        if (b.kind == BlockKind::A)
            value -= Rat(1 - b.prime);
        else if (b.kind == BlockKind::B)
            value -= Rat(5 - b.prime);
        else
            throw std::logic_error("odd-determinant lattice with a non-cyclic block");
    }
    return mod_reduce(value, make_rat(8, delta));
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long best_even_multiple_term(long long v, long long q, long long* l_out) {
    // minimize (v - l q)^2 over even l
    long long l0 = 2 * floor_div(v + q, 2 * q);
    long long best_l = l0;
    long long best = (v - l0 * q) * (v - l0 * q);
    for (long long l : {l0 - 2, l0 + 2}) {
        long long t = (v - l * q) * (v - l * q);
        if (t < best) {
            best = t;
            best_l = l;
        }
    }
    *l_out = best_l;
    return best;
}

// odd values ordered 1, -1, 3, -3, ..., up to |v| <= bound
std::vector<long long> odd_values_by_abs(long long bound) {
    std::vector<long long> out;
    for (long long v = 1; v <= bound; v += 2) {
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}

}  // namespace

SublemmaWitness sublemma_witness(int variant, long long prime, const std::vector<long long>& s,
                                 const std::vector<long long>& t) {
    const Int p(to_int(prime));
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    if (variant == 1) {
        if (prime % 4 != 1) throw std::invalid_argument("variant 1 requires p = 1 (mod 4)");
        if (s.size() != 3) throw std::invalid_argument("variant 1 takes 3 s-entries");
        if (!t.empty()) throw std::invalid_argument("variant 1 takes no t-entries");
        for (long long v : s)
            if (v % 2 == 0 || std::llabs(v) > prime - 2)
                throw std::invalid_argument("s-entries must be odd with |s_i| <= p-2");
        const long long limit = 2 * prime * prime;
        for (long long k : odd_values_by_abs(prime - 2)) {
            long long F = k * k;
            std::vector<long long> l(3);
            for (int i = 0; i < 3 && F < limit; ++i) F += best_even_multiple_term(k * s[i], prime, &l[i]);
            if (F < limit) return SublemmaWitness{{k}, std::move(l), F, limit};
        }
        throw std::logic_error("witness search exhausted; the guaranteed bound failed");
    }
    if (variant != 2 && variant != 3) throw std::invalid_argument("variant must be 1, 2 or 3");
    if (prime % 4 != 3) throw std::invalid_argument("variants 2 and 3 require q = 3 (mod 4)");
    if (s.size() != 6 || t.size() != 6) throw std::invalid_argument("variants 2 and 3 take 6 entries each");
    for (int i = 0; i < 6; ++i)
        if (std::llabs(s[i]) > prime - 1 || std::llabs(t[i]) > prime - 1)
            throw std::invalid_argument("entries must lie in [1-q, q-1]");
    if (variant == 2) {
        for (int i = 0; i < 6; ++i)
            if (s[i] % 2 == 0 || t[i] % 2 != 0)
                throw std::invalid_argument("variant 2 requires s odd and t even");
    } else {
        for (int i = 0; i < 5; ++i)
            if (s[i] % 2 == 0 || t[i] % 2 != 0)
                throw std::invalid_argument("variant 3 requires s_1..s_5 odd and t_1..t_5 even");
        if (s[5] != 0 || t[5] % 2 == 0)
            throw std::invalid_argument("variant 3 requires s_6 = 0 and t_6 odd");
    }
    const long long limit = 4 * prime * prime;
    for (long long k2 : odd_values_by_abs(prime - 2)) {
        for (long long k1 : odd_values_by_abs(prime - 2)) {
            long long F = k1 * k1 + k2 * k2;
            std::vector<long long> l(6);
            for (int i = 0; i < 6 && F < limit; ++i)
                F += best_even_multiple_term(k1 * s[i] + k2 * t[i], prime, &l[i]);
            if (F < limit) return SublemmaWitness{{k1, k2}, std::move(l), F, limit};
        }
    }
    throw std::logic_error("witness search exhausted; the guaranteed bound failed");
}

}  // namespace latq
