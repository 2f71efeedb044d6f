#include "latq/surgery.hpp"

#include <algorithm>
#include <numeric>

namespace latq {

namespace {

void validate_poly(const AlexanderPoly& p) {
    if (p.a.empty()) throw std::invalid_argument("empty coefficient list");
    long long at1 = p.a[0];
    for (size_t j = 1; j < p.a.size(); ++j) at1 += 2 * p.a[j];
    if (at1 != 1) throw std::invalid_argument("polynomial does not evaluate to 1 at T = 1");
    if (p.a.size() > 1 && p.a.back() == 0) throw std::invalid_argument("top coefficient vanishes");
}

void validate_torus(long long p, long long q) {
    if (p < 2 || q <= p) throw std::invalid_argument("torus parameters require 2 <= p < q");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus parameters must be coprime");
}

}  // namespace

AlexanderPoly alexander_from_exponents(const std::vector<long long>& exponents) {
    const int k = static_cast<int>(exponents.size());
    long long prev = 0;
    for (long long e : exponents) {
        if (e <= prev) throw std::invalid_argument("exponents must be strictly increasing and positive");
        prev = e;
    }
    AlexanderPoly poly;
    poly.a.assign(k == 0 ? 1 : exponents.back() + 1, 0);
    poly.a[0] = (k % 2 == 0) ? 1 : -1;
    for (int j = 1; j <= k; ++j) poly.a[exponents[j - 1]] = ((k - j) % 2 == 0) ? 1 : -1;
    validate_poly(poly);
    return poly;
}

AlexanderPoly torus_alexander(long long p, long long q) {
    validate_torus(p, q);
    const long long twoN = (p - 1) * (q - 1);
    const long long N = twoN / 2;
    // r[k] = #{(a,b) >= 0 : a p + b q = k}
    std::vector<long long> r(twoN + 1, 0);
    for (long long a = 0; a * p <= twoN; ++a)
        for (long long b = 0; a * p + b * q <= twoN; ++b) r[a * p + b * q] += 1;
    AlexanderPoly poly;
    poly.a.assign(N + 1, 0);
    for (long long j = 0; j <= N; ++j) {
        long long k = N - j;
        poly.a[j] = r[k] - (k > 0 ? r[k - 1] : 0);
    }
    validate_poly(poly);
    return poly;
}

std::vector<long long> exponents_from_poly(const AlexanderPoly& poly) {
    std::vector<long long> exps;
    for (size_t j = 1; j < poly.a.size(); ++j)
        if (poly.a[j] != 0) exps.push_back(static_cast<long long>(j));
    // alternating signs ending at +1 on the top coefficient
    int sign = 1;
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (poly.a[*it] != sign) throw std::invalid_argument("polynomial does not have the alternating shape");
        sign = -sign;
    }
    long long a0 = (exps.size() % 2 == 0) ? 1 : -1;
    if (poly.a[0] != a0) throw std::invalid_argument("polynomial does not have the alternating shape");
    return exps;
}

long long torsion_from_poly(const AlexanderPoly& poly, long long i) {
    long long ai = std::llabs(i);
    long long t = 0;
    for (long long j = 1; ai + j <= poly.degree(); ++j) t += j * poly.a[ai + j];
    return t;
}

long long torsion_from_exponents(const std::vector<long long>& exponents, long long i) {
    const int k = static_cast<int>(exponents.size());
    if (k == 0) return 0;
    long long prev = 0;
    for (long long e : exponents) {
        if (e <= prev) throw std::invalid_argument("exponents must be strictly increasing and positive");
        prev = e;
    }
    long long ai = std::llabs(i);
    auto idx = [&](int l) -> long long {
        if (l == 0) return 0;
        return l > 0 ? exponents[l - 1] : -exponents[-l - 1];
    };
    if (ai >= idx(k)) return 0;
    long long partial = idx(k);  // n_k - n_{k-1} + ... + n_{k-2j}, built up per j
    for (int j = 0; j < k; ++j) {
        long long lo1 = idx(k - 2 * j - 1), hi1 = idx(k - 2 * j);
        if (ai >= lo1 && ai <= hi1) return partial - ai;
        long long lo2 = idx(k - 2 * j - 2), hi2 = lo1;
        if (ai >= lo2 && ai <= hi2) return partial - hi2;
        partial += idx(k - 2 * j - 2) - idx(k - 2 * j - 1);
    }
    throw std::logic_error("torsion interval search fell through");
}

long long torus_torsion_count(long long p, long long q, long long i) {
    validate_torus(p, q);
    const long long N = (p - 1) * (q - 1) / 2;
    if (i < 0 || i > N) throw std::invalid_argument("index must satisfy 0 <= i <= N");
    long long t = 0;
    for (long long a = 0; a * p < N - i; ++a)
        for (long long b = 0; a * p + b * q < N - i; ++b) ++t;
    return t;
}

Rat torus_g(long long p, long long q, const Rat& x) {
    validate_torus(p, q);
    if (x <= 0) return Rat(0);
    Rat total;
    for (Rat y = x; y > 0; y -= Rat(to_int(q))) total += y / Rat(to_int(p));
    return total;
}

Knot Knot::unknot() { return Knot{"unknot", AlexanderPoly{{1}}}; }

Knot Knot::torus(long long p, long long q) {
    return Knot{"torus:" + std::to_string(p) + "," + std::to_string(q), torus_alexander(p, q)};
}

Knot Knot::from_exponents(const std::vector<long long>& exponents) {
    std::string name = "exponents:";
    for (size_t i = 0; i < exponents.size(); ++i)
        name += (i ? "," : "") + std::to_string(exponents[i]);
    return Knot{std::move(name), alexander_from_exponents(exponents)};
}

Rat d_lens(long long n, long long i) {
    if (n <= 0) throw std::invalid_argument("surgery coefficient must be positive");
    long long ai = std::llabs(i);
    if (ai >= n) throw std::invalid_argument("index out of range: |i| < n required");
    Rat num(to_int((n - 2 * ai) * (n - 2 * ai)));
    return num / Rat(to_int(4 * n)) - make_rat(1, 4);
}

Rat d_surgery(const Knot& k, long long coeff, long long i) {
    if (coeff == 0) throw std::invalid_argument("surgery coefficient must be nonzero");
    long long n = std::llabs(coeff);
    if (2 * std::llabs(i) > n) throw std::invalid_argument("index out of range: |i| <= n/2 required");
    if (coeff > 0) return d_lens(n, i) - Rat(to_int(2 * torsion_from_poly(k.poly, i)));
    return -d_lens(n, i);
}

namespace {

ObstructionReport obstruct_common(const Knot& k, long long n) {
    if (n < 1) throw std::invalid_argument("surgery coefficient must be at least 1");
    ObstructionReport rep;
    rep.knot = k.name;
    rep.n = n;
    rep.delta = n;
    bool have_max = false;
    for (long long i = 0; 2 * i <= n; ++i) {
        ObstructionRow row;
        row.i = i;
        row.t = torsion_from_poly(k.poly, i);
        row.d = d_surgery(k, n, i);
        row.four_d = Rat(4) * row.d;
        if (!have_max || row.four_d > rep.max_four_d) {
            rep.max_four_d = row.four_d;
            have_max = true;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace

ObstructionReport obstruct_integer_surgery(const Knot& k, long long n) {
    ObstructionReport rep = obstruct_common(k, n);
    const bool odd = (n % 2 != 0);
    rep.bound = odd ? Rat(1) - make_rat(1, to_int(n)) : Rat(1);
    rep.hypothesis = "no torsion in H_1 of the bounding four-manifold";
    bool all_strict = true;
    for (const auto& row : rep.rows) {
        Rat rhs = Rat(to_int((n - 2 * row.i) * (n - 2 * row.i) + (odd ? 1 : 0))) / Rat(to_int(8 * n)) -
                  make_rat(1, 4);
        if (!(Rat(to_int(row.t)) > rhs)) {
            all_strict = false;
            break;
        }
    }
    const bool by_max = rep.max_four_d < rep.bound;
    if (all_strict != by_max)
        throw std::logic_error("torsion-inequality and max-4d verdicts disagree");
    rep.obstructed = all_strict;
    rep.extends_to_smaller = rep.obstructed;
    if (!rep.obstructed && !odd && rep.max_four_d == rep.bound)
        rep.note = "equality case: the maximum is attained at a spin structure";
    return rep;
}

ObstructionReport obstruct_squarefree(const Knot& k, long long n) {
    ObstructionReport rep = obstruct_common(k, n);
    Int r = squarefree_part(to_int(n));
    rep.squarefree_r = r.get_si();
    rep.bound = (r % 2 != 0) ? Rat(1) - make_rat(1, r) : Rat(1);
    rep.hypothesis = "none (square-free bound)";
    rep.obstructed = rep.max_four_d < rep.bound;
    rep.extends_to_smaller = false;
    return rep;
}

namespace {

// exact comparison m < base + scale * sqrt(radicand), scale >= 0
bool less_than_root_expr(const Rat& m, const Rat& base, const Rat& scale, const Rat& radicand) {
    if (radicand < 0) throw std::invalid_argument("negative radicand");
    Rat lhs = m - base;
    if (lhs < 0) return true;
    return lhs * lhs < scale * scale * radicand;
}

}  // namespace

TorusRange torus_obstruction_range(long long p, long long q) {
    validate_torus(p, q);
    Knot k = Knot::torus(p, q);
    const long long N = (p - 1) * (q - 1) / 2;

    TorusRange out;
    out.headline_max_n = (p - 1) * (q - 1) + 2;

    long long exact = 0;
    for (long long n = 1; n <= p * q; ++n) {
        if (!obstruct_integer_surgery(k, n).obstructed) break;
        exact = n;
    }
    if (exact == p * q) throw std::logic_error("obstruction range failed to terminate");
    out.exact_max_n = exact;

    // the three lower bounds on admissible m, compared exactly
    Rat alpha, beta, extra2(0), term3;
    if (p % 2 == 0) {
        alpha = Rat(to_int(q * (p - 2) + 2));
        beta = Rat(to_int(q - p + 1));
        term3 = Rat(to_int(q - p + 3));
    } else {
        alpha = Rat(to_int(q * (p - 4) + 2)) + make_rat(to_int(3 * q), to_int(p));
        beta = Rat(to_int(2 * q - p + 1));
        extra2 = make_rat(to_int(q * (p - 3)), to_int(p));
        term3 = Rat(to_int(q - p + 5)) - make_rat(to_int(q + 2), to_int(p));
    }
    Rat disc = alpha * (alpha + Rat(4) * beta) - Rat(4);
    auto admissible = [&](long long m) {
        Rat mr(to_int(m));
        if (!less_than_root_expr(mr, Rat(1), Rat(1), Rat(to_int(4 * N)))) return false;
        if (!less_than_root_expr(mr, Rat(2) - alpha / Rat(2) - extra2, make_rat(1, 2), disc)) return false;
        return mr < term3;
    };
    long long m_max = 0;
    while (admissible(m_max + 1)) ++m_max;
    if (m_max < 2) throw std::logic_error("closed-form bound admits less than m = 2");
    out.closed_form_max_n = 2 * N + m_max;

    if (!(out.headline_max_n <= out.closed_form_max_n && out.closed_form_max_n <= out.exact_max_n))
        throw std::logic_error("bound ordering headline <= closed-form <= exact violated");
    return out;
}

}  // namespace latq
