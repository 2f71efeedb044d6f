#include "latq/numeric.hpp"

namespace latq {

Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int rat_round(const Rat& q) {
    // floor(q + 1/2) = floor((2 num + den) / (2 den))
    Int num2 = 2 * q.get_num() + q.get_den();
    Int den2 = 2 * q.get_den();
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
    return r;
}

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

Rat mod1(const Rat& q) { return q - Rat(rat_floor(q)); }

Rat mod_reduce(const Rat& q, const Rat& m) {
    if (m <= 0) throw std::invalid_argument("modulus must be positive");
    Rat t = q / m;
    return q - Rat(rat_floor(t)) * m;
}

bool divides_rat(const Rat& m, const Rat& q) {
    if (m == 0) return q == 0;
    return rat_is_integer(q / m);
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Int mod_pow(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("element not invertible mod m");
    return r;
}

bool is_quadratic_residue(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return false;
    return mod_pow(r, (p - 1) / 2, p) == 1;
}

Int sqrt_mod_3mod4(const Int& a, const Int& q) {
    Int r = a % q;
    if (r < 0) r += q;
    Int x = mod_pow(r, (q + 1) / 4, q);
    if ((x * x - r) % q != 0) throw std::invalid_argument("not a quadratic residue");
    Int other = q - x;
    return x <= other ? x : other;
}

int valuation(Int n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::invalid_argument("factorize(0)");
    if (!n.fits_slong_p())
        throw cap_exceeded("determinant too large for built-in trial division");
    std::vector<std::pair<Int, int>> out;
    Int p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int squarefree_part(const Int& n) {
    Int r = 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2 == 1) r *= p;
    return r;
}

}  // namespace latq
