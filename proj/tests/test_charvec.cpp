#include <doctest.h>

#include "latq/charvec.hpp"
#include "latq/linking.hpp"
#include "testutil.hpp"

using namespace latq;
using namespace latq::testutil;

namespace {

Rat covector_square(const SymGram& g, const std::vector<long long>& c) {
    std::vector<Rat> rc = rat_vec(c);
    return dot(rc, mat_vec(g.dual_gram(), rc));
}

}  // namespace

TEST_CASE("characteristic parity vectors") {
    CHECK(characteristic_parity(a2_gram()) == std::vector<int>{0, 0});
    CHECK(characteristic_parity(SymGram(IntMat::identity(3))) == std::vector<int>{1, 1, 1});
    CHECK(characteristic_parity(SymGram::diagonal({Int(1), Int(3)})) == std::vector<int>{1, 1});
}

TEST_CASE("minimal characteristic covectors on pinned examples") {
    for (long long d : {3, 5, 7, 9, 15}) {
        Covector c = min_characteristic(SymGram::diagonal({to_int(d)}));
        CHECK(c.coords == std::vector<long long>{1});
        CHECK(c.square == make_rat(1, to_int(d)));
    }
    Covector a2 = min_characteristic(a2_gram());
    CHECK(a2.coords == std::vector<long long>{0, 0});
    CHECK(a2.square == 0);

    Covector m = min_characteristic(gram_from({{2, 1}, {1, 3}}));
    CHECK(m.coords == std::vector<long long>{0, 1});
    CHECK(m.square == make_rat(2, 5));

    CHECK_THROWS_AS(min_characteristic(SymGram::diagonal({Int(1), Int(-1)})), std::invalid_argument);
    CHECK_THROWS_AS(min_characteristic(SymGram::diagonal({Int(-3)})), std::invalid_argument);
}

TEST_CASE("brute-force oracle on pinned examples") {
    Covector b = brute_force_min(SymGram::diagonal({Int(1), Int(3)}), 5);
    CHECK(b.square == make_rat(4, 3));
    CHECK(std::llabs(b.coords[0]) == 1);
    CHECK(std::llabs(b.coords[1]) == 1);

    CHECK(brute_force_min(SymGram(IntMat::identity(2)), 3).square == 2);
    CHECK(brute_force_min(e8_gram(), 2).square == 0);
}

TEST_CASE("main bound report on pinned examples") {
    BoundReport r1 = check_main_bound(SymGram::diagonal({Int(1), Int(1), Int(5)}));
    CHECK(r1.min_square == make_rat(11, 5));
    CHECK(r1.bound == make_rat(11, 5));
    CHECK(r1.extremal);

    BoundReport r2 = check_main_bound(a2_gram());
    CHECK(r2.min_square == 0);
    CHECK(r2.bound == make_rat(4, 3));
    CHECK(!r2.extremal);

    BoundReport r3 = check_main_bound(e8_gram());
    CHECK(r3.min_square == 0);
    CHECK(r3.bound == 8);
    CHECK(!r3.extremal);
}

TEST_CASE("extremal form detection") {
    CHECK(is_extremal_form(SymGram::diagonal({Int(1), Int(5)})));
    CHECK(is_extremal_form(SymGram::diagonal({Int(4)})));
    CHECK(is_extremal_form(SymGram(IntMat::identity(5))));
    CHECK(!is_extremal_form(a2_gram()));
    CHECK(!is_extremal_form(gram_from({{2, 1}, {1, 3}})));
    // isometric image of an extremal form stays extremal
    std::mt19937 rng(5);
    IntMat u = random_unimodular(rng, 3, 8);
    SymGram g = SymGram::diagonal({Int(1), Int(1), Int(7)});
    CHECK(is_extremal_form(SymGram(u * g.matrix() * u.transposed())));
}

TEST_CASE("congruence classes on pinned examples") {
    CHECK(congruence_mod4(SymGram::diagonal({Int(3)})) == make_rat(1, 3));
    CHECK(congruence_mod4(a2_gram()) == 0);
    CHECK(congruence_mod4(SymGram(IntMat::identity(2))) == 2);

    // indefinite forms are accepted by the congruence operations
    SymGram indef = SymGram::diagonal({Int(1), Int(-1), Int(3)});
    CHECK(congruence_mod4(indef) == make_rat(1, 3));

    CHECK(congruence_mod8(SymGram::diagonal({Int(3)})) == make_rat(1, 3));
    CHECK(congruence_mod8(SymGram::diagonal({Int(5)})) == make_rat(1, 5));
    CHECK(congruence_mod8(a2_gram()) == 0);
    CHECK_THROWS_AS(congruence_mod8(SymGram::diagonal({Int(2)})), std::invalid_argument);
}

TEST_CASE("minimizer square obeys both congruences") {
    for (long long d : {3, 5, 7, 11, 15, 21}) {
        SymGram g = SymGram::diagonal({to_int(d)});
        Covector c = min_characteristic(g);
        CHECK(divides_rat(make_rat(4, to_int(d)), c.square - congruence_mod4(g)));
        CHECK(divides_rat(make_rat(8, to_int(d)), c.square - congruence_mod8(g)));
    }
}

TEST_CASE("sampled characteristic covectors obey the congruences") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long long> shift(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng() % 4);
        SymGram g = random_nondegenerate(rng, n, 5, 100);
        Int delta = g.abs_det();
        Rat r4 = congruence_mod4(g);
        std::vector<int> parity = g.diag_parities();
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<long long> c(n);
            for (int i = 0; i < n; ++i) c[i] = parity[i] + 2 * shift(rng);
            Rat sq = covector_square(g, c);
            CHECK(divides_rat(make_rat(4, delta), sq - r4));
            if (delta % 2 != 0) CHECK(divides_rat(make_rat(8, delta), sq - congruence_mod8(g)));
        }
    }
}

TEST_CASE("branch-and-bound matches the brute-force oracle") {
    std::mt19937 rng(77);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2 + static_cast<int>(rng() % 3);
        SymGram g = random_positive_definite(rng, n, 5);
        Covector fast = min_characteristic(g);
        Int maxdiag = 0;
        for (int i = 0; i < n; ++i) maxdiag = std::max(maxdiag, g.at(i, i));
        Rat r = fast.square * Rat(maxdiag);
        long long box = static_cast<long long>(std::sqrt(r.get_d())) + 1;
        while (Rat(to_int(box)) * Rat(to_int(box)) < r) ++box;
        Covector slow = brute_force_min(g, box);
        CHECK(fast.square == slow.square);
        CHECK(fast.coords == slow.coords);  // identical tie-break
    }
}

TEST_CASE("negated-form restatement") {
    // the maximal square over the coset of the negated form is the negated minimum
    std::mt19937 rng(31);
    std::uniform_int_distribution<long long> shift(-2, 2);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 1 + static_cast<int>(rng() % 3);
        SymGram g = random_positive_definite(rng, n, 4);
        Covector c = min_characteristic(g);
        SymGram neg = g.negated();
        std::vector<Rat> rc = rat_vec(c.coords);
        Rat neg_sq = dot(rc, mat_vec(neg.dual_gram(), rc));
        CHECK(neg_sq == -c.square);
        std::vector<int> parity = g.diag_parities();
        for (int rep = 0; rep < 8; ++rep) {
            std::vector<long long> v(n);
            for (int i = 0; i < n; ++i) v[i] = parity[i] + 2 * shift(rng);
            std::vector<Rat> rv = rat_vec(v);
            CHECK(dot(rv, mat_vec(neg.dual_gram(), rv)) <= -c.square);
        }
    }
}

TEST_CASE("sublemma witnesses on pinned examples") {
    SublemmaWitness w1 = sublemma_witness(1, 5, {1, 1, 1}, {});
    CHECK(w1.k == std::vector<long long>{1});
    CHECK(w1.l == std::vector<long long>{0, 0, 0});
    CHECK(w1.value == 4);
    CHECK(w1.limit == 50);

    SublemmaWitness w2 = sublemma_witness(1, 13, {11, -11, 3}, {});
    CHECK(w2.value < 338);
    CHECK(w2.k[0] % 2 != 0);
    for (long long l : w2.l) CHECK(l % 2 == 0);

    SublemmaWitness w3 = sublemma_witness(2, 3, {1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0});
    CHECK(w3.k == std::vector<long long>{1, 1});
    CHECK(w3.value == 8);
    CHECK(w3.limit == 36);

    SublemmaWitness w4 = sublemma_witness(3, 7, {1, 3, -1, 5, 1, 0}, {0, 2, -4, 2, 0, 3});
    CHECK(w4.value < 196);

    CHECK_THROWS_AS(sublemma_witness(1, 7, {1, 1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(sublemma_witness(2, 5, {1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(sublemma_witness(1, 5, {2, 1, 1}, {}), std::invalid_argument);
}

TEST_CASE("witness value recomputes from the returned data") {
    std::mt19937 rng(8);
    for (int iter = 0; iter < 20; ++iter) {
        long long q = 11;
        std::uniform_int_distribution<long long> odd(0, (q - 2) / 2), even(0, (q - 1) / 2);
        std::vector<long long> s(6), t(6);
        for (int i = 0; i < 6; ++i) {
            s[i] = 2 * odd(rng) + 1;
            if (rng() % 2) s[i] = -s[i];
            t[i] = 2 * even(rng);
            if (rng() % 2) t[i] = -t[i];
        }
        SublemmaWitness w = sublemma_witness(2, q, s, t);
        long long f = w.k[0] * w.k[0] + w.k[1] * w.k[1];
        for (int i = 0; i < 6; ++i) {
            long long v = w.k[0] * s[i] + w.k[1] * t[i] - w.l[i] * q;
            f += v * v;
        }
        CHECK(f == w.value);
        CHECK(f < 4 * q * q);
    }
}
