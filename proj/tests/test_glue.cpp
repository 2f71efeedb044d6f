#include <doctest.h>

#include "latq/charvec.hpp"
#include "latq/glue.hpp"
#include "testutil.hpp"

using namespace latq;
using namespace latq::testutil;

namespace {

// the standard signed-permutation action on L + L + L + L
QuaternionAction standard_action(int n) {
    RatMat i(4 * n, 4 * n), j(4 * n, 4 * n);
    for (int r = 0; r < n; ++r) {
        i.at(r, n + r) = 1;
        i.at(n + r, r) = -1;
        i.at(2 * n + r, 3 * n + r) = 1;
        i.at(3 * n + r, 2 * n + r) = -1;
        j.at(r, 2 * n + r) = 1;
        j.at(n + r, 3 * n + r) = -1;
        j.at(2 * n + r, r) = -1;
        j.at(3 * n + r, n + r) = 1;
    }
    return QuaternionAction{std::move(i), std::move(j)};
}

SymGram four_copies(const SymGram& g) { return g.direct_sum(g).direct_sum(g.direct_sum(g)); }

bool is_standard_cube(const SymGram& g) {
    // positive definite, unimodular and isometric to the unit-diagonal form
    return g.abs_det() == 1 && g.is_positive_definite() && is_extremal_form(g);
}

}  // namespace

TEST_CASE("adjoin on pinned examples") {
    Overlattice o1 = adjoin(SymGram::diagonal({Int(4)}), {Int(2)}, Int(2));
    CHECK(o1.gram.matrix().at(0, 0) == 1);
    CHECK(o1.index == 2);

    Overlattice o2 = adjoin(SymGram::diagonal({Int(9)}), {Int(3)}, Int(3));
    CHECK(o2.gram.matrix().at(0, 0) == 1);

    Overlattice o3 = adjoin(SymGram::diagonal({Int(2), Int(2)}), {Int(1), Int(1)}, Int(2));
    CHECK(o3.gram.abs_det() == 1);
    CHECK(o3.gram == gram_from({{1, 1}, {1, 2}}));

    // v^2 not integral
    CHECK_THROWS_AS(adjoin(SymGram::diagonal({Int(4)}), {Int(1)}, Int(2)), std::invalid_argument);
    // p v outside the lattice
    CHECK_THROWS_AS(adjoin(SymGram::diagonal({Int(9)}), {Int(1)}, Int(2)), std::invalid_argument);
    // v already in the lattice
    CHECK_THROWS_AS(adjoin(SymGram::diagonal({Int(4)}), {Int(4)}, Int(2)), std::invalid_argument);
}

TEST_CASE("stage-1 chains on pinned examples") {
    auto [o9, c9] = chain_prime_linking(SymGram::diagonal({Int(9)}));
    CHECK(o9.gram.abs_det() == 1);
    CHECK(o9.index == 3);
    CHECK(c9.steps.size() == 1);

    auto [o12, c12] = chain_prime_linking(SymGram::diagonal({Int(12)}));
    CHECK(o12.gram.abs_det() == 3);
    CHECK(o12.index == 2);

    auto [o3, c3] = chain_prime_linking(SymGram::diagonal({Int(3)}));
    CHECK(o3.gram == SymGram::diagonal({Int(3)}));
    CHECK(c3.steps.empty());
    CHECK(o3.index == 1);
}

TEST_CASE("stage-1 determinant is odd or twice odd") {
    std::mt19937 rng(321);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 1 + static_cast<int>(rng() % 3);
        SymGram g = random_positive_definite(rng, n, 5);
        auto [lat, chain] = chain_prime_linking(g);
        Int d = lat.gram.abs_det();
        CHECK((d % 2 != 0 || (d / 2) % 2 != 0));
        CHECK(lat.index * lat.index * d == g.abs_det());
        for (const auto& b : decompose(lat.gram)) {
            CHECK(!b.is_rank2());
            CHECK(b.exponent == 1);
        }
    }
}

TEST_CASE("stage-2 complex glue on pinned examples") {
    auto [m5, c5] = complex_glue(SymGram::diagonal({Int(5)}));
    CHECK(is_standard_cube(m5.gram));
    CHECK(m5.gram.rank() == 2);
    CHECK(c5.steps.size() == 1);
    CHECK(c5.steps[0].prime == 5);

    auto [m2, c2] = complex_glue(SymGram::diagonal({Int(2)}));
    CHECK(is_standard_cube(m2.gram));

    auto [m3, c3] = complex_glue(SymGram::diagonal({Int(3)}));
    CHECK(m3.gram.abs_det() == 9);
    CHECK(c3.steps.empty());
}

TEST_CASE("stage-3 quaternionic glue on pinned examples") {
    auto [u3, c3] = quaternionic_glue(SymGram::diagonal({Int(3), Int(3)}));
    CHECK(u3.gram.rank() == 4);
    CHECK(is_standard_cube(u3.gram));
    CHECK(c3.steps.size() == 1);
    CHECK(c3.steps[0].index == 9);

    auto [u7, c7] = quaternionic_glue(SymGram::diagonal({Int(7), Int(7)}));
    CHECK(is_standard_cube(u7.gram));

    auto [u1, c1] = quaternionic_glue(SymGram(IntMat::identity(2)));
    CHECK(u1.gram.rank() == 4);
    CHECK(c1.steps.empty());
}

TEST_CASE("square-root helpers match the stated construction") {
    CHECK(sqrt_minus_one(Int(2)) == 1);
    CHECK(sqrt_minus_one(Int(5)) == 2);
    CHECK(sqrt_minus_one(Int(13)) == 5);
    CHECK_THROWS_AS(sqrt_minus_one(Int(7)), std::invalid_argument);

    CHECK(sum_two_squares_neg_one(Int(3)) == std::pair<Int, Int>{1, 1});
    CHECK(sum_two_squares_neg_one(Int(7)) == std::pair<Int, Int>{3, 2});
    CHECK(sum_two_squares_neg_one(Int(11)) == std::pair<Int, Int>{1, 3});
    CHECK_THROWS_AS(sum_two_squares_neg_one(Int(5)), std::invalid_argument);
}

TEST_CASE("quaternionic verification") {
    SymGram l4 = four_copies(a2_gram());
    CHECK(verify_quaternionic(l4, standard_action(2)));

    QuaternionAction ident{RatMat::identity(8), RatMat::identity(8)};
    CHECK(!verify_quaternionic(l4, ident));

    CHECK_THROWS_AS(verify_quaternionic(a2_gram(), standard_action(1)), std::invalid_argument);
}

TEST_CASE("four-copy embedding on pinned examples") {
    EmbedFourResult z = embed_four_copies(SymGram(IntMat::identity(2)));
    CHECK(z.unimodular.rank() == 8);
    CHECK(z.index == 1);
    CHECK(z.group_index == 1);

    EmbedFourResult r3 = embed_four_copies(SymGram::diagonal({Int(3)}));
    CHECK(r3.unimodular.rank() == 4);
    CHECK(r3.unimodular.abs_det() == 1);
    CHECK(r3.index == 3);
    CHECK(r3.group_index == 9);
    CHECK(is_standard_cube(r3.unimodular));
    CHECK(verify_quaternionic(r3.unimodular, r3.action));

    EmbedFourResult a2 = embed_four_copies(a2_gram());
    CHECK(a2.unimodular.rank() == 8);
    CHECK(a2.unimodular.abs_det() == 1);
    CHECK(a2.unimodular.is_even());  // even unimodular of rank 8
    CHECK(a2.index == 3);
    CHECK(verify_quaternionic(a2.unimodular, a2.action));
}

TEST_CASE("four-copy embedding invariants on random forms") {
    std::mt19937 rng(515);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 1 + static_cast<int>(rng() % 2);
        SymGram g = random_positive_definite(rng, n, 4);
        EmbedFourResult r = embed_four_copies(g);
        CHECK(r.unimodular.rank() == 4 * n);
        CHECK(r.unimodular.abs_det() == 1);
        CHECK(r.index == g.abs_det());
        CHECK(r.group_index == g.abs_det() * g.abs_det());
        CHECK(verify_quaternionic(r.unimodular, r.action));
    }
}

TEST_CASE("intermediate chain lattices respect the main bound") {
    // every lattice along the chains is either extremal or strictly below the
    // bound; check_main_bound enforces exactly that
    std::mt19937 rng(616);
    for (int iter = 0; iter < 5; ++iter) {
        SymGram g = random_positive_definite(rng, 2, 4);
        auto [l1, chain1] = chain_prime_linking(g);
        check_main_bound(l1.gram);
        auto [m, chain2] = complex_glue(l1.gram);
        check_main_bound(m.gram);
        auto [u, chain3] = quaternionic_glue(m.gram);
        check_main_bound(u.gram);
    }
}

TEST_CASE("two-copy embedding on pinned examples") {
    EmbedTwoResult r5 = embed_two_copies(SymGram::diagonal({Int(5)}));
    REQUIRE(r5.ok);
    CHECK(is_standard_cube(r5.lattice->gram));

    EmbedTwoResult r3 = embed_two_copies(SymGram::diagonal({Int(3)}));
    CHECK(!r3.ok);
    CHECK(r3.certificate_prime == 3);

    EmbedTwoResult r9 = embed_two_copies(SymGram::diagonal({Int(9)}));
    REQUIRE(r9.ok);
    CHECK(is_standard_cube(r9.lattice->gram));

    // 18 = 2 * 3^2: the 3-part has even exponent, so two copies suffice
    EmbedTwoResult r18 = embed_two_copies(SymGram::diagonal({Int(18)}));
    REQUIRE(r18.ok);
    CHECK(r18.lattice->gram.abs_det() == 1);

    EmbedTwoResult r21 = embed_two_copies(SymGram::diagonal({Int(21)}));
    CHECK(!r21.ok);
    CHECK(r21.certificate_prime == 3);

    // opposite residue types at 3 force the cross-copy isotropic steps
    EmbedTwoResult r36 = embed_two_copies(SymGram::diagonal({Int(3), Int(6)}));
    REQUIRE(r36.ok);
    CHECK(r36.lattice->gram.abs_det() == 1);
    CHECK(!r36.cross_steps.empty());
}

TEST_CASE("two-copy embedding matches the even-exponent criterion") {
    for (long long d = 1; d <= 30; ++d) {
        bool expect = true;
        for (const auto& [p, e] : factorize(to_int(d)))
            if (p % 4 == 3 && e % 2 == 1) expect = false;
        EmbedTwoResult r = embed_two_copies(SymGram::diagonal({to_int(d)}));
        CHECK(r.ok == expect);
        if (r.ok) CHECK(r.lattice->gram.abs_det() == 1);
    }
}
