#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "rookalg/central_families.hpp"
#include "rookalg/reps.hpp"

using namespace rookalg;

TEST_CASE("standard tableaux") {
    CHECK(standard_tableau_count(Partition({3})) == 1);
    CHECK(standard_tableau_count(Partition({1, 1, 1})) == 1);
    CHECK(standard_tableau_count(Partition({2, 1})) == 2);
    CHECK(standard_tableau_count(Partition({2, 2})) == 2);
    CHECK(standard_tableau_count(Partition({3, 2})) == 5);
    CHECK(standard_tableau_count(Partition{}) == 1);
}

TEST_CASE("seminormal representations of S(N)") {
    // trivial: every s_k -> (1)
    SeminormalRep triv(Partition({3}));
    CHECK(triv.dim() == 1);
    for (int k = 1; k < 3; ++k) CHECK(*triv.transposition_image(k).as_scalar() == 1);

    // sign: s_1 -> (-1)
    SeminormalRep sign(Partition({1, 1}));
    CHECK(sign.dim() == 1);
    CHECK(*sign.transposition_image(1).as_scalar() == -1);

    // (2,1): dimension 2, character of s_1 is 0
    SeminormalRep twoone(Partition({2, 1}));
    REQUIRE(twoone.dim() == 2);
    auto s1 = twoone.transposition_image(1);
    CHECK(s1.get(0, 0) + s1.get(1, 1) == 0);
    auto s2 = twoone.transposition_image(2);
    CHECK(s2.get(0, 0) + s2.get(1, 1) == 0);

    // relation checks run in the constructor; a larger shape exercises braid
    SeminormalRep big(Partition({3, 2}));
    CHECK(big.dim() == 5);

    std::mt19937 rng(2718);
    auto perms = enumerate_gamma(4);
    std::vector<PartialBijection> s4;
    for (const auto& g : perms)
        if (g.is_permutation()) s4.push_back(g);
    SeminormalRep rep(Partition({2, 2}));
    std::uniform_int_distribution<std::size_t> pick(0, s4.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        const auto& a = s4[pick(rng)];
        const auto& b = s4[pick(rng)];
        CHECK(rep.matrix(compose(a, b)) == rep.matrix(a) * rep.matrix(b));
    }
}

TEST_CASE("gamma representations") {
    // empty diagram: the trivial representation of Gamma(n)
    GammaRep triv(3, Partition{});
    CHECK(triv.dim() == 1);
    for (const auto& g : enumerate_gamma(3)) CHECK(*triv.matrix(g).as_scalar() == 1);

    // lambda = (1), n = 2: eps_1 acts as diag(0, 1) on {omega=(1), omega=(2)}
    GammaRep v(2, Partition({1}));
    REQUIRE(v.dim() == 2);
    auto e1 = v.matrix(PartialBijection::eps(1, 2));
    CHECK(e1.get(0, 0) == 0);
    CHECK(e1.get(1, 1) == 1);
    CHECK(e1.get(0, 1) == 0);
    CHECK(e1.get(1, 0) == 0);

    CHECK(GammaRep(4, Partition({2, 1})).dim() == 4 * 2);
    CHECK_THROWS_AS(GammaRep(2, Partition({2, 1})), std::domain_error);

    // multiplicativity against the matrix oracle
    GammaRep rep(3, Partition({2}));
    auto all = enumerate_gamma(3);
    std::mt19937 rng(31415);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = all[pick(rng)];
        const auto& b = all[pick(rng)];
        CHECK(rep.matrix(compose(a, b)) == rep.matrix(a) * rep.matrix(b));
    }
}

TEST_CASE("central eigenvalues") {
    // Delta_n^{(1)} acts by |lambda|
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : partitions_up_to(n)) {
            GammaRep rep(n, lam);
            CHECK(central_eigenvalue(delta_element(n, Partition({1})), rep) == lam.size());
        }
    // zero for r > |lambda|
    {
        GammaRep rep(3, Partition({1}));
        CHECK(central_eigenvalue(delta_element(3, Partition({2})), rep) == 0);
        CHECK(central_eigenvalue(delta_element(3, Partition({3})), rep) == 0);
    }
    // Delta_4^{(2)} on T_4((2)) equals the c_2^{(2)} eigenvalue on pi_{(2)}
    {
        GammaRep rep(4, Partition({2}));
        SeminormalRep pi(Partition({2}));
        Rational lhs = central_eigenvalue(delta_element(4, Partition({2})), rep);
        Rational rhs = central_eigenvalue(c_element(2, Partition({2})), pi);
        CHECK(lhs == rhs);
        CHECK(lhs == 2);  // twice the content sum 0 + 1
    }
    // a non-central element is rejected
    {
        GammaRep rep(2, Partition({1}));
        CHECK_THROWS_AS(central_eigenvalue(AlgebraElement::gen_eps(1, 2), rep), NotCentralError);
    }
}

TEST_CASE("classification for small n") {
    auto r2 = classification_check(2);
    CHECK(r2.ok());
    REQUIRE(r2.reps.size() == 4);  // {}, (1), (2), (1,1)
    std::multiset<int> dims;
    for (const auto& rec : r2.reps) dims.insert(rec.dim);
    CHECK(dims == std::multiset<int>({1, 1, 1, 2}));
    CHECK(r2.dim_square_sum == 7);

    auto r3 = classification_check(3);
    CHECK(r3.ok());
    CHECK(r3.dim_square_sum == 34);
    for (const auto& rec : r3.reps)
        if (rec.lambda == Partition({1}))
            CHECK(rec.irreducible);  // 1-dimensional commutant
}
