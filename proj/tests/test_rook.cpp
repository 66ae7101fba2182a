#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "rookalg/rook.hpp"

using namespace rookalg;

namespace {

// independent oracle: 0/1 matrix product of the monomial matrices
std::vector<std::vector<int>> to_matrix(const PartialBijection& g) {
    std::vector<std::vector<int>> M(g.n(), std::vector<int>(g.n(), 0));
    for (auto [j, t] : g.pairs()) M[t - 1][j - 1] = 1;
    return M;
}

PartialBijection from_matrix(const std::vector<std::vector<int>>& M, int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (M[i][j]) pairs.emplace_back(j + 1, i + 1);
    return PartialBijection(n, pairs);
}

std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& A,
                                      const std::vector<std::vector<int>>& B) {
    int n = static_cast<int>(A.size());
    std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (A[i][k])
                for (int j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

PartialBijection random_element(int n, std::mt19937& rng) {
    auto all = enumerate_gamma(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

}  // namespace

TEST_CASE("compose matches the matrix product oracle") {
    // a=[2; 1->2], b=[2; 2->1] -> [2; 2->2]
    auto a = PartialBijection::parse("[2; 1->2]");
    auto b = PartialBijection::parse("[2; 2->1]");
    CHECK(compose(a, b) == PartialBijection::parse("[2; 2->2]"));

    CHECK(compose(PartialBijection::identity(3), PartialBijection::parse("[3; 1->3]")) ==
          PartialBijection::parse("[3; 1->3]"));

    // eps_1 * eps_2 in Gamma(2) is the zero element: diag(0,1) diag(1,0) = 0
    CHECK(compose(PartialBijection::eps(1, 2), PartialBijection::eps(2, 2)) ==
          PartialBijection::zero(2));

    std::mt19937 rng(12);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            auto x = random_element(n, rng);
            auto y = random_element(n, rng);
            CHECK(compose(x, y) == from_matrix(mat_mul(to_matrix(x), to_matrix(y)), n));
        }
    CHECK_THROWS(compose(PartialBijection::identity(2), PartialBijection::identity(3)));
}

TEST_CASE("compose is associative; unit and zero laws") {
    std::mt19937 rng(34);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            auto a = random_element(n, rng);
            auto b = random_element(n, rng);
            auto c = random_element(n, rng);
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
        auto g = random_element(n, rng);
        CHECK(compose(PartialBijection::identity(n), g) == g);
        CHECK(compose(g, PartialBijection::identity(n)) == g);
        CHECK(compose(PartialBijection::zero(n), g) == PartialBijection::zero(n));
        CHECK(compose(g, PartialBijection::zero(n)) == PartialBijection::zero(n));
    }
}

TEST_CASE("star is an involutive anti-homomorphism") {
    CHECK(PartialBijection::parse("[3; 1->2]").star() == PartialBijection::parse("[3; 2->1]"));
    CHECK(PartialBijection::identity(4).star() == PartialBijection::identity(4));

    // star(a) a = identity on dom a
    auto a = PartialBijection::parse("[3; 1->2, 3->1]");
    CHECK(compose(a.star(), a) == PartialBijection::parse("[3; 1->1, 3->3]"));

    std::mt19937 rng(56);
    for (int trial = 0; trial < 60; ++trial) {
        auto x = random_element(4, rng);
        auto y = random_element(4, rng);
        CHECK(x.star().star() == x);
        CHECK(compose(x, y).star() == compose(y.star(), x.star()));
    }

    // 1_Y idempotents: self-adjoint and idempotent
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 3; ++i)
            if (mask & (1u << i)) pairs.emplace_back(i + 1, i + 1);
        PartialBijection one_y(3, pairs);
        CHECK(one_y.star() == one_y);
        CHECK(compose(one_y, one_y) == one_y);
    }
}

TEST_CASE("project_theta strikes rows and columns") {
    CHECK(project_theta(PartialBijection::transposition(1, 2), 1) == PartialBijection::zero(1));
    CHECK(project_theta(PartialBijection::eps(2, 2), 1) == PartialBijection::identity(1));
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(project_theta(PartialBijection::identity(n), k) ==
                  PartialBijection::identity(k));
    CHECK_THROWS(project_theta(PartialBijection::identity(2), 3));
}

TEST_CASE("embeddings phi and psi") {
    CHECK(embed_phi(PartialBijection::zero(1), 2) == PartialBijection::eps(1, 2));
    CHECK(embed_psi(PartialBijection::identity(1), 3) == PartialBijection::parse("[3; 1->1]"));
    std::mt19937 rng(78);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_element(3, rng);
        CHECK(project_theta(embed_phi(a, 5), 3) == a);
        CHECK(embed_psi(a, 5).rank() == a.rank());
    }
    CHECK(embed_phi(PartialBijection::identity(3), 5) == PartialBijection::identity(5));
    CHECK_THROWS(embed_phi(PartialBijection::identity(3), 2));
}

TEST_CASE("degrees and ranks") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= n; ++m) {
            auto d = degrees(PartialBijection::identity(n), m);
            CHECK(d.deg == 0);
            CHECK(d.deg_m == 0);
            CHECK(d.rank == n);
        }
    auto z = degrees(PartialBijection::zero(3), 1);
    CHECK(z.deg == 3);
    CHECK(z.deg_m == 2);
    CHECK(z.rank == 0);

    auto g = compose(PartialBijection::transposition(1, 3), PartialBijection::eps(3, 3));
    CHECK(g.deg() == 3);
    CHECK(g.rank() == 2);
}

TEST_CASE("enumerate hits the dimension formula and is duplicate-free") {
    std::vector<std::uint64_t> expected = {1, 2, 7, 34, 209, 1546, 13327};
    for (int n = 0; n <= 6; ++n) CHECK(gamma_size(n) == expected[n]);
    for (int n = 0; n <= 5; ++n) {
        auto all = enumerate_gamma(n);
        CHECK(all.size() == gamma_size(n));
        CHECK(std::is_sorted(all.begin(), all.end()));
        std::set<PartialBijection> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
    }
    // n=1: the zero map and the identity
    auto g1 = enumerate_gamma(1);
    REQUIRE(g1.size() == 2);
    CHECK(g1[0] == PartialBijection::zero(1));
    CHECK(g1[1] == PartialBijection::identity(1));
}

TEST_CASE("textual round trip and named shorthands") {
    std::mt19937 rng(90);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_element(4, rng);
        CHECK(PartialBijection::parse(g.str()) == g);
    }
    CHECK(PartialBijection::parse("[2;]") == PartialBijection::zero(2));
    CHECK(PartialBijection::parse(" [ 3 ; 1 -> 2 , 2 -> 1 ] ") ==
          PartialBijection(3, {{1, 2}, {2, 1}}));
    CHECK(PartialBijection::parse("[3; 1->2, 2->1, 3->3]") ==
          PartialBijection::transposition(1, 3));
    CHECK_THROWS(PartialBijection::parse("[2; 1->1, 1->2]"));  // repeated source
    CHECK_THROWS(PartialBijection::parse("[2; 1->1, 2->1]"));  // repeated target
    CHECK_THROWS(PartialBijection::parse("[2; 3->1]"));        // out of range
}

TEST_CASE("partitions") {
    CHECK(Partition{}.size() == 0);
    CHECK(Partition({3, 1}).size() == 4);
    CHECK_THROWS(Partition({1, 3}));
    CHECK_THROWS(Partition({2, 0}));
    CHECK(Partition({2, 1}).union_with(Partition({3, 1})) == Partition({3, 2, 1, 1}));
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_up_to(4).size() == 12);
    CHECK(Partition::parse("(2,1)") == Partition({2, 1}));
    CHECK(Partition::parse("()") == Partition{});
}

TEST_CASE("rook patterns") {
    CHECK(RookPattern::identity(3).ord() == 0);
    CHECK(RookPattern::diagonal_z(3, 2).ord() == 1);
    CHECK(RookPattern::identity(2).is_permutation_pattern());
    CHECK_FALSE(RookPattern(2, {{1, 1, 0}}).is_permutation_pattern());
    CHECK_THROWS(RookPattern(2, {{1, 1, 0}, {1, 2, 0}}));  // two entries in a row

    // |Gamma(1, Z+)| with ord <= M is M + 2
    for (int M = 0; M <= 5; ++M) CHECK(pattern_count(1, M) == static_cast<std::uint64_t>(M + 2));
    CHECK(pattern_count(2, 0) == 7);  // the 0/1 patterns are Gamma(2)
    CHECK(pattern_count(2, 1) == 15);
}

TEST_CASE("orbit invariants parameterize S_m(n)-orbits") {
    // identity: alpha = identity pattern, M = (1^{n-m})
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= n; ++m) {
            auto [alpha, M] = orbit_invariant(PartialBijection::identity(n), m);
            CHECK(alpha == RookPattern::identity(m));
            CHECK(M == Partition(std::vector<int>(n - m, 1)));
        }

    // n=2, m=1, s=(1 2): one pass-through point, alpha = [z], M empty
    {
        auto [alpha, M] = orbit_invariant(PartialBijection::transposition(1, 2), 1);
        CHECK(alpha == RookPattern(1, {{1, 1, 1}}));
        CHECK(M == Partition{});
    }
    // n=3, m=0, 3-cycle: empty pattern, M = (3)
    {
        auto [alpha, M] = orbit_invariant(PartialBijection::cycle({1, 2, 3}, 3), 0);
        CHECK(alpha == RookPattern(0));
        CHECK(M == Partition({3}));
    }
    CHECK_THROWS_AS(orbit_invariant(PartialBijection::zero(2), 1), std::domain_error);

    // brute-force oracle: each invariant class is exactly one conjugation orbit
    for (int n = 1; n <= 5; ++n) {
        for (int m = 0; m <= std::min(2, n); ++m) {
            std::vector<PartialBijection> group;
            for (const auto& g : enumerate_gamma(n)) {
                if (!g.is_permutation()) continue;
                bool fixes = true;
                for (int i = 1; i <= m; ++i)
                    if (g.apply(i) != i) fixes = false;
                if (fixes) group.push_back(g);
            }
            std::map<std::pair<RookPattern, Partition>, std::set<PartialBijection>> classes;
            for (const auto& s : enumerate_gamma_mn(n, m))
                classes[orbit_invariant(s, m)].insert(s);
            for (const auto& [inv, members] : classes) {
                std::set<PartialBijection> reached{*members.begin()};
                std::vector<PartialBijection> queue{*members.begin()};
                for (std::size_t q = 0; q < queue.size(); ++q)
                    for (const auto& g : group) {
                        auto conj = compose(compose(g, queue[q]), g.star());
                        if (reached.insert(conj).second) queue.push_back(conj);
                    }
                CHECK(reached == members);
                CHECK(inv.first.ord() + inv.second.size() == n - m);
            }
        }
    }
}
