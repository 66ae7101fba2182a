#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rookalg/shifted_symmetric.hpp"

using namespace rookalg;

TEST_CASE("shifted symmetry test") {
    // p_1 truncation is plain old x_1 + ... + x_n
    for (int n = 1; n <= 4; ++n) {
        ShiftedPoly p1 = generator(GenKind::P, 1, n);
        ShiftedPoly expect(n);
        for (int i = 1; i <= n; ++i) expect = expect + ShiftedPoly::variable(i, n);
        CHECK(p1 == expect);
        CHECK(is_shifted_symmetric(p1));
    }
    CHECK_FALSE(is_shifted_symmetric(ShiftedPoly::variable(1, 2)));
    CHECK(is_shifted_symmetric(generator(GenKind::E, 2, 3)));
    CHECK(is_shifted_symmetric(ShiftedPoly::constant(3, Rational(5))));
}

TEST_CASE("generator evaluation on partitions") {
    // p_1 evaluates to |lambda|
    for (const auto& lam : partitions_up_to(4)) {
        int n = std::max(1, lam.num_parts());
        CHECK(generator(GenKind::P, 1, n).evaluate(lam) == lam.size());
        CHECK(power_sum_eval(1, lam) == lam.size());
    }
    // p_2 on (2) is 0; p_2 on (1,1) is -4
    CHECK(power_sum_eval(2, Partition({2})) == 0);
    CHECK(power_sum_eval(2, Partition({1, 1})) == -4);
    CHECK(generator(GenKind::P, 2, 3).evaluate(Partition({2})) == 0);
    CHECK(generator(GenKind::P, 2, 3).evaluate(Partition({1, 1})) == -4);

    // on the empty partition a generator returns its constant term (zero)
    for (GenKind kind : {GenKind::E, GenKind::H, GenKind::P})
        for (int M = 1; M <= 3; ++M) CHECK(generator(kind, M, 3).evaluate(Partition{}) == 0);

    CHECK_THROWS_AS(generator(GenKind::P, 1, 1).evaluate(Partition({1, 1})), std::domain_error);
}

TEST_CASE("generating function identities") {
    const int n = 4, order = 4;
    auto E = generator_series(GenKind::E, order, n);
    auto H = generator_series(GenKind::H, order, n);
    // E(t) H(-t) = 1
    for (int d = 0; d <= order; ++d) {
        ShiftedPoly acc(n);
        for (int i = 0; i <= d; ++i)
            acc = acc + E[i] * H[d - i] * Rational((d - i) % 2 == 0 ? 1 : -1);
        if (d == 0)
            CHECK(acc == ShiftedPoly::constant(n, Rational(1)));
        else
            CHECK(acc.is_zero());
    }
    // t H'(t) = H(t) sum_M p_M t^M
    for (int d = 1; d <= order; ++d) {
        ShiftedPoly lhs = H[d] * Rational(d);
        ShiftedPoly rhs(n);
        for (int M = 1; M <= d; ++M) rhs = rhs + H[d - M] * generator(GenKind::P, M, n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("coherence under specializing the last variable") {
    for (GenKind kind : {GenKind::E, GenKind::H, GenKind::P})
        for (int M = 1; M <= 4; ++M)
            for (int n = 1; n <= 4; ++n)
                CHECK(generator(kind, M, n).set_last_var_zero() == generator(kind, M, n - 1));
}

TEST_CASE("top homogeneous components are classical") {
    for (GenKind kind : {GenKind::E, GenKind::H, GenKind::P})
        for (int M = 1; M <= 4; ++M)
            for (int n = 1; n <= 4; ++n)
                CHECK(generator(kind, M, n).homogeneous_component(M) ==
                      classical_symmetric(kind, M, n));
    // spot values: e_2(x1,x2) = x1 x2, h_2(x1) = x1^2
    ShiftedPoly e2 = classical_symmetric(GenKind::E, 2, 2);
    ShiftedPoly expect(2);
    expect.add_term({1, 1}, Rational(1));
    CHECK(e2 == expect);
}

TEST_CASE("polynomial text form") {
    ShiftedPoly p = generator(GenKind::P, 2, 2);
    CHECK(p.str() == "1*x1^2 - 2*x1 + 1*x2^2 - 4*x2");  // leading monomials first
    CHECK(ShiftedPoly(3).str() == "0");
}

TEST_CASE("bridge between eigenvalues and shifted symmetric functions") {
    auto b1 = bridge_check(1, 3);
    CHECK(b1.ok());
    REQUIRE(b1.fit.size() == 1);
    CHECK(b1.fit[0].monomial == Partition({1}));
    CHECK(b1.fit[0].coeff == 1);

    auto b2 = bridge_check(2, 3);
    CHECK(b2.ok());
    REQUIRE(b2.fit.size() == 2);
    // fit order follows the label order: (1) before (2)
    CHECK(b2.fit[0].monomial == Partition({1}));
    CHECK(b2.fit[0].coeff == 1);
    CHECK(b2.fit[1].monomial == Partition({2}));
    CHECK(b2.fit[1].coeff == 1);

    auto b3 = bridge_check(3, 3);
    CHECK(b3.ok());
}
