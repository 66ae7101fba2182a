#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rookalg/central_families.hpp"
#include "rookalg/monoid_algebra.hpp"

using namespace rookalg;

TEST_CASE("c elements") {
    // c_n^{(1)} = n * 1
    for (int n = 1; n <= 4; ++n)
        CHECK(c_element(n, Partition({1})) == AlgebraElement::unit(n) * Rational(n));

    // c_2^{(2)} = 2 * (1 2): two ordered pairs give the same transposition
    CHECK(c_element(2, Partition({2})) == AlgebraElement::gen_s(1, 2) * Rational(2));

    // appending p ones multiplies by (n-|M|)...(n-|M|-p+1)
    for (int n = 2; n <= 4; ++n) {
        auto c2 = c_element(n, Partition({2}));
        CHECK(c_element(n, Partition({2, 1})) == c2 * Rational(n - 2));
        if (n >= 3)
            CHECK(c_element(n, Partition({2, 1, 1})) == c2 * Rational((n - 2) * (n - 3)));
    }
    CHECK(c_element(4, Partition{}) == AlgebraElement::unit(4));

    // degrees: deg c^{(1)} = 0, deg c^{(M)} = M for M >= 2
    CHECK(c_element(3, Partition({1})).deg() == 0);
    CHECK(c_element(3, Partition({2})).deg() == 2);
    CHECK(c_element(3, Partition({3})).deg() == 3);
}

TEST_CASE("delta elements at m = 0") {
    // Delta_n^{(1)} = sum (1 - eps_i)
    for (int n = 1; n <= 4; ++n) {
        AlgebraElement expect(n);
        for (int i = 1; i <= n; ++i) expect += AlgebraElement::one_minus_eps(i, n);
        CHECK(delta_element(n, Partition({1})) == expect);
    }
    // vanishing convention
    CHECK(delta_element(1, Partition({2})).is_zero());

    // Delta_2^{(2)} = 2 ((1 2) - [2;2->1] - [2;1->2] + [2;])
    auto d = delta_element(2, Partition({2}));
    auto expect = AlgebraElement::parse("2*s(1,2) - 2*[2; 2->1] - 2*[2; 1->2] + 2*[2;]", 2);
    CHECK(d == expect);

    CHECK(delta_element(3, Partition{}) == AlgebraElement::unit(3));
    CHECK(delta_element(3, Partition({2})).deg() == 2);
}

TEST_CASE("delta elements at m > 0") {
    // level-m labels of total zero are the phi-embedded Gamma(m) elements
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 2; ++m)
            for (const auto& alpha : enumerate_patterns(m, 0)) {
                std::vector<std::pair<int, int>> pairs;
                for (const auto& e : alpha.entries()) pairs.emplace_back(e.col, e.row);
                PartialBijection g(m, pairs);
                CHECK(delta_element(n, alpha, Partition{}) ==
                      AlgebraElement::basis(embed_phi(g, n)));
            }

    // Delta^{alpha_k, empty} instantiates u_{k|n} when m = k (the lower terms
    // vanish because the sum starts at m + 1)
    for (int n = 2; n <= 4; ++n) {
        auto d = delta_element(n, RookPattern::diagonal_z(1, 1), Partition{});
        CHECK(d == jm_element(n, 1));
    }

    // membership in the centralizer
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}) {
        auto cent = centralizer(n, m);
        for (const auto& label : basis_labels(m, n - m))
            CHECK(cent.contains(delta_element(n, label.alpha, label.M)));
    }

    // theta compatibility with the zero convention, all labels, n <= 5
    // (the projected size must still be >= m for the family to make sense)
    for (int m = 0; m <= 2; ++m)
        for (int n = m + 1; n <= 5; ++n)
            for (const auto& label : basis_labels(m, n - m))
                CHECK(theta_n(delta_element(n, label.alpha, label.M)) ==
                      delta_element(n - 1, label.alpha, label.M));
}

TEST_CASE("jm elements") {
    for (int n = 1; n <= 5; ++n) CHECK(jm_element(n, n).is_zero());

    CHECK(jm_element(2, 1) ==
          AlgebraElement::parse("s(1,2) - [2; 2->1] - [2; 1->2] + [2;]", 2));

    // theta_n(u_{k|n}) = u_{k|n-1}
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n - 1; ++k) CHECK(theta_n(jm_element(n, k)) == jm_element(n - 1, k));

    // the cross relation s_k u_k = u_{k+1} s_k + (1-eps_k)(1-eps_{k+1})
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k < n; ++k) {
            auto sk = AlgebraElement::gen_s(k, n);
            auto rhs = multiply(jm_element(n, k + 1), sk) +
                       multiply(AlgebraElement::one_minus_eps(k, n),
                                AlgebraElement::one_minus_eps(k + 1, n));
            CHECK(multiply(sk, jm_element(n, k)) == rhs);
        }
}

TEST_CASE("verify_basis reports") {
    auto r30 = verify_basis(3, 0);
    CHECK(r30.ok());
    CHECK(r30.label_count == 7);
    CHECK(r30.rank == 7);
    CHECK(r30.centralizer_dim == 7);

    auto r31 = verify_basis(3, 1);
    CHECK(r31.ok());
    CHECK(r31.label_count == 11);
    CHECK(r31.rank == 11);

    // the m = n edge case is flagged; the ord-0 labels are just Gamma(m)
    auto r22 = verify_basis(2, 2);
    CHECK(r22.vacuous);
    CHECK(r22.ok());
    CHECK(r22.label_count == 7);

    // the full stated range (n <= 5, m <= 2)
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= std::min(2, n); ++m) CHECK(verify_basis(n, m).ok());
    auto r51 = verify_basis(5, 1);
    auto r52 = verify_basis(5, 2);
    CHECK(r51.ok());
    CHECK(r52.ok());
    CHECK(r51.centralizer_dim == 38);
    CHECK(r52.centralizer_dim == 113);
}

TEST_CASE("limit elements and structure constants") {
    // Delta^{(1)} * Delta^{(1)} = Delta^{(1,1)} + Delta^{(1)}
    auto d1 = LimitElement::from_label(BasisLabel{RookPattern(0), Partition({1})});
    auto prod = structure_constants(d1, d1);
    LimitElement expect(0);
    expect.add(BasisLabel{RookPattern(0), Partition({1, 1})}, Rational(1));
    expect.add(BasisLabel{RookPattern(0), Partition({1})}, Rational(1));
    CHECK(prod == expect);

    // the unit is neutral
    auto one = LimitElement::unit(0);
    CHECK(structure_constants(one, d1) == d1);
    CHECK(structure_constants(d1, one) == d1);

    // stability: recomputing at a larger instantiation gives the same labels
    const int bigger = 0 + d1.m_degree() + d1.m_degree() + 1;
    auto re = expand_in_delta_basis(
        multiply(d1.instantiate(bigger), d1.instantiate(bigger)), 0);
    CHECK(re == prod);

    // leading term law: Delta^M Delta^L = Delta^{M u L} + lower order
    auto d2 = LimitElement::from_label(BasisLabel{RookPattern(0), Partition({2})});
    auto p = structure_constants(d1, d2);
    CHECK(p.combo().count(BasisLabel{RookPattern(0), Partition({2, 1})}) == 1);
    CHECK(p.combo().at(BasisLabel{RookPattern(0), Partition({2, 1})}) == 1);
    for (const auto& [label, c] : p.combo())
        CHECK(label.total() <= 3);

    // instantiation: convention and theta compatibility
    CHECK(d2.instantiate(1).is_zero());
    CHECK(theta_n(d2.instantiate(3)) == d2.instantiate(2));

    // u_k as a limit element instantiates to the Jucys-Murphy elements
    for (int m = 1; m <= 2; ++m)
        for (int k = 1; k <= m; ++k) {
            auto u = jm_limit(m, k);
            for (int n = m; n <= m + 3; ++n) CHECK(u.instantiate(n) == jm_element(n, k));
        }
}

TEST_CASE("label ordering and text form") {
    auto labels = basis_labels(1, 2);
    CHECK(labels.size() == 11);
    for (std::size_t i = 1; i < labels.size(); ++i)
        CHECK(labels[i - 1].total() <= labels[i].total());
    BasisLabel l{RookPattern(1, {{1, 1, 1}}), Partition({2, 1})};
    CHECK(l.str(4) == "delta{alpha=[(1,1,1)]; M=(2,1); m=1; n=4}");
}

TEST_CASE("c families span the conjugation-invariant space") {
    // c_n^M commutes with every permutation (it is a class-sum multiple)
    for (int n = 2; n <= 4; ++n)
        for (const auto& M : partitions_up_to(n)) {
            auto c = c_element(n, M);
            for (const auto& g : enumerate_gamma(n)) {
                if (!g.is_permutation()) continue;
                auto bg = AlgebraElement::basis(g);
                CHECK(multiply(c, bg) == multiply(bg, c));
            }
        }

    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m <= std::min(2, n); ++m) {
            // c_n^{alpha,M} is supported on Gamma(m,n) and S_m(n)-invariant
            std::vector<PartialBijection> group;
            for (const auto& g : enumerate_gamma(n)) {
                if (!g.is_permutation()) continue;
                bool fixes = true;
                for (int i = 1; i <= m; ++i)
                    if (g.apply(i) != i) fixes = false;
                if (fixes) group.push_back(g);
            }
            auto idx = GammaIndex::shared(n);
            const std::size_t orbit_count = zmn_orbit_sums(n, m).size();
            IncrementalSpan span(static_cast<int>(idx->size()));
            int top_count = 0;
            for (const auto& alpha : enumerate_patterns(m, n - m))
                for (const auto& M : partitions_up_to(n - m - alpha.ord())) {
                    auto c = c_element(n, alpha, M);
                    for (const auto& [g, coeff] : c.terms()) CHECK(in_gamma_mn(g, m));
                    for (const auto& s : group) {
                        auto bs = AlgebraElement::basis(s);
                        CHECK(multiply(multiply(bs, c), bs.star()) == c);
                    }
                    // the top-total labels are multiples of orbit indicators
                    if (alpha.ord() + M.size() == n - m) {
                        ++top_count;
                        Rational lead(0);
                        for (const auto& [g, coeff] : c.terms()) {
                            CHECK(orbit_invariant(g, m) ==
                                  std::make_pair(alpha, M));
                            if (lead == 0)
                                lead = coeff;
                            else
                                CHECK(coeff == lead);
                        }
                    }
                    SparseQVec v;
                    for (const auto& [g, coeff] : c.terms())
                        v.emplace_back(idx->index_of(g), coeff);
                    span.add(v);
                }
            // the whole c family spans Z_m(n), and the top-total labels
            // alone are a basis (one indicator per orbit)
            CHECK(static_cast<std::size_t>(span.rank()) == orbit_count);
            CHECK(static_cast<std::size_t>(top_count) == orbit_count);

            // alternative basis: labels without parts equal to 1
            IncrementalSpan alt(static_cast<int>(idx->size()));
            int alt_count = 0, alt_rank = 0;
            for (const auto& alpha : enumerate_patterns(m, n - m))
                for (const auto& M : partitions_up_to(n - m - alpha.ord())) {
                    bool has_one = false;
                    for (int part : M.parts())
                        if (part == 1) has_one = true;
                    if (has_one) continue;
                    ++alt_count;
                    auto c = c_element(n, alpha, M);
                    SparseQVec v;
                    for (const auto& [g, coeff] : c.terms())
                        v.emplace_back(idx->index_of(g), coeff);
                    if (alt.add(v)) ++alt_rank;
                }
            CHECK(alt_rank == alt_count);
            CHECK(static_cast<std::size_t>(alt_rank) == orbit_count);
        }
}

TEST_CASE("delta monomials of bounded weight span the filtration") {
    // products Delta^{(1)}^{k1} Delta^{(2)}^{k2} ... with sum i k_i <= M,
    // instantiated above M, are independent and span F^M of the center
    for (int M = 1; M <= 3; ++M) {
        const int n = M + 1;
        auto idx = GammaIndex::shared(n);
        IncrementalSpan span(static_cast<int>(idx->size()));
        int count = 0, indep = 0;
        for (const auto& mu : partitions_up_to(M)) {
            AlgebraElement prod = AlgebraElement::unit(n);
            for (int part : mu.parts())
                prod = multiply(prod, delta_element(n, Partition({part})));
            ++count;
            SparseQVec v;
            for (const auto& [g, c] : prod.terms()) v.emplace_back(idx->index_of(g), c);
            if (span.add(v)) ++indep;
        }
        CHECK(count == indep);
        auto filt = filtration_term(centralizer(n, 0), M, 0);
        CHECK(filt.dim() == count);
        for (const auto& b : filt.basis()) {
            SparseQVec v;
            for (const auto& [g, c] : b.terms()) v.emplace_back(idx->index_of(g), c);
            CHECK(span.contains(v));
        }
    }
}

TEST_CASE("structure constants at level 1") {
    // u_1 * u_1 expands without leaving the basis, and the product agrees
    // with the algebra at every instantiation size
    auto u = jm_limit(1, 1);
    auto uu = structure_constants(u, u);
    for (int n = 1; n <= 4; ++n)
        CHECK(uu.instantiate(n) == multiply(jm_element(n, 1), jm_element(n, 1)));
}
