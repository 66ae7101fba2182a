#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "rookalg/qlinalg.hpp"

using namespace rookalg;

namespace {

// independent dense elimination oracle, plain rational row reduction
int dense_rank(std::vector<std::vector<Rational>> M) {
    int rows = static_cast<int>(M.size());
    int cols = rows ? static_cast<int>(M[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(M[r], M[pivot]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rational f = M[i][c] / M[r][c];
            for (int j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return r;
}

RationalMatrix from_ints(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Rational>> q;
    for (const auto& row : rows) {
        q.emplace_back();
        for (int v : row) q.back().emplace_back(v);
    }
    return RationalMatrix::from_dense(q);
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(RationalMatrix(3, 4)) == 0);
    CHECK(rank(RationalMatrix::identity(5)) == 5);
    CHECK(rank(from_ints({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basics and rank-nullity") {
    CHECK(kernel_basis(RationalMatrix::identity(4)).empty());

    auto k = kernel_basis(from_ints({{1, -1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK(k[0][0] != 0);

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        RationalMatrix M(rows, cols);
        std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols, Rational(0)));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                int v = entry(rng);
                dense[i][j] = v;
                if (v) M.set(i, j, Rational(v));
            }
        int r = rank(M);
        CHECK(r == dense_rank(dense));
        auto kb = kernel_basis(M);
        CHECK(static_cast<int>(kb.size()) == cols - r);
        for (const auto& v : kb) {
            for (int i = 0; i < rows; ++i) {
                Rational acc(0);
                for (int j = 0; j < cols; ++j) acc += dense[i][j] * v[j];
                CHECK(acc == 0);
            }
        }
        // kernel vectors are independent
        if (!kb.empty()) CHECK(rank(RationalMatrix::from_columns(kb)) ==
                               static_cast<int>(kb.size()));
    }
}

TEST_CASE("solve_in_span") {
    std::vector<std::vector<Rational>> vecs = {
        {Rational(1), Rational(0), Rational(2)},
        {Rational(0), Rational(1), Rational(1)},
    };
    // target = first basis vector
    auto c = solve_in_span(vecs, {Rational(1), Rational(0), Rational(2)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == 0);

    // outside the span
    CHECK_FALSE(solve_in_span(vecs, {Rational(0), Rational(0), Rational(1)}).has_value());

    // overdetermined consistent round trip
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = 5, k = 3;
        std::vector<std::vector<Rational>> basis(k, std::vector<Rational>(dim));
        for (auto& v : basis)
            for (auto& x : v) x = entry(rng);
        std::vector<Rational> coeffs(k);
        for (auto& x : coeffs) x = rational_of(entry(rng), 2);
        std::vector<Rational> target(dim, Rational(0));
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < dim; ++i) target[i] += coeffs[j] * basis[j][i];
        auto back = solve_in_span(basis, target);
        REQUIRE(back.has_value());
        std::vector<Rational> rebuilt(dim, Rational(0));
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < dim; ++i) rebuilt[i] += (*back)[j] * basis[j][i];
        CHECK(rebuilt == target);
    }
}

TEST_CASE("incremental span") {
    IncrementalSpan span(4);
    // v1 = e0 + e1, v2 = e1 - e2; v1 - v2 = e0 + e2 lies in the span
    CHECK(span.add({{0, Rational(1)}, {1, Rational(1)}}));
    CHECK(span.add({{1, Rational(1)}, {2, Rational(-1)}}));
    CHECK_FALSE(span.add({{0, Rational(1)}, {2, Rational(1)}}));
    CHECK(span.rank() == 2);
    CHECK(span.contains({{0, Rational(2)}, {1, Rational(3)}, {2, Rational(-1)}}));  // 2v1 + v2
    CHECK_FALSE(span.contains({{3, Rational(1)}}));
    CHECK_FALSE(span.contains({{0, Rational(1)}, {2, Rational(-1)}}));
}

TEST_CASE("matrix helpers") {
    auto M = from_ints({{1, 2}, {3, 4}});
    CHECK(M.transposed().get(0, 1) == 3);
    CHECK((M * RationalMatrix::identity(2)) == M);
    CHECK((M - M).is_zero());
    auto twoI = RationalMatrix::identity(3).scaled(Rational(2));
    REQUIRE(twoI.as_scalar().has_value());
    CHECK(*twoI.as_scalar() == 2);
    CHECK_FALSE(from_ints({{1, 1}, {0, 1}}).as_scalar().has_value());
    CHECK_FALSE(from_ints({{1, 0}, {0, 2}}).as_scalar().has_value());
}
