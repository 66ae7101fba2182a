#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rookalg/rational.hpp"

namespace rookalg {

// Sparse rational matrix, row-major.  Everything downstream (centralizers,
// basis verification, re-expansion) funnels through rank/kernel/solve here,
// so this is the one place that has to stay exact.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, Rational v);
    void add_to(int r, int c, const Rational& v);
    Rational get(int r, int c) const;

    const std::vector<std::pair<int, Rational>>& row(int r) const { return data_[r]; }

    static RationalMatrix identity(int k);
    static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
    // columns[i] becomes the i-th column.
    static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& columns);

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;

    bool operator==(const RationalMatrix& o) const;
    bool is_zero() const;
    // Scalar multiple of the identity? Returns the scalar if so.
    std::optional<Rational> as_scalar() const;

    std::size_t nonzero_count() const;

private:
    int rows_;
    int cols_;
    std::vector<std::vector<std::pair<int, Rational>>> data_;  // rows, sorted by column
};

// Sparse coordinate vector, sorted by index.
using SparseQVec = std::vector<std::pair<int, Rational>>;

// Incrementally maintained row space with fully inter-reduced integer rows.
// add() extends the span; contains() probes without modifying it.
class IncrementalSpan {
public:
    explicit IncrementalSpan(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    bool add(const SparseQVec& v);       // true iff the rank grew
    bool contains(const SparseQVec& v) const;

private:
    std::vector<std::pair<int, Integer>> reduce(const SparseQVec& v) const;

    int ambient_;
    std::vector<std::pair<int, std::vector<std::pair<int, Integer>>>> rows_;  // (pivot, row)
};

// Rank over Q.  Fraction-free (Bareiss-style) elimination on gcd-reduced
// integer rows, pivots chosen to limit fill and coefficient growth; dense
// rational elimination below 64 columns.
int rank(const RationalMatrix& M);

// Basis of the right null space: M v = 0 exactly for every returned v.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& M);

// Exact coefficients c with sum_i c_i vectors[i] = target, or nothing.
std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<std::vector<Rational>>& vectors, const std::vector<Rational>& target);

}  // namespace rookalg
