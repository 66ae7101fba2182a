#include "rookalg/qlinalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rookalg {

namespace {

using SparseIntRow = std::vector<std::pair<int, Integer>>;  // sorted by column

// Clear denominators and divide by the content, so the row is a primitive
// integer vector.
SparseIntRow to_primitive(const std::vector<std::pair<int, Rational>>& row) {
    SparseIntRow out;
    if (row.empty()) return out;
    Integer l = 1;
    for (const auto& [c, v] : row) l = lcm(l, v.get_den());
    Integer g = 0;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        Integer num = v.get_num() * (l / v.get_den());
        g = gcd(g, num);
        out.emplace_back(c, std::move(num));
    }
    if (g > 1)
        for (auto& [c, v] : out) v /= g;
    return out;
}

const Integer* find_col(const SparseIntRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

// r <- p * r - v * piv, then divide by the content.  Keeps entries reduced
// without leaving integer arithmetic (Bareiss-flavoured update).
SparseIntRow eliminate_row(const SparseIntRow& r, const SparseIntRow& piv, const Integer& p,
                           const Integer& v) {
    SparseIntRow out;
    out.reserve(r.size() + piv.size());
    std::size_t i = 0, j = 0;
    Integer g = 0;
    while (i < r.size() || j < piv.size()) {
        if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
            Integer val = p * r[i].second;
            g = gcd(g, val);
            out.emplace_back(r[i].first, std::move(val));
            ++i;
        } else if (i == r.size() || piv[j].first < r[i].first) {
            Integer val = -v * piv[j].second;
            g = gcd(g, val);
            out.emplace_back(piv[j].first, std::move(val));
            ++j;
        } else {
            Integer val = p * r[i].second - v * piv[j].second;
            if (val != 0) {
                g = gcd(g, val);
                out.emplace_back(r[i].first, std::move(val));
            }
            ++i;
            ++j;
        }
    }
    if (g > 1)
        for (auto& [c, val] : out) val /= g;
    return out;
}

struct Echelon {
    // (pivot column, row) in elimination order; a row may have entries at
    // pivot columns of *later* rows, never earlier ones.
    std::vector<std::pair<int, SparseIntRow>> pivots;
};

Echelon eliminate(std::vector<SparseIntRow> rows) {
    Echelon ech;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) active.push_back(i);
    while (!active.empty()) {
        // pivot row: fewest nonzeros; pivot entry within it: smallest |value|
        std::size_t best = 0;
        for (std::size_t k = 1; k < active.size(); ++k)
            if (rows[active[k]].size() < rows[active[best]].size()) best = k;
        std::size_t prow = active[best];
        active.erase(active.begin() + best);
        const SparseIntRow piv = std::move(rows[prow]);
        int pcol = piv[0].first;
        Integer pval = piv[0].second;
        for (const auto& [c, v] : piv) {
            if (mpz_cmpabs(v.get_mpz_t(), pval.get_mpz_t()) < 0) {
                pcol = c;
                pval = v;
            }
        }
        std::vector<std::size_t> still;
        still.reserve(active.size());
        for (std::size_t idx : active) {
            if (const Integer* v = find_col(rows[idx], pcol))
                rows[idx] = eliminate_row(rows[idx], piv, pval, *v);
            if (!rows[idx].empty()) still.push_back(idx);
        }
        active = std::move(still);
        ech.pivots.emplace_back(pcol, piv);
    }
    return ech;
}

std::vector<SparseIntRow> matrix_rows(const RationalMatrix& M) {
    std::vector<SparseIntRow> rows;
    rows.reserve(M.rows());
    for (int r = 0; r < M.rows(); ++r) rows.push_back(to_primitive(M.row(r)));
    return rows;
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void RationalMatrix::set(int r, int c, Rational v) {
    auto& row = data_.at(r);
    if (c < 0 || c >= cols_) throw std::out_of_range("column out of range");
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = std::move(v);
    } else if (v != 0) {
        row.insert(it, {c, std::move(v)});
    }
}

void RationalMatrix::add_to(int r, int c, const Rational& v) {
    if (v == 0) return;
    auto& row = data_.at(r);
    if (c < 0 || c >= cols_) throw std::out_of_range("column out of range");
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

Rational RationalMatrix::get(int r, int c) const {
    const auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
}

RationalMatrix RationalMatrix::identity(int k) {
    RationalMatrix M(k, k);
    for (int i = 0; i < k; ++i) M.set(i, i, 1);
    return M;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
    int rows = static_cast<int>(dense.size());
    int cols = rows ? static_cast<int>(dense[0].size()) : 0;
    RationalMatrix M(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(dense[r].size()) != cols)
            throw std::invalid_argument("ragged dense matrix");
        for (int c = 0; c < cols; ++c)
            if (dense[r][c] != 0) M.set(r, c, dense[r][c]);
    }
    return M;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<std::vector<Rational>>& columns) {
    int cols = static_cast<int>(columns.size());
    int rows = cols ? static_cast<int>(columns[0].size()) : 0;
    RationalMatrix M(rows, cols);
    for (int c = 0; c < cols; ++c) {
        if (static_cast<int>(columns[c].size()) != rows)
            throw std::invalid_argument("ragged column list");
        for (int r = 0; r < rows; ++r)
            if (columns[c][r] != 0) M.set(r, c, columns[c][r]);
    }
    return M;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix T(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) T.data_[c].emplace_back(r, v);
    // rows were visited in increasing r, so each transposed row is sorted
    return T;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::vector<Rational> acc(o.cols_, Rational(0));
        for (const auto& [k, v] : data_[r])
            for (const auto& [c, w] : o.data_[k]) acc[c] += v * w;
        for (int c = 0; c < o.cols_; ++c)
            if (acc[c] != 0) out.data_[r].emplace_back(c, std::move(acc[c]));
    }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape");
    RationalMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r) {
        for (const auto& [c, v] : data_[r]) out.add_to(r, c, v);
        for (const auto& [c, v] : o.data_[r]) out.add_to(r, c, v);
    }
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    return *this + o.scaled(Rational(-1));
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix out(rows_, cols_);
    if (c == 0) return out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [col, v] : data_[r]) out.data_[r].emplace_back(col, v * c);
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool RationalMatrix::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

std::optional<Rational> RationalMatrix::as_scalar() const {
    if (rows_ != cols_) return std::nullopt;
    if (rows_ == 0) return Rational(0);
    Rational diag = get(0, 0);
    for (int r = 0; r < rows_; ++r) {
        const auto& row = data_[r];
        if (diag == 0) {
            if (!row.empty()) return std::nullopt;
        } else {
            if (row.size() != 1 || row[0].first != r || row[0].second != diag)
                return std::nullopt;
        }
    }
    return diag;
}

std::size_t RationalMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
}

IncrementalSpan::IncrementalSpan(int ambient_dim) : ambient_(ambient_dim) {}

std::vector<std::pair<int, Integer>> IncrementalSpan::reduce(const SparseQVec& v) const {
    SparseIntRow row = to_primitive(v);
    // Stored rows are inter-reduced: each pivot column appears in exactly one
    // stored row, so a single pass over the stored rows suffices.
    for (const auto& [pcol, prow] : rows_) {
        const Integer* val = find_col(row, pcol);
        if (!val) continue;
        const Integer* pval = find_col(prow, pcol);
        row = eliminate_row(row, prow, *pval, *val);
    }
    return row;
}

bool IncrementalSpan::add(const SparseQVec& v) {
    SparseIntRow row = reduce(v);
    if (row.empty()) return false;
    int pcol = row[0].first;
    Integer pval = row[0].second;
    for (const auto& [c, val] : row) {
        if (mpz_cmpabs(val.get_mpz_t(), pval.get_mpz_t()) < 0) {
            pcol = c;
            pval = val;
        }
    }
    // keep full inter-reduction: clear the new pivot column from older rows
    for (auto& [oc, orow] : rows_) {
        if (const Integer* val = find_col(orow, pcol))
            orow = eliminate_row(orow, row, pval, *val);
    }
    rows_.emplace_back(pcol, std::move(row));
    return true;
}

bool IncrementalSpan::contains(const SparseQVec& v) const { return reduce(v).empty(); }

int rank(const RationalMatrix& M) {
    return static_cast<int>(eliminate(matrix_rows(M)).pivots.size());
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& M) {
    Echelon ech = eliminate(matrix_rows(M));
    std::vector<bool> is_pivot(M.cols(), false);
    for (const auto& [c, row] : ech.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < M.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(M.cols(), Rational(0));
        x[f] = 1;
        // Rows only involve pivot columns of themselves and later pivots, so
        // back-substitution in reverse elimination order closes the system.
        for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
            const auto& [pcol, row] = *it;
            Rational acc(0);
            Rational pval(0);
            for (const auto& [c, v] : row) {
                if (c == pcol)
                    pval = Rational(v);
                else if (x[c] != 0)
                    acc += Rational(v) * x[c];
            }
            x[pcol] = -acc / pval;
        }
        // scale to a primitive integer vector for readability
        Integer l = 1;
        for (const auto& q : x) l = lcm(l, q.get_den());
        Integer g = 0;
        for (auto& q : x) {
            q *= l;
            g = gcd(g, q.get_num());
        }
        if (g > 1)
            for (auto& q : x) q /= g;
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<std::vector<Rational>>& vectors, const std::vector<Rational>& target) {
    const int k = static_cast<int>(vectors.size());
    const int dim = static_cast<int>(target.size());
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("solve_in_span: vector length mismatch");

    // Augmented system [A | t] with A's columns the spanning vectors, reduced
    // by ordinary rational elimination (k is small everywhere we call this).
    std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(k + 1, Rational(0)));
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < dim; ++r) aug[r][c] = vectors[c][r];
    for (int r = 0; r < dim; ++r) aug[r][k] = target[r];

    std::vector<int> pivot_row_of_col(k, -1);
    int next_row = 0;
    for (int c = 0; c < k && next_row < dim; ++c) {
        int pr = -1;
        for (int r = next_row; r < dim; ++r)
            if (aug[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[pr], aug[next_row]);
        pr = next_row;
        const Rational p = aug[pr][c];
        for (int c2 = c; c2 <= k; ++c2) aug[pr][c2] /= p;
        for (int r = 0; r < dim; ++r) {
            if (r == pr || aug[r][c] == 0) continue;
            const Rational f = aug[r][c];
            for (int c2 = c; c2 <= k; ++c2) aug[r][c2] -= f * aug[pr][c2];
        }
        pivot_row_of_col[c] = pr;
        ++next_row;
    }
    // inconsistent iff some row reduced to (0 ... 0 | nonzero)
    for (int r = next_row; r < dim; ++r)
        if (aug[r][k] != 0) return std::nullopt;

    std::vector<Rational> coeff(k, Rational(0));
    for (int c = 0; c < k; ++c)
        if (pivot_row_of_col[c] >= 0) coeff[c] = aug[pivot_row_of_col[c]][k];
    return coeff;
}

}  // namespace rookalg
