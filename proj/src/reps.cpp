#include "rookalg/reps.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "rookalg/central_families.hpp"

namespace rookalg {

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.num_parts())
        throw std::invalid_argument("tableau row count does not match the shape");
    for (int r = 0; r < shape_.num_parts(); ++r)
        if (static_cast<int>(rows_[r].size()) != shape_.parts()[r])
            throw std::invalid_argument("tableau row length does not match the shape");
    if (!is_standard()) throw std::invalid_argument("filling is not standard");
}

std::pair<int, int> StandardTableau::position_of(int value) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r][c] == value) return {static_cast<int>(r), static_cast<int>(c)};
    throw std::invalid_argument("value not in tableau");
}

int StandardTableau::content_of(int value) const {
    auto [r, c] = position_of(value);
    return c - r;
}

StandardTableau StandardTableau::with_swapped(int value) const {
    auto rows = rows_;
    auto [r1, c1] = position_of(value);
    auto [r2, c2] = position_of(value + 1);
    std::swap(rows[r1][c1], rows[r2][c2]);
    return StandardTableau(shape_, std::move(rows));
}

bool StandardTableau::is_standard() const {
    std::set<int> seen;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > size() || !seen.insert(v).second) return false;
            if (c > 0 && rows_[r][c - 1] >= v) return false;
            if (r > 0 && rows_[r - 1][c] >= v) return false;
        }
    }
    return true;
}

std::string StandardTableau::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << '/';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ' ';
            os << rows_[r][c];
        }
    }
    return os.str();
}

std::vector<StandardTableau> StandardTableau::all(const Partition& shape) {
    // place values 1..N one at a time; a value goes in the next free box of
    // any row whose column stays strictly increasing
    std::vector<std::vector<int>> rows(shape.num_parts());
    std::vector<StandardTableau> out;
    const int N = shape.size();
    std::function<void(int)> rec = [&](int value) {
        if (value > N) {
            out.emplace_back(shape, rows);
            return;
        }
        for (int r = 0; r < shape.num_parts(); ++r) {
            int c = static_cast<int>(rows[r].size());
            if (c >= shape.parts()[r]) continue;
            if (r > 0 && static_cast<int>(rows[r - 1].size()) <= c) continue;
            rows[r].push_back(value);
            rec(value + 1);
            rows[r].pop_back();
        }
    };
    rec(1);
    return out;
}

std::uint64_t standard_tableau_count(const Partition& shape) {
    return StandardTableau::all(shape).size();
}

// --------------------------------------------------------------------------

SeminormalRep::SeminormalRep(Partition lambda)
    : lambda_(std::move(lambda)), n_(lambda_.size()), tableaux_(StandardTableau::all(lambda_)) {
    const int d = dim();
    std::map<std::string, int> index;
    for (int i = 0; i < d; ++i) index.emplace(tableaux_[i].str(), i);

    for (int k = 1; k < n_; ++k) {
        RationalMatrix M(d, d);
        for (int i = 0; i < d; ++i) {
            const StandardTableau& T = tableaux_[i];
            auto [r1, c1] = T.position_of(k);
            auto [r2, c2] = T.position_of(k + 1);
            if (r1 == r2) {
                M.add_to(i, i, Rational(1));
                continue;
            }
            if (c1 == c2) {
                M.add_to(i, i, Rational(-1));
                continue;
            }
            const int dist = T.content_of(k + 1) - T.content_of(k);  // |dist| >= 2 here
            Rational inv = rational_of(1, dist);
            M.add_to(i, i, inv);
            int j = index.at(T.with_swapped(k).str());
            // coefficient on the partner: 1 when k+1 sits below k, else the
            // seminormal weight 1 - 1/dist^2
            if (dist < 0)
                M.add_to(j, i, Rational(1));
            else
                M.add_to(j, i, Rational(1) - inv * inv);
        }
        trans_.push_back(std::move(M));
    }
    check_relations();
}

const RationalMatrix& SeminormalRep::transposition_image(int k) const {
    if (k < 1 || k >= n_) throw std::invalid_argument("transposition index out of range");
    return trans_[k - 1];
}

void SeminormalRep::check_relations() const {
    const RationalMatrix id = RationalMatrix::identity(dim());
    for (int k = 1; k < n_; ++k) {
        if (!(trans_[k - 1] * trans_[k - 1] == id))
            throw std::logic_error("seminormal: involution relation failed");
        if (k + 1 < n_) {
            auto lhs = trans_[k - 1] * trans_[k] * trans_[k - 1];
            auto rhs = trans_[k] * trans_[k - 1] * trans_[k];
            if (!(lhs == rhs)) throw std::logic_error("seminormal: braid relation failed");
        }
        for (int l = k + 2; l < n_; ++l)
            if (!(trans_[k - 1] * trans_[l - 1] == trans_[l - 1] * trans_[k - 1]))
                throw std::logic_error("seminormal: commuting relation failed");
    }
}

RationalMatrix SeminormalRep::matrix(const PartialBijection& perm) const {
    if (perm.n() != n_ || !perm.is_permutation())
        throw std::invalid_argument("seminormal matrix needs a full permutation of N points");
    std::vector<int> one_line(n_);
    for (auto [j, t] : perm.pairs()) one_line[j - 1] = t;
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = perm_cache_.find(one_line);
        if (it != perm_cache_.end()) return it->second;
    }

    // bubble-sort factorization into adjacent transpositions
    std::vector<int> word;
    std::vector<int> w = one_line;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i + 1 < n_; ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                word.push_back(i + 1);
                moved = true;
            }
        }
    }
    // w = perm * s_{word_0} * s_{word_1} * ... = id, so perm = s_{last} ... s_{first}
    RationalMatrix M = RationalMatrix::identity(dim());
    for (auto it2 = word.rbegin(); it2 != word.rend(); ++it2) M = M * trans_[*it2 - 1];
    std::lock_guard<std::mutex> lock(cache_mu_);
    perm_cache_.emplace(std::move(one_line), M);
    return M;
}

RationalMatrix SeminormalRep::matrix(const AlgebraElement& x) const {
    RationalMatrix acc(dim(), dim());
    for (const auto& [g, c] : x.terms()) acc = acc + matrix(g).scaled(c);
    return acc;
}

// --------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> subsets_lex(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int x = next; x <= n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace

GammaRep::GammaRep(int n, Partition lambda) : n_(n), pi_(std::move(lambda)) {
    if (pi_.points() > n) throw std::domain_error("gamma_rep: |lambda| exceeds n");
    subsets_ = subsets_lex(n_, pi_.points());
    for (std::size_t i = 0; i < subsets_.size(); ++i)
        subset_index_.emplace(subsets_[i], static_cast<int>(i));
    dim_ = static_cast<int>(subsets_.size()) * pi_.dim();
    check_relations();
}

RationalMatrix GammaRep::matrix(const PartialBijection& g) const {
    if (g.n() != n_) throw std::invalid_argument("gamma_rep: ambient size mismatch");
    const int m = pi_.points();
    const int d = pi_.dim();
    RationalMatrix M(dim_, dim_);
    for (std::size_t bi = 0; bi < subsets_.size(); ++bi) {
        const auto& B = subsets_[bi];
        // the value at the representative of B reads off the block B <- B',
        // B' = gamma^{-1}(B); rows vanish unless B is inside the range
        std::vector<int> Bp;
        bool ok = true;
        for (int b : B) {
            auto p = g.preimage(b);
            if (!p) {
                ok = false;
                break;
            }
            Bp.push_back(*p);
        }
        if (!ok) continue;
        std::vector<int> sorted = Bp;
        std::sort(sorted.begin(), sorted.end());
        int bj = subset_index_.at(sorted);
        // q(j) = position in B of gamma(sorted[j]); block = pi(q)
        std::vector<int> q(m);
        for (int j = 0; j < m; ++j) {
            int image = *g.apply(sorted[j]);
            q[j] =
                static_cast<int>(std::lower_bound(B.begin(), B.end(), image) - B.begin()) + 1;
        }
        RationalMatrix block =
            m == 0 ? RationalMatrix::identity(1)
                   : pi_.matrix(PartialBijection::from_one_line(q, m));
        for (int r = 0; r < d; ++r)
            for (const auto& [c, v] : block.row(r))
                M.add_to(static_cast<int>(bi) * d + r, bj * d + c, v);
    }
    return M;
}

RationalMatrix GammaRep::matrix(const AlgebraElement& x) const {
    if (x.n() != n_) throw std::invalid_argument("gamma_rep: ambient size mismatch");
    RationalMatrix acc(dim_, dim_);
    for (const auto& [g, c] : x.terms()) acc = acc + matrix(g).scaled(c);
    return acc;
}

std::vector<RationalMatrix> GammaRep::generator_images() const {
    std::vector<RationalMatrix> out;
    for (int k = 1; k < n_; ++k) out.push_back(matrix(PartialBijection::transposition(k, n_)));
    for (int i = 1; i <= n_; ++i) out.push_back(matrix(PartialBijection::eps(i, n_)));
    return out;
}

void GammaRep::check_relations() const {
    const RationalMatrix id = RationalMatrix::identity(dim_);
    std::vector<RationalMatrix> s, e;
    for (int k = 1; k < n_; ++k) s.push_back(matrix(PartialBijection::transposition(k, n_)));
    for (int i = 1; i <= n_; ++i) e.push_back(matrix(PartialBijection::eps(i, n_)));
    for (int k = 0; k + 1 < n_; ++k) {
        if (!(s[k] * s[k] == id)) throw std::logic_error("gamma_rep: s^2 = 1 failed");
        if (k + 2 < n_ && !(s[k] * s[k + 1] * s[k] == s[k + 1] * s[k] * s[k + 1]))
            throw std::logic_error("gamma_rep: braid relation failed");
        for (int l = k + 2; l + 1 < n_; ++l)
            if (!(s[k] * s[l] == s[l] * s[k]))
                throw std::logic_error("gamma_rep: distant s commute failed");
    }
    for (int i = 0; i < n_; ++i) {
        if (!(e[i] * e[i] == e[i])) throw std::logic_error("gamma_rep: eps idempotent failed");
        for (int j = i + 1; j < n_; ++j)
            if (!(e[i] * e[j] == e[j] * e[i]))
                throw std::logic_error("gamma_rep: eps commute failed");
    }
    for (int k = 0; k + 1 < n_; ++k) {
        if (!(s[k] * e[k] == e[k + 1] * s[k]))
            throw std::logic_error("gamma_rep: s eps crossing failed");
        if (!(s[k] * e[k] * e[k + 1] == e[k] * e[k + 1]))
            throw std::logic_error("gamma_rep: s eps eps absorption failed");
    }
}

// --------------------------------------------------------------------------

namespace {

template <typename Rep>
Rational scalar_of_image(const AlgebraElement& x, const Rep& rep) {
    auto scalar = rep.matrix(x).as_scalar();
    if (!scalar) throw NotCentralError("image matrix is not scalar: " + x.str());
    return *scalar;
}

}  // namespace

Rational central_eigenvalue(const AlgebraElement& x, const GammaRep& rep) {
    return scalar_of_image(x, rep);
}

Rational central_eigenvalue(const AlgebraElement& x, const SeminormalRep& rep) {
    return scalar_of_image(x, rep);
}

int commutant_dimension(const std::vector<RationalMatrix>& generator_images, int dim) {
    // unknown X flattened row-major: constraints X A - A X = 0
    RationalMatrix sys(static_cast<int>(generator_images.size()) * dim * dim, dim * dim);
    int row0 = 0;
    for (const auto& A : generator_images) {
        // (XA)_{ij} = sum_k X_{ik} A_{kj};  (AX)_{ij} = sum_k A_{ik} X_{kj}
        for (int i = 0; i < dim; ++i) {
            for (int k = 0; k < dim; ++k) {
                for (const auto& [j, v] : A.row(k)) sys.add_to(row0 + i * dim + j, i * dim + k, v);
            }
            for (const auto& [k, v] : A.row(i)) {
                for (int j = 0; j < dim; ++j) sys.add_to(row0 + i * dim + j, k * dim + j, -v);
            }
        }
        row0 += dim * dim;
    }
    return dim * dim - rank(sys);
}

bool ClassificationReport::ok() const {
    if (dim_square_sum != gamma_order || !characters_separate) return false;
    for (const auto& r : reps)
        if (!r.irreducible) return false;
    return true;
}

ClassificationReport classification_check(int n) {
    ClassificationReport rep;
    rep.n = n;
    rep.gamma_order = gamma_size(n);

    std::vector<AlgebraElement> deltas;
    for (int r = 1; r <= n; ++r) deltas.push_back(delta_element(n, Partition{{r}}));

    for (const auto& lam : partitions_up_to(n)) {
        GammaRep T(n, lam);
        RepRecord rec;
        rec.lambda = lam;
        rec.dim = T.dim();
        rec.irreducible = commutant_dimension(T.generator_images(), T.dim()) == 1;
        for (const auto& d : deltas) rec.central_character.push_back(central_eigenvalue(d, T));
        rep.dim_square_sum += static_cast<std::uint64_t>(rec.dim) * rec.dim;
        rep.reps.push_back(std::move(rec));
    }

    rep.characters_separate = true;
    for (std::size_t i = 0; i < rep.reps.size(); ++i)
        for (std::size_t j = i + 1; j < rep.reps.size(); ++j)
            if (rep.reps[i].central_character == rep.reps[j].central_character)
                rep.characters_separate = false;
    return rep;
}

}  // namespace rookalg
