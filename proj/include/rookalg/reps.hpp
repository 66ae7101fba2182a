#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rookalg/monoid_algebra.hpp"
#include "rookalg/qlinalg.hpp"
#include "rookalg/rook.hpp"

namespace rookalg {

// A standard filling of the Young diagram of a partition: values 1..|shape|
// increase along rows and down columns.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    // (row, col), 0-indexed
    std::pair<int, int> position_of(int value) const;
    int content_of(int value) const;  // col - row
    // swap values v and v+1; caller checks standardness of the result
    StandardTableau with_swapped(int value) const;
    bool is_standard() const;

    bool operator==(const StandardTableau& o) const = default;
    std::string str() const;

    static std::vector<StandardTableau> all(const Partition& shape);

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

std::uint64_t standard_tableau_count(const Partition& shape);

struct NotCentralError : std::runtime_error {
    explicit NotCentralError(const std::string& what) : std::runtime_error(what) {}
};

// Young's seminormal form of the irreducible S(N)-representation attached to
// a partition: exact rational matrices on the standard-tableau basis.  The
// defining relations are checked on construction.
class SeminormalRep {
public:
    explicit SeminormalRep(Partition lambda);

    const Partition& lambda() const { return lambda_; }
    int points() const { return n_; }  // the N of S(N)
    int dim() const { return static_cast<int>(tableaux_.size()); }
    const std::vector<StandardTableau>& tableaux() const { return tableaux_; }

    const RationalMatrix& transposition_image(int k) const;  // s_k, 1 <= k < N
    // full-rank elements only
    RationalMatrix matrix(const PartialBijection& perm) const;
    // combination supported on permutations
    RationalMatrix matrix(const AlgebraElement& x) const;

private:
    void check_relations() const;

    Partition lambda_;
    int n_;
    std::vector<StandardTableau> tableaux_;
    std::vector<RationalMatrix> trans_;  // s_1 .. s_{N-1}
    mutable std::mutex cache_mu_;
    mutable std::map<std::vector<int>, RationalMatrix> perm_cache_;
};

// The irreducible Gamma(n)-representation attached to lambda (|lambda| <= n):
// equivariant H(pi_lambda)-valued functions on the injective maps
// {1..m} -> {1..n}, with eps_a killing the functions meeting a.  The basis is
// indexed by (m-subset in lex order) x (tableau basis of pi_lambda).
class GammaRep {
public:
    GammaRep(int n, Partition lambda);

    int n() const { return n_; }
    int m() const { return pi_.points(); }
    const Partition& lambda() const { return pi_.lambda(); }
    const SeminormalRep& pi() const { return pi_; }
    int dim() const { return dim_; }
    const std::vector<std::vector<int>>& subsets() const { return subsets_; }

    RationalMatrix matrix(const PartialBijection& g) const;
    RationalMatrix matrix(const AlgebraElement& x) const;

    std::vector<RationalMatrix> generator_images() const;  // s_1.., then eps_1..

private:
    void check_relations() const;

    int n_;
    SeminormalRep pi_;
    std::vector<std::vector<int>> subsets_;
    std::map<std::vector<int>, int> subset_index_;
    int dim_;
};

// The scalar by which a central element acts; exact equality required.
Rational central_eigenvalue(const AlgebraElement& x, const GammaRep& rep);
Rational central_eigenvalue(const AlgebraElement& x, const SeminormalRep& rep);

// dim of {X : X rho(g) = rho(g) X for all generators g}
int commutant_dimension(const std::vector<RationalMatrix>& generator_images, int dim);

struct RepRecord {
    Partition lambda;
    int dim = 0;
    bool irreducible = false;
    std::vector<Rational> central_character;  // eigenvalue of Delta_n^{(r)}, r = 1..n
};

struct ClassificationReport {
    int n = 0;
    std::vector<RepRecord> reps;
    std::uint64_t dim_square_sum = 0;
    std::uint64_t gamma_order = 0;
    bool characters_separate = false;

    bool ok() const;
};

// Builds T_n(lambda) for every |lambda| <= n, checks sum of squared
// dimensions, irreducibility, and separation by central characters.
ClassificationReport classification_check(int n);

}  // namespace rookalg
