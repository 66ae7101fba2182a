#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rookalg {

// An element of the semigroup Gamma(n) of partial bijections of {1..n},
// equivalently a monomial (0,1)-matrix.  The matrix convention is fixed
// project-wide: entry (i, j) is 1 iff the map sends j to i (column = source).
//
// The empty map is the semigroup zero.  It is a *basis element* of the
// semigroup algebra, never the algebra zero; conflating the two is the
// classic bug when projecting to a smaller ambient size.
class PartialBijection {
public:
    PartialBijection() = default;
    // pairs are (source j, target i); validated and sorted by source.
    PartialBijection(int n, std::vector<std::pair<int, int>> pairs);

    static PartialBijection identity(int n);
    static PartialBijection zero(int n);
    // eps_i: the identity on {1..n} minus {i}  (diagonal with 0 in slot i).
    static PartialBijection eps(int i, int n);
    // s_k = adjacent transposition (k, k+1) as a full permutation.
    static PartialBijection transposition(int k, int n);
    // (i j) as a full permutation.
    static PartialBijection swap_points(int i, int j, int n);
    // cycle(points; n): points[0] -> points[1] -> ... -> points[0], rest fixed.
    static PartialBijection cycle(const std::vector<int>& points, int n);
    // one-line permutation: images[x-1] = image of x.
    static PartialBijection from_one_line(const std::vector<int>& images, int n);

    int n() const { return n_; }
    int rank() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    bool defined_on(int x) const { return apply(x).has_value(); }
    std::optional<int> apply(int x) const;
    std::optional<int> preimage(int y) const;

    std::vector<int> domain() const;
    std::vector<int> range() const;
    bool is_permutation() const { return rank() == n_; }
    bool is_identity() const;

    // deg = #{i : gamma_ii = 0}; deg_m counts only positions i > m.
    int deg() const { return deg_m(0); }
    int deg_m(int m) const;

    // Inverse partial map (matrix transpose).
    PartialBijection star() const;

    // Textual form "[n; 1->2, 3->1]"; "[n;]" is the zero element.
    std::string str() const;
    static PartialBijection parse(const std::string& text);

    bool operator==(const PartialBijection& o) const = default;
    // Total order = the enumeration order: (n, rank, domain lex, target lex).
    std::strong_ordering operator<=>(const PartialBijection& o) const;

    std::size_t hash() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> pairs_;  // sorted by source
};

struct PartialBijectionHash {
    std::size_t operator()(const PartialBijection& g) const { return g.hash(); }
};

// Product: (a b)(x) = a(b(x)), defined where both factors are.
PartialBijection compose(const PartialBijection& a, const PartialBijection& b);

// Strike rows and columns > to_size.
PartialBijection project_theta(const PartialBijection& a, int to_size);
// Canonical embedding: new points are fixed.
PartialBijection embed_phi(const PartialBijection& a, int to_size);
// 0-embedding: new rows/columns stay zero.
PartialBijection embed_psi(const PartialBijection& a, int to_size);

struct Degrees {
    int deg;
    int deg_m;
    int rank;
};
Degrees degrees(const PartialBijection& a, int m);

// All of Gamma(n) in the deterministic order (rank, domain, targets).
std::vector<PartialBijection> enumerate_gamma(int n);
// |Gamma(n)| = sum_r binom(n,r)^2 r!.
std::uint64_t gamma_size(int n);

// ---------------------------------------------------------------------------

// A partition: weakly decreasing positive parts; the empty partition is fine.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const;  // |M| = sum of parts
    int num_parts() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    // Multiset union, reordered decreasingly.
    Partition union_with(const Partition& other) const;

    std::string str() const;  // "(2,1)"; "()" for empty
    static Partition parse(const std::string& text);

    bool operator==(const Partition& o) const = default;
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<int> parts_;
};

std::vector<Partition> partitions_of(int k);
std::vector<Partition> partitions_up_to(int max_size);  // |M| <= max_size
std::uint64_t partition_count(int k);

// ---------------------------------------------------------------------------

// Entry alpha_{row,col} = z^order of an m x m pattern over Z_+.
struct PatternEntry {
    int row;
    int col;
    int order;
    bool operator==(const PatternEntry&) const = default;
    auto operator<=>(const PatternEntry&) const = default;
};

// An element of Gamma(m, Z_+): at most one nonzero entry per row and column,
// entries z^k with k >= 0.
class RookPattern {
public:
    explicit RookPattern(int m) : m_(m) {}
    RookPattern(int m, std::vector<PatternEntry> entries);

    static RookPattern identity(int m);
    // Diagonal pattern with z in slot k and 1 elsewhere.
    static RookPattern diagonal_z(int m, int k);

    int m() const { return m_; }
    int ord() const;
    const std::vector<PatternEntry>& entries() const { return entries_; }
    // No zero row or column, i.e. the pattern lies in S(m, Z_+).
    bool is_permutation_pattern() const;

    std::string str() const;  // "[(i,j,k), ...]"

    bool operator==(const RookPattern& o) const = default;
    std::strong_ordering operator<=>(const RookPattern& o) const;

private:
    int m_ = 0;
    std::vector<PatternEntry> entries_;  // sorted by (row, col)
};

std::vector<RookPattern> enumerate_patterns(int m, int max_ord);
std::uint64_t pattern_count(int m, int max_ord);

// Membership in Gamma(m, n): dom and range both contain {m+1..n}.
bool in_gamma_mn(const PartialBijection& s, int m);

// All of Gamma(m, n).
std::vector<PartialBijection> enumerate_gamma_mn(int n, int m);

// The S_m(n)-conjugation invariant (alpha(s), M(s)) of s in Gamma(m, n).
// ord alpha + |M| = n - m; two elements are conjugate iff the pairs agree.
std::pair<RookPattern, Partition> orbit_invariant(const PartialBijection& s, int m);

}  // namespace rookalg
