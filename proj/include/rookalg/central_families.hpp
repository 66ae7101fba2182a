#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rookalg/monoid_algebra.hpp"
#include "rookalg/rook.hpp"

namespace rookalg {

// Label (alpha, M) of a distinguished centralizer basis element at level m.
// The element instantiates to zero at size n when ord alpha + |M| > n - m.
struct BasisLabel {
    RookPattern alpha;
    Partition M;

    int level() const { return alpha.m(); }
    int total() const { return alpha.ord() + M.size(); }

    // "delta{alpha=[(1,1,1)]; M=(2,1); m=1; n=4}" with n filled by the caller
    std::string str(int n) const;
    std::string str() const;

    bool operator==(const BasisLabel& o) const = default;
    // ordering used for reports: (total, alpha lex, M lex)
    std::strong_ordering operator<=>(const BasisLabel& o) const;
};

// All labels at level m with ord alpha + |M| <= max_total, in report order.
std::vector<BasisLabel> basis_labels(int m, int max_total);

// Sum over all orderings of Q arranged into cycles of lengths M_1..M_r.
AlgebraElement cycle_sum_over_set(int n, const std::vector<int>& Q, const Partition& M);

// c_n^M: sum over sequences of |M| pairwise distinct indices of products of
// disjoint cycles; lies in Z(S(n)).
AlgebraElement c_element(int n, const Partition& M);
// c_n^{alpha,M}: the level-m refinement, summed over disjoint P, Q.
AlgebraElement c_element(int n, const RookPattern& alpha, const Partition& M);

// Delta_n^M and Delta_n^{alpha,M}: the (1-eps)-sandwiched sums.  Zero when
// ord alpha + |M| > n - m.
AlgebraElement delta_element(int n, const Partition& M);
AlgebraElement delta_element(int n, const RookPattern& alpha, const Partition& M);

// Jucys-Murphy element u_{k|n} = sum_{i>k} (k i)(1-eps_k)(1-eps_i).
AlgebraElement jm_element(int n, int k);

// A level-m element of the projective limit: a finite combination of the
// compatible sequences Delta^{alpha,M}.  Instantiating at consecutive sizes
// commutes with theta_n.
class LimitElement {
public:
    explicit LimitElement(int m) : m_(m) {}

    static LimitElement from_label(BasisLabel label, Rational coeff = Rational(1));
    static LimitElement unit(int m);

    int level() const { return m_; }
    bool is_zero() const { return combo_.empty(); }
    int m_degree() const;  // max total over the support
    const std::map<BasisLabel, Rational>& combo() const { return combo_; }

    void add(const BasisLabel& label, const Rational& c);
    LimitElement operator+(const LimitElement& o) const;
    LimitElement operator-(const LimitElement& o) const;
    LimitElement operator*(const Rational& c) const;
    bool operator==(const LimitElement& o) const = default;

    AlgebraElement instantiate(int n) const;

    std::string str() const;

private:
    int m_;
    std::map<BasisLabel, Rational> combo_;
};

// Re-expand x in the Delta basis of A_m(x.n()); requires x in A_m(n) with
// m-degree <= n - m.  Throws if the expansion fails (that would falsify the
// basis theorem this module is built on).
LimitElement expand_in_delta_basis(const AlgebraElement& x, int m);

// Product in A_m: instantiate at n* = m + deg(a) + deg(b), multiply, and
// re-expand; the result is independent of the instantiation size.
LimitElement structure_constants(const LimitElement& a, const LimitElement& b);

// u_k as an element of A_m (m >= k).
LimitElement jm_limit(int m, int k);

struct FilteredCount {
    int M;
    int labels;
    int filtration_dim;
    bool spans;
};

struct BasisReport {
    int n = 0;
    int m = 0;
    int label_count = 0;
    int rank = 0;
    int centralizer_dim = 0;
    bool independent = false;
    bool spans = false;
    bool vacuous = false;  // the m = n edge case: F^0 is the whole algebra
    std::vector<FilteredCount> filtered;

    bool ok() const;
};

// Builds every Delta_n^{alpha,M} with ord alpha + |M| <= n - m, checks
// independence and spanning of the computed centralizer, plus the filtered
// statement per degree.
BasisReport verify_basis(int n, int m);

}  // namespace rookalg
