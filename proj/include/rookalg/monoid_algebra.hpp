#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rookalg/qlinalg.hpp"
#include "rookalg/rational.hpp"
#include "rookalg/rook.hpp"

namespace rookalg {

// An element of the semigroup algebra A(n) = Q[Gamma(n)]: a finite rational
// combination of partial bijections of a fixed ambient size.  No zero
// coefficients are ever stored.
class AlgebraElement {
public:
    explicit AlgebraElement(int n) : n_(n) {}

    static AlgebraElement zero(int n) { return AlgebraElement(n); }
    static AlgebraElement unit(int n);  // the identity bijection
    static AlgebraElement basis(const PartialBijection& g);
    static AlgebraElement gen_s(int k, int n);    // adjacent transposition
    static AlgebraElement gen_eps(int i, int n);  // idempotent eps_i
    static AlgebraElement one_minus_eps(int i, int n);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<PartialBijection, Rational>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    Rational coeff(const PartialBijection& g) const;

    void add_term(const PartialBijection& g, const Rational& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const Rational& c) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    bool operator==(const AlgebraElement& o) const = default;

    // max over the support; zero element reports 0 / 0 / 0
    int deg() const;
    int deg_m(int m) const;
    int rank() const;

    AlgebraElement star() const;

    std::string str() const;
    // Grammar (shared with the CLI):
    //   element := term (('+'|'-') term)*
    //   term    := [coeff '*'] atom
    //   coeff   := int | int '/' int
    //   atom    := gamma | "id(n)" | "eps(i,n)" | "s(k,n)" | "cycle(i1,...,ik;n)"
    //   gamma   := "[" n ";" pairs "]"
    // Whitespace-insensitive; "0" parses as the algebra zero of expected_n.
    static AlgebraElement parse(const std::string& text, std::optional<int> expected_n = {});

private:
    int n_;
    std::map<PartialBijection, Rational> terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// Linear extension of striking the last row and column: A(n) -> A(n-1).
// Multiplicative on the centralizer A_{n-1}(n), and unital.
AlgebraElement theta_n(const AlgebraElement& a);
// Iterated projection down to ambient size k.
AlgebraElement theta_to(const AlgebraElement& a, int k);

// The homomorphism A(n) -> Q[S(n)]: keeps full-rank terms, kills the rest
// (equivalently the substitution eps_k -> 0).
AlgebraElement retraction(const AlgebraElement& a);

// Positions of Gamma(n) in the deterministic enumeration; shared and cached.
class GammaIndex {
public:
    explicit GammaIndex(int n);
    int n() const { return n_; }
    std::size_t size() const { return order_.size(); }
    int index_of(const PartialBijection& g) const;
    const PartialBijection& at(std::size_t i) const { return order_[i]; }
    const std::vector<PartialBijection>& order() const { return order_; }

    static std::shared_ptr<const GammaIndex> shared(int n);

private:
    int n_;
    std::vector<PartialBijection> order_;
    std::unordered_map<PartialBijection, int, PartialBijectionHash> pos_;
};

std::vector<Rational> coordinates(const AlgebraElement& a, const GammaIndex& idx);

// A linear subspace of A(n) held by an independent spanning list.  The
// coordinate rows follow the enumeration order of Gamma(n).
class SubspaceHandle {
public:
    // Reduces the spanning list to an independent basis (rank-checked).
    SubspaceHandle(int n, std::vector<AlgebraElement> spanning);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<AlgebraElement>& basis() const { return basis_; }
    const GammaIndex& index() const { return *index_; }

    bool contains(const AlgebraElement& x) const;
    std::optional<std::vector<Rational>> coordinates_in_basis(const AlgebraElement& x) const;
    bool same_span(const SubspaceHandle& other) const;

private:
    int n_;
    std::shared_ptr<const GammaIndex> index_;
    std::vector<AlgebraElement> basis_;
};

// Basis of A_m(n) = {x : xg = gx for all g in Gamma_m(n)}, computed from
// S_m(n)-conjugation orbit sums intersected with the eps_{m+1} commutator
// kernel.  A_0(n) is the center; m = n yields the whole algebra.
SubspaceHandle centralizer(int n, int m);

// Basis of I(n) ∩ A_m(n) where I(n) = A(n)(1 - eps_n); checks the sandwich
// identity (1-eps_{m+1})...(1-eps_n) Z_m(n) (1-eps_{m+1})...(1-eps_n).
SubspaceHandle ideal_intersection(int n, int m);

// Sub-basis of the elements of m-degree <= M inside the given subspace.
SubspaceHandle filtration_term(const SubspaceHandle& space, int M, int m);

// Spanning set of Z_m(n): S_m(n)-conjugation orbit sums over Gamma(m, n).
std::vector<AlgebraElement> zmn_orbit_sums(int n, int m);

// Product (1 - eps_{from}) ... (1 - eps_{to}).
AlgebraElement eps_complement_product(int n, int from, int to);

}  // namespace rookalg
