#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rookalg/rational.hpp"
#include "rookalg/rook.hpp"

namespace rookalg {

// A polynomial in x_1..x_n with exact rational coefficients, stored sparsely
// by exponent vector.  "Shifted symmetric" means symmetric in y_i = x_i - i.
class ShiftedPoly {
public:
    explicit ShiftedPoly(int n) : n_(n) {}

    static ShiftedPoly constant(int n, const Rational& c);
    static ShiftedPoly variable(int i, int n);  // x_i

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // total degree; 0 for the zero polynomial
    const auto& terms() const { return terms_; }

    void add_term(std::vector<int> exponents, const Rational& c);

    ShiftedPoly operator+(const ShiftedPoly& o) const;
    ShiftedPoly operator-(const ShiftedPoly& o) const;
    ShiftedPoly operator*(const ShiftedPoly& o) const;
    ShiftedPoly operator*(const Rational& c) const;
    ShiftedPoly pow(int k) const;
    bool operator==(const ShiftedPoly& o) const = default;

    // swap y_i and y_{i+1}: x_i -> x_{i+1} - 1, x_{i+1} -> x_i + 1
    ShiftedPoly swap_shifted(int i) const;
    // specialize x_n = 0, dropping to n-1 variables
    ShiftedPoly set_last_var_zero() const;
    ShiftedPoly homogeneous_component(int d) const;

    // substitute x_i = lambda_i (zero beyond the parts)
    Rational evaluate(const Partition& lambda) const;

    // sum of coeff*x1^a1*...*xn^an monomials
    std::string str() const;

    using TermMap = std::map<std::vector<int>, Rational, std::greater<std::vector<int>>>;

private:
    int n_;
    TermMap terms_;  // exponent vector (length n) -> coeff, leading monomial first
};

bool is_shifted_symmetric(const ShiftedPoly& p);

enum class GenKind { E, H, P };

// The n-variable truncation of the generating families: coefficient of t^M in
//   E(t) = prod_k (1 + (x_k - k) t) / (1 - k t)
//   H(t) = prod_k (1 + k t) / (1 - (x_k - k) t)
// and p_M = sum_k ((x_k - k)^M - (-k)^M), with the products cut at k = n so
// that specializing x_n = 0 reproduces the (n-1)-variable family.
ShiftedPoly generator(GenKind kind, int M, int n);

// Series coefficients [1, g_1, ..., g_order] of E or H in n variables.
std::vector<ShiftedPoly> generator_series(GenKind kind, int order, int n);

// Classical elementary/complete/power-sum symmetric polynomial in n variables
// (the top homogeneous component of the shifted family).
ShiftedPoly classical_symmetric(GenKind kind, int M, int n);

// p_M evaluated on a partition, with as many variables as parts.
Rational power_sum_eval(int M, const Partition& lambda);

struct BridgeFit {
    Partition monomial;  // p_{mu_1} p_{mu_2} ... as an exponent multiset
    Rational coeff;
};

struct BridgeReport {
    int r = 0;
    int B = 0;
    bool n_independent = false;
    bool fit_found = false;
    std::vector<BridgeFit> fit;  // expansion in products of p_i
    bool heldout_ok = false;
    bool top_is_power_sum = false;
    bool pointwise_ok = false;  // r = 1, 2: matches p_1 resp. p_2 + p_1

    bool ok() const;
};

// The function lambda -> eigenvalue of Delta_n^{(r)} on T_n(lambda):
// n-independence, exact interpolation by a shifted symmetric polynomial of
// degree <= r, hold-out validation, and the top-component identity.
BridgeReport bridge_check(int r, int B);

}  // namespace rookalg
