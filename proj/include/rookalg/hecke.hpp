#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rookalg/monoid_algebra.hpp"
#include "rookalg/rook.hpp"

namespace rookalg {

enum class HeckeVariant { Tilde, Plain };

// A letter of the presented algebra: s_k, eps_k or u_k.
struct HeckeLetter {
    enum Kind { S, E, U } kind;
    int index;
};

// An element of H~_m (or H_m) in normal form: a rational combination of
// monomials gamma * u_1^{k_1} ... u_m^{k_m} with gamma in Gamma(m).  The
// exponent k_j vanishes whenever column j of gamma is zero (eps_j u_j = 0
// forces it).  In the plain variant gamma is a permutation and there are no
// eps letters.
class HeckeNormalForm {
public:
    HeckeNormalForm(int m, HeckeVariant variant) : m_(m), variant_(variant) {}

    static HeckeNormalForm zero(int m, HeckeVariant v) { return HeckeNormalForm(m, v); }
    static HeckeNormalForm one(int m, HeckeVariant v);
    static HeckeNormalForm generator(const HeckeLetter& letter, int m, HeckeVariant v);

    int m() const { return m_; }
    HeckeVariant variant() const { return variant_; }
    bool is_zero() const { return terms_.empty(); }
    int u_degree() const;  // max total exponent over the support

    using Key = std::pair<PartialBijection, std::vector<int>>;
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add_term(const PartialBijection& gamma, const std::vector<int>& upow, const Rational& c);

    HeckeNormalForm operator+(const HeckeNormalForm& o) const;
    HeckeNormalForm operator-(const HeckeNormalForm& o) const;
    HeckeNormalForm operator*(const Rational& c) const;
    bool operator==(const HeckeNormalForm& o) const = default;

    std::string str() const;

private:
    int m_;
    HeckeVariant variant_;
    std::map<Key, Rational> terms_;
};

// Product by rewriting onto the gamma * u^k basis.  The group letters sweep
// left past the u's via
//   u_k s_k   -> s_k u_{k+1} + (1-eps_k)(1-eps_{k+1})
//   u_{k+1} s_k -> s_k u_k   - (1-eps_k)(1-eps_{k+1})
//   u_l s_k   -> s_k u_l          (l != k, k+1)
//   u_k eps_k -> 0,  u_k eps_i -> eps_i u_k  (i != k)
// (plain variant: the eps correction terms become +-1).  Each step strictly
// lowers the u-degree sitting right of a group letter, so the sweep stops.
HeckeNormalForm multiply_nf(const HeckeNormalForm& a, const HeckeNormalForm& b);

// As multiply_nf but the order in which the cross relations strip u_k versus
// u_{k+1} is randomized; used to probe confluence empirically.
HeckeNormalForm multiply_nf_randomized(const HeckeNormalForm& a, const HeckeNormalForm& b,
                                       std::mt19937& rng);

// Right-multiply by a single letter.
HeckeNormalForm times_letter(const HeckeNormalForm& a, const HeckeLetter& letter);

// Number of normal-form monomials gamma u^k with sum k_j <= M (column
// constraint enforced in the tilde variant).
std::uint64_t truncated_dimension(int m, int M, HeckeVariant variant);

// psi: s_k, eps_k embed canonically, u_k -> u_{k|n}; lands in A_m(n).
AlgebraElement psi_hom(const HeckeNormalForm& x, int n);

// eps -> 0: drop every term whose gamma is not a full permutation.
HeckeNormalForm retract_to_plain(const HeckeNormalForm& x);

// phi: u_k -> sum_{i>k} (k i) inside Q[S(n)].
AlgebraElement phi_hom(const HeckeNormalForm& x, int n);

// Word grammar: whitespace-separated letters "s1 e2 u1 ..." with optional
// integer coefficients and '+'/'-' between words.
HeckeNormalForm parse_word_expr(const std::string& text, int m, HeckeVariant variant);

}  // namespace rookalg
