#include "rookalg/shifted_symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rookalg/central_families.hpp"
#include "rookalg/qlinalg.hpp"
#include "rookalg/reps.hpp"

namespace rookalg {

ShiftedPoly ShiftedPoly::constant(int n, const Rational& c) {
    ShiftedPoly p(n);
    p.add_term(std::vector<int>(n, 0), c);
    return p;
}

ShiftedPoly ShiftedPoly::variable(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
    ShiftedPoly p(n);
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    p.add_term(std::move(e), Rational(1));
    return p;
}

int ShiftedPoly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void ShiftedPoly::add_term(std::vector<int> exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != n_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exponents), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ShiftedPoly ShiftedPoly::operator+(const ShiftedPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial sum: variable count mismatch");
    ShiftedPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ShiftedPoly ShiftedPoly::operator-(const ShiftedPoly& o) const {
    return *this + o * Rational(-1);
}

ShiftedPoly ShiftedPoly::operator*(const ShiftedPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial product: variable count mismatch");
    ShiftedPoly r(n_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(n_);
            for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(std::move(e), c1 * c2);
        }
    return r;
}

ShiftedPoly ShiftedPoly::operator*(const Rational& c) const {
    ShiftedPoly r(n_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

ShiftedPoly ShiftedPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    ShiftedPoly r = constant(n_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

namespace {

// (x_j + shift)^k expanded
ShiftedPoly binomial_power(int j, int shift, int k, int n) {
    ShiftedPoly base = ShiftedPoly::variable(j, n) + ShiftedPoly::constant(n, Rational(shift));
    return base.pow(k);
}

}  // namespace

ShiftedPoly ShiftedPoly::swap_shifted(int i) const {
    if (i < 1 || i + 1 > n_) throw std::invalid_argument("swap index out of range");
    ShiftedPoly r(n_);
    for (const auto& [e, c] : terms_) {
        ShiftedPoly term = constant(n_, c);
        for (int j = 1; j <= n_; ++j) {
            if (e[j - 1] == 0) continue;
            if (j == i)
                term = term * binomial_power(i + 1, -1, e[j - 1], n_);
            else if (j == i + 1)
                term = term * binomial_power(i, +1, e[j - 1], n_);
            else {
                ShiftedPoly v(n_);
                std::vector<int> ev(n_, 0);
                ev[j - 1] = e[j - 1];
                v.add_term(std::move(ev), Rational(1));
                term = term * v;
            }
        }
        r = r + term;
    }
    return r;
}

ShiftedPoly ShiftedPoly::set_last_var_zero() const {
    if (n_ < 1) throw std::invalid_argument("no variable to specialize");
    ShiftedPoly r(n_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[n_ - 1] != 0) continue;
        r.add_term(std::vector<int>(e.begin(), e.end() - 1), c);
    }
    return r;
}

ShiftedPoly ShiftedPoly::homogeneous_component(int d) const {
    ShiftedPoly r(n_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == d) r.add_term(e, c);
    return r;
}

Rational ShiftedPoly::evaluate(const Partition& lambda) const {
    if (lambda.num_parts() > n_)
        throw std::domain_error("partition has more parts than variables");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        bool zero = false;
        for (int i = 0; i < n_ && !zero; ++i) {
            if (e[i] == 0) continue;
            long xi = i < lambda.num_parts() ? lambda.parts()[i] : 0;
            if (xi == 0) {
                zero = true;
                break;
            }
            for (int k = 0; k < e[i]; ++k) term *= xi;
        }
        if (!zero) acc += term;
    }
    return acc;
}

std::string ShiftedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << mag.get_str();
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

bool is_shifted_symmetric(const ShiftedPoly& p) {
    for (int i = 1; i + 1 <= p.n(); ++i)
        if (!(p.swap_shifted(i) == p)) return false;
    return true;
}

// --------------------------------------------------------------------------

namespace {

using Series = std::vector<ShiftedPoly>;  // coefficient of t^j at position j

Series series_one(int order, int n) {
    Series s(order + 1, ShiftedPoly(n));
    s[0] = ShiftedPoly::constant(n, Rational(1));
    return s;
}

Series series_mul(const Series& a, const Series& b, int n) {
    const int order = static_cast<int>(a.size()) - 1;
    Series out(order + 1, ShiftedPoly(n));
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

}  // namespace

std::vector<ShiftedPoly> generator_series(GenKind kind, int order, int n) {
    if (kind == GenKind::P) throw std::invalid_argument("p has no product generating function");
    Series acc = series_one(order, n);
    for (int k = 1; k <= n; ++k) {
        ShiftedPoly shifted = ShiftedPoly::variable(k, n) - ShiftedPoly::constant(n, Rational(k));
        if (kind == GenKind::E) {
            // (1 + (x_k - k) t) * sum_j k^j t^j
            Series f(order + 1, ShiftedPoly(n));
            Rational kpow(1);
            for (int j = 0; j <= order; ++j) {
                f[j] = f[j] + ShiftedPoly::constant(n, kpow);
                if (j + 1 <= order) f[j + 1] = f[j + 1] + shifted * kpow;
                kpow *= k;
            }
            acc = series_mul(acc, f, n);
        } else {
            // (1 + k t) * sum_j (x_k - k)^j t^j
            Series f(order + 1, ShiftedPoly(n));
            ShiftedPoly spow = ShiftedPoly::constant(n, Rational(1));
            for (int j = 0; j <= order; ++j) {
                f[j] = f[j] + spow;
                if (j + 1 <= order) f[j + 1] = f[j + 1] + spow * Rational(k);
                if (j + 1 <= order) spow = spow * shifted;
            }
            acc = series_mul(acc, f, n);
        }
    }
    return acc;
}

ShiftedPoly generator(GenKind kind, int M, int n) {
    if (M < 0) throw std::invalid_argument("generator: M must be >= 0");
    if (kind == GenKind::P) {
        ShiftedPoly acc(n);
        for (int k = 1; k <= n; ++k) {
            ShiftedPoly shifted =
                ShiftedPoly::variable(k, n) - ShiftedPoly::constant(n, Rational(k));
            Rational neg_k_pow(1);
            for (int j = 0; j < M; ++j) neg_k_pow *= -k;
            acc = acc + shifted.pow(M) - ShiftedPoly::constant(n, neg_k_pow);
        }
        return acc;
    }
    return generator_series(kind, M, n)[M];
}

ShiftedPoly classical_symmetric(GenKind kind, int M, int n) {
    if (kind == GenKind::P) {
        ShiftedPoly acc(n);
        for (int k = 1; k <= n; ++k) acc = acc + ShiftedPoly::variable(k, n).pow(M);
        return acc;
    }
    Series acc = series_one(M, n);
    for (int k = 1; k <= n; ++k) {
        Series f(M + 1, ShiftedPoly(n));
        if (kind == GenKind::E) {
            // 1 + x_k t
            f[0] = ShiftedPoly::constant(n, Rational(1));
            if (M >= 1) f[1] = ShiftedPoly::variable(k, n);
        } else {
            // 1/(1 - x_k t)
            ShiftedPoly xpow = ShiftedPoly::constant(n, Rational(1));
            for (int j = 0; j <= M; ++j) {
                f[j] = xpow;
                if (j < M) xpow = xpow * ShiftedPoly::variable(k, n);
            }
        }
        acc = series_mul(acc, f, n);
    }
    return acc[M];
}

Rational power_sum_eval(int M, const Partition& lambda) {
    Rational acc(0);
    for (int k = 1; k <= lambda.num_parts(); ++k) {
        Rational a(lambda.parts()[k - 1] - k), b(-k);
        Rational ap(1), bp(1);
        for (int j = 0; j < M; ++j) {
            ap *= a;
            bp *= b;
        }
        acc += ap - bp;
    }
    return acc;
}

// --------------------------------------------------------------------------

bool BridgeReport::ok() const {
    return n_independent && fit_found && heldout_ok && top_is_power_sum &&
           (r > 2 || pointwise_ok);
}

namespace {

Rational delta_eigenvalue(int r, const Partition& lambda, int n) {
    GammaRep rep(n, lambda);
    return central_eigenvalue(delta_element(n, Partition{{r}}), rep);
}

// products of power sums indexed by a partition mu: p_{mu_1} p_{mu_2} ...
Rational monomial_eval(const Partition& mu, const Partition& lambda) {
    Rational acc(1);
    for (int part : mu.parts()) acc *= power_sum_eval(part, lambda);
    return acc;
}

}  // namespace

BridgeReport bridge_check(int r, int B) {
    if (r < 1 || r > 4 || B < 1 || B > 4)
        throw std::invalid_argument("bridge_check: supported range is r <= 4, B <= 4");
    BridgeReport rep;
    rep.r = r;
    rep.B = B;

    auto grid = partitions_up_to(B);
    auto heldout = partitions_of(B + 1);

    // eigenvalues, with an n-independence probe at two sizes
    rep.n_independent = true;
    std::map<Partition, Rational> value;
    for (const auto& lam : grid) {
        int n0 = std::max(lam.size(), r);
        Rational v0 = delta_eigenvalue(r, lam, n0);
        if (delta_eigenvalue(r, lam, n0 + 1) != v0) rep.n_independent = false;
        value.emplace(lam, v0);
    }

    // interpolate in the monomial basis p_mu, |mu| <= r
    auto monomials = partitions_up_to(r);
    std::vector<std::vector<Rational>> cols(monomials.size());
    std::vector<Rational> target;
    for (const auto& lam : grid) target.push_back(value.at(lam));
    for (std::size_t j = 0; j < monomials.size(); ++j)
        for (const auto& lam : grid) cols[j].push_back(monomial_eval(monomials[j], lam));
    auto coeffs = solve_in_span(cols, target);
    rep.fit_found = coeffs.has_value();
    if (!rep.fit_found) return rep;
    for (std::size_t j = 0; j < monomials.size(); ++j)
        if ((*coeffs)[j] != 0) rep.fit.push_back(BridgeFit{monomials[j], (*coeffs)[j]});

    // hold-out partitions of size B + 1 must match the fitted polynomial
    rep.heldout_ok = true;
    for (const auto& lam : heldout) {
        Rational predicted(0);
        for (std::size_t j = 0; j < monomials.size(); ++j)
            predicted += (*coeffs)[j] * monomial_eval(monomials[j], lam);
        if (predicted != delta_eigenvalue(r, lam, std::max(lam.size(), r)))
            rep.heldout_ok = false;
    }

    // top homogeneous component of the fit = the ordinary power sum p_r
    const int nv = B + 1;
    ShiftedPoly top(nv);
    for (std::size_t j = 0; j < monomials.size(); ++j) {
        if ((*coeffs)[j] == 0 || monomials[j].size() != r) continue;
        ShiftedPoly prod = ShiftedPoly::constant(nv, Rational(1));
        for (int part : monomials[j].parts()) prod = prod * classical_symmetric(GenKind::P, part, nv);
        top = top + prod * (*coeffs)[j];
    }
    rep.top_is_power_sum = (top == classical_symmetric(GenKind::P, r, nv));

    // r = 1, 2 have closed pointwise forms: p_1 and p_2 + p_1
    if (r <= 2) {
        rep.pointwise_ok = true;
        for (const auto& lam : grid) {
            Rational expected = r == 1 ? power_sum_eval(1, lam)
                                       : power_sum_eval(2, lam) + power_sum_eval(1, lam);
            if (value.at(lam) != expected) rep.pointwise_ok = false;
        }
    }
    return rep;
}

}  // namespace rookalg
