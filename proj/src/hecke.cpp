#include "rookalg/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "rookalg/central_families.hpp"

namespace rookalg {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// left-to-right adjacent-transposition word for a permutation
std::vector<int> transposition_word(const PartialBijection& perm) {
    std::vector<int> w(perm.n());
    for (auto [j, t] : perm.pairs()) w[j - 1] = t;
    std::vector<int> collected;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i + 1 < perm.n(); ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                collected.push_back(i + 1);
                moved = true;
            }
        }
    }
    std::reverse(collected.begin(), collected.end());
    return collected;  // perm = s_{collected[0]} * s_{collected[1]} * ...
}

}  // namespace

HeckeNormalForm HeckeNormalForm::one(int m, HeckeVariant v) {
    HeckeNormalForm x(m, v);
    x.add_term(PartialBijection::identity(m), std::vector<int>(m, 0), Rational(1));
    return x;
}

HeckeNormalForm HeckeNormalForm::generator(const HeckeLetter& letter, int m, HeckeVariant v) {
    return times_letter(one(m, v), letter);
}

int HeckeNormalForm::u_degree() const {
    int d = 0;
    for (const auto& [key, c] : terms_) {
        int s = 0;
        for (int k : key.second) s += k;
        d = std::max(d, s);
    }
    return d;
}

void HeckeNormalForm::add_term(const PartialBijection& gamma, const std::vector<int>& upow,
                               const Rational& c) {
    if (c == 0) return;
    if (gamma.n() != m_ || static_cast<int>(upow.size()) != m_)
        throw std::invalid_argument("hecke term shape mismatch");
    if (variant_ == HeckeVariant::Plain && !gamma.is_permutation())
        throw std::invalid_argument("plain variant terms must be permutations");
    for (int j = 1; j <= m_; ++j)
        if (upow[j - 1] != 0 && !gamma.defined_on(j))
            throw std::invalid_argument("normal form violates the zero-column constraint");
    auto [it, inserted] = terms_.emplace(Key{gamma, upow}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HeckeNormalForm HeckeNormalForm::operator+(const HeckeNormalForm& o) const {
    if (m_ != o.m_ || variant_ != o.variant_)
        throw std::invalid_argument("hecke sum: shape or variant mismatch");
    HeckeNormalForm r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, c);
    return r;
}

HeckeNormalForm HeckeNormalForm::operator-(const HeckeNormalForm& o) const {
    return *this + o * Rational(-1);
}

HeckeNormalForm HeckeNormalForm::operator*(const Rational& c) const {
    HeckeNormalForm r(m_, variant_);
    if (c == 0) return r;
    for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
    return r;
}

std::string HeckeNormalForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << key.first.str();
        for (int j = 0; j < m_; ++j) {
            if (key.second[j] == 0) continue;
            os << "*u" << (j + 1);
            if (key.second[j] > 1) os << '^' << key.second[j];
        }
    }
    return os.str();
}

// --------------------------------------------------------------------------
// rewriting

namespace {

using Key = HeckeNormalForm::Key;

HeckeNormalForm term_nf(int m, HeckeVariant v, const PartialBijection& g,
                        const std::vector<int>& k, const Rational& c) {
    HeckeNormalForm x(m, v);
    x.add_term(g, k, c);
    return x;
}

HeckeNormalForm nf_times_u(const HeckeNormalForm& a, int j);
HeckeNormalForm nf_times_eps(const HeckeNormalForm& a, int i);
HeckeNormalForm nf_times_s(const HeckeNormalForm& a, int j, std::mt19937* rng);

// term * (1-eps_j)(1-eps_{j+1}) in the tilde variant, term itself in plain
HeckeNormalForm cross_correction(const HeckeNormalForm& t, int j) {
    if (t.variant() == HeckeVariant::Plain) return t;
    HeckeNormalForm a = t - nf_times_eps(t, j);
    return a - nf_times_eps(a, j + 1);
}

HeckeNormalForm nf_times_u(const HeckeNormalForm& a, int j) {
    HeckeNormalForm out(a.m(), a.variant());
    for (const auto& [key, c] : a.terms()) {
        const auto& [g, k] = key;
        if (a.variant() == HeckeVariant::Tilde && !g.defined_on(j))
            continue;  // gamma eps_j = gamma, and eps_j u_j = 0
        std::vector<int> k2 = k;
        ++k2[j - 1];
        out.add_term(g, k2, c);
    }
    return out;
}

HeckeNormalForm nf_times_eps(const HeckeNormalForm& a, int i) {
    if (a.variant() == HeckeVariant::Plain)
        throw std::invalid_argument("plain variant has no eps letters");
    HeckeNormalForm out(a.m(), a.variant());
    const PartialBijection e = PartialBijection::eps(i, a.m());
    for (const auto& [key, c] : a.terms()) {
        const auto& [g, k] = key;
        if (k[i - 1] > 0) continue;  // u_i eps_i = 0
        out.add_term(compose(g, e), k, c);
    }
    return out;
}

// single term gamma u^k times s_j
HeckeNormalForm term_times_s(int m, HeckeVariant v, const PartialBijection& g,
                             std::vector<int> k, const Rational& c, int j, std::mt19937* rng) {
    const int kj = k[j - 1];
    const int kj1 = k[j];
    if (kj == 0 && kj1 == 0) {
        // u_l commutes with s_j for every l with a nonzero exponent here
        return term_nf(m, v, compose(g, PartialBijection::transposition(j, m)), k, c);
    }
    bool strip_right;  // strip u_{j+1} rather than u_j
    if (kj == 0)
        strip_right = true;
    else if (kj1 == 0)
        strip_right = false;
    else if (rng)
        strip_right = ((*rng)() & 1) != 0;
    else
        strip_right = true;
    if (strip_right) {
        // u_{j+1} s_j = s_j u_j - (1-eps_j)(1-eps_{j+1})
        --k[j];
        HeckeNormalForm base = term_times_s(m, v, g, k, c, j, rng);
        return nf_times_u(base, j) - cross_correction(term_nf(m, v, g, k, c), j);
    }
    // u_j s_j = s_j u_{j+1} + (1-eps_j)(1-eps_{j+1})
    --k[j - 1];
    HeckeNormalForm base = term_times_s(m, v, g, k, c, j, rng);
    return nf_times_u(base, j + 1) + cross_correction(term_nf(m, v, g, k, c), j);
}

HeckeNormalForm nf_times_s(const HeckeNormalForm& a, int j, std::mt19937* rng) {
    HeckeNormalForm out(a.m(), a.variant());
    for (const auto& [key, c] : a.terms())
        out = out + term_times_s(a.m(), a.variant(), key.first, key.second, c, j, rng);
    return out;
}

HeckeNormalForm nf_times_letter(const HeckeNormalForm& a, const HeckeLetter& letter,
                                std::mt19937* rng) {
    switch (letter.kind) {
        case HeckeLetter::S:
            if (letter.index < 1 || letter.index >= a.m())
                throw std::invalid_argument("s index out of range");
            return nf_times_s(a, letter.index, rng);
        case HeckeLetter::E:
            if (letter.index < 1 || letter.index > a.m())
                throw std::invalid_argument("eps index out of range");
            return nf_times_eps(a, letter.index);
        case HeckeLetter::U:
            if (letter.index < 1 || letter.index > a.m())
                throw std::invalid_argument("u index out of range");
            return nf_times_u(a, letter.index);
    }
    throw std::logic_error("unreachable");
}

HeckeNormalForm multiply_impl(const HeckeNormalForm& a, const HeckeNormalForm& b,
                              std::mt19937* rng) {
    if (a.m() != b.m() || a.variant() != b.variant())
        throw std::invalid_argument("hecke product: shape or variant mismatch");
    const int m = a.m();
    HeckeNormalForm out(m, a.variant());
    for (const auto& [bkey, bc] : b.terms()) {
        const auto& [g2, k2] = bkey;
        // factor g2 = sigma * eps_K with sigma a full permutation extending it
        std::vector<bool> src_used(m + 1, false), tgt_used(m + 1, false);
        for (auto [j, t] : g2.pairs()) {
            src_used[j] = true;
            tgt_used[t] = true;
        }
        std::vector<std::pair<int, int>> pairs = g2.pairs();
        std::vector<int> eps_cols;
        int next_tgt = 1;
        for (int j = 1; j <= m; ++j) {
            if (src_used[j]) continue;
            eps_cols.push_back(j);
            while (tgt_used[next_tgt]) ++next_tgt;
            pairs.emplace_back(j, next_tgt);
            tgt_used[next_tgt] = true;
        }
        PartialBijection sigma(m, std::move(pairs));

        for (const auto& [akey, ac] : a.terms()) {
            HeckeNormalForm t = term_nf(m, a.variant(), akey.first, akey.second, ac * bc);
            for (int s : transposition_word(sigma)) t = nf_times_s(t, s, rng);
            for (int i : eps_cols) t = nf_times_eps(t, i);
            for (int j = 1; j <= m; ++j)
                for (int rep = 0; rep < k2[j - 1]; ++rep) t = nf_times_u(t, j);
            out = out + t;
        }
    }
    return out;
}

}  // namespace

HeckeNormalForm multiply_nf(const HeckeNormalForm& a, const HeckeNormalForm& b) {
    return multiply_impl(a, b, nullptr);
}

HeckeNormalForm multiply_nf_randomized(const HeckeNormalForm& a, const HeckeNormalForm& b,
                                       std::mt19937& rng) {
    return multiply_impl(a, b, &rng);
}

HeckeNormalForm times_letter(const HeckeNormalForm& a, const HeckeLetter& letter) {
    return nf_times_letter(a, letter, nullptr);
}

std::uint64_t truncated_dimension(int m, int M, HeckeVariant variant) {
    std::uint64_t total = 0;
    for (const auto& g : enumerate_gamma(m)) {
        if (variant == HeckeVariant::Plain && !g.is_permutation()) continue;
        // exponents live on the nonzero columns: C(M + d, d) vectors of sum <= M
        std::uint64_t d = variant == HeckeVariant::Plain ? m : g.rank();
        total += binomial(M + d, d);
    }
    return total;
}

AlgebraElement psi_hom(const HeckeNormalForm& x, int n) {
    if (n < x.m()) throw std::invalid_argument("psi_hom: n must be >= m");
    AlgebraElement out(n);
    for (const auto& [key, c] : x.terms()) {
        AlgebraElement term = AlgebraElement::basis(embed_phi(key.first, n)) * c;
        for (int j = 1; j <= x.m(); ++j) {
            const AlgebraElement u = jm_element(n, j);
            for (int rep = 0; rep < key.second[j - 1]; ++rep) term = multiply(term, u);
        }
        out += term;
    }
    return out;
}

HeckeNormalForm retract_to_plain(const HeckeNormalForm& x) {
    if (x.variant() != HeckeVariant::Tilde)
        throw std::invalid_argument("retract_to_plain expects the tilde variant");
    HeckeNormalForm out(x.m(), HeckeVariant::Plain);
    for (const auto& [key, c] : x.terms())
        if (key.first.is_permutation()) out.add_term(key.first, key.second, c);
    return out;
}

AlgebraElement phi_hom(const HeckeNormalForm& x, int n) {
    if (x.variant() != HeckeVariant::Plain)
        throw std::invalid_argument("phi_hom expects the plain variant");
    if (n < x.m()) throw std::invalid_argument("phi_hom: n must be >= m");
    AlgebraElement out(n);
    for (const auto& [key, c] : x.terms()) {
        AlgebraElement term = AlgebraElement::basis(embed_phi(key.first, n)) * c;
        for (int j = 1; j <= x.m(); ++j) {
            if (key.second[j - 1] == 0) continue;
            AlgebraElement u(n);  // classical Jucys-Murphy sum
            for (int i = j + 1; i <= n; ++i)
                u.add_term(PartialBijection::swap_points(j, i, n), Rational(1));
            for (int rep = 0; rep < key.second[j - 1]; ++rep) term = multiply(term, u);
        }
        out += term;
    }
    return out;
}

HeckeNormalForm parse_word_expr(const std::string& text, int m, HeckeVariant variant) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);

    HeckeNormalForm acc = HeckeNormalForm::zero(m, variant);
    std::size_t pos = 0;
    bool first_word = true;
    while (pos < tokens.size()) {
        int sign = 1;
        if (tokens[pos] == "+" || tokens[pos] == "-") {
            if (first_word) throw std::invalid_argument("word expression starts with an operator");
            sign = tokens[pos] == "-" ? -1 : 1;
            ++pos;
            if (pos >= tokens.size()) throw std::invalid_argument("dangling operator");
        }
        first_word = false;
        Rational coeff(sign);
        bool saw_letter = false;
        HeckeNormalForm word = HeckeNormalForm::one(m, variant);
        bool coefficient_allowed = true;
        while (pos < tokens.size() && tokens[pos] != "+" && tokens[pos] != "-") {
            const std::string& t = tokens[pos];
            if (coefficient_allowed &&
                (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '-')) {
                coeff *= parse_rational(t);
                coefficient_allowed = false;
                ++pos;
                continue;
            }
            coefficient_allowed = false;
            if (t.size() < 2 || (t[0] != 's' && t[0] != 'e' && t[0] != 'u'))
                throw std::invalid_argument("bad hecke letter: " + t);
            int index = std::stoi(t.substr(1));
            HeckeLetter letter{t[0] == 's'   ? HeckeLetter::S
                               : t[0] == 'e' ? HeckeLetter::E
                                             : HeckeLetter::U,
                               index};
            word = times_letter(word, letter);
            saw_letter = true;
            ++pos;
        }
        if (!saw_letter && coefficient_allowed)
            throw std::invalid_argument("empty word in expression");
        acc = acc + word * coeff;
    }
    return acc;
}

}  // namespace rookalg
