#include "rookalg/monoid_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rookalg {

AlgebraElement AlgebraElement::unit(int n) { return basis(PartialBijection::identity(n)); }

AlgebraElement AlgebraElement::basis(const PartialBijection& g) {
    AlgebraElement a(g.n());
    a.terms_.emplace(g, Rational(1));
    return a;
}

AlgebraElement AlgebraElement::gen_s(int k, int n) {
    return basis(PartialBijection::transposition(k, n));
}

AlgebraElement AlgebraElement::gen_eps(int i, int n) {
    return basis(PartialBijection::eps(i, n));
}

AlgebraElement AlgebraElement::one_minus_eps(int i, int n) {
    AlgebraElement a = unit(n);
    a.add_term(PartialBijection::eps(i, n), Rational(-1));
    return a;
}

Rational AlgebraElement::coeff(const PartialBijection& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const PartialBijection& g, const Rational& c) {
    if (c == 0) return;
    if (g.n() != n_) throw std::invalid_argument("add_term: ambient size mismatch");
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("sum: ambient size mismatch");
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("difference: ambient size mismatch");
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r += o;
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r -= o;
    return r;
}

AlgebraElement AlgebraElement::operator-() const { return *this * Rational(-1); }

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
    AlgebraElement r(n_);
    if (c == 0) return r;
    for (const auto& [g, v] : terms_) r.terms_.emplace(g, v * c);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    return multiply(*this, o);
}

int AlgebraElement::deg() const {
    int d = 0;
    for (const auto& [g, c] : terms_) d = std::max(d, g.deg());
    return d;
}

int AlgebraElement::deg_m(int m) const {
    int d = 0;
    for (const auto& [g, c] : terms_) d = std::max(d, g.deg_m(m));
    return d;
}

int AlgebraElement::rank() const {
    int r = 0;
    for (const auto& [g, c] : terms_) r = std::max(r, g.rank());
    return r;
}

AlgebraElement AlgebraElement::star() const {
    AlgebraElement r(n_);
    for (const auto& [g, c] : terms_) r.terms_.emplace(g.star(), c);
    return r;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("multiply: ambient size mismatch");
    AlgebraElement r(a.n());
    for (const auto& [g, c] : a.terms())
        for (const auto& [h, d] : b.terms()) r.add_term(compose(g, h), c * d);
    return r;
}

AlgebraElement theta_n(const AlgebraElement& a) {
    if (a.n() < 1) throw std::invalid_argument("theta_n: ambient size must be >= 1");
    AlgebraElement r(a.n() - 1);
    // project_theta may send distinct basis elements to the same one (often
    // the semigroup zero); coefficients accumulate.
    for (const auto& [g, c] : a.terms()) r.add_term(project_theta(g, a.n() - 1), c);
    return r;
}

AlgebraElement theta_to(const AlgebraElement& a, int k) {
    if (k > a.n()) throw std::invalid_argument("theta_to: target size too large");
    AlgebraElement r = a;
    while (r.n() > k) r = theta_n(r);
    return r;
}

AlgebraElement retraction(const AlgebraElement& a) {
    AlgebraElement r(a.n());
    for (const auto& [g, c] : a.terms())
        if (g.is_permutation()) r.add_term(g, c);
    return r;
}

// --------------------------------------------------------------------------
// printing / parsing

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << g.str();
    }
    return os.str();
}

namespace {

class ElementParser {
public:
    explicit ElementParser(const std::string& text) : text_(text) {}

    AlgebraElement parse(std::optional<int> expected_n) {
        skip_ws();
        if (peek() == '0' && at_end(pos_ + 1)) {
            if (!expected_n)
                fail("cannot infer the ambient size of the zero element");
            return AlgebraElement::zero(*expected_n);
        }
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        auto [g, c] = parse_term();
        AlgebraElement acc(expected_n ? *expected_n : g.n());
        if (g.n() != acc.n())
            fail("ambient size " + std::to_string(g.n()) + " does not match expected " +
                 std::to_string(acc.n()));
        acc.add_term(g, c * sign);
        skip_ws();
        while (!at_end(pos_)) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            auto [h, d] = parse_term();
            if (h.n() != acc.n()) fail("mixed ambient sizes in one element");
            acc.add_term(h, op == '-' ? -d : d);
            skip_ws();
        }
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " +
                                    msg + " in \"" + text_ + "\"");
    }

    bool at_end(std::size_t p) const {
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p >= text_.size();
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(text_.substr(start, pos_ - start));
    }

    std::pair<PartialBijection, Rational> parse_term() {
        skip_ws();
        Rational c(1);
        // optional coefficient: int [/ int] '*'
        std::size_t save = pos_;
        if (peek() == '-' || peek() == '+' || std::isdigit(static_cast<unsigned char>(peek()))) {
            long num = parse_int();
            long den = 1;
            if (peek() == '/') {
                ++pos_;
                den = parse_int();
            }
            if (peek() == '*') {
                ++pos_;
                c = rational_of(num, den);
            } else {
                pos_ = save;  // bare number is not a term; atoms carry the value
                fail("expected '*' after coefficient");
            }
        }
        return {parse_atom(), c};
    }

    PartialBijection parse_atom() {
        skip_ws();
        if (peek() == '[') return parse_gamma();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "id") {
            expect('(');
            int n = static_cast<int>(parse_int());
            expect(')');
            return PartialBijection::identity(n);
        }
        if (name == "eps") {
            expect('(');
            int i = static_cast<int>(parse_int());
            expect(',');
            int n = static_cast<int>(parse_int());
            expect(')');
            return PartialBijection::eps(i, n);
        }
        if (name == "s") {
            expect('(');
            int k = static_cast<int>(parse_int());
            expect(',');
            int n = static_cast<int>(parse_int());
            expect(')');
            return PartialBijection::transposition(k, n);
        }
        if (name == "cycle") {
            expect('(');
            std::vector<int> pts;
            pts.push_back(static_cast<int>(parse_int()));
            while (peek() == ',') {
                ++pos_;
                pts.push_back(static_cast<int>(parse_int()));
            }
            expect(';');
            int n = static_cast<int>(parse_int());
            expect(')');
            return PartialBijection::cycle(pts, n);
        }
        fail("expected an atom ('[', id, eps, s or cycle)");
    }

    PartialBijection parse_gamma() {
        expect('[');
        int n = static_cast<int>(parse_int());
        expect(';');
        std::vector<std::pair<int, int>> pairs;
        while (peek() != ']') {
            int j = static_cast<int>(parse_int());
            expect('-');
            expect('>');
            int t = static_cast<int>(parse_int());
            pairs.emplace_back(j, t);
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        expect(']');
        return PartialBijection(n, std::move(pairs));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement AlgebraElement::parse(const std::string& text, std::optional<int> expected_n) {
    return ElementParser(text).parse(expected_n);
}

// --------------------------------------------------------------------------
// coordinates

GammaIndex::GammaIndex(int n) : n_(n), order_(enumerate_gamma(n)) {
    pos_.reserve(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) pos_.emplace(order_[i], static_cast<int>(i));
}

int GammaIndex::index_of(const PartialBijection& g) const {
    auto it = pos_.find(g);
    if (it == pos_.end()) throw std::invalid_argument("element outside the indexed Gamma(n)");
    return it->second;
}

std::shared_ptr<const GammaIndex> GammaIndex::shared(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const GammaIndex>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<GammaIndex>(n);
    return slot;
}

std::vector<Rational> coordinates(const AlgebraElement& a, const GammaIndex& idx) {
    std::vector<Rational> v(idx.size(), Rational(0));
    for (const auto& [g, c] : a.terms()) v[idx.index_of(g)] = c;
    return v;
}

namespace {

SparseQVec sparse_coordinates(const AlgebraElement& a, const GammaIndex& idx) {
    SparseQVec v;
    v.reserve(a.support_size());
    // map iteration follows the enumeration order, so indices come out sorted
    for (const auto& [g, c] : a.terms()) v.emplace_back(idx.index_of(g), c);
    return v;
}

}  // namespace

// --------------------------------------------------------------------------
// subspaces

SubspaceHandle::SubspaceHandle(int n, std::vector<AlgebraElement> spanning)
    : n_(n), index_(GammaIndex::shared(n)) {
    IncrementalSpan span(static_cast<int>(index_->size()));
    for (auto& v : spanning) {
        if (v.n() != n) throw std::invalid_argument("subspace: ambient size mismatch");
        if (span.add(sparse_coordinates(v, *index_))) basis_.push_back(std::move(v));
    }
}

bool SubspaceHandle::contains(const AlgebraElement& x) const {
    if (x.n() != n_) return false;
    IncrementalSpan span(static_cast<int>(index_->size()));
    for (const auto& b : basis_) span.add(sparse_coordinates(b, *index_));
    return span.contains(sparse_coordinates(x, *index_));
}

std::optional<std::vector<Rational>> SubspaceHandle::coordinates_in_basis(
    const AlgebraElement& x) const {
    std::vector<std::vector<Rational>> cols;
    cols.reserve(basis_.size());
    for (const auto& b : basis_) cols.push_back(coordinates(b, *index_));
    return solve_in_span(cols, coordinates(x, *index_));
}

bool SubspaceHandle::same_span(const SubspaceHandle& other) const {
    if (n_ != other.n_ || dim() != other.dim()) return false;
    IncrementalSpan span(static_cast<int>(index_->size()));
    for (const auto& b : basis_) span.add(sparse_coordinates(b, *index_));
    for (const auto& b : other.basis_)
        if (!span.contains(sparse_coordinates(b, *index_))) return false;
    return true;
}

namespace {

// Conjugation orbits of S_m(n) on a subset of Gamma(n) given by its indices.
std::vector<std::vector<int>> conjugation_orbits(const GammaIndex& idx, int m,
                                                 const std::vector<int>& members) {
    const int n = idx.n();
    std::vector<PartialBijection> gens;
    for (int k = m + 1; k + 1 <= n; ++k) gens.push_back(PartialBijection::transposition(k, n));
    std::vector<char> in_set(idx.size(), 0), seen(idx.size(), 0);
    for (int i : members) in_set[i] = 1;
    std::vector<std::vector<int>> orbits;
    for (int start : members) {
        if (seen[start]) continue;
        std::vector<int> orbit{start};
        seen[start] = 1;
        for (std::size_t q = 0; q < orbit.size(); ++q) {
            const PartialBijection& g = idx.at(orbit[q]);
            for (const auto& s : gens) {
                int j = idx.index_of(compose(compose(s, g), s));  // s g s^{-1}, s an involution
                if (!in_set[j])
                    throw std::logic_error("conjugation left the member set");
                if (!seen[j]) {
                    seen[j] = 1;
                    orbit.push_back(j);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace

SubspaceHandle centralizer(int n, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("centralizer: need 0 <= m <= n");
    auto idx = GammaIndex::shared(n);
    std::vector<int> all(idx->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    auto orbits = conjugation_orbits(*idx, m, all);

    std::vector<AlgebraElement> vectors;
    if (m == n) {
        // Gamma_n(n) = {1}: every orbit is a singleton and there is no
        // idempotent constraint, so the centralizer is the whole algebra.
        for (const auto& orbit : orbits) {
            AlgebraElement v(n);
            for (int i : orbit) v.add_term(idx->at(i), Rational(1));
            vectors.push_back(std::move(v));
        }
    } else {
        // Commuting with S_m(n) <=> constant on conjugation orbits.  Within
        // that space, cut by the commutator with eps_{m+1}; its S_m(n)-
        // conjugates supply the remaining idempotent generators of Gamma_m(n).
        const PartialBijection e = PartialBijection::eps(m + 1, n);
        RationalMatrix com(static_cast<int>(idx->size()), static_cast<int>(orbits.size()));
        for (std::size_t j = 0; j < orbits.size(); ++j) {
            for (int i : orbits[j]) {
                const PartialBijection& g = idx->at(i);
                com.add_to(idx->index_of(compose(g, e)), static_cast<int>(j), Rational(1));
                com.add_to(idx->index_of(compose(e, g)), static_cast<int>(j), Rational(-1));
            }
        }
        for (const auto& coeffs : kernel_basis(com)) {
            AlgebraElement v(n);
            for (std::size_t j = 0; j < orbits.size(); ++j) {
                if (coeffs[j] == 0) continue;
                for (int i : orbits[j]) v.add_term(idx->at(i), coeffs[j]);
            }
            vectors.push_back(std::move(v));
        }
    }

    SubspaceHandle handle(n, std::move(vectors));
    if (n <= 4) {
        // assert the result commutes with every element of Gamma_m(n)
        for (const auto& g : enumerate_gamma(n)) {
            bool in_gamma_m = true;
            for (int i = 1; i <= m; ++i)
                if (g.apply(i) != i) in_gamma_m = false;
            if (!in_gamma_m) continue;
            AlgebraElement bg = AlgebraElement::basis(g);
            for (const auto& v : handle.basis())
                if (multiply(v, bg) != multiply(bg, v))
                    throw std::logic_error("centralizer element fails to commute with Gamma_m(n)");
        }
    }
    return handle;
}

std::vector<AlgebraElement> zmn_orbit_sums(int n, int m) {
    auto idx = GammaIndex::shared(n);
    std::vector<int> members;
    for (std::size_t i = 0; i < idx->size(); ++i)
        if (in_gamma_mn(idx->at(i), m)) members.push_back(static_cast<int>(i));
    std::vector<AlgebraElement> sums;
    for (const auto& orbit : conjugation_orbits(*idx, m, members)) {
        AlgebraElement v(n);
        for (int i : orbit) v.add_term(idx->at(i), Rational(1));
        sums.push_back(std::move(v));
    }
    return sums;
}

AlgebraElement eps_complement_product(int n, int from, int to) {
    AlgebraElement acc = AlgebraElement::unit(n);
    for (int i = from; i <= to; ++i) acc = multiply(acc, AlgebraElement::one_minus_eps(i, n));
    return acc;
}

SubspaceHandle ideal_intersection(int n, int m) {
    if (!(0 <= m && m < n)) throw std::invalid_argument("ideal_intersection: need 0 <= m < n");
    SubspaceHandle cent = centralizer(n, m);
    // I(n) = A(n)(1 - eps_n) = {x : x eps_n = 0}, so inside A_m(n) the
    // intersection is the kernel of right multiplication by eps_n.
    auto idx = GammaIndex::shared(n);
    const AlgebraElement eps_n = AlgebraElement::gen_eps(n, n);
    RationalMatrix mul(static_cast<int>(idx->size()), cent.dim());
    for (int j = 0; j < cent.dim(); ++j) {
        AlgebraElement image = multiply(cent.basis()[j], eps_n);
        for (const auto& [g, c] : image.terms()) mul.add_to(idx->index_of(g), j, c);
    }
    std::vector<AlgebraElement> vectors;
    for (const auto& coeffs : kernel_basis(mul)) {
        AlgebraElement v(n);
        for (int j = 0; j < cent.dim(); ++j)
            if (coeffs[j] != 0) v += cent.basis()[j] * coeffs[j];
        vectors.push_back(std::move(v));
    }
    SubspaceHandle result(n, std::move(vectors));

    // cross-check against the sandwich form (1-eps_{m+1})...(1-eps_n) Z_m(n) (...)
    const AlgebraElement E = eps_complement_product(n, m + 1, n);
    std::vector<AlgebraElement> sandwich;
    for (const auto& z : zmn_orbit_sums(n, m)) sandwich.push_back(multiply(multiply(E, z), E));
    SubspaceHandle sandwich_span(n, std::move(sandwich));
    if (!result.same_span(sandwich_span))
        throw std::logic_error("ideal intersection does not match its sandwich form");
    return result;
}

SubspaceHandle filtration_term(const SubspaceHandle& space, int M, int m) {
    // Solve for combinations whose coordinates vanish on every basis element
    // of m-degree > M.
    auto idx = GammaIndex::shared(space.n());
    std::vector<int> high;
    for (std::size_t i = 0; i < idx->size(); ++i)
        if (idx->at(i).deg_m(m) > M) high.push_back(static_cast<int>(i));
    std::unordered_map<int, int> row_of;
    for (std::size_t r = 0; r < high.size(); ++r) row_of.emplace(high[r], static_cast<int>(r));

    RationalMatrix constraints(static_cast<int>(high.size()), space.dim());
    for (int j = 0; j < space.dim(); ++j)
        for (const auto& [g, c] : space.basis()[j].terms()) {
            auto it = row_of.find(idx->index_of(g));
            if (it != row_of.end()) constraints.add_to(it->second, j, c);
        }
    std::vector<AlgebraElement> vectors;
    for (const auto& coeffs : kernel_basis(constraints)) {
        AlgebraElement v(space.n());
        for (int j = 0; j < space.dim(); ++j)
            if (coeffs[j] != 0) v += space.basis()[j] * coeffs[j];
        vectors.push_back(std::move(v));
    }
    return SubspaceHandle(space.n(), std::move(vectors));
}

}  // namespace rookalg
