#include "rookalg/central_families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rookalg {

namespace {

// subsets of `pool` of the given size, as sorted vectors
void subsets_of_size(const std::vector<int>& pool, int size,
                     const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (static_cast<int>(cur.size()) == size) {
            emit(cur);
            return;
        }
        if (pool.size() - next < size - cur.size()) return;
        for (std::size_t i = next; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// the permutation of {1..n} given by arranging `arrangement` into cycles of
// the partition's lengths, consecutively
PartialBijection cycles_from_arrangement(int n, const std::vector<int>& arrangement,
                                         const Partition& M) {
    PartialBijection acc = PartialBijection::identity(n);
    std::size_t at = 0;
    for (int len : M.parts()) {
        std::vector<int> pts(arrangement.begin() + at, arrangement.begin() + at + len);
        acc = compose(acc, PartialBijection::cycle(pts, n));
        at += len;
    }
    return acc;
}

// gamma restricted to sources outside drop_src and targets outside drop_tgt
PartialBijection restrict(const PartialBijection& g, const std::vector<bool>& drop_src,
                          const std::vector<bool>& drop_tgt) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [j, t] : g.pairs())
        if (!drop_src[j] && !drop_tgt[t]) pairs.emplace_back(j, t);
    return PartialBijection(g.n(), std::move(pairs));
}

// all elements of Gamma(alpha, P): pattern alpha realized with pass-through
// set exactly P, fixing the rest of {m+1..n}
void gamma_alpha_p(int n, const RookPattern& alpha, const std::vector<int>& P,
                   const std::function<void(const PartialBijection&)>& emit) {
    const int m = alpha.m();
    const auto& entries = alpha.entries();
    std::vector<int> remaining = P;
    std::vector<std::vector<int>> chains(entries.size());
    std::function<void(std::size_t)> rec = [&](std::size_t e) {
        if (e == entries.size()) {
            // every point of P has been consumed by some chain at this depth
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t i = 0; i < entries.size(); ++i) {
                int src = entries[i].col;
                for (int p : chains[i]) {
                    pairs.emplace_back(src, p);
                    src = p;
                }
                pairs.emplace_back(src, entries[i].row);
            }
            // points of {m+1..n} outside P are fixed
            std::vector<bool> in_p(n + 1, false);
            for (int p : P) in_p[p] = true;
            for (int x = m + 1; x <= n; ++x)
                if (!in_p[x]) pairs.emplace_back(x, x);
            emit(PartialBijection(n, std::move(pairs)));
            return;
        }
        const int k = entries[e].order;
        // ordered k-tuples of distinct points from `remaining`
        std::vector<int> tuple;
        std::function<void()> pick = [&]() {
            if (static_cast<int>(tuple.size()) == k) {
                chains[e] = tuple;
                rec(e + 1);
                return;
            }
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                int p = remaining[i];
                if (p == 0) continue;
                remaining[i] = 0;
                tuple.push_back(p);
                pick();
                tuple.pop_back();
                remaining[i] = p;
            }
        };
        pick();
    };
    // remaining acts as a scratch pool with 0 = taken; leftover points are
    // consumed exactly when the chain sizes sum to |P|
    rec(0);
}

}  // namespace

std::string BasisLabel::str(int n) const {
    std::ostringstream os;
    os << "delta{alpha=" << alpha.str() << "; M=" << M.str() << "; m=" << alpha.m() << "; n=" << n
       << '}';
    return os.str();
}

std::string BasisLabel::str() const {
    std::ostringstream os;
    os << "delta{alpha=" << alpha.str() << "; M=" << M.str() << "; m=" << alpha.m() << '}';
    return os.str();
}

std::strong_ordering BasisLabel::operator<=>(const BasisLabel& o) const {
    if (auto c = total() <=> o.total(); c != 0) return c;
    if (auto c = alpha <=> o.alpha; c != 0) return c;
    return M <=> o.M;
}

std::vector<BasisLabel> basis_labels(int m, int max_total) {
    std::vector<BasisLabel> out;
    for (const auto& alpha : enumerate_patterns(m, max_total))
        for (const auto& M : partitions_up_to(max_total - alpha.ord()))
            out.push_back(BasisLabel{alpha, M});
    std::sort(out.begin(), out.end());
    return out;
}

AlgebraElement cycle_sum_over_set(int n, const std::vector<int>& Q, const Partition& M) {
    if (static_cast<int>(Q.size()) != M.size())
        throw std::invalid_argument("cycle_sum_over_set: |Q| must equal |M|");
    AlgebraElement acc(n);
    std::vector<int> arrangement = Q;
    std::sort(arrangement.begin(), arrangement.end());
    do {
        acc.add_term(cycles_from_arrangement(n, arrangement, M), Rational(1));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return acc;
}

AlgebraElement c_element(int n, const Partition& M) {
    return c_element(n, RookPattern(0), M);
}

AlgebraElement c_element(int n, const RookPattern& alpha, const Partition& M) {
    const int m = alpha.m();
    if (m > n) throw std::invalid_argument("c_element: level exceeds ambient size");
    AlgebraElement acc(n);
    if (alpha.ord() + M.size() > n - m) return acc;  // nothing to sum over
    std::vector<int> pool;
    for (int x = m + 1; x <= n; ++x) pool.push_back(x);
    subsets_of_size(pool, alpha.ord(), [&](const std::vector<int>& P) {
        std::vector<int> rest;
        for (int x : pool)
            if (!std::binary_search(P.begin(), P.end(), x)) rest.push_back(x);
        subsets_of_size(rest, M.size(), [&](const std::vector<int>& Q) {
            AlgebraElement cq = cycle_sum_over_set(n, Q, M);
            gamma_alpha_p(n, alpha, P, [&](const PartialBijection& sigma) {
                acc += multiply(AlgebraElement::basis(sigma), cq);
            });
        });
    });
    return acc;
}

AlgebraElement delta_element(int n, const Partition& M) {
    return delta_element(n, RookPattern(0), M);
}

AlgebraElement delta_element(int n, const RookPattern& alpha, const Partition& M) {
    const int m = alpha.m();
    if (m > n) throw std::invalid_argument("delta_element: level exceeds ambient size");
    AlgebraElement acc(n);
    if (alpha.ord() + M.size() > n - m) return acc;  // the zero convention

    std::vector<int> pool;
    for (int x = m + 1; x <= n; ++x) pool.push_back(x);
    subsets_of_size(pool, alpha.ord(), [&](const std::vector<int>& P) {
        std::vector<int> rest;
        for (int x : pool)
            if (!std::binary_search(P.begin(), P.end(), x)) rest.push_back(x);
        subsets_of_size(rest, M.size(), [&](const std::vector<int>& Q) {
            std::vector<int> PQ = P;
            PQ.insert(PQ.end(), Q.begin(), Q.end());
            gamma_alpha_p(n, alpha, P, [&](const PartialBijection& sigma) {
                std::vector<int> arrangement = Q;
                std::sort(arrangement.begin(), arrangement.end());
                do {
                    // eps(P) * sigma*cycles * eps(Q) eps(P) with
                    // eps(I) = prod (1 - eps_i); the two eps factors expand
                    // over subsets S1 of P (targets) and S2 of P u Q (sources)
                    PartialBijection g0 =
                        compose(sigma, cycles_from_arrangement(n, arrangement, M));
                    std::vector<bool> drop_tgt(n + 1, false), drop_src(n + 1, false);
                    std::function<void(std::size_t, int)> left = [&](std::size_t i, int sgn1) {
                        if (i == P.size()) {
                            std::function<void(std::size_t, int)> right = [&](std::size_t j,
                                                                              int sgn2) {
                                if (j == PQ.size()) {
                                    acc.add_term(restrict(g0, drop_src, drop_tgt),
                                                 Rational(sgn1 * sgn2));
                                    return;
                                }
                                right(j + 1, sgn2);
                                drop_src[PQ[j]] = true;
                                right(j + 1, -sgn2);
                                drop_src[PQ[j]] = false;
                            };
                            right(0, 1);
                            return;
                        }
                        left(i + 1, sgn1);
                        drop_tgt[P[i]] = true;
                        left(i + 1, -sgn1);
                        drop_tgt[P[i]] = false;
                    };
                    left(0, 1);
                } while (std::next_permutation(arrangement.begin(), arrangement.end()));
            });
        });
    });
    return acc;
}

AlgebraElement jm_element(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("jm_element: need 1 <= k <= n");
    AlgebraElement acc(n);
    for (int i = k + 1; i <= n; ++i) {
        AlgebraElement term = AlgebraElement::basis(PartialBijection::swap_points(k, i, n));
        term = multiply(term, AlgebraElement::one_minus_eps(k, n));
        term = multiply(term, AlgebraElement::one_minus_eps(i, n));
        acc += term;
    }
    return acc;
}

// --------------------------------------------------------------------------

LimitElement LimitElement::from_label(BasisLabel label, Rational coeff) {
    LimitElement x(label.level());
    x.add(label, coeff);
    return x;
}

LimitElement LimitElement::unit(int m) {
    return from_label(BasisLabel{RookPattern::identity(m), Partition{}});
}

int LimitElement::m_degree() const {
    int d = 0;
    for (const auto& [label, c] : combo_) d = std::max(d, label.total());
    return d;
}

void LimitElement::add(const BasisLabel& label, const Rational& c) {
    if (label.level() != m_) throw std::invalid_argument("limit element: level mismatch");
    if (c == 0) return;
    auto [it, inserted] = combo_.emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) combo_.erase(it);
    }
}

LimitElement LimitElement::operator+(const LimitElement& o) const {
    if (m_ != o.m_) throw std::invalid_argument("limit element sum: level mismatch");
    LimitElement r = *this;
    for (const auto& [l, c] : o.combo_) r.add(l, c);
    return r;
}

LimitElement LimitElement::operator-(const LimitElement& o) const {
    return *this + o * Rational(-1);
}

LimitElement LimitElement::operator*(const Rational& c) const {
    LimitElement r(m_);
    if (c == 0) return r;
    for (const auto& [l, v] : combo_) r.combo_.emplace(l, v * c);
    return r;
}

AlgebraElement LimitElement::instantiate(int n) const {
    if (n < m_) throw std::invalid_argument("instantiate: size below the level");
    AlgebraElement acc(n);
    for (const auto& [label, c] : combo_) acc += delta_element(n, label.alpha, label.M) * c;
    return acc;
}

std::string LimitElement::str() const {
    if (combo_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, c] : combo_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << label.str();
    }
    return os.str();
}

LimitElement expand_in_delta_basis(const AlgebraElement& x, int m) {
    const int n = x.n();
    if (n < m) throw std::invalid_argument("expand_in_delta_basis: size below the level");
    auto idx = GammaIndex::shared(n);
    auto labels = basis_labels(m, n - m);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(labels.size());
    for (const auto& label : labels)
        cols.push_back(coordinates(delta_element(n, label.alpha, label.M), *idx));
    auto coeffs = solve_in_span(cols, coordinates(x, *idx));
    if (!coeffs)
        throw std::logic_error(
            "element is not a combination of Delta basis vectors (this would falsify the basis "
            "theorem)");
    LimitElement out(m);
    for (std::size_t i = 0; i < labels.size(); ++i) out.add(labels[i], (*coeffs)[i]);
    return out;
}

LimitElement structure_constants(const LimitElement& a, const LimitElement& b) {
    if (a.level() != b.level())
        throw std::invalid_argument("structure_constants: level mismatch");
    const int m = a.level();
    const int n_star = m + a.m_degree() + b.m_degree();
    AlgebraElement product = multiply(a.instantiate(n_star), b.instantiate(n_star));
    return expand_in_delta_basis(product, m);
}

LimitElement jm_limit(int m, int k) {
    if (k < 1 || k > m) throw std::invalid_argument("jm_limit: need 1 <= k <= m");
    return expand_in_delta_basis(jm_element(m + 1, k), m);
}

// --------------------------------------------------------------------------

bool BasisReport::ok() const {
    if (!independent || !spans) return false;
    if (label_count != rank || rank != centralizer_dim) return false;
    for (const auto& f : filtered)
        if (f.labels != f.filtration_dim || !f.spans) return false;
    return true;
}

BasisReport verify_basis(int n, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("verify_basis: need 0 <= m <= n");
    BasisReport rep;
    rep.n = n;
    rep.m = m;
    rep.vacuous = (m == n);

    auto labels = basis_labels(m, n - m);
    rep.label_count = static_cast<int>(labels.size());

    std::vector<AlgebraElement> deltas;
    deltas.reserve(labels.size());
    for (const auto& label : labels) deltas.push_back(delta_element(n, label.alpha, label.M));

    auto idx = GammaIndex::shared(n);
    IncrementalSpan span(static_cast<int>(idx->size()));
    int r = 0;
    for (const auto& d : deltas) {
        SparseQVec v;
        for (const auto& [g, c] : d.terms()) v.emplace_back(idx->index_of(g), c);
        if (span.add(v)) ++r;
    }
    rep.rank = r;
    rep.independent = (r == rep.label_count);

    SubspaceHandle cent = centralizer(n, m);
    rep.centralizer_dim = cent.dim();
    rep.spans = true;
    for (const auto& b : cent.basis()) {
        SparseQVec v;
        for (const auto& [g, c] : b.terms()) v.emplace_back(idx->index_of(g), c);
        if (!span.contains(v)) rep.spans = false;
    }

    // filtered statement: labels of total <= M give exactly F_m^M(A_m(n))
    for (int M = 0; M <= n - m; ++M) {
        SubspaceHandle filt = filtration_term(cent, M, m);
        IncrementalSpan fspan(static_cast<int>(idx->size()));
        int count = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i].total() > M) continue;
            ++count;
            SparseQVec v;
            for (const auto& [g, c] : deltas[i].terms()) v.emplace_back(idx->index_of(g), c);
            fspan.add(v);
        }
        bool spans_filt = (fspan.rank() == filt.dim());
        for (const auto& b : filt.basis()) {
            SparseQVec v;
            for (const auto& [g, c] : b.terms()) v.emplace_back(idx->index_of(g), c);
            if (!fspan.contains(v)) spans_filt = false;
        }
        rep.filtered.push_back(FilteredCount{M, count, filt.dim(), spans_filt});
    }
    return rep;
}

}  // namespace rookalg
