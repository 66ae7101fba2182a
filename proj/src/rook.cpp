#include "rookalg/rook.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rookalg {

namespace {

void expect_point(int x, int n, const char* what) {
    if (x < 1 || x > n)
        throw std::invalid_argument(std::string(what) + " out of range 1.." + std::to_string(n));
}

}  // namespace

PartialBijection::PartialBijection(int n, std::vector<std::pair<int, int>> pairs) : n_(n) {
    if (n < 0) throw std::invalid_argument("ambient size must be >= 0");
    std::sort(pairs.begin(), pairs.end());
    std::set<int> targets;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [j, t] = pairs[i];
        expect_point(j, n, "source");
        expect_point(t, n, "target");
        if (i > 0 && pairs[i - 1].first == j)
            throw std::invalid_argument("repeated source " + std::to_string(j));
        if (!targets.insert(t).second)
            throw std::invalid_argument("repeated target " + std::to_string(t));
    }
    pairs_ = std::move(pairs);
}

PartialBijection PartialBijection::identity(int n) {
    std::vector<std::pair<int, int>> p;
    p.reserve(n);
    for (int i = 1; i <= n; ++i) p.emplace_back(i, i);
    return PartialBijection(n, std::move(p));
}

PartialBijection PartialBijection::zero(int n) { return PartialBijection(n, {}); }

PartialBijection PartialBijection::eps(int i, int n) {
    expect_point(i, n, "eps index");
    std::vector<std::pair<int, int>> p;
    for (int j = 1; j <= n; ++j)
        if (j != i) p.emplace_back(j, j);
    return PartialBijection(n, std::move(p));
}

PartialBijection PartialBijection::transposition(int k, int n) {
    if (k < 1 || k + 1 > n) throw std::invalid_argument("transposition index out of range");
    return swap_points(k, k + 1, n);
}

PartialBijection PartialBijection::swap_points(int i, int j, int n) {
    expect_point(i, n, "point");
    expect_point(j, n, "point");
    if (i == j) return identity(n);
    std::vector<std::pair<int, int>> p;
    for (int x = 1; x <= n; ++x) {
        int y = x == i ? j : (x == j ? i : x);
        p.emplace_back(x, y);
    }
    return PartialBijection(n, std::move(p));
}

PartialBijection PartialBijection::cycle(const std::vector<int>& points, int n) {
    if (points.empty()) return identity(n);
    std::set<int> seen;
    for (int x : points) {
        expect_point(x, n, "cycle point");
        if (!seen.insert(x).second) throw std::invalid_argument("repeated cycle point");
    }
    std::vector<std::pair<int, int>> p;
    for (int x = 1; x <= n; ++x)
        if (!seen.count(x)) p.emplace_back(x, x);
    for (std::size_t i = 0; i < points.size(); ++i)
        p.emplace_back(points[i], points[(i + 1) % points.size()]);
    return PartialBijection(n, std::move(p));
}

PartialBijection PartialBijection::from_one_line(const std::vector<int>& images, int n) {
    if (static_cast<int>(images.size()) != n)
        throw std::invalid_argument("one-line form must have n entries");
    std::vector<std::pair<int, int>> p;
    for (int x = 1; x <= n; ++x) p.emplace_back(x, images[x - 1]);
    return PartialBijection(n, std::move(p));
}

std::optional<int> PartialBijection::apply(int x) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(x, 0));
    if (it != pairs_.end() && it->first == x) return it->second;
    return std::nullopt;
}

std::optional<int> PartialBijection::preimage(int y) const {
    for (auto [j, t] : pairs_)
        if (t == y) return j;
    return std::nullopt;
}

std::vector<int> PartialBijection::domain() const {
    std::vector<int> d;
    d.reserve(pairs_.size());
    for (auto [j, t] : pairs_) d.push_back(j);
    return d;
}

std::vector<int> PartialBijection::range() const {
    std::vector<int> r;
    r.reserve(pairs_.size());
    for (auto [j, t] : pairs_) r.push_back(t);
    std::sort(r.begin(), r.end());
    return r;
}

bool PartialBijection::is_identity() const {
    if (rank() != n_) return false;
    for (auto [j, t] : pairs_)
        if (j != t) return false;
    return true;
}

int PartialBijection::deg_m(int m) const {
    if (m < 0 || m > n_) throw std::invalid_argument("deg_m: m out of range");
    int fixed_above = 0;
    for (auto [j, t] : pairs_)
        if (j == t && j > m) ++fixed_above;
    return (n_ - m) - fixed_above;
}

PartialBijection PartialBijection::star() const {
    std::vector<std::pair<int, int>> p;
    p.reserve(pairs_.size());
    for (auto [j, t] : pairs_) p.emplace_back(t, j);
    return PartialBijection(n_, std::move(p));
}

std::string PartialBijection::str() const {
    std::ostringstream os;
    os << '[' << n_ << ';';
    bool first = true;
    for (auto [j, t] : pairs_) {
        os << (first ? " " : ", ") << j << "->" << t;
        first = false;
    }
    os << ']';
    return os.str();
}

PartialBijection PartialBijection::parse(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("bad element literal at position " + std::to_string(pos) +
                                        ": expected '" + c + "' in \"" + text + "\"");
        ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            throw std::invalid_argument("bad element literal at position " + std::to_string(pos) +
                                        ": expected integer in \"" + text + "\"");
        return std::stoi(text.substr(start, pos - start));
    };

    expect('[');
    int n = read_int();
    expect(';');
    std::vector<std::pair<int, int>> pairs;
    skip_ws();
    while (pos < text.size() && text[pos] != ']') {
        int j = read_int();
        expect('-');
        expect('>');
        int t = read_int();
        pairs.emplace_back(j, t);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(']');
    skip_ws();
    if (pos != text.size())
        throw std::invalid_argument("trailing characters at position " + std::to_string(pos) +
                                    " in \"" + text + "\"");
    return PartialBijection(n, std::move(pairs));
}

std::strong_ordering PartialBijection::operator<=>(const PartialBijection& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    if (auto c = rank() <=> o.rank(); c != 0) return c;
    // pairs_ sorted by source, so lexicographic comparison of the pair lists
    // orders first by domain set, then by target tuple.
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (auto c = pairs_[i].first <=> o.pairs_[i].first; c != 0) return c;
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (auto c = pairs_[i].second <=> o.pairs_[i].second; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::size_t PartialBijection::hash() const {
    std::size_t h = std::hash<int>{}(n_);
    for (auto [j, t] : pairs_) {
        h ^= std::hash<std::size_t>{}(static_cast<std::size_t>(j) * 131 + t) + 0x9e3779b97f4a7c15ULL +
             (h << 6) + (h >> 2);
    }
    return h;
}

PartialBijection compose(const PartialBijection& a, const PartialBijection& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("compose: ambient size mismatch " + std::to_string(a.n()) +
                                    " vs " + std::to_string(b.n()));
    std::vector<std::pair<int, int>> p;
    for (auto [x, y] : b.pairs()) {
        if (auto t = a.apply(y)) p.emplace_back(x, *t);
    }
    return PartialBijection(a.n(), std::move(p));
}

PartialBijection project_theta(const PartialBijection& a, int to_size) {
    if (to_size < 0 || to_size > a.n())
        throw std::invalid_argument("project_theta: target size out of range");
    std::vector<std::pair<int, int>> p;
    for (auto [j, t] : a.pairs())
        if (j <= to_size && t <= to_size) p.emplace_back(j, t);
    return PartialBijection(to_size, std::move(p));
}

PartialBijection embed_phi(const PartialBijection& a, int to_size) {
    if (to_size < a.n()) throw std::invalid_argument("embed_phi: target size too small");
    std::vector<std::pair<int, int>> p = a.pairs();
    for (int x = a.n() + 1; x <= to_size; ++x) p.emplace_back(x, x);
    return PartialBijection(to_size, std::move(p));
}

PartialBijection embed_psi(const PartialBijection& a, int to_size) {
    if (to_size < a.n()) throw std::invalid_argument("embed_psi: target size too small");
    return PartialBijection(to_size, a.pairs());
}

Degrees degrees(const PartialBijection& a, int m) {
    return Degrees{a.deg(), a.deg_m(m), a.rank()};
}

std::vector<PartialBijection> enumerate_gamma(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_gamma: n must be >= 0");
    std::vector<PartialBijection> out;
    // subsets of {1..n} grouped by size
    std::vector<std::vector<std::vector<int>>> subsets(n + 1);
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int next) {
        subsets[cur.size()].push_back(cur);
        for (int x = next; x <= n; ++x) {
            cur.push_back(x);
            gen(x + 1);
            cur.pop_back();
        }
    };
    gen(1);
    for (int r = 0; r <= n; ++r) {
        for (const auto& dom : subsets[r]) {
            for (const auto& rng : subsets[r]) {
                // all bijections dom -> rng: permute the target tuple
                std::vector<int> tgt = rng;
                std::sort(tgt.begin(), tgt.end());
                do {
                    std::vector<std::pair<int, int>> p;
                    p.reserve(r);
                    for (int i = 0; i < r; ++i) p.emplace_back(dom[i], tgt[i]);
                    out.emplace_back(n, std::move(p));
                } while (std::next_permutation(tgt.begin(), tgt.end()));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t gamma_size(int n) {
    std::uint64_t total = 0;
    for (int r = 0; r <= n; ++r) {
        std::uint64_t binom = 1;
        for (int i = 0; i < r; ++i) binom = binom * static_cast<std::uint64_t>(n - i) / (i + 1);
        std::uint64_t fact = 1;
        for (int i = 2; i <= r; ++i) fact *= i;
        total += binom * binom * fact;
    }
    return total;
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::union_with(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    std::sort(all.begin(), all.end(), std::greater<int>());
    return Partition(std::move(all));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '(')
        throw std::invalid_argument("partition must look like (2,1): " + text);
    ++pos;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("bad partition: " + text);
        parts.push_back(std::stoi(text.substr(start, pos - start)));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip_ws();
        }
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated partition: " + text);
    return Partition(std::move(parts));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(), o.parts_.begin(),
                                                  o.parts_.end());
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(k, k, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int k = 0; k <= max_size; ++k) {
        auto pk = partitions_of(k);
        out.insert(out.end(), pk.begin(), pk.end());
    }
    return out;
}

std::uint64_t partition_count(int k) { return partitions_of(k).size(); }

// ---------------------------------------------------------------------------

RookPattern::RookPattern(int m, std::vector<PatternEntry> entries)
    : m_(m), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    std::set<int> rows, cols;
    for (const auto& e : entries_) {
        if (e.row < 1 || e.row > m || e.col < 1 || e.col > m)
            throw std::invalid_argument("pattern entry out of range");
        if (e.order < 0) throw std::invalid_argument("pattern order must be >= 0");
        if (!rows.insert(e.row).second || !cols.insert(e.col).second)
            throw std::invalid_argument("pattern has two entries in a row or column");
    }
}

RookPattern RookPattern::identity(int m) {
    std::vector<PatternEntry> e;
    for (int i = 1; i <= m; ++i) e.push_back({i, i, 0});
    return RookPattern(m, std::move(e));
}

RookPattern RookPattern::diagonal_z(int m, int k) {
    if (k < 1 || k > m) throw std::invalid_argument("diagonal_z: slot out of range");
    std::vector<PatternEntry> e;
    for (int i = 1; i <= m; ++i) e.push_back({i, i, i == k ? 1 : 0});
    return RookPattern(m, std::move(e));
}

int RookPattern::ord() const {
    int s = 0;
    for (const auto& e : entries_) s += e.order;
    return s;
}

bool RookPattern::is_permutation_pattern() const {
    return static_cast<int>(entries_.size()) == m_;
}

std::string RookPattern::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << '(' << entries_[i].row << ',' << entries_[i].col << ',' << entries_[i].order << ')';
    }
    os << ']';
    return os.str();
}

std::strong_ordering RookPattern::operator<=>(const RookPattern& o) const {
    if (auto c = m_ <=> o.m_; c != 0) return c;
    return std::lexicographical_compare_three_way(entries_.begin(), entries_.end(),
                                                  o.entries_.begin(), o.entries_.end());
}

std::vector<RookPattern> enumerate_patterns(int m, int max_ord) {
    // supports = partial bijections of {1..m}; then distribute total order.
    std::vector<RookPattern> out;
    auto supports = enumerate_gamma(m);
    std::function<void(const std::vector<std::pair<int, int>>&, std::size_t, int,
                       std::vector<PatternEntry>&)>
        fill = [&](const std::vector<std::pair<int, int>>& sup, std::size_t idx, int budget,
                   std::vector<PatternEntry>& cur) {
            if (idx == sup.size()) {
                out.emplace_back(m, cur);
                return;
            }
            for (int k = 0; k <= budget; ++k) {
                cur.push_back({sup[idx].second, sup[idx].first, k});
                fill(sup, idx + 1, budget - k, cur);
                cur.pop_back();
            }
        };
    for (const auto& g : supports) {
        std::vector<PatternEntry> cur;
        fill(g.pairs(), 0, max_ord, cur);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t pattern_count(int m, int max_ord) { return enumerate_patterns(m, max_ord).size(); }

bool in_gamma_mn(const PartialBijection& s, int m) {
    if (m < 0 || m > s.n()) return false;
    for (int x = m + 1; x <= s.n(); ++x) {
        if (!s.defined_on(x)) return false;
        if (!s.preimage(x)) return false;
    }
    return true;
}

std::vector<PartialBijection> enumerate_gamma_mn(int n, int m) {
    std::vector<PartialBijection> out;
    for (const auto& g : enumerate_gamma(n))
        if (in_gamma_mn(g, m)) out.push_back(g);
    return out;
}

std::pair<RookPattern, Partition> orbit_invariant(const PartialBijection& s, int m) {
    const int n = s.n();
    if (!in_gamma_mn(s, m))
        throw std::domain_error("orbit_invariant: element is not in Gamma(m, n)");
    std::vector<bool> pass_through(n + 1, false);
    std::vector<PatternEntry> entries;
    for (int j = 1; j <= m; ++j) {
        auto t = s.apply(j);
        if (!t) continue;  // zero column of alpha
        int k = 0;
        int cur = *t;
        while (cur > m) {
            pass_through[cur] = true;
            ++k;
            cur = *s.apply(cur);  // defined: dom s contains {m+1..n}
        }
        entries.push_back({cur, j, k});
    }
    RookPattern alpha(m, std::move(entries));
    // cycle type of s restricted to the untouched part of {m+1..n}
    std::vector<int> cycle_lengths;
    std::vector<bool> seen(n + 1, false);
    for (int x = m + 1; x <= n; ++x) {
        if (pass_through[x] || seen[x]) continue;
        int len = 0;
        int cur = x;
        while (!seen[cur]) {
            seen[cur] = true;
            ++len;
            cur = *s.apply(cur);
        }
        cycle_lengths.push_back(len);
    }
    std::sort(cycle_lengths.begin(), cycle_lengths.end(), std::greater<int>());
    return {std::move(alpha), Partition(std::move(cycle_lengths))};
}

}  // namespace rookalg
