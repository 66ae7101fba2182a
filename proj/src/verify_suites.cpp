#include "rookalg/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rookalg/central_families.hpp"
#include "rookalg/hecke.hpp"
#include "rookalg/monoid_algebra.hpp"
#include "rookalg/qlinalg.hpp"
#include "rookalg/reps.hpp"
#include "rookalg/rook.hpp"
#include "rookalg/shifted_symmetric.hpp"

namespace rookalg {

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

}  // namespace

std::string VerificationReport::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = status_name(c.status);
        jc["details"] = c.details;
        if (c.witness) jc["witness"] = *c.witness;
        j["checks"].push_back(jc);
    }
    j["all_pass"] = all_pass();
    if (include_timing) j["timing_ms"] = timing_ms;
    return j.dump(2);
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << status_name(c.status) << "  " << c.name << (c.details.empty() ? "" : "  -- ")
           << c.details << '\n';
    os << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
    return os.str();
}

std::vector<std::string> suite_names() {
    return {"presentation", "basis", "reps", "hecke", "shiftsym", "all"};
}

namespace {

struct Collector {
    std::vector<CheckResult>& out;

    void add(const std::string& name, bool ok, const std::string& details,
             std::optional<std::string> witness = std::nullopt) {
        out.push_back(CheckResult{name, ok ? CheckStatus::Pass : CheckStatus::Fail, details,
                                  std::move(witness)});
    }
    void skip(const std::string& name, const std::string& why) {
        out.push_back(CheckResult{name, CheckStatus::Skipped, why, std::nullopt});
    }
};

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int nthreads = std::min(threads, count);
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------- presentation

void suite_presentation(Collector& col, int n_max, int, int) {
    {
        static const std::uint64_t expected[] = {1, 2, 7, 34, 209, 1546, 13327};
        bool ok = true;
        std::ostringstream det;
        for (int n = 0; n <= std::min(n_max, 6); ++n) {
            auto all = enumerate_gamma(n);
            std::set<PartialBijection> uniq(all.begin(), all.end());
            bool here = all.size() == uniq.size() && all.size() == gamma_size(n) &&
                        gamma_size(n) == expected[n];
            if (!here) ok = false;
            det << "n=" << n << ":" << all.size() << (here ? " " : "! ");
        }
        col.add("dimension-law", ok, det.str());
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= std::min(n_max, 5); ++n) {
            const AlgebraElement one = AlgebraElement::unit(n);
            std::vector<AlgebraElement> s, e;
            for (int k = 1; k < n; ++k) s.push_back(AlgebraElement::gen_s(k, n));
            for (int i = 1; i <= n; ++i) e.push_back(AlgebraElement::gen_eps(i, n));
            auto bad = [&](const std::string& w) {
                ok = false;
                if (witness.empty()) witness = "n=" + std::to_string(n) + ": " + w;
            };
            for (int k = 0; k + 1 < n; ++k) {
                if (!(multiply(s[k], s[k]) == one)) bad("s^2 != 1");
                if (k + 2 < n &&
                    !(multiply(multiply(s[k], s[k + 1]), s[k]) ==
                      multiply(multiply(s[k + 1], s[k]), s[k + 1])))
                    bad("braid");
                for (int l = k + 2; l + 1 < n; ++l)
                    if (!(multiply(s[k], s[l]) == multiply(s[l], s[k]))) bad("distant s");
            }
            for (int i = 0; i < n; ++i) {
                if (!(multiply(e[i], e[i]) == e[i])) bad("eps idempotent");
                for (int j = i + 1; j < n; ++j)
                    if (!(multiply(e[i], e[j]) == multiply(e[j], e[i]))) bad("eps commute");
            }
            for (int k = 0; k + 1 < n; ++k) {
                if (!(multiply(s[k], e[k]) == multiply(e[k + 1], s[k]))) bad("s eps crossing");
                if (!(multiply(multiply(s[k], e[k]), e[k + 1]) == multiply(e[k], e[k + 1])))
                    bad("s eps eps absorption");
            }
        }
        col.add("defining-relations", ok,
                "relations of the presentation hold in A(n), n <= " +
                    std::to_string(std::min(n_max, 5)),
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }
    {
        bool ok = true;
        std::ostringstream det;
        for (int n = 1; n <= std::min(n_max, 5); ++n) {
            // products sigma * eps_K sweep out Gamma(n) exactly once as a set
            std::set<PartialBijection> seen;
            std::vector<PartialBijection> perms;
            for (const auto& g : enumerate_gamma(n))
                if (g.is_permutation()) perms.push_back(g);
            for (const auto& sigma : perms) {
                for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                    PartialBijection p = sigma;
                    for (int i = 0; i < n; ++i)
                        if (mask & (1ull << i)) p = compose(p, PartialBijection::eps(i + 1, n));
                    seen.insert(p);
                }
            }
            std::uint64_t coset_count = 0;  // sum_r binom(n,r) n!/r!
            for (int r = 0; r <= n; ++r) {
                std::uint64_t binom = 1, f = 1;
                for (int i = 0; i < r; ++i) binom = binom * (n - i) / (i + 1);
                for (int i = r + 1; i <= n; ++i) f *= i;
                std::uint64_t perm_over_r = f;  // n!/r!
                coset_count += binom * perm_over_r;
            }
            bool here = seen.size() == gamma_size(n) && coset_count == gamma_size(n);
            if (!here) ok = false;
            det << "n=" << n << ":" << seen.size() << "/" << coset_count << (here ? " " : "! ");
        }
        col.add("spanning-count", ok, det.str());
    }
}

// ------------------------------------------------------------------------ basis

using CentralizerCache = std::map<std::pair<int, int>, SubspaceHandle>;

const SubspaceHandle& cached_centralizer(CentralizerCache& cache, int n, int m) {
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, centralizer(n, m)).first;
    return it->second;
}

void suite_basis(Collector& col, int n_max, int m_max, int) {
    CentralizerCache cache;

    {  // criterion 3: theta is a homomorphism where it should be
        bool ok = true;
        std::string witness;
        for (int n = 2; n <= std::min(n_max, 5); ++n) {
            if (!(theta_n(AlgebraElement::unit(n)) == AlgebraElement::unit(n - 1))) {
                ok = false;
                witness = "theta(1) != 1 at n=" + std::to_string(n);
            }
            const auto& C = cached_centralizer(cache, n, n - 1);
            for (const auto& a : C.basis()) {
                const AlgebraElement ta = theta_n(a);
                for (const auto& b : C.basis()) {
                    if (!(theta_n(multiply(a, b)) == multiply(ta, theta_n(b)))) {
                        ok = false;
                        if (witness.empty())
                            witness = "n=" + std::to_string(n) + ": a=" + a.str() + " b=" + b.str();
                    }
                }
            }
            for (int m = 0; m <= n - 1; ++m) {
                const auto& Am = cached_centralizer(cache, n, m);
                const auto& Am_low = cached_centralizer(cache, n - 1, m);
                for (const auto& a : Am.basis())
                    if (!Am_low.contains(theta_n(a))) {
                        ok = false;
                        if (witness.empty())
                            witness = "theta image leaves A_m: n=" + std::to_string(n) +
                                      " m=" + std::to_string(m);
                    }
            }
        }
        col.add("theta-homomorphism", ok,
                "theta_n multiplicative and unital on A_{n-1}(n), maps A_m(n) into A_m(n-1), "
                "n <= " + std::to_string(std::min(n_max, 5)),
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }

    {  // criterion 4: degree laws, exhaustive for n <= 4
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= std::min(n_max, 4); ++n) {
            auto all = enumerate_gamma(n);
            for (const auto& a : all)
                for (const auto& b : all) {
                    PartialBijection ab = compose(a, b);
                    for (int m = 0; m <= n; ++m)
                        if (ab.deg_m(m) > a.deg_m(m) + b.deg_m(m)) {
                            ok = false;
                            if (witness.empty())
                                witness = "deg_" + std::to_string(m) + " fails: " + a.str() + ", " +
                                          b.str();
                        }
                    if (ab.deg() == a.deg() + b.deg() && !(ab == compose(b, a))) {
                        ok = false;
                        if (witness.empty())
                            witness = "equality without commuting: " + a.str() + ", " + b.str();
                    }
                }
        }
        col.add("degree-laws", ok,
                "deg_m(ab) <= deg_m(a) + deg_m(b); deg equality implies commuting (n <= " +
                    std::to_string(std::min(n_max, 4)) + ")",
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }

    {  // criterion 5: the central family at m = 0
        static const int expected_dim[] = {1, 2, 4, 7, 12, 19};
        bool ok = true;
        std::string witness;
        // n = 0: the one-dimensional algebra is its own center
        if (centralizer(0, 0).dim() != 1 || !verify_basis(0, 0).ok()) {
            ok = false;
            witness = "n=0 center";
        }
        for (int n = 1; n <= std::min(n_max, 5); ++n) {
            auto labels = partitions_up_to(n);
            std::vector<AlgebraElement> deltas;
            for (const auto& M : labels) deltas.push_back(delta_element(n, M));

            // centrality against the generators, exact products
            std::vector<AlgebraElement> gens;
            for (int k = 1; k < n; ++k) gens.push_back(AlgebraElement::gen_s(k, n));
            gens.push_back(AlgebraElement::gen_eps(1, n));
            for (std::size_t i = 0; i < deltas.size(); ++i)
                for (const auto& g : gens)
                    if (!(multiply(deltas[i], g) == multiply(g, deltas[i]))) {
                        ok = false;
                        if (witness.empty()) witness = "not central: " + labels[i].str();
                    }
            if (n <= 4) {  // exhaustive centrality
                for (std::size_t i = 0; i < deltas.size(); ++i)
                    for (const auto& g : enumerate_gamma(n)) {
                        AlgebraElement bg = AlgebraElement::basis(g);
                        if (!(multiply(deltas[i], bg) == multiply(bg, deltas[i]))) {
                            ok = false;
                            if (witness.empty())
                                witness = "not central vs " + g.str() + ": " + labels[i].str();
                        }
                    }
            }
            // theta compatibility, including the vanishing convention
            for (const auto& M : partitions_up_to(n))
                if (!(theta_n(delta_element(n, M)) == delta_element(n - 1, M))) {
                    ok = false;
                    if (witness.empty())
                        witness = "theta(Delta_" + std::to_string(n) + "^" + M.str() + ")";
                }
            BasisReport rep = verify_basis(n, 0);
            if (!rep.ok() || rep.centralizer_dim != expected_dim[n]) {
                ok = false;
                if (witness.empty())
                    witness = "basis report at n=" + std::to_string(n) +
                              ": dim=" + std::to_string(rep.centralizer_dim);
            }
        }
        col.add("central-family", ok,
                "Delta_n^M central, theta-compatible, basis of the center; dims 1,2,4,7,12,19",
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }

    {  // criterion 6: Delta^{alpha,M} basis of A_m(n) and theta injectivity
        bool ok = true;
        std::string witness;
        std::vector<std::pair<int, int>> cases = {{3, 1}, {4, 1}, {4, 2}};
        for (auto [n, m] : cases) {
            if (n > n_max || m > m_max) continue;
            BasisReport rep = verify_basis(n, m);
            if (!rep.ok()) {
                ok = false;
                if (witness.empty())
                    witness = "verify_basis(" + std::to_string(n) + "," + std::to_string(m) + ")";
            }
            if (n == 3 && m == 1 && rep.centralizer_dim != 11) {
                ok = false;
                witness = "dim A_1(3) = " + std::to_string(rep.centralizer_dim);
            }
            // theta injective on F_m^{n-m-1}: images of the filtered Delta
            // basis stay independent
            auto labels = basis_labels(m, n - m - 1);
            auto idx_low = GammaIndex::shared(n - 1);
            IncrementalSpan span(static_cast<int>(idx_low->size()));
            int r = 0;
            for (const auto& label : labels) {
                AlgebraElement img = theta_n(delta_element(n, label.alpha, label.M));
                SparseQVec v;
                for (const auto& [g, c] : img.terms()) v.emplace_back(idx_low->index_of(g), c);
                if (span.add(v)) ++r;
            }
            if (r != static_cast<int>(labels.size())) {
                ok = false;
                if (witness.empty())
                    witness = "theta not injective on F^{n-m-1} at (" + std::to_string(n) + "," +
                              std::to_string(m) + ")";
            }
            // tensor-style basis: products Delta^{alpha,0} * Delta^M
            auto idx = GammaIndex::shared(n);
            IncrementalSpan tspan(static_cast<int>(idx->size()));
            int t = 0, total = 0;
            for (const auto& alpha : enumerate_patterns(m, n - m))
                for (const auto& M : partitions_up_to(n - m - alpha.ord())) {
                    ++total;
                    AlgebraElement prod =
                        multiply(delta_element(n, alpha, Partition{}), delta_element(n, M));
                    SparseQVec v;
                    for (const auto& [g, c] : prod.terms()) v.emplace_back(idx->index_of(g), c);
                    if (tspan.add(v)) ++t;
                }
            if (t != total || t != rep.centralizer_dim) {
                ok = false;
                if (witness.empty())
                    witness = "product basis rank " + std::to_string(t) + "/" +
                              std::to_string(total) + " at (" + std::to_string(n) + "," +
                              std::to_string(m) + ")";
            }
        }
        col.add("centralizer-basis", ok,
                "Delta^{alpha,M} basis of A_m(n) at (3,1),(4,1),(4,2); theta injective on "
                "F_m^{n-m-1}; dim A_1(3) = 11",
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }

    {  // criterion 7: orbit parameterization
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= std::min(n_max, 5); ++n) {
            for (int m = 0; m <= std::min({2, m_max, n}); ++m) {
                auto members = enumerate_gamma_mn(n, m);
                // brute-force conjugation orbits under the full group S_m(n)
                std::vector<PartialBijection> group;
                for (const auto& g : enumerate_gamma(n)) {
                    if (!g.is_permutation()) continue;
                    bool fixes = true;
                    for (int i = 1; i <= m; ++i)
                        if (g.apply(i) != i) fixes = false;
                    if (fixes) group.push_back(g);
                }
                std::map<PartialBijection, int> orbit_of;
                int orbit_count = 0;
                for (const auto& s : members) {
                    if (orbit_of.count(s)) continue;
                    int id = orbit_count++;
                    std::vector<PartialBijection> queue{s};
                    orbit_of[s] = id;
                    for (std::size_t q = 0; q < queue.size(); ++q)
                        for (const auto& g : group) {
                            PartialBijection conj = compose(compose(g, queue[q]), g.star());
                            if (!orbit_of.count(conj)) {
                                orbit_of[conj] = id;
                                queue.push_back(conj);
                            }
                        }
                }
                // invariants constant on orbits and separating
                std::map<int, std::pair<RookPattern, Partition>> inv_of_orbit;
                std::set<std::pair<RookPattern, Partition>> distinct;
                for (const auto& s : members) {
                    auto inv = orbit_invariant(s, m);
                    if (inv.first.ord() + inv.second.size() != n - m) {
                        ok = false;
                        if (witness.empty()) witness = "ord+|M| != n-m for " + s.str();
                    }
                    if (inv.first.is_permutation_pattern() != s.is_permutation()) {
                        ok = false;
                        if (witness.empty()) witness = "permutation detection for " + s.str();
                    }
                    auto it = inv_of_orbit.find(orbit_of[s]);
                    if (it == inv_of_orbit.end()) {
                        inv_of_orbit.emplace(orbit_of[s], inv);
                        if (!distinct.insert(inv).second) {
                            ok = false;
                            if (witness.empty()) witness = "invariant shared across orbits: " + s.str();
                        }
                    } else if (!(it->second == inv)) {
                        ok = false;
                        if (witness.empty()) witness = "invariant not constant on orbit: " + s.str();
                    }
                }
                // every admissible couple is realized
                std::uint64_t couples = 0;
                for (const auto& alpha : enumerate_patterns(m, n - m))
                    couples += partitions_of(n - m - alpha.ord()).size();
                if (couples != static_cast<std::uint64_t>(orbit_count)) {
                    ok = false;
                    if (witness.empty())
                        witness = "couple count " + std::to_string(couples) + " vs orbits " +
                                  std::to_string(orbit_count) + " at n=" + std::to_string(n) +
                                  " m=" + std::to_string(m);
                }
            }
        }
        col.add("orbit-parameterization", ok,
                "S_m(n)-orbits on Gamma(m,n) biject with couples (alpha, M), n <= " +
                    std::to_string(std::min(n_max, 5)) + ", m <= " +
                    std::to_string(std::min(m_max, 2)),
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }
}

// ------------------------------------------------------------------------- reps

void suite_reps(Collector& col, int n_max, int, int threads) {
    {  // criterion 8a: classification
        bool ok = true;
        std::ostringstream det;
        for (int n = 1; n <= std::min(n_max, 5); ++n) {
            ClassificationReport rep = classification_check(n);
            if (!rep.ok()) ok = false;
            det << "n=" << n << ":" << rep.dim_square_sum << (rep.ok() ? " " : "! ");
        }
        col.add("classification", ok, "sum of dim^2 = |Gamma(n)|, 1-dim commutants, characters "
                                      "separate; " + det.str());
    }

    {  // criterion 8b: eigenvalues of Delta^{(r)} against the seminormal side
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= std::min(n_max, 4); ++n) {
            auto lams = partitions_up_to(n);
            std::vector<std::string> failures(lams.size());
            parallel_for(static_cast<int>(lams.size()), threads, [&](int i) {
                const Partition& lam = lams[i];
                GammaRep T(n, lam);
                SeminormalRep pi(lam);
                for (int r = 1; r <= n; ++r) {
                    Rational lhs = central_eigenvalue(delta_element(n, Partition{{r}}), T);
                    Rational rhs(0);
                    if (r <= lam.size())
                        rhs = central_eigenvalue(c_element(lam.size(), Partition{{r}}), pi);
                    if (lhs != rhs)
                        failures[i] = "lambda=" + lam.str() + " r=" + std::to_string(r) + ": " +
                                      lhs.get_str() + " vs " + rhs.get_str();
                }
            });
            for (const auto& f : failures)
                if (!f.empty()) {
                    ok = false;
                    if (witness.empty()) witness = "n=" + std::to_string(n) + " " + f;
                }
        }
        col.add("central-eigenvalues", ok,
                "eigenvalue of Delta_n^{(r)} is 0 for r > |lambda|, else the c^{(r)} eigenvalue "
                "(n <= 4)",
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }

    {  // the S(m)-restriction on the bottom block realizes pi_lambda
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= std::min(n_max, 4); ++n) {
            for (const auto& lam : partitions_up_to(n)) {
                if (lam.size() < 2) continue;
                GammaRep T(n, lam);
                const int m = lam.size();
                const int d = T.pi().dim();
                for (int k = 1; k < m; ++k) {
                    RationalMatrix img = T.matrix(PartialBijection::transposition(k, n));
                    RationalMatrix block(d, d);
                    for (int r = 0; r < d; ++r)
                        for (int c = 0; c < d; ++c) block.set(r, c, img.get(r, c));
                    if (!(block == T.pi().transposition_image(k))) {
                        ok = false;
                        if (witness.empty())
                            witness = "lambda=" + lam.str() + " k=" + std::to_string(k);
                    }
                }
            }
        }
        col.add("bottom-block-restriction", ok,
                "functions supported on {1..m} realize pi_lambda under S(m)",
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }

    {  // multiplicativity spot check on Gamma(3)
        bool ok = true;
        GammaRep T(3, Partition{{2}});
        auto all = enumerate_gamma(3);
        std::mt19937 rng(20240529);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const auto& a = all[pick(rng)];
            const auto& b = all[pick(rng)];
            if (!(T.matrix(compose(a, b)) == T.matrix(a) * T.matrix(b))) ok = false;
        }
        col.add("rep-multiplicativity", ok, "T(ab) = T(a)T(b) on 200 random pairs from Gamma(3)");
    }
}

// ------------------------------------------------------------------------ hecke

void suite_hecke(Collector& col, int n_max, int m_max, int threads) {
    {  // criterion 10a: Jucys-Murphy relations inside A(n)
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= std::min(n_max, 5); ++n) {
            std::vector<AlgebraElement> u;
            for (int k = 1; k <= n; ++k) u.push_back(jm_element(n, k));
            for (int k = 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l)
                    if (!(multiply(u[k - 1], u[l - 1]) == multiply(u[l - 1], u[k - 1]))) {
                        ok = false;
                        if (witness.empty())
                            witness = "u commute fails at n=" + std::to_string(n);
                    }
                const AlgebraElement ek = AlgebraElement::gen_eps(k, n);
                if (!multiply(ek, u[k - 1]).is_zero() || !multiply(u[k - 1], ek).is_zero()) {
                    ok = false;
                    if (witness.empty()) witness = "eps_k u_k != 0 at n=" + std::to_string(n);
                }
                for (int i = 1; i <= n; ++i) {
                    if (i == k) continue;
                    const AlgebraElement ei = AlgebraElement::gen_eps(i, n);
                    if (!(multiply(ei, u[k - 1]) == multiply(u[k - 1], ei))) {
                        ok = false;
                        if (witness.empty()) witness = "eps_i u_k fails at n=" + std::to_string(n);
                    }
                }
            }
            for (int k = 1; k < n; ++k) {
                const AlgebraElement sk = AlgebraElement::gen_s(k, n);
                AlgebraElement rhs = multiply(u[k], sk);
                rhs += multiply(AlgebraElement::one_minus_eps(k, n),
                                AlgebraElement::one_minus_eps(k + 1, n));
                if (!(multiply(sk, u[k - 1]) == rhs)) {
                    ok = false;
                    if (witness.empty()) witness = "cross relation fails at n=" + std::to_string(n);
                }
                for (int l = 1; l <= n; ++l) {
                    if (l == k || l == k + 1) continue;
                    if (!(multiply(sk, u[l - 1]) == multiply(u[l - 1], sk))) {
                        ok = false;
                        if (witness.empty()) witness = "s_k u_l fails at n=" + std::to_string(n);
                    }
                }
            }
        }
        col.add("jm-relations", ok,
                "relations of the u_{k|n} hold in A(n), n <= " +
                    std::to_string(std::min(n_max, 5)),
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }

    {  // criterion 10b: normal-form counts
        bool ok = true;
        std::ostringstream det;
        for (int m = 0; m <= std::min(m_max, 2); ++m)
            for (int M = 0; M <= 4; ++M) {
                std::uint64_t nf = truncated_dimension(m, M, HeckeVariant::Tilde);
                std::uint64_t pat = pattern_count(m, M);
                std::uint64_t plain = truncated_dimension(m, M, HeckeVariant::Plain);
                std::uint64_t fact = 1;
                for (int i = 2; i <= m; ++i) fact *= i;
                std::uint64_t expect_plain = fact;
                {
                    std::uint64_t b = 1;  // binom(M+m, m)
                    for (int i = 0; i < m; ++i) b = b * (M + m - i) / (i + 1);
                    expect_plain *= b;
                }
                if (nf != pat || plain != expect_plain) {
                    ok = false;
                    det << "(m=" << m << ",M=" << M << "):" << nf << " vs " << pat << "! ";
                }
            }
        col.add("normal-form-counts", ok,
                "monomial counts match Gamma(m, Z+) and the tensor product, m <= 2, M <= 4" +
                    det.str());
    }

    {  // criterion 10c: psi-images of the truncated basis stay independent
        bool ok = true;
        std::string witness;
        for (int m = 1; m <= std::min(m_max, 2); ++m) {
            for (int M = 0; M <= std::min(4, n_max - m); ++M) {
                const int n = m + M;
                auto idx = GammaIndex::shared(n);
                IncrementalSpan span(static_cast<int>(idx->size()));
                std::uint64_t count = 0, indep = 0;
                for (const auto& g : enumerate_gamma(m)) {
                    std::vector<int> free_cols;
                    for (int j = 1; j <= m; ++j)
                        if (g.defined_on(j)) free_cols.push_back(j);
                    std::vector<int> k(m, 0);
                    std::function<void(std::size_t, int)> rec = [&](std::size_t at, int budget) {
                        if (at == free_cols.size()) {
                            HeckeNormalForm nf(m, HeckeVariant::Tilde);
                            nf.add_term(g, k, Rational(1));
                            AlgebraElement img = psi_hom(nf, n);
                            SparseQVec v;
                            for (const auto& [gg, c] : img.terms())
                                v.emplace_back(idx->index_of(gg), c);
                            ++count;
                            if (span.add(v)) ++indep;
                            return;
                        }
                        for (int kk = 0; kk <= budget; ++kk) {
                            k[free_cols[at] - 1] = kk;
                            rec(at + 1, budget - kk);
                            k[free_cols[at] - 1] = 0;
                        }
                    };
                    rec(0, M);
                }
                if (count != indep || count != truncated_dimension(m, M, HeckeVariant::Tilde)) {
                    ok = false;
                    if (witness.empty())
                        witness = "rank " + std::to_string(indep) + "/" + std::to_string(count) +
                                  " at m=" + std::to_string(m) + " M=" + std::to_string(M);
                }
            }
        }
        col.add("psi-injectivity", ok,
                "psi-images of normal-form monomials with deg <= M independent at n = m + M",
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }

    if (m_max >= 2 && n_max >= 4) {  // criterion 10d: the retraction square at m=2, n=4
        bool ok = true;
        const int m = 2, n = 4;
        std::mt19937 rng(577215664);
        std::uniform_int_distribution<int> len(1, 6), coin(0, 2), idx1(1, m), idxs(1, m - 1);
        for (int trial = 0; trial < 60; ++trial) {
            HeckeNormalForm x = HeckeNormalForm::one(m, HeckeVariant::Tilde);
            int L = len(rng);
            for (int i = 0; i < L; ++i) {
                int kind = coin(rng);
                HeckeLetter letter{kind == 0   ? HeckeLetter::S
                                   : kind == 1 ? HeckeLetter::E
                                               : HeckeLetter::U,
                                   kind == 0 ? idxs(rng) : idx1(rng)};
                x = times_letter(x, letter);
            }
            if (!(retraction(psi_hom(x, n)) == phi_hom(retract_to_plain(x), n))) ok = false;
        }
        col.add("retraction-square", ok,
                "retraction(psi(x)) = phi(retract(x)) on random words, m=2, n=4");
    } else {
        col.skip("retraction-square", "needs m_max >= 2 and n_max >= 4");
    }

    {  // empirical confluence: normal forms agree across randomized strategies
        bool ok = true;
        std::string witness;
        int mtop = std::min(m_max, 3);
        std::vector<int> ms;
        for (int m = 1; m <= mtop; ++m) ms.push_back(m);
        std::vector<std::string> failures(ms.size());
        parallel_for(static_cast<int>(ms.size()), threads, [&](int mi) {
            const int m = ms[mi];
            std::mt19937 rng(1000 + m);
            std::uniform_int_distribution<int> len(2, 8), kind(0, 2), idx1(1, m),
                idxs(1, std::max(1, m - 1));
            for (int trial = 0; trial < 40; ++trial) {
                int L = len(rng);
                std::vector<HeckeLetter> word;
                for (int i = 0; i < L; ++i) {
                    int k = kind(rng);
                    if (m == 1 && k == 0) k = 2;  // no s letters at m = 1
                    word.push_back(HeckeLetter{k == 0   ? HeckeLetter::S
                                               : k == 1 ? HeckeLetter::E
                                                        : HeckeLetter::U,
                                               k == 0 ? idxs(rng) : idx1(rng)});
                }
                // left fold
                HeckeNormalForm base = HeckeNormalForm::one(m, HeckeVariant::Tilde);
                for (const auto& l : word) base = times_letter(base, l);
                // randomized strategies on random bracketings
                for (int rep = 0; rep < 6; ++rep) {
                    std::vector<HeckeNormalForm> parts;
                    for (const auto& l : word)
                        parts.push_back(
                            HeckeNormalForm::generator(l, m, HeckeVariant::Tilde));
                    while (parts.size() > 1) {
                        std::uniform_int_distribution<std::size_t> at(0, parts.size() - 2);
                        std::size_t i = at(rng);
                        HeckeNormalForm merged = multiply_nf_randomized(parts[i], parts[i + 1], rng);
                        parts[i] = merged;
                        parts.erase(parts.begin() + i + 1);
                    }
                    if (!(parts[0] == base)) {
                        failures[mi] = "strategy disagreement at m=" + std::to_string(m);
                    }
                }
            }
        });
        for (const auto& f : failures)
            if (!f.empty()) {
                ok = false;
                witness = f;
            }
        col.add("confluence", ok,
                "randomized rewriting strategies agree on random words (m <= 3, length <= 8)",
                witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    }

    {  // presented relations at the normal-form level, plus psi compatibility
        bool ok = true;
        const int m = std::min(std::max(m_max, 2), 3);
        auto S = [&](int k) {
            return HeckeNormalForm::generator(HeckeLetter{HeckeLetter::S, k}, m,
                                              HeckeVariant::Tilde);
        };
        auto E = [&](int k) {
            return HeckeNormalForm::generator(HeckeLetter{HeckeLetter::E, k}, m,
                                              HeckeVariant::Tilde);
        };
        auto U = [&](int k) {
            return HeckeNormalForm::generator(HeckeLetter{HeckeLetter::U, k}, m,
                                              HeckeVariant::Tilde);
        };
        const HeckeNormalForm one = HeckeNormalForm::one(m, HeckeVariant::Tilde);
        for (int k = 1; k < m; ++k) {
            HeckeNormalForm cross = multiply_nf(U(k + 1), S(k));
            HeckeNormalForm corr = one - multiply_nf(E(k), one) - multiply_nf(E(k + 1), one) +
                                   multiply_nf(E(k), E(k + 1));
            if (!(multiply_nf(S(k), U(k)) == cross + corr)) ok = false;
            if (!(multiply_nf(U(k), U(k + 1)) == multiply_nf(U(k + 1), U(k)))) ok = false;
            if (!multiply_nf(E(k), U(k)).is_zero()) ok = false;
        }
        // in H_2: s1 u1 s1 = u2 + s1
        HeckeNormalForm w = HeckeNormalForm::one(2, HeckeVariant::Plain);
        w = times_letter(w, HeckeLetter{HeckeLetter::S, 1});
        w = times_letter(w, HeckeLetter{HeckeLetter::U, 1});
        w = times_letter(w, HeckeLetter{HeckeLetter::S, 1});
        HeckeNormalForm expect = HeckeNormalForm::one(2, HeckeVariant::Plain);
        expect = times_letter(expect, HeckeLetter{HeckeLetter::U, 2});
        expect = expect + HeckeNormalForm::generator(HeckeLetter{HeckeLetter::S, 1}, 2,
                                                     HeckeVariant::Plain);
        if (!(w == expect)) ok = false;
        col.add("nf-relations", ok, "defining relations hold at the normal-form level");
    }
}

// --------------------------------------------------------------------- shiftsym

void suite_shiftsym(Collector& col, int n_max, int, int) {
    {  // E(t) H(-t) = 1 to order 4 and the log-derivative identity
        bool ok = true;
        const int nv = std::min(n_max, 4), order = 4;
        auto Eser = generator_series(GenKind::E, order, nv);
        auto Hser = generator_series(GenKind::H, order, nv);
        for (int d = 0; d <= order; ++d) {
            ShiftedPoly acc(nv);
            for (int i = 0; i <= d; ++i) {
                Rational sign((d - i) % 2 == 0 ? 1 : -1);
                acc = acc + Eser[i] * Hser[d - i] * sign;  // coeff of t^d in E(t)H(-t)
            }
            ShiftedPoly expect =
                d == 0 ? ShiftedPoly::constant(nv, Rational(1)) : ShiftedPoly(nv);
            if (!(acc == expect)) ok = false;
        }
        // t d/dt log H(t) = sum p_M t^M: compare via H'(t) = H(t) * sum p_M t^{M-1}
        for (int d = 1; d <= order; ++d) {
            ShiftedPoly lhs = Hser[d] * Rational(d);  // coeff of t^{d-1} in H'(t)
            ShiftedPoly rhs(nv);
            for (int M = 1; M <= d; ++M) rhs = rhs + Hser[d - M] * generator(GenKind::P, M, nv);
            if (!(lhs == rhs)) ok = false;
        }
        col.add("generating-functions", ok,
                "E(t)H(-t) = 1 and t d/dt log H(t) = sum p_M t^M, to order 4");
    }

    {  // coherence and shifted symmetry of the generator truncations
        bool ok = true;
        for (GenKind kind : {GenKind::E, GenKind::H, GenKind::P})
            for (int M = 1; M <= 4; ++M)
                for (int n = 1; n <= std::min(n_max, 4); ++n) {
                    ShiftedPoly g = generator(kind, M, n);
                    if (!is_shifted_symmetric(g)) ok = false;
                    if (!(g.set_last_var_zero() == generator(kind, M, n - 1))) ok = false;
                }
        col.add("coherence", ok,
                "generators are shifted symmetric and stable under x_n = 0 (M <= 4, n <= 4)");
    }

    {  // top homogeneous components are the classical symmetric polynomials
        bool ok = true;
        for (GenKind kind : {GenKind::E, GenKind::H, GenKind::P})
            for (int M = 1; M <= 4; ++M)
                for (int n = 1; n <= std::min(n_max, 4); ++n)
                    if (!(generator(kind, M, n).homogeneous_component(M) ==
                          classical_symmetric(kind, M, n)))
                        ok = false;
        col.add("top-component", ok,
                "degree-M part of e_M/h_M/p_M is the classical symmetric polynomial");
    }

    {  // criterion 9 bridge: eigenvalue functions for r = 1, 2
        BridgeReport b1 = bridge_check(1, std::min(n_max, 4));
        BridgeReport b2 = bridge_check(2, std::min(n_max, 4));
        col.add("bridge-r1", b1.ok(), "eigenvalue function of Delta^{(1)} is p_1");
        col.add("bridge-r2", b2.ok(), "eigenvalue function of Delta^{(2)} is p_2 + p_1");
    }

    {  // algebraic independence witness: p_1..p_3 monomials on a partition grid
        auto monomials = partitions_up_to(3);
        auto grid = partitions_up_to(4);
        std::vector<std::vector<Rational>> cols;
        for (const auto& mu : monomials) {
            std::vector<Rational> col_v;
            for (const auto& lam : grid) {
                Rational acc(1);
                for (int part : mu.parts()) acc *= power_sum_eval(part, lam);
                col_v.push_back(acc);
            }
            cols.push_back(std::move(col_v));
        }
        RationalMatrix M = RationalMatrix::from_columns(cols);
        col.add("interpolation-rank", rank(M) == static_cast<int>(monomials.size()),
                "p-monomials of weighted degree <= 3 have full rank on the |lambda| <= 4 grid");
    }
}

}  // namespace

VerificationReport run_suite(const std::string& suite, int n_max, int m_max, int threads) {
    VerificationReport rep;
    rep.command = "verify";
    rep.parameters = {{"suite", suite},
                      {"n_max", std::to_string(n_max)},
                      {"m_max", std::to_string(m_max)},
                      {"threads", std::to_string(threads)}};
    Collector col{rep.checks};

    auto t0 = std::chrono::steady_clock::now();
    bool known = false;
    if (suite == "presentation" || suite == "all") {
        suite_presentation(col, n_max, m_max, threads);
        known = true;
    }
    if (suite == "basis" || suite == "all") {
        suite_basis(col, n_max, m_max, threads);
        known = true;
    }
    if (suite == "reps" || suite == "all") {
        suite_reps(col, n_max, m_max, threads);
        known = true;
    }
    if (suite == "hecke" || suite == "all") {
        suite_hecke(col, n_max, m_max, threads);
        known = true;
    }
    if (suite == "shiftsym" || suite == "all") {
        suite_shiftsym(col, n_max, m_max, threads);
        known = true;
    }
    if (!known) throw std::invalid_argument("unknown suite: " + suite);
    rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return rep;
}

}  // namespace rookalg
