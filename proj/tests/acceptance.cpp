// Acceptance suite: ten exact structural checks, one line of output each.
// All arithmetic is rational; there are no tolerances anywhere.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "rookalg/report.hpp"

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> check_names;  // names inside the suite reports
};

}  // namespace

int main() {
    using namespace rookalg;
    using clock = std::chrono::steady_clock;

    // every criterion is backed by named checks in the verification suites;
    // n_max = 6 covers the |Gamma(6)| = 13327 dimension count and the
    // psi-injectivity witness at n = m + M = 6
    const auto t0 = clock::now();
    std::map<std::string, CheckResult> results;
    for (const std::string suite : {"presentation", "basis", "reps", "hecke", "shiftsym"}) {
        VerificationReport rep = run_suite(suite, 6, 2, 1);
        for (const auto& c : rep.checks) results[c.name] = c;
    }

    const std::vector<Criterion> criteria = {
        {1, "dimension law |Gamma(n)| = sum binom(n,r)^2 r!, n <= 6", {"dimension-law"}},
        {2, "presentation relations and spanning count, n <= 5",
         {"defining-relations", "spanning-count"}},
        {3, "theta_n homomorphism on centralizers, n <= 5", {"theta-homomorphism"}},
        {4, "degree subadditivity and commuting equality case, n <= 4", {"degree-laws"}},
        {5, "central family Delta_n^M: central, compatible, basis; dims 1,2,4,7,12,19",
         {"central-family"}},
        {6, "centralizer basis Delta^{alpha,M} at (3,1),(4,1),(4,2); theta injectivity",
         {"centralizer-basis"}},
        {7, "orbit parameterization of Gamma(m,n), n <= 5, m <= 2", {"orbit-parameterization"}},
        {8, "representations: classification and central eigenvalues",
         {"classification", "central-eigenvalues"}},
        {9, "shifted symmetric bridge: E(t)H(-t)=1, coherence, top components, r = 1, 2",
         {"generating-functions", "coherence", "top-component", "bridge-r1", "bridge-r2"}},
        {10, "Hecke layer: JM relations, normal-form counts, psi injectivity, retraction square",
         {"jm-relations", "normal-form-counts", "psi-injectivity", "retraction-square"}},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        bool ok = true;
        std::string missing;
        for (const auto& name : crit.check_names) {
            auto it = results.find(name);
            if (it == results.end()) {
                ok = false;
                missing = " (check '" + name + "' missing)";
            } else if (it->second.status != CheckStatus::Pass) {
                ok = false;
                if (it->second.witness) missing = " [" + *it->second.witness + "]";
            }
        }
        if (!ok) ++failures;
        std::cout << "criterion " << crit.number << ": " << crit.title << " ... "
                  << (ok ? "PASS" : "FAIL") << missing << '\n';
    }

    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES")
              << " (" << ms << " ms)\n";
    return failures == 0 ? 0 : 1;
}
