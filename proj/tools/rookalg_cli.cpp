#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rookalg/central_families.hpp"
#include "rookalg/hecke.hpp"
#include "rookalg/monoid_algebra.hpp"
#include "rookalg/report.hpp"
#include "rookalg/reps.hpp"
#include "rookalg/rook.hpp"
#include "rookalg/shifted_symmetric.hpp"

using namespace rookalg;

namespace {

int run(int argc, char** argv) {
    CLI::App app{"rookalg: exact computations in the rook-monoid algebra and its centralizers"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list Gamma(n) in canonical order");
    int enum_n = 0;
    bool count_only = false;
    enumerate_cmd->add_option("n", enum_n, "ambient size")->required();
    enumerate_cmd->add_flag("--count-only", count_only, "print only |Gamma(n)|");

    // mul
    auto* mul_cmd = app.add_subcommand("mul", "multiply two algebra elements");
    int mul_n = 0;
    std::string mul_lhs, mul_rhs;
    mul_cmd->add_option("n", mul_n, "ambient size")->required();
    mul_cmd->add_option("lhs", mul_lhs, "left factor (element grammar)")->required();
    mul_cmd->add_option("rhs", mul_rhs, "right factor (element grammar)")->required();

    // theta
    auto* theta_cmd = app.add_subcommand("theta", "apply the projection A(n) -> A(n-1)");
    int theta_n_arg = 0;
    std::string theta_elem;
    theta_cmd->add_option("n", theta_n_arg, "ambient size")->required();
    theta_cmd->add_option("element", theta_elem, "element grammar")->required();

    // centralizer
    auto* cent_cmd = app.add_subcommand("centralizer", "basis of A_m(n)");
    int cent_n = 0, cent_m = 0;
    bool dim_only = false;
    cent_cmd->add_option("n", cent_n, "ambient size")->required();
    cent_cmd->add_option("m", cent_m, "level")->required();
    cent_cmd->add_flag("--dim-only", dim_only, "print only the dimension");

    // eigen
    auto* eigen_cmd =
        app.add_subcommand("eigen", "eigenvalue of Delta_n^{(r)} on the representation T_n(lambda)");
    int eig_n = 0, eig_r = 1;
    std::string eig_lambda, eig_csv;
    eigen_cmd->add_option("n", eig_n, "ambient size")->required();
    eigen_cmd->add_option("lambda", eig_lambda, "partition, e.g. (2,1)")->required();
    eigen_cmd->add_option("r", eig_r, "cycle length r >= 1")->required();
    eigen_cmd->add_option("--csv", eig_csv, "append a lambda,r,value row to this file");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite, json_path;
    int n_max = 5, m_max = 2, threads = 1;
    verify_cmd->add_option("suite", suite, "presentation|basis|reps|hecke|shiftsym|all")
        ->required();
    verify_cmd->add_option("--n-max", n_max, "largest ambient size (default 5)");
    verify_cmd->add_option("--m-max", m_max, "largest level (default 2)");
    verify_cmd->add_option("--threads", threads, "worker threads (default 1)");
    verify_cmd->add_option("--json", json_path, "write the report as JSON to this file");

    // hecke-nf
    auto* hecke_cmd = app.add_subcommand("hecke-nf", "normal form of a word in H~_m or H_m");
    int hk_m = 1;
    std::string hk_variant = "tilde", hk_word;
    hecke_cmd->add_option("m", hk_m, "number of strands")->required();
    hecke_cmd->add_option("variant", hk_variant, "tilde|plain")->required();
    hecke_cmd->add_option("word", hk_word, "e.g. \"s1 u1 + 2 e1 u2\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (*enumerate_cmd) {
        if (count_only) {
            std::cout << gamma_size(enum_n) << '\n';
        } else {
            for (const auto& g : enumerate_gamma(enum_n)) std::cout << g.str() << '\n';
        }
        return 0;
    }
    if (*mul_cmd) {
        AlgebraElement a = AlgebraElement::parse(mul_lhs, mul_n);
        AlgebraElement b = AlgebraElement::parse(mul_rhs, mul_n);
        std::cout << multiply(a, b).str() << '\n';
        return 0;
    }
    if (*theta_cmd) {
        AlgebraElement a = AlgebraElement::parse(theta_elem, theta_n_arg);
        std::cout << theta_n(a).str() << '\n';
        return 0;
    }
    if (*cent_cmd) {
        SubspaceHandle h = centralizer(cent_n, cent_m);
        std::cout << "dim A_" << cent_m << "(" << cent_n << ") = " << h.dim() << '\n';
        if (!dim_only)
            for (const auto& b : h.basis()) std::cout << b.str() << '\n';
        return 0;
    }
    if (*eigen_cmd) {
        Partition lam = Partition::parse(eig_lambda);
        GammaRep rep(eig_n, lam);
        Rational value = central_eigenvalue(delta_element(eig_n, Partition{{eig_r}}), rep);
        std::cout << value.get_str() << '\n';
        if (!eig_csv.empty()) {
            std::ofstream out(eig_csv, std::ios::app);
            if (!out) throw std::runtime_error("cannot open " + eig_csv);
            out << '"' << lam.str() << "\"," << eig_r << ',' << value.get_str() << '\n';
        }
        return 0;
    }
    if (*verify_cmd) {
        VerificationReport rep = run_suite(suite, n_max, m_max, threads);
        std::cout << rep.text();
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) throw std::runtime_error("cannot open " + json_path);
            out << rep.to_json() << '\n';
        }
        return rep.all_pass() ? 0 : 1;
    }
    if (*hecke_cmd) {
        HeckeVariant v;
        if (hk_variant == "tilde")
            v = HeckeVariant::Tilde;
        else if (hk_variant == "plain")
            v = HeckeVariant::Plain;
        else
            throw CLI::ValidationError("variant must be tilde or plain");
        std::cout << parse_word_expr(hk_word, hk_m, v).str() << '\n';
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
