// freefactor: expansion factors, factoriality certificates and the Connes
// T-invariant for free products of finite-dimensional algebras with states.
#include <cmath>
#include <complex>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "freefactor/classify.hpp"
#include "freefactor/expansion.hpp"
#include "freefactor/fock.hpp"
#include "freefactor/reports.hpp"
#include "freefactor/verify.hpp"

namespace ff = freefactor;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitVerifyFailure = 5;

std::string algebra_name(const ff::StateAlgebra& a, size_t i) {
    if (!a.label.empty()) return a.label;
    return "algebra[" + std::to_string(i) + "]";
}

int cmd_ef(const std::string& input) {
    auto algebras = ff::load_algebras_file(input);
    for (size_t i = 0; i < algebras.size(); ++i) {
        ff::ExpansionFactor e = ff::ef_exact(algebras[i]);
        std::cout << algebra_name(algebras[i], i) << ": ef^2 = " << e.to_string();
        if (!e.infinite) std::cout << "  (ef ~ " << ff::format_double(e.ef()) << ")";
        std::cout << "  [ef>=1 certificate: "
                  << (ff::ef_lower_bound_certificate(algebras[i]) ? "yes" : "no") << "]\n";
    }
    return 0;
}

int cmd_invariant(const std::string& input) {
    auto algebras = ff::load_algebras_file(input);
    for (size_t i = 0; i < algebras.size(); ++i) {
        ff::ClosedSubgroup g = ff::modular_invariant_group(algebras[i]);
        std::cout << algebra_name(algebras[i], i) << ": I = " << g.to_string();
        if (g.kind() == ff::ClosedSubgroup::Kind::LogCyclic)
            std::cout << "  (generator ~ " << ff::format_double(g.generator()) << ")";
        std::cout << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& input) {
    auto algebras = ff::load_algebras_file(input);
    if (algebras.size() != 2)
        throw ff::ValidationError("classify needs exactly 2 algebras, got " +
                                  std::to_string(algebras.size()));
    ff::FactorReport rep = ff::classify_pair(algebras[0], algebras[1]);
    std::cout << "free product: " << algebra_name(algebras[0], 0) << " * "
              << algebra_name(algebras[1], 1) << "\n"
              << ff::render_report(rep);
    return rep.certified ? 0 : kExitInconclusive;
}

int cmd_fock(const std::string& input, int len, double t, unsigned seed) {
    auto algebras = ff::load_algebras_file(input);
    if (algebras.size() != 2)
        throw ff::ValidationError("fock needs exactly 2 algebras, got " +
                                  std::to_string(algebras.size()));
    ff::TruncatedFock f = ff::build_fock(algebras[0], algebras[1], len);
    std::cout << "truncated free-product space: L = " << len << ", dim = " << f.dim() << "\n";

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> cdist(-1.0, 1.0);
    auto random_elt = [&](const ff::StateAlgebra& a) {
        ff::AlgebraElement x = ff::AlgebraElement::zero(a);
        for (auto& blk : x.blocks)
            for (auto& e : blk) e = std::complex<double>(cdist(rng), cdist(rng));
        return x;
    };
    for (int owner = 0; owner < 2; ++owner) {
        ff::AlgebraElement x = random_elt(algebras[owner]);
        double r = ff::theorem1_residual(f, owner, x, t);
        std::cout << "modular covariance residual (component " << owner
                  << ", t = " << ff::format_double(t) << "): " << ff::format_double(r) << "\n";
    }
    auto centered = [&](const ff::StateAlgebra& a) {
        ff::AlgebraElement x = random_elt(a);
        std::complex<double> mean = ff::state_value(a, x);
        for (size_t k = 0; k < a.blocks.size(); ++k) {
            int n = a.blocks[k].size;
            for (int i = 0; i < n; ++i) x.blocks[k][i * n + i] -= mean;
        }
        return x;
    };
    ff::AlgebraElement xa = centered(algebras[0]);
    ff::AlgebraElement xb = centered(algebras[1]);
    std::cout << "freeness |phi(ab)| = "
              << ff::format_double(std::abs(ff::free_moment(f, {{0, xa}, {1, xb}}))) << "\n";
    if (len >= 4)
        std::cout << "freeness |phi(abab)| = "
                  << ff::format_double(
                         std::abs(ff::free_moment(f, {{0, xa}, {1, xb}, {0, xa}, {1, xb}})))
                  << "\n";
    return 0;
}

int cmd_verify(int trials, unsigned seed, bool inject_corrupt) {
    ff::VerifyOptions opt;
    opt.seed = seed;
    opt.trial_scale = trials / 100.0;
    opt.inject_corrupt_closed_form = inject_corrupt;
    auto results = ff::run_verification(opt);
    bool any_failed = false;
    for (const auto& r : results) {
        std::cout << r.name << ": " << r.passed << " passed, " << r.failed << " failed\n";
        for (const auto& msg : r.failures) std::cout << "    " << msg << "\n";
        if (r.failed) any_failed = true;
    }
    std::cout << (any_failed ? "VERIFICATION FAILED\n" : "all suites passed\n");
    return any_failed ? kExitVerifyFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"expansion factors and type invariants of free product algebras"};
    app.require_subcommand(1);

    std::string input, out_path;
    int samples = 200, grid = 50, fock_len = 4, verify_trials = 100;
    double fock_t = 0.7;
    unsigned seed = 20230727;
    bool inject_corrupt = false;

    auto* ef = app.add_subcommand("ef", "expansion factor per input algebra");
    ef->add_option("input", input, "JSON input file")->required();
    auto* classify = app.add_subcommand("classify", "factoriality + T-invariant for a pair");
    classify->add_option("input", input, "JSON input file with exactly 2 algebras")->required();
    auto* invariant = app.add_subcommand("invariant", "modular invariant group per algebra");
    invariant->add_option("input", input, "JSON input file")->required();
    auto* fig1 = app.add_subcommand("figure1", "ef(M_2,phi_lambda) sweep as CSV");
    fig1->add_option("--samples", samples, "number of lambda samples")->check(CLI::Range(2, 1000000));
    fig1->add_option("--out", out_path, "output CSV path")->required();
    auto* fig2 = app.add_subcommand("figure2", "certified-factor region as CSV");
    fig2->add_option("--grid", grid, "grid resolution per axis")->check(CLI::Range(2, 10000));
    fig2->add_option("--out", out_path, "output CSV path")->required();
    auto* fock = app.add_subcommand("fock", "truncated free-product simulator report");
    fock->add_option("input", input, "JSON input file with exactly 2 algebras")->required();
    fock->add_option("--len", fock_len, "truncation word length")->check(CLI::Range(1, 12));
    fock->add_option("--t", fock_t, "modular parameter t");
    fock->add_option("--seed", seed, "RNG seed");
    auto* verify = app.add_subcommand("verify", "run the randomized verification harness");
    verify->add_option("--trials", verify_trials, "trial count scale (100 = documented counts)")
        ->check(CLI::Range(1, 100000));
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_flag("--inject-corrupt-closed-form", inject_corrupt,
                     "test fixture: corrupt the closed forms; verification must fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ef) return cmd_ef(input);
        if (*classify) return cmd_classify(input);
        if (*invariant) return cmd_invariant(input);
        if (*fig1) {
            ff::figure1_series(samples).write_file(out_path);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        if (*fig2) {
            ff::figure2_series(grid).write_file(out_path);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        if (*fock) return cmd_fock(input, fock_len, fock_t, seed);
        if (*verify) return cmd_verify(verify_trials, seed, inject_corrupt);
    } catch (const ff::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ff::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ff::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
