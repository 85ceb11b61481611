#ifndef FREEFACTOR_VERIFY_HPP
#define FREEFACTOR_VERIFY_HPP

#include <random>
#include <string>
#include <vector>

#include "freefactor/algebra.hpp"

namespace freefactor {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;
};

struct VerifyOptions {
    unsigned seed = 20230727;
    // Scales the per-suite trial counts (1 = the documented counts).
    double trial_scale = 1.0;
    // Test fixture: perturbs the closed forms inside the oracle-equivalence
    // suite, which must then fail.
    bool inject_corrupt_closed_form = false;
};

std::vector<SuiteResult> run_verification(const VerifyOptions& opt);

// Deterministic generators shared by the verification harness and the tests.
std::vector<Rational> random_weights(std::mt19937_64& rng, int n, bool cap_half = false);
StateAlgebra random_multiblock_algebra(std::mt19937_64& rng, int max_blocks, int max_size,
                                       bool cap_half = false);

}  // namespace freefactor

#endif
