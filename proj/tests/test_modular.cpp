#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "freefactor/modular.hpp"

using namespace freefactor;

namespace {
const StateAlgebra kA = StateAlgebra::matrix_blocks(
    {{2, {Rational(1, 2), Rational(1, 4)}}, {1, {Rational(1, 4)}}});
}

TEST_CASE("algebra elements and the state") {
    AlgebraElement id = AlgebraElement::identity(kA);
    CHECK(state_value(kA, id) == std::complex<double>(1.0, 0.0));
    AlgebraElement e = AlgebraElement::matrix_unit(kA, 0, 1, 1);
    CHECK(state_value(kA, e).real() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(id.max_abs_diff(id) == 0.0);
    CHECK(id.max_abs_diff(e) == 1.0);
}

TEST_CASE("two Delta constructions agree") {
    ModularFlow flow = build_modular(kA);
    CHECK(delta_construction_mismatch(flow) < 1e-12);
    // eigenvalue on e_{01}-hat is lambda_0/lambda_1 = 2
    CHECK(flow.delta_eig[flow.gns.index_of(0, 0, 1)] == Rational(2));
    CHECK(flow.delta_eig[flow.gns.index_of(0, 1, 1)] == Rational(1));
}

TEST_CASE("sigma_t is a one-parameter group fixing the state") {
    ModularFlow flow = build_modular(kA);
    AlgebraElement x = AlgebraElement::zero(kA);
    x.at(kA, 0, 0, 1) = {0.3, -1.1};
    x.at(kA, 0, 1, 0) = {-0.7, 0.2};
    x.at(kA, 0, 0, 0) = {1.5, 0.0};
    x.at(kA, 1, 0, 0) = {0.4, 0.9};
    double s = 0.37, t = -1.42;
    AlgebraElement lhs = sigma_t(flow, s + t, x);
    AlgebraElement rhs = sigma_t(flow, s, sigma_t(flow, t, x));
    CHECK(lhs.max_abs_diff(rhs) < 1e-12);
    std::complex<double> before = state_value(kA, x);
    std::complex<double> after = state_value(kA, sigma_t(flow, 0.81, x));
    CHECK(std::abs(before - after) < 1e-12);
    // sigma_0 is the identity
    CHECK(sigma_t(flow, 0.0, x).max_abs_diff(x) < 1e-15);
}

TEST_CASE("sigma defect") {
    ModularFlow tr = build_modular(make_trace(2));
    CHECK(sigma_defect(tr, 1.7) < 1e-15);  // trace: flow is trivial
    ModularFlow psi = build_modular(make_psi_lambda(Rational(1, 2)));
    double period = 2 * std::acos(-1.0) / std::log(2.0);
    CHECK(sigma_defect(psi, period) < 1e-9);
    CHECK(sigma_defect(psi, period / 2) > 1e-2);
}

TEST_CASE("witness check accepts the true group and rejects wrong ones") {
    ModularFlow psi = build_modular(make_psi_lambda(Rational(1, 2)));
    ClosedSubgroup truth = modular_invariant_group(psi.algebra);
    REQUIRE(truth == ClosedSubgroup::log_cyclic(Rational(2)));
    CHECK_NOTHROW(witness_check(psi, truth));
    CHECK_THROWS_AS(witness_check(psi, ClosedSubgroup::full()), WitnessFailure);
    CHECK_THROWS_AS(witness_check(psi, ClosedSubgroup::log_cyclic(Rational(2), 2)),
                    WitnessFailure);

    ModularFlow tr = build_modular(make_trace(3));
    CHECK_NOTHROW(witness_check(tr, ClosedSubgroup::full()));
    CHECK_THROWS_AS(witness_check(tr, ClosedSubgroup::trivial()), WitnessFailure);
}
