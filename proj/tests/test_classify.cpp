#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freefactor/classify.hpp"
#include "freefactor/reports.hpp"

using namespace freefactor;

TEST_CASE("diffuse against M_2 psi_lambda is certified with cyclic T") {
    for (Rational lam : {Rational(1, 2), Rational(1, 3), Rational(2, 3)}) {
        StateAlgebra l = StateAlgebra::diffuse_abelian("L");
        StateAlgebra m = make_psi_lambda(lam);
        FactorReport rep = classify_pair(l, m);
        CHECK(rep.certified);
        REQUIRE(rep.t_invariant.has_value());
        // weight ratio of psi_lambda is 1/lambda
        ClosedSubgroup expect = ClosedSubgroup::log_cyclic(1 / lam);
        CHECK(*rep.t_invariant == expect);
        REQUIRE(rep.types.has_value());
        CHECK(rep.types->kind == TypeClassification::Kind::IIILambdaOrIII0);
        CHECK(rep.types->lambda == lam);
    }
}

TEST_CASE("C^2 phi_lambda against M_2 trace") {
    StateAlgebra tr = make_trace(2);
    // lambda = 1/2: ef^2 = 1 and 3, product >= 1 -> Certified, T = R
    FactorReport rep = classify_pair(
        StateAlgebra::commutative({Rational(1, 2), Rational(1, 2)}), tr);
    CHECK(rep.certified);
    CHECK(*rep.t_invariant == ClosedSubgroup::full());
    CHECK(rep.types->kind == TypeClassification::Kind::NotTypeIII);
    // dominant weight: ef = 0 kills the product hypothesis
    for (Rational lam : {Rational(3, 5), Rational(7, 10)}) {
        FactorReport r2 = classify_pair(
            StateAlgebra::commutative({lam, 1 - lam}), tr);
        CHECK(!r2.certified);
        CHECK(r2.reason.find("ef") != std::string::npos);
    }
}

TEST_CASE("dimension hypotheses") {
    // C^2 * C^2: dim sum 4 < 5 -> Inconclusive
    FactorReport rep = classify_pair(
        StateAlgebra::commutative({Rational(1, 2), Rational(1, 2)}),
        StateAlgebra::commutative({Rational(1, 2), Rational(1, 2)}));
    CHECK(!rep.certified);
    // C * anything: dim 1 < 2
    FactorReport r1 = classify_pair(StateAlgebra::commutative({Rational(1)}), make_trace(2));
    CHECK(!r1.certified);
    // diffuse counts as infinite-dimensional on both hypotheses
    FactorReport r2 = classify_pair(StateAlgebra::diffuse_abelian(),
                                    StateAlgebra::commutative({Rational(1, 2), Rational(1, 2)}));
    CHECK(r2.certified);
    CHECK(*r2.t_invariant == ClosedSubgroup::full());
}

TEST_CASE("infinite ef dominates unless the mate is zero") {
    // diffuse (ef = inf) with C^2 at a dominant weight (ef = 0): 0 * inf = 0
    FactorReport rep = classify_pair(StateAlgebra::diffuse_abelian(),
                                     StateAlgebra::commutative({Rational(2, 3), Rational(1, 3)}));
    CHECK(!rep.certified);
}

TEST_CASE("region membership") {
    CHECK(region_membership(Rational(1, 2), Rational(1, 2)));
    CHECK(!region_membership(Rational(9, 10), Rational(9, 10)));
    // symmetric
    CHECK(region_membership(Rational(1, 2), Rational(7, 10)) ==
          region_membership(Rational(7, 10), Rational(1, 2)));
    CHECK_THROWS_AS(region_membership(Rational(1, 4), Rational(1, 2)), ParameterOutOfRange);
    CHECK_THROWS_AS(region_membership(Rational(1, 2), Rational(1)), ParameterOutOfRange);
}

TEST_CASE("report rendering") {
    FactorReport rep = classify_pair(StateAlgebra::diffuse_abelian(),
                                     make_psi_lambda(Rational(1, 2)));
    std::string text = render_report(rep);
    CHECK(text.find("Certified") != std::string::npos);
    CHECK(text.find("(2pi/ln 2)Z") != std::string::npos);
    FactorReport bad = classify_pair(StateAlgebra::commutative({Rational(1)}), make_trace(2));
    CHECK(render_report(bad).find("Inconclusive") != std::string::npos);
}
