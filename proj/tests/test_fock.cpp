#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "freefactor/fock.hpp"

using namespace freefactor;

namespace {
const StateAlgebra kC2 = StateAlgebra::commutative({Rational(1, 2), Rational(1, 2)});
const StateAlgebra kC2skew = StateAlgebra::commutative({Rational(2, 3), Rational(1, 3)});
const StateAlgebra kM2 = make_trace(2);
const StateAlgebra kPsi = make_psi_lambda(Rational(1, 2));
}  // namespace

TEST_CASE("dimension bookkeeping") {
    // (C^2, C^2, L=3): words over two 1-dim orthocomplements, alternating
    // owners: 1 + 2 + 2 + 2 = 7
    CHECK(expected_fock_dimension(1, 1, 3) == 7);
    TruncatedFock f = build_fock(kC2, kC2skew, 3);
    CHECK(f.dim() == 7);
    // (M_2 tr, C^2 unif, L=2): 1 + (3 + 1) + (3 + 3) = 11
    CHECK(expected_fock_dimension(3, 1, 2) == 11);
    CHECK(build_fock(kM2, kC2, 2).dim() == 11);
    CHECK(build_fock(kM2, kPsi, 3).dim() ==
          expected_fock_dimension(3, 3, 3));
    CHECK_THROWS_AS(build_fock(kM2, kM2, 12, 1000), TruncationTooLarge);
    CHECK_THROWS_AS(build_fock(StateAlgebra::diffuse_abelian(), kM2, 2), DiffuseUnsupported);
}

TEST_CASE("orthonormal modular eigenbasis of the components") {
    TruncatedFock f = build_fock(kPsi, kM2, 2);
    for (int c = 0; c < 2; ++c) {
        const FockComponent& comp = f.comp[c];
        CHECK(comp.ho_dim + 1 == static_cast<int>(comp.on_basis.size()));
        // pairwise orthonormality in the GNS inner product
        for (size_t a = 0; a < comp.on_basis.size(); ++a)
            for (size_t b = a; b < comp.on_basis.size(); ++b) {
                double dot = 0;
                for (int u = 0; u < comp.gns.dim; ++u)
                    dot += comp.on_basis[a][u] * comp.on_basis[b][u] *
                           to_double(comp.gns.norm2[u]);
                CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
            }
    }
}

TEST_CASE("left action: state part and norms") {
    TruncatedFock f = build_fock(kPsi, kM2, 3);
    FockVec xi = fock_xi(f);
    CHECK(xi.norm() == doctest::Approx(1.0));
    // lambda(1) xi = xi
    FockVec v = left_action(f, 0, AlgebraElement::identity(kPsi), xi);
    CHECK(std::abs(v.coeff[0] - 1.0) < 1e-12);
    double rest = 0;
    for (int i = 1; i < f.dim(); ++i) rest += std::norm(v.coeff[i]);
    CHECK(rest < 1e-24);
    // <lambda(x) xi, xi> = phi(x)
    AlgebraElement x = AlgebraElement::matrix_unit(kPsi, 0, 0, 0);
    FockVec w = left_action(f, 0, x, xi);
    CHECK(std::abs(w.coeff[0] - state_value(kPsi, x)) < 1e-12);
    // lambda is a homomorphism on a product of units within one component
    AlgebraElement e01 = AlgebraElement::matrix_unit(kPsi, 0, 0, 1);
    AlgebraElement e10 = AlgebraElement::matrix_unit(kPsi, 0, 1, 0);
    FockVec lhs = left_action(f, 0, e01, left_action(f, 0, e10, xi));
    FockVec rhs = left_action(f, 0, AlgebraElement::matrix_unit(kPsi, 0, 0, 0), xi);
    double diff = 0;
    for (int i = 0; i < f.dim(); ++i) diff = std::max(diff, std::abs(lhs.coeff[i] - rhs.coeff[i]));
    CHECK(diff < 1e-12);
}

TEST_CASE("delta action is unitary and fixes xi") {
    TruncatedFock f = build_fock(kPsi, kC2skew, 3);
    FockVec xi = fock_xi(f);
    FockVec r = delta_action(f, 0.83, xi);
    CHECK(std::abs(r.coeff[0] - 1.0) < 1e-12);
    FockVec v = left_action(f, 0, AlgebraElement::matrix_unit(kPsi, 0, 0, 1), xi);
    double n0 = v.norm();
    FockVec dv = delta_action(f, 1.91, v);
    CHECK(dv.norm() == doctest::Approx(n0).epsilon(1e-12));
}

TEST_CASE("modular covariance on the truncated space") {
    TruncatedFock f = build_fock(kPsi, kM2, 2);
    AlgebraElement x = AlgebraElement::zero(kPsi);
    x.at(kPsi, 0, 0, 1) = {0.6, 0.1};
    x.at(kPsi, 0, 1, 0) = {-0.2, 0.5};
    x.at(kPsi, 0, 0, 0) = {0.9, 0.0};
    for (double t : {0.25, -1.3, 2.0}) CHECK(theorem1_residual(f, 0, x, t) < 1e-9);
    AlgebraElement y = AlgebraElement::zero(kM2);
    y.at(kM2, 0, 0, 1) = {1.0, -0.4};
    CHECK(theorem1_residual(f, 1, y, 0.7) < 1e-9);
}

TEST_CASE("free moments") {
    TruncatedFock f = build_fock(kC2skew, kM2, 4);
    // centered generators: p - phi(p) with p the first minimal projection
    AlgebraElement a = AlgebraElement::matrix_unit(kC2skew, 0, 0, 0);
    a.at(kC2skew, 0, 0, 0) -= to_double(Rational(2, 3));
    a.at(kC2skew, 1, 0, 0) -= to_double(Rational(2, 3));
    AlgebraElement b = AlgebraElement::matrix_unit(kM2, 0, 0, 0);
    for (int i = 0; i < 2; ++i) b.at(kM2, 0, i, i) -= 0.5;
    CHECK(std::abs(free_moment(f, {{0, a}})) < 1e-12);
    CHECK(std::abs(free_moment(f, {{0, a}, {1, b}})) < 1e-12);
    CHECK(std::abs(free_moment(f, {{0, a}, {1, b}, {0, a}, {1, b}})) < 1e-12);
    // non-centered moment: phi(p q) = phi(p) phi(q) for free projections
    AlgebraElement p = AlgebraElement::matrix_unit(kC2skew, 0, 0, 0);
    AlgebraElement q = AlgebraElement::matrix_unit(kM2, 0, 0, 0);
    CHECK(std::abs(free_moment(f, {{0, p}, {1, q}}) - std::complex<double>(1.0 / 3.0)) < 1e-12);
    // a word too long for the truncation must raise the leakage guard
    CHECK_THROWS_AS(
        free_moment(f, {{0, a}, {1, b}, {0, a}, {1, b}, {0, a}, {1, b}}),
        TruncationLeakage);
}
