#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freefactor/gns.hpp"

using namespace freefactor;

TEST_CASE("gns basis bookkeeping") {
    StateAlgebra a = StateAlgebra::matrix_blocks(
        {{2, {Rational(1, 3), Rational(1, 6)}}, {1, {Rational(1, 2)}}});
    GnsSpace g = build_gns(a);
    CHECK(g.dim == 5);
    // |e_{ij}-hat|^2 = lambda_j, <e_{ii}-hat, xi> = lambda_i
    int u01 = g.index_of(0, 0, 1);
    CHECK(g.norm2[u01] == Rational(1, 6));
    CHECK(g.xi_overlap[u01] == 0);
    int u11 = g.index_of(0, 1, 1);
    CHECK(g.norm2[u11] == Rational(1, 6));
    CHECK(g.xi_overlap[u11] == Rational(1, 6));
    int v = g.index_of(1, 0, 0);
    CHECK(g.norm2[v] == Rational(1, 2));

    CHECK_THROWS_AS(build_gns(StateAlgebra::diffuse_abelian()), DiffuseUnsupported);
}

TEST_CASE("matrix unit actions") {
    StateAlgebra a = StateAlgebra::single_block({Rational(2, 3), Rational(1, 3)});
    GnsSpace g = build_gns(a);
    // pi(e_{01}) e_{10}-hat = e_{00}-hat
    auto im = left_unit_action(g, 0, 0, 1, g.index_of(0, 1, 0));
    REQUIRE(im.has_value());
    CHECK(*im == g.index_of(0, 0, 0));
    CHECK(!left_unit_action(g, 0, 0, 1, g.index_of(0, 0, 0)).has_value());
    // rho(e_{01}) e_{10}-hat = e_{11}-hat
    auto rm = right_unit_action(g, 0, 0, 1, g.index_of(0, 1, 0));
    REQUIRE(rm.has_value());
    CHECK(*rm == g.index_of(0, 1, 1));
    CHECK(!right_unit_action(g, 0, 0, 1, g.index_of(0, 0, 1)).has_value());
}

TEST_CASE("equivariant dimension law") {
    // dim of the intertwiner space is sum n_k^2
    auto dim_of = [](const StateAlgebra& a) {
        return static_cast<long>(equivariant_basis(build_gns(a)).vectors.size());
    };
    CHECK(dim_of(StateAlgebra::commutative({Rational(1, 2), Rational(1, 2)})) == 2);
    CHECK(dim_of(StateAlgebra::single_block({Rational(2, 3), Rational(1, 3)})) == 4);
    CHECK(dim_of(StateAlgebra::matrix_blocks(
              {{2, {Rational(1, 4), Rational(1, 4)}}, {1, {Rational(1, 2)}}})) == 5);
    CHECK(dim_of(StateAlgebra::matrix_blocks(
              {{3, {Rational(1, 6), Rational(1, 6), Rational(1, 6)}},
               {2, {Rational(1, 4), Rational(1, 4)}}})) == 13);
}

TEST_CASE("equivariant vectors satisfy the relation") {
    StateAlgebra a = StateAlgebra::matrix_blocks(
        {{2, {Rational(1, 2), Rational(1, 4)}}, {1, {Rational(1, 4)}}});
    GnsSpace g = build_gns(a);
    EquivariantBasis eb = equivariant_basis(g);
    REQUIRE(eb.vectors.size() == 5);
    for (const auto& x : eb.vectors) CHECK(is_equivariant(g, x));
    // a perturbed vector must fail
    SparseVec bad = eb.vectors[0];
    REQUIRE(!bad.empty());
    bad[0].second += 1;
    CHECK(!is_equivariant(g, bad));
}

TEST_CASE("corner gram is symmetric PSD and pairing matches") {
    StateAlgebra a = StateAlgebra::single_block({Rational(2, 3), Rational(1, 3)});
    EquivariantBasis eb = equivariant_basis(build_gns(a));
    const auto& G = eb.corner_gram;
    REQUIRE(G.size() == eb.vectors.size());
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = 0; j < G.size(); ++j) CHECK(G[i][j] == G[j][i]);
    CHECK(psd_pivots(G));
}
