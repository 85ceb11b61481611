#ifndef FREEFACTOR_GNS_HPP
#define FREEFACTOR_GNS_HPP

#include <optional>
#include <vector>

#include "freefactor/algebra.hpp"
#include "freefactor/ratmat.hpp"

namespace freefactor {

// Labels the GNS basis vector e^k_{ij}-hat. Indices are 0-based.
struct GnsIndex {
    int block = 0;
    int row = 0;
    int col = 0;
};

// L^2(A,phi) with its orthogonal matrix-unit basis. The basis order is
// block-major, then row-major within a block.
struct GnsSpace {
    StateAlgebra algebra;
    std::vector<GnsIndex> basis;
    std::vector<Rational> norm2;       // |e_{ij}-hat|^2 = lambda_j
    std::vector<Rational> xi_overlap;  // <e_u-hat, xi> = lambda_i on diagonal units, 0 else
    std::vector<int> block_offset;
    int dim = 0;

    int index_of(int block, int i, int j) const {
        return block_offset[block] + i * algebra.blocks[block].size + j;
    }
    const Rational& weight(int block, int i) const { return algebra.blocks[block].weights[i]; }
};

// Throws DiffuseUnsupported for the diffuse abelian token.
GnsSpace build_gns(const StateAlgebra& a);

// pi(e^k_{pq}) e-hat^{k'}_{ij} = [k==k'][q==i] e-hat^k_{pj}; returns the image
// basis index (coefficient is always 1) or nullopt.
std::optional<int> left_unit_action(const GnsSpace& g, int block, int p, int q, int u);
// rho(e^k_{pq}) e-hat^{k'}_{ij} = [k==k'][j==p] e-hat^k_{iq}.
std::optional<int> right_unit_action(const GnsSpace& g, int block, int p, int q, int u);

// Exact basis of the left-right equivariant subspace of H (x) H, with the
// pairing vector a_m = <b_m, xi (x) xi> and the corner Gram matrix
// G_{mn} = <(P_Ho (x) P_Ho) b_m, (P_Ho (x) P_Ho) b_n>.
struct EquivariantBasis {
    int gns_dim = 0;
    // Coefficient vectors over the product basis; tensor index = u*dim + v.
    std::vector<SparseVec> vectors;
    std::vector<Rational> pairing;
    RatMatrix corner_gram;
};

EquivariantBasis equivariant_basis(const GnsSpace& g);

// Exact check that a tensor coefficient vector satisfies the intertwining
// relation for every matrix unit. Used by tests.
bool is_equivariant(const GnsSpace& g, const SparseVec& x);

}  // namespace freefactor

#endif
