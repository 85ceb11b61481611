#ifndef FREEFACTOR_ALGEBRA_HPP
#define FREEFACTOR_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "freefactor/rational.hpp"

namespace freefactor {

// One matrix summand M_n(C) with the diagonal entries of its density.
// Weight order is preserved as given; no sortedness is assumed anywhere.
struct MatrixBlock {
    int size = 0;
    std::vector<Rational> weights;  // one per diagonal entry, all > 0
};

// Finite direct sum of matrix blocks with a faithful diagonal state,
// or the symbolic diffuse abelian algebra (no internal structure).
struct StateAlgebra {
    enum class Kind { MatrixBlocks, DiffuseAbelian };

    Kind kind = Kind::MatrixBlocks;
    std::string label;
    std::vector<MatrixBlock> blocks;  // empty for DiffuseAbelian

    static StateAlgebra matrix_blocks(std::vector<MatrixBlock> blocks, std::string label = "");
    static StateAlgebra diffuse_abelian(std::string label = "");
    // Commutative C^n with the given weights (n size-1 blocks).
    static StateAlgebra commutative(std::vector<Rational> weights, std::string label = "");
    // Single M_n block with the given weights.
    static StateAlgebra single_block(std::vector<Rational> weights, std::string label = "");

    bool is_diffuse() const { return kind == Kind::DiffuseAbelian; }
};

// Throws ValidationError (NonPositiveWeight, WeightSumNotOne, EmptyAlgebra).
void validate(const StateAlgebra& a);

// Sum of n_k^2; nullopt means +infinity (diffuse abelian).
std::optional<long> linear_dimension(const StateAlgebra& a);

// Largest density eigenvalue over all blocks; nullopt for diffuse abelian
// (a diffuse algebra has no minimal projections at all).
std::optional<Rational> max_minimal_projection_weight(const StateAlgebra& a);

// psi_lambda on M_2: weights (1/(1+lambda), lambda/(1+lambda)), lambda in (0,1).
StateAlgebra make_psi_lambda(const Rational& lambda);
// phi_lambda on M_2: weights (lambda, 1-lambda), lambda in [1/2,1).
StateAlgebra make_phi_lambda(const Rational& lambda);
// C^n with uniform weights 1/n.
StateAlgebra make_uniform(int n);
// M_n with the normalized trace.
StateAlgebra make_trace(int n);

// Parses the CLI JSON input schema and validates every algebra.
std::vector<StateAlgebra> parse_algebras_json(const std::string& json_text);
std::vector<StateAlgebra> load_algebras_file(const std::string& path);

}  // namespace freefactor

#endif
