#ifndef FREEFACTOR_MODULAR_HPP
#define FREEFACTOR_MODULAR_HPP

#include <complex>
#include <vector>

#include "freefactor/gns.hpp"
#include "freefactor/subgroup.hpp"

namespace freefactor {

// Element of a MatrixBlocks algebra: one dense complex matrix per block,
// row-major.
struct AlgebraElement {
    std::vector<std::vector<std::complex<double>>> blocks;

    static AlgebraElement zero(const StateAlgebra& a);
    static AlgebraElement identity(const StateAlgebra& a);
    static AlgebraElement matrix_unit(const StateAlgebra& a, int block, int i, int j);
    std::complex<double>& at(const StateAlgebra& a, int block, int i, int j);
    double max_abs_diff(const AlgebraElement& o) const;
};

std::complex<double> state_value(const StateAlgebra& a, const AlgebraElement& x);

// Modular data for a MatrixBlocks algebra: the diagonal ratio operator and the
// Tomita construction Delta = S*S on realified GNS coordinates.
struct ModularFlow {
    StateAlgebra algebra;
    GnsSpace gns;
    std::vector<Rational> delta_eig;  // lambda_i/lambda_j on e_{ij}-hat
    std::vector<std::vector<double>> delta_tomita;  // 2d x 2d realified S*S
};

ModularFlow build_modular(const StateAlgebra& a);

// sigma_t = Ad h^{it}: multiplies entry (i,j) of block k by (l_i/l_j)^{it}.
AlgebraElement sigma_t(const ModularFlow& flow, double t, const AlgebraElement& x);

// Max abs difference between S*S and the diagonal ratio operator.
double delta_construction_mismatch(const ModularFlow& flow);

// Largest movement of any matrix unit under sigma_t.
double sigma_defect(const ModularFlow& flow, double t);

// Validates a claimed invariant group; throws WitnessFailure with the
// offending t and matrix unit.
void witness_check(const ModularFlow& flow, const ClosedSubgroup& g, unsigned seed = 12345);

}  // namespace freefactor

#endif
