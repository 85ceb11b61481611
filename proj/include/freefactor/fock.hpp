#ifndef FREEFACTOR_FOCK_HPP
#define FREEFACTOR_FOCK_HPP

#include <complex>
#include <map>
#include <vector>

#include "freefactor/modular.hpp"

namespace freefactor {

// One tensor factor H_iota of the free product space: GNS space with an
// orthonormal basis {xi, f_1, ..., f_h} where the f_m span the
// orthocomplement of xi and are modular eigenvectors.
struct FockComponent {
    StateAlgebra algebra;
    GnsSpace gns;
    ModularFlow flow;
    int ho_dim = 0;
    // ON basis in GNS coordinates (double), index 0 = xi.
    std::vector<std::vector<double>> on_basis;
    // ln of the Delta eigenvalue of each H-circle basis vector.
    std::vector<double> log_eig;
};

// A word letter: (owner in {0,1}, H-circle component index).
using FockWord = std::vector<std::pair<int, int>>;

// Free product Hilbert space truncated at word length L; the empty word is xi.
struct TruncatedFock {
    FockComponent comp[2];
    int L = 0;
    std::vector<FockWord> words;  // index 0 = empty word
    std::map<FockWord, int> index;

    int dim() const { return static_cast<int>(words.size()); }
};

// Vector in the truncated space plus the squared norm of components dropped at
// the truncation boundary.
struct FockVec {
    std::vector<std::complex<double>> coeff;
    double leakage2 = 0.0;

    double norm() const;
};

TruncatedFock build_fock(const StateAlgebra& a1, const StateAlgebra& a2, int max_len,
                         long dim_cap = 200000);

// Combinatorial dimension 1 + sum over alternating owner sequences of the
// product of component H-circle dimensions.
long expected_fock_dimension(int ho0, int ho1, int max_len);

FockVec fock_xi(const TruncatedFock& f);

// lambda_iota(x) applied within the truncation; overflow components are
// dropped and accumulated in leakage2.
FockVec left_action(const TruncatedFock& f, int owner, const AlgebraElement& x,
                    const FockVec& v);

// Delta^{it}, letterwise modular phases.
FockVec delta_action(const TruncatedFock& f, double t, const FockVec& v);

// || Delta^{-it} lambda(x) Delta^{it} xi - lambda(sigma_t(x)) xi ||.
double theorem1_residual(const TruncatedFock& f, int owner, const AlgebraElement& x, double t);

// phi(a_1 ... a_m) = <lambda(a_1)...lambda(a_m) xi, xi>. Throws
// TruncationLeakage when the dropped norm exceeds 1e-12.
std::complex<double> free_moment(const TruncatedFock& f,
                                 const std::vector<std::pair<int, AlgebraElement>>& word);

}  // namespace freefactor

#endif
