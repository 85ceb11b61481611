#ifndef FREEFACTOR_EXPANSION_HPP
#define FREEFACTOR_EXPANSION_HPP

#include <vector>

#include "freefactor/algebra.hpp"

namespace freefactor {

// ef^2, either an exact nonnegative rational or +infinity.
struct ExpansionFactor {
    bool infinite = false;
    Rational ef2{0};

    static ExpansionFactor plus_infinity() { return ExpansionFactor{true, Rational(0)}; }
    static ExpansionFactor of(Rational v) { return ExpansionFactor{false, std::move(v)}; }

    double ef() const;
    bool operator==(const ExpansionFactor& o) const {
        return infinite == o.infinite && (infinite || ef2 == o.ef2);
    }
    std::string to_string() const;  // ef^2 as "p/q" or "inf"
};

// Exact minimum of the corner form over the equivariant subspace, subject to
// unit pairing with xi (x) xi. Diffuse abelian and empty pairing give +infinity.
ExpansionFactor ef_exact(const StateAlgebra& a);

// Closed form for commutative A: ef^2 = 1 + (sum lambda^2/(1-2 lambda))^-1,
// with value 1 when the largest weight equals 1/2.
ExpansionFactor ef_commutative_closed(const std::vector<Rational>& weights);

// Closed form for one matrix block: ef^2 = 1 + (sum lambda^3/(1-2 lambda^2))^-1.
// The 1/sqrt(2) special point is unreachable for rational weights.
ExpansionFactor ef_matrix_closed(const std::vector<Rational>& weights);

// True guarantees ef >= 1 without computing it: no minimal projection has
// weight above 1/2 (always true for the diffuse abelian algebra).
bool ef_lower_bound_certificate(const StateAlgebra& a);

}  // namespace freefactor

#endif
