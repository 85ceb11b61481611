#ifndef FREEFACTOR_CLASSIFY_HPP
#define FREEFACTOR_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "freefactor/expansion.hpp"
#include "freefactor/subgroup.hpp"

namespace freefactor {

struct HypothesisCheck {
    std::string name;
    bool pass;
    std::string detail;
};

// Outcome of the factoriality test for a binary free product. A failed
// hypothesis is reported as Inconclusive; non-factoriality is never claimed.
struct FactorReport {
    std::vector<HypothesisCheck> hypothesis_log;
    bool certified = false;
    std::string reason;  // first failing check when inconclusive
    std::optional<ClosedSubgroup> t_invariant;
    std::optional<TypeClassification> types;
    ExpansionFactor ef1, ef2;
};

FactorReport classify_pair(const StateAlgebra& a1, const StateAlgebra& a2);

// ef(M_2,phi_lambda) * ef(M_2,phi_mu) >= 1, compared exactly on squares.
bool region_membership(const Rational& lambda, const Rational& mu);

}  // namespace freefactor

#endif
