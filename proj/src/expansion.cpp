#include "freefactor/expansion.hpp"

#include <cmath>
#include <limits>

#include "freefactor/gns.hpp"
#include "freefactor/ratmat.hpp"

namespace freefactor {

double ExpansionFactor::ef() const {
    if (infinite) return std::numeric_limits<double>::infinity();
    return std::sqrt(to_double(ef2));
}

std::string ExpansionFactor::to_string() const {
    return infinite ? "inf" : freefactor::to_string(ef2);
}

ExpansionFactor ef_exact(const StateAlgebra& a) {
    validate(a);
    if (a.is_diffuse()) return ExpansionFactor::plus_infinity();

    GnsSpace gns = build_gns(a);
    EquivariantBasis eb = equivariant_basis(gns);
    const int m = static_cast<int>(eb.vectors.size());

    bool pairing_zero = true;
    for (const auto& p : eb.pairing)
        if (p != 0) pairing_zero = false;
    if (pairing_zero) return ExpansionFactor::plus_infinity();

    // Minimize v^T G v subject to a^T v = 1 with G PSD. A nullspace direction
    // of G that meets the constraint drives the minimum to 0; otherwise a is in
    // the range of G, and solving G w = a gives the minimum 1/(a^T w).
    for (const auto& dvec : nullspace_dense(eb.corner_gram)) {
        Rational dot(0);
        for (int i = 0; i < m; ++i) dot += eb.pairing[i] * dvec[i];
        if (dot != 0) return ExpansionFactor::of(Rational(0));
    }
    auto w = solve_dense(eb.corner_gram, eb.pairing);
    if (!w) throw Error("KKT system inconsistent for a PSD corner form");
    Rational aw(0);
    for (int i = 0; i < m; ++i) aw += eb.pairing[i] * (*w)[i];
    if (aw <= 0) throw Error("nonpositive a^T w in KKT solve");
    return ExpansionFactor::of(1 / aw);
}

ExpansionFactor ef_commutative_closed(const std::vector<Rational>& weights) {
    if (weights.empty()) throw ValidationError("InvalidWeights: empty");
    Rational sum(0), lmax(0);
    for (const auto& w : weights) {
        if (w <= 0) throw ValidationError("InvalidWeights: nonpositive");
        sum += w;
        if (w > lmax) lmax = w;
    }
    if (sum != 1) throw ValidationError("InvalidWeights: sum not one");
    if (lmax == Rational(1, 2)) return ExpansionFactor::of(Rational(1));
    Rational s(0);
    for (const auto& w : weights) s += w * w / (1 - 2 * w);
    return ExpansionFactor::of(1 + 1 / s);
}

ExpansionFactor ef_matrix_closed(const std::vector<Rational>& weights) {
    if (weights.empty()) throw ValidationError("InvalidWeights: empty");
    Rational sum(0);
    for (const auto& w : weights) {
        if (w <= 0) throw ValidationError("InvalidWeights: nonpositive");
        sum += w;
    }
    if (sum != 1) throw ValidationError("InvalidWeights: sum not one");
    Rational s(0);
    for (const auto& w : weights) s += w * w * w / (1 - 2 * w * w);
    return ExpansionFactor::of(1 + 1 / s);
}

bool ef_lower_bound_certificate(const StateAlgebra& a) {
    validate(a);
    auto w = max_minimal_projection_weight(a);
    return !w || *w <= Rational(1, 2);
}

}  // namespace freefactor
