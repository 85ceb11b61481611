#ifndef FREEFACTOR_SUBGROUP_HPP
#define FREEFACTOR_SUBGROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "freefactor/algebra.hpp"

namespace freefactor {

// Signed prime exponent vector of a positive rational.
std::map<Integer, long> factor_rational(const Rational& r);

// Coprime (p,q), q > 0, with r^p = s^q, if the exponent vectors are parallel.
// Throws UnitArgument when r or s equals 1.
std::optional<std::pair<long, long>> multiplicative_relation(const Rational& r,
                                                             const Rational& s);

// Canonical closed subgroup of R: R itself, {0}, or (2pi/(k ln g))Z with g a
// primitive rational > 1 (prime exponent vector of content 1) and k >= 1.
class ClosedSubgroup {
  public:
    enum class Kind { Full, Trivial, LogCyclic };

    static ClosedSubgroup full() { return ClosedSubgroup(Kind::Full, Rational(1), 1); }
    static ClosedSubgroup trivial() { return ClosedSubgroup(Kind::Trivial, Rational(1), 1); }
    // Accepts any positive g != 1 and any k != 0; canonicalizes to a primitive
    // base > 1 and positive divisor.
    static ClosedSubgroup log_cyclic(const Rational& g, long k = 1);

    Kind kind() const { return kind_; }
    const Rational& base() const { return base_; }
    long divisor() const { return divisor_; }

    bool operator==(const ClosedSubgroup& o) const {
        return kind_ == o.kind_ && (kind_ != Kind::LogCyclic ||
                                    (base_ == o.base_ && divisor_ == o.divisor_));
    }

    // Float generator 2pi/(k ln g); 0 for Trivial, NaN for Full.
    double generator() const;
    // "R", "{0}", or "(2pi/(k*ln(g)))Z".
    std::string to_string() const;

  private:
    ClosedSubgroup(Kind k, Rational g, long d) : kind_(k), base_(std::move(g)), divisor_(d) {}
    Kind kind_;
    Rational base_;
    long divisor_;
};

ClosedSubgroup intersect(const ClosedSubgroup& g1, const ClosedSubgroup& g2);

// I(A,phi) from intra-block weight ratios; Full for the diffuse abelian
// algebra and for traces on each block.
ClosedSubgroup modular_invariant_group(const StateAlgebra& a);

// Type candidates from the T-invariant.
struct TypeClassification {
    enum class Kind { NotTypeIII, III1OrIII0, IIILambdaOrIII0 };
    Kind kind;
    std::optional<Rational> lambda;  // in (0,1), for IIILambdaOrIII0
    std::string to_string() const;
};

TypeClassification type_candidates(const ClosedSubgroup& t);

}  // namespace freefactor

#endif
