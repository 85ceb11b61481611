#include "freefactor/subgroup.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace freefactor {

namespace {

void factor_integer(Integer n, std::map<Integer, long>& out, long sign) {
    // Trial division, then probabilistic primality + Pollard rho for the rest.
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(p)] += sign;
            n /= p;
        }
    }
    Integer d(17);
    while (n > 1 && d * d <= n && d < 100000) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            out[d] += sign;
            n /= d;
        }
        d += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out[n] += sign;
        return;
    }
    // Pollard rho (Brent variant).
    Integer c(1);
    for (;;) {
        Integer x(2), y(2), g(1);
        while (g == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x > y ? x - y : y - x;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (g != n) {
            factor_integer(g, out, sign);
            factor_integer(n / g, out, sign);
            return;
        }
        c += 1;
    }
}

}  // namespace

std::map<Integer, long> factor_rational(const Rational& r) {
    if (r <= 0) throw ParameterOutOfRange("factor_rational needs a positive rational");
    std::map<Integer, long> out;
    factor_integer(r.get_num(), out, +1);
    factor_integer(r.get_den(), out, -1);
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::optional<std::pair<long, long>> multiplicative_relation(const Rational& r,
                                                             const Rational& s) {
    if (r == 1 || s == 1) throw UnitArgument("multiplicative_relation needs arguments != 1");
    auto er = factor_rational(r);
    auto es = factor_rational(s);
    // r^p = s^q means p*er = q*es componentwise.
    const auto& [p0, e0] = *er.begin();
    long es0 = 0;
    if (auto it = es.find(p0); it != es.end()) es0 = it->second;
    long g = std::gcd(std::abs(es0), std::abs(e0));
    if (g == 0) return std::nullopt;
    long p = es0 / g, q = e0 / g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    std::map<Integer, long> all = er;
    for (const auto& [pr, e] : es) all[pr] += 0;
    for (const auto& [pr, unused] : all) {
        long a = 0, b = 0;
        if (auto it = er.find(pr); it != er.end()) a = it->second;
        if (auto it = es.find(pr); it != es.end()) b = it->second;
        if (p * a != q * b) return std::nullopt;
    }
    if (p == 0) return std::nullopt;
    return std::make_pair(p, q);
}

ClosedSubgroup ClosedSubgroup::log_cyclic(const Rational& g, long k) {
    if (g <= 0 || g == 1) throw ParameterOutOfRange("log_cyclic base must be positive and != 1");
    if (k == 0) throw ParameterOutOfRange("log_cyclic divisor must be nonzero");
    Rational base = g;
    if (base < 1) {
        base = Rational(base.get_den(), base.get_num());
        base.canonicalize();
    }
    auto f = factor_rational(base);
    long content = 0;
    for (const auto& [p, e] : f) content = std::gcd(content, std::abs(e));
    Rational prim(1);
    for (const auto& [p, e] : f) {
        long pe = e / content;
        Rational pr(p);
        prim *= pow_rational(pr, pe);
    }
    return ClosedSubgroup(Kind::LogCyclic, prim, std::abs(k) * content);
}

double ClosedSubgroup::generator() const {
    switch (kind_) {
        case Kind::Full:
            return std::numeric_limits<double>::quiet_NaN();
        case Kind::Trivial:
            return 0.0;
        case Kind::LogCyclic:
            return 2.0 * M_PI / (static_cast<double>(divisor_) * std::log(to_double(base_)));
    }
    return 0.0;
}

std::string ClosedSubgroup::to_string() const {
    switch (kind_) {
        case Kind::Full:
            return "R";
        case Kind::Trivial:
            return "{0}";
        case Kind::LogCyclic:
            if (divisor_ == 1) return "(2pi/ln " + freefactor::to_string(base_) + ")Z";
            return "(2pi/(" + std::to_string(divisor_) + " ln " + freefactor::to_string(base_) +
                   "))Z";
    }
    return "";
}

ClosedSubgroup intersect(const ClosedSubgroup& g1, const ClosedSubgroup& g2) {
    using K = ClosedSubgroup::Kind;
    if (g1.kind() == K::Full) return g2;
    if (g2.kind() == K::Full) return g1;
    if (g1.kind() == K::Trivial || g2.kind() == K::Trivial) return ClosedSubgroup::trivial();
    // Canonical primitive bases are either identical or multiplicatively
    // unrelated; unrelated log generators intersect in {0}.
    if (g1.base() != g2.base()) return ClosedSubgroup::trivial();
    long k = std::gcd(g1.divisor(), g2.divisor());
    return ClosedSubgroup::log_cyclic(g1.base(), k);
}

ClosedSubgroup modular_invariant_group(const StateAlgebra& a) {
    validate(a);
    if (a.is_diffuse()) return ClosedSubgroup::full();
    // sigma_t = Ad h^{it} is trivial iff h^{it} is scalar on each block, so
    // only intra-block weight ratios matter.
    ClosedSubgroup acc = ClosedSubgroup::full();
    for (const auto& b : a.blocks) {
        for (int i = 0; i < b.size; ++i)
            for (int j = i + 1; j < b.size; ++j) {
                if (b.weights[i] == b.weights[j]) continue;
                Rational r = b.weights[i] / b.weights[j];
                acc = intersect(acc, ClosedSubgroup::log_cyclic(r, 1));
            }
    }
    return acc;
}

std::string TypeClassification::to_string() const {
    switch (kind) {
        case Kind::NotTypeIII:
            return "not type III (semifinite: type I or II)";
        case Kind::III1OrIII0:
            return "type III_1 or III_0";
        case Kind::IIILambdaOrIII0:
            return "type III_{" + freefactor::to_string(*lambda) + "} or III_0";
    }
    return "";
}

TypeClassification type_candidates(const ClosedSubgroup& t) {
    using K = ClosedSubgroup::Kind;
    switch (t.kind()) {
        case K::Full:
            return TypeClassification{TypeClassification::Kind::NotTypeIII, std::nullopt};
        case K::Trivial:
            return TypeClassification{TypeClassification::Kind::III1OrIII0, std::nullopt};
        case K::LogCyclic: {
            Rational nu = pow_rational(t.base(), -t.divisor());
            return TypeClassification{TypeClassification::Kind::IIILambdaOrIII0, nu};
        }
    }
    return TypeClassification{TypeClassification::Kind::NotTypeIII, std::nullopt};
}

}  // namespace freefactor
