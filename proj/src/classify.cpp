#include "freefactor/classify.hpp"

namespace freefactor {

namespace {

// ef1 * ef2 >= 1 with the convention 0*(+inf) = 0.
bool ef_product_at_least_one(const ExpansionFactor& e1, const ExpansionFactor& e2,
                             std::string& detail) {
    auto describe = [](const ExpansionFactor& e) { return "ef^2=" + e.to_string(); };
    detail = describe(e1) + ", " + describe(e2);
    if (e1.infinite || e2.infinite) {
        const ExpansionFactor& fin = e1.infinite ? e2 : e1;
        if (fin.infinite) return true;  // inf * inf
        return fin.ef2 > 0;             // 0 * inf = 0 < 1; positive * inf = inf
    }
    return e1.ef2 * e2.ef2 >= 1;
}

}  // namespace

FactorReport classify_pair(const StateAlgebra& a1, const StateAlgebra& a2) {
    validate(a1);
    validate(a2);
    FactorReport rep;
    rep.ef1 = ef_exact(a1);
    rep.ef2 = ef_exact(a2);

    auto dim1 = linear_dimension(a1);
    auto dim2 = linear_dimension(a2);
    auto dim_str = [](const std::optional<long>& d) {
        return d ? std::to_string(*d) : std::string("inf");
    };

    bool each_dim = (!dim1 || *dim1 >= 2) && (!dim2 || *dim2 >= 2);
    rep.hypothesis_log.push_back({"dim >= 2 each", each_dim,
                                  "dims " + dim_str(dim1) + ", " + dim_str(dim2)});
    bool dim_sum = !dim1 || !dim2 || (*dim1 + *dim2 >= 5);
    rep.hypothesis_log.push_back({"dim sum >= 5", dim_sum,
                                  "dims " + dim_str(dim1) + ", " + dim_str(dim2)});
    std::string ef_detail;
    bool ef_ok = ef_product_at_least_one(rep.ef1, rep.ef2, ef_detail);
    rep.hypothesis_log.push_back({"ef product >= 1", ef_ok, ef_detail});

    for (const auto& h : rep.hypothesis_log) {
        if (!h.pass) {
            rep.certified = false;
            rep.reason = h.name + " fails (" + h.detail + ")";
            return rep;
        }
    }
    rep.certified = true;
    ClosedSubgroup t = intersect(modular_invariant_group(a1), modular_invariant_group(a2));
    rep.t_invariant = t;
    rep.types = type_candidates(t);
    return rep;
}

bool region_membership(const Rational& lambda, const Rational& mu) {
    for (const Rational& v : {lambda, mu})
        if (v < Rational(1, 2) || v >= 1)
            throw ParameterOutOfRange("region_membership needs parameters in [1/2,1)");
    ExpansionFactor e1 = ef_matrix_closed({lambda, 1 - lambda});
    ExpansionFactor e2 = ef_matrix_closed({mu, 1 - mu});
    return e1.ef2 * e2.ef2 >= 1;
}

}  // namespace freefactor
