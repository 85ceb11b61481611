#include "freefactor/verify.hpp"

#include <cmath>
#include <sstream>

#include "freefactor/classify.hpp"
#include "freefactor/expansion.hpp"
#include "freefactor/fock.hpp"
#include "freefactor/gns.hpp"
#include "freefactor/modular.hpp"
#include "freefactor/reports.hpp"

namespace freefactor {

std::vector<Rational> random_weights(std::mt19937_64& rng, int n, bool cap_half) {
    if (cap_half && n < 2)
        throw ParameterOutOfRange("cap_half needs at least 2 weights");
    std::uniform_int_distribution<int> num(1, 12);
    for (;;) {
        std::vector<long> nums(n);
        long sum = 0;
        for (auto& v : nums) {
            v = num(rng);
            sum += v;
        }
        if (cap_half) {
            bool ok = true;
            for (long v : nums)
                if (2 * v > sum) ok = false;
            if (!ok) continue;
        }
        std::vector<Rational> w;
        w.reserve(n);
        for (long v : nums) w.emplace_back(v, sum);
        for (auto& q : w) q.canonicalize();
        return w;
    }
}

StateAlgebra random_multiblock_algebra(std::mt19937_64& rng, int max_blocks, int max_size,
                                       bool cap_half) {
    std::uniform_int_distribution<int> nb(1, max_blocks);
    std::uniform_int_distribution<int> ns(1, max_size);
    int blocks, total;
    std::vector<int> sizes;
    do {
        blocks = nb(rng);
        sizes.assign(blocks, 0);
        total = 0;
        for (auto& s : sizes) {
            s = ns(rng);
            total += s;
        }
        // a single minimal projection is the whole unit: incompatible with the
        // half-weight cap
    } while (cap_half && total < 2);
    auto w = random_weights(rng, total, cap_half);
    std::vector<MatrixBlock> mb;
    int at = 0;
    for (int s : sizes) {
        MatrixBlock b;
        b.size = s;
        b.weights.assign(w.begin() + at, w.begin() + at + s);
        at += s;
        mb.push_back(std::move(b));
    }
    return StateAlgebra::matrix_blocks(std::move(mb));
}

namespace {

struct Suite {
    SuiteResult result;
    void check(bool ok, const std::string& what) {
        if (ok) {
            ++result.passed;
        } else {
            ++result.failed;
            if (result.failures.size() < 10) result.failures.push_back(what);
        }
    }
};

std::string describe_weights(const std::vector<Rational>& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "(") << to_string(w[i]);
    os << ")";
    return os.str();
}

SuiteResult suite_closed_form_table() {
    Suite s;
    s.result.name = "closed_form_table";
    for (int n = 2; n <= 8; ++n)
        s.check(ef_exact(make_uniform(n)) == ExpansionFactor::of(Rational(n - 1)),
                "ef^2(C^" + std::to_string(n) + ") != n-1");
    for (int n = 2; n <= 5; ++n)
        s.check(ef_exact(make_trace(n)) == ExpansionFactor::of(Rational(n * n - 1)),
                "ef^2(M_" + std::to_string(n) + ",tr) != n^2-1");
    return s.result;
}

SuiteResult suite_oracle_equivalence(std::mt19937_64& rng, int trials, bool corrupt) {
    Suite s;
    s.result.name = "oracle_equivalence";
    std::uniform_int_distribution<int> nc(2, 6), nm(2, 4);
    for (int t = 0; t < trials; ++t) {
        auto w = random_weights(rng, nc(rng));
        ExpansionFactor closed = ef_commutative_closed(w);
        if (corrupt) closed.ef2 += 1;
        s.check(ef_exact(StateAlgebra::commutative(w)) == closed,
                "commutative mismatch at " + describe_weights(w));
    }
    for (int t = 0; t < trials; ++t) {
        auto w = random_weights(rng, nm(rng));
        ExpansionFactor closed = ef_matrix_closed(w);
        if (corrupt) closed.ef2 += 1;
        s.check(ef_exact(StateAlgebra::single_block(w)) == closed,
                "matrix mismatch at " + describe_weights(w));
    }
    return s.result;
}

SuiteResult suite_lemma32(std::mt19937_64& rng, int trials) {
    Suite s;
    s.result.name = "lemma32_bound";
    for (int t = 0; t < trials; ++t) {
        StateAlgebra a = random_multiblock_algebra(rng, 3, 2, /*cap_half=*/true);
        ExpansionFactor e = ef_exact(a);
        s.check(e.infinite || e.ef2 >= 1, "ef^2 < 1 for a small-projection algebra");
    }
    return s.result;
}

SuiteResult suite_lemma24(std::mt19937_64& rng, int trials) {
    Suite s;
    s.result.name = "lemma24_monotonicity";
    std::uniform_int_distribution<int> nd(2, 4);
    for (int t = 0; t < trials; ++t) {
        auto w = random_weights(rng, nd(rng));
        ExpansionFactor full = ef_exact(StateAlgebra::single_block(w));
        ExpansionFactor diag = ef_exact(StateAlgebra::commutative(w));
        s.check(full.infinite || (!diag.infinite && full.ef2 >= diag.ef2),
                "ef(M_n,w) < ef(C^n,w) at " + describe_weights(w));
    }
    return s.result;
}

SuiteResult suite_example34iv(std::mt19937_64& rng, int trials) {
    Suite s;
    s.result.name = "example34iv_identity";
    std::uniform_int_distribution<int> den(3, 400);
    for (int t = 0; t < trials; ++t) {
        int q = den(rng);
        std::uniform_int_distribution<int> num(q / 2 + 1, q - 1);
        Rational lam(num(rng), q);
        lam.canonicalize();
        if (lam <= Rational(1, 2) || lam >= 1) {
            --t;
            continue;
        }
        Rational l2 = lam * lam, l3 = l2 * lam, l4 = l3 * lam;
        Rational expect = (lam + l2 - 4 * l3 + 2 * l4) / (1 - 3 * lam + l2 + 4 * l3 - 2 * l4);
        s.check(ef_matrix_closed({lam, 1 - lam}).ef2 == expect,
                "3.4iv identity fails at lambda=" + to_string(lam));
    }
    return s.result;
}

SuiteResult suite_group_laws(std::mt19937_64& rng) {
    Suite s;
    s.result.name = "group_laws";
    std::vector<ClosedSubgroup> pool = {ClosedSubgroup::full(), ClosedSubgroup::trivial()};
    for (const auto& b : {Rational(2), Rational(3), Rational(4), Rational(8), Rational(9),
                          Rational(6), Rational(4, 9), Rational(8, 27)})
        for (long k : {1L, 2L, 3L, 4L}) pool.push_back(ClosedSubgroup::log_cyclic(b, k));

    for (const auto& g : pool) s.check(intersect(g, g) == g, "idempotence: " + g.to_string());

    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    auto divides = [](double big_gen, double small_gen) {
        double r = small_gen / big_gen;
        return std::abs(r - std::round(r)) <= 1e-10 * std::abs(r);
    };
    for (int t = 0; t < 200; ++t) {
        const auto& a = pool[pick(rng)];
        const auto& b = pool[pick(rng)];
        const auto& c = pool[pick(rng)];
        s.check(intersect(a, b) == intersect(b, a),
                "commutativity: " + a.to_string() + " vs " + b.to_string());
        s.check(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)),
                "associativity: " + a.to_string() + "," + b.to_string() + "," + c.to_string());
        ClosedSubgroup i = intersect(a, b);
        if (i.kind() == ClosedSubgroup::Kind::LogCyclic) {
            for (const auto* op : {&a, &b})
                if (op->kind() == ClosedSubgroup::Kind::LogCyclic)
                    s.check(divides(op->generator(), i.generator()),
                            "generator divisibility: " + op->to_string() + " vs " + i.to_string());
        }
    }
    return s.result;
}

SuiteResult suite_eq23_reduction(std::mt19937_64& rng, int trials) {
    Suite s;
    s.result.name = "eq23_reduction";
    std::uniform_int_distribution<int> nd(2, 5);
    for (int t = 0; t < trials; ++t) {
        auto w = random_weights(rng, nd(rng));
        ClosedSubgroup all = modular_invariant_group(StateAlgebra::single_block(w));
        // Ratios to the first weight only.
        ClosedSubgroup first = ClosedSubgroup::full();
        for (size_t i = 1; i < w.size(); ++i) {
            if (w[i] == w[0]) continue;
            first = intersect(first, ClosedSubgroup::log_cyclic(w[0] / w[i], 1));
        }
        s.check(all == first, "ratio-to-first reduction differs at " + describe_weights(w));
    }
    return s.result;
}

SuiteResult suite_equivariant_dimension(std::mt19937_64& rng, int trials) {
    Suite s;
    s.result.name = "equivariant_dimension";
    for (int t = 0; t < trials; ++t) {
        StateAlgebra a = random_multiblock_algebra(rng, 3, 3);
        GnsSpace g = build_gns(a);
        EquivariantBasis eb = equivariant_basis(g);
        long expect = 0;
        for (const auto& b : a.blocks) expect += static_cast<long>(b.size) * b.size;
        s.check(static_cast<long>(eb.vectors.size()) == expect, "dimension law violated");
        for (const auto& v : eb.vectors)
            s.check(is_equivariant(g, v), "basis vector fails re-substitution");
        s.check(psd_pivots(eb.corner_gram), "corner Gram not PSD");
    }
    return s.result;
}

SuiteResult suite_modular(std::mt19937_64& rng, int trials) {
    Suite s;
    s.result.name = "modular";
    std::uniform_real_distribution<double> tdist(-10.0, 10.0);
    std::uniform_real_distribution<double> cdist(-1.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        StateAlgebra a = random_multiblock_algebra(rng, 2, 3);
        ModularFlow flow = build_modular(a);
        s.check(delta_construction_mismatch(flow) <= 1e-10, "S*S differs from the diagonal form");

        AlgebraElement x = AlgebraElement::zero(a);
        for (auto& blk : x.blocks)
            for (auto& e : blk) e = std::complex<double>(cdist(rng), cdist(rng));
        double t1 = tdist(rng), t2 = tdist(rng);
        // State invariance.
        std::complex<double> before = state_value(a, x);
        std::complex<double> after = state_value(a, sigma_t(flow, t1, x));
        s.check(std::abs(before - after) <= 1e-10, "state not sigma-invariant");
        // Group property.
        AlgebraElement lhs = sigma_t(flow, t1 + t2, x);
        AlgebraElement rhs = sigma_t(flow, t1, sigma_t(flow, t2, x));
        s.check(lhs.max_abs_diff(rhs) <= 1e-9, "sigma_{s+t} != sigma_s sigma_t");
        // The computed invariant group passes its own witness test.
        try {
            witness_check(flow, modular_invariant_group(a), 1000 + t);
            s.check(true, "");
        } catch (const WitnessFailure& e) {
            s.check(false, e.what());
        }
    }
    return s.result;
}

SuiteResult suite_fock(std::mt19937_64& rng) {
    Suite s;
    s.result.name = "fock";
    std::uniform_int_distribution<int> len(1, 4);
    std::uniform_real_distribution<double> tdist(-5.0, 5.0);
    std::uniform_real_distribution<double> cdist(-1.0, 1.0);
    auto random_small = [&rng](std::mt19937_64& r) {
        std::uniform_int_distribution<int> which(0, 2);
        switch (which(r)) {
            case 0:
                return make_uniform(2);
            case 1:
                return make_trace(2);
            default:
                return random_multiblock_algebra(r, 2, 2);
        }
    };
    for (int t = 0; t < 10; ++t) {
        StateAlgebra a1 = random_small(rng), a2 = random_small(rng);
        int L = len(rng);
        TruncatedFock f = build_fock(a1, a2, L);
        long expect = expected_fock_dimension(f.comp[0].ho_dim, f.comp[1].ho_dim, L);
        s.check(f.dim() == expect, "dimension formula violated");
    }
    for (int t = 0; t < 20; ++t) {
        StateAlgebra a1 = random_small(rng), a2 = random_small(rng);
        TruncatedFock f = build_fock(a1, a2, 2);
        int owner = t % 2;
        AlgebraElement x = AlgebraElement::zero(owner == 0 ? a1 : a2);
        for (auto& blk : x.blocks)
            for (auto& e : blk) e = std::complex<double>(cdist(rng), cdist(rng));
        double tt = tdist(rng);
        s.check(theorem1_residual(f, owner, x, tt) <= 1e-9, "Theorem 1 residual too large");
    }
    // Freeness: alternating centered words have vanishing moments.
    for (int t = 0; t < 10; ++t) {
        StateAlgebra a1 = random_small(rng), a2 = random_small(rng);
        TruncatedFock f = build_fock(a1, a2, 4);
        auto centered = [&](const StateAlgebra& a) {
            AlgebraElement x = AlgebraElement::zero(a);
            for (auto& blk : x.blocks)
                for (auto& e : blk) e = std::complex<double>(cdist(rng), cdist(rng));
            std::complex<double> mean = state_value(a, x);
            for (size_t k = 0; k < a.blocks.size(); ++k) {
                int n = a.blocks[k].size;
                for (int i = 0; i < n; ++i) x.blocks[k][i * n + i] -= mean;
            }
            return x;
        };
        AlgebraElement xa = centered(a1), xb = centered(a2);
        s.check(std::abs(free_moment(f, {{0, xa}, {1, xb}})) <= 1e-12, "phi(ab) != 0");
        s.check(std::abs(free_moment(f, {{0, xa}, {1, xb}, {0, xa}, {1, xb}})) <= 1e-12,
                "phi(abab) != 0");
    }
    return s.result;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    auto n = [&](int base) { return std::max(1, static_cast<int>(base * opt.trial_scale)); };
    std::vector<SuiteResult> out;
    out.push_back(suite_closed_form_table());
    out.push_back(suite_oracle_equivalence(rng, n(100), opt.inject_corrupt_closed_form));
    out.push_back(suite_lemma32(rng, n(500)));
    out.push_back(suite_lemma24(rng, n(100)));
    out.push_back(suite_example34iv(rng, n(20)));
    out.push_back(suite_group_laws(rng));
    out.push_back(suite_eq23_reduction(rng, n(100)));
    out.push_back(suite_equivariant_dimension(rng, n(50)));
    out.push_back(suite_modular(rng, n(50)));
    out.push_back(suite_fock(rng));
    return out;
}

}  // namespace freefactor
