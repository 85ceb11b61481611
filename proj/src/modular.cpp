#include "freefactor/modular.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace freefactor {

AlgebraElement AlgebraElement::zero(const StateAlgebra& a) {
    AlgebraElement x;
    for (const auto& b : a.blocks)
        x.blocks.emplace_back(static_cast<size_t>(b.size) * b.size, std::complex<double>(0));
    return x;
}

AlgebraElement AlgebraElement::identity(const StateAlgebra& a) {
    AlgebraElement x = zero(a);
    for (size_t k = 0; k < a.blocks.size(); ++k) {
        int n = a.blocks[k].size;
        for (int i = 0; i < n; ++i) x.blocks[k][i * n + i] = 1.0;
    }
    return x;
}

AlgebraElement AlgebraElement::matrix_unit(const StateAlgebra& a, int block, int i, int j) {
    AlgebraElement x = zero(a);
    x.blocks[block][i * a.blocks[block].size + j] = 1.0;
    return x;
}

std::complex<double>& AlgebraElement::at(const StateAlgebra& a, int block, int i, int j) {
    return blocks[block][i * a.blocks[block].size + j];
}

double AlgebraElement::max_abs_diff(const AlgebraElement& o) const {
    double m = 0;
    for (size_t k = 0; k < blocks.size(); ++k)
        for (size_t e = 0; e < blocks[k].size(); ++e)
            m = std::max(m, std::abs(blocks[k][e] - o.blocks[k][e]));
    return m;
}

std::complex<double> state_value(const StateAlgebra& a, const AlgebraElement& x) {
    std::complex<double> v(0);
    for (size_t k = 0; k < a.blocks.size(); ++k) {
        int n = a.blocks[k].size;
        for (int i = 0; i < n; ++i)
            v += to_double(a.blocks[k].weights[i]) * x.blocks[k][i * n + i];
    }
    return v;
}

ModularFlow build_modular(const StateAlgebra& a) {
    if (a.is_diffuse()) throw DiffuseUnsupported("modular flow needs matrix blocks");
    ModularFlow f;
    f.algebra = a;
    f.gns = build_gns(a);
    const int d = f.gns.dim;
    for (int u = 0; u < d; ++u) {
        const GnsIndex& b = f.gns.basis[u];
        f.delta_eig.push_back(f.gns.weight(b.block, b.row) / f.gns.weight(b.block, b.col));
    }

    // S(e_{ij}-hat) = e_{ji}-hat, antilinear; realified coordinates (x,y) per
    // basis vector, x components first. S* = M^{-1} S^T M with the diagonal
    // GNS metric M.
    std::vector<std::vector<double>> S(2 * d, std::vector<double>(2 * d, 0.0));
    for (int u = 0; u < d; ++u) {
        const GnsIndex& b = f.gns.basis[u];
        int up = f.gns.index_of(b.block, b.col, b.row);
        S[up][u] = 1.0;          // x -> x
        S[d + up][d + u] = -1.0;  // y -> -y
    }
    std::vector<double> metric(2 * d);
    for (int u = 0; u < d; ++u) metric[u] = metric[d + u] = to_double(f.gns.norm2[u]);
    f.delta_tomita.assign(2 * d, std::vector<double>(2 * d, 0.0));
    // (S*S)[i][j] = sum_k (metric[k]/metric[i]) S[k][i] S[k][j]
    for (int i = 0; i < 2 * d; ++i)
        for (int j = 0; j < 2 * d; ++j) {
            double acc = 0;
            for (int k = 0; k < 2 * d; ++k) acc += metric[k] / metric[i] * S[k][i] * S[k][j];
            f.delta_tomita[i][j] = acc;
        }
    return f;
}

AlgebraElement sigma_t(const ModularFlow& flow, double t, const AlgebraElement& x) {
    AlgebraElement y = x;
    for (size_t k = 0; k < flow.algebra.blocks.size(); ++k) {
        int n = flow.algebra.blocks[k].size;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double ratio =
                    to_double(flow.algebra.blocks[k].weights[i] / flow.algebra.blocks[k].weights[j]);
                std::complex<double> phase = std::exp(std::complex<double>(0, t * std::log(ratio)));
                y.blocks[k][i * n + j] *= phase;
            }
    }
    return y;
}

double delta_construction_mismatch(const ModularFlow& flow) {
    const int d = flow.gns.dim;
    double m = 0;
    for (int i = 0; i < 2 * d; ++i)
        for (int j = 0; j < 2 * d; ++j) {
            double expect = (i == j) ? to_double(flow.delta_eig[i % d]) : 0.0;
            m = std::max(m, std::abs(flow.delta_tomita[i][j] - expect));
        }
    return m;
}

double sigma_defect(const ModularFlow& flow, double t) {
    double m = 0;
    for (size_t k = 0; k < flow.algebra.blocks.size(); ++k) {
        int n = flow.algebra.blocks[k].size;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double ratio =
                    to_double(flow.algebra.blocks[k].weights[i] / flow.algebra.blocks[k].weights[j]);
                m = std::max(m, std::abs(std::exp(std::complex<double>(0, t * std::log(ratio))) -
                                         std::complex<double>(1)));
            }
    }
    return m;
}

namespace {

[[noreturn]] void fail(double t, const std::string& what) {
    std::ostringstream os;
    os << "WitnessFailure at t=" << t << ": " << what;
    throw WitnessFailure(os.str());
}

}  // namespace

void witness_check(const ModularFlow& flow, const ClosedSubgroup& g, unsigned seed) {
    using K = ClosedSubgroup::Kind;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> tdist(0.3, 20.0);
    switch (g.kind()) {
        case K::Full:
            for (int r = 0; r < 10; ++r) {
                double t = tdist(rng);
                if (sigma_defect(flow, t) > 1e-9) fail(t, "sigma_t is not the identity");
            }
            break;
        case K::Trivial:
            for (int r = 0; r < 10; ++r) {
                double t = tdist(rng);
                if (sigma_defect(flow, t) < 1e-2) fail(t, "sigma_t is unexpectedly the identity");
            }
            break;
        case K::LogCyclic: {
            double t0 = g.generator();
            if (sigma_defect(flow, t0) > 1e-9) fail(t0, "sigma at the generator moves a unit");
            for (double frac : {2.0, 3.0}) {
                double t = t0 / frac;
                if (sigma_defect(flow, t) < 1e-2) fail(t, "sigma inside the period is the identity");
            }
            break;
        }
    }
}

}  // namespace freefactor
