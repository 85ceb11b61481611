#include "freefactor/fock.hpp"

#include <cmath>

namespace freefactor {

namespace {

FockComponent build_component(const StateAlgebra& a) {
    FockComponent c;
    c.algebra = a;
    c.gns = build_gns(a);
    c.flow = build_modular(a);
    const int d = c.gns.dim;

    // xi in GNS coordinates.
    std::vector<Rational> xi(d, Rational(0));
    for (int u = 0; u < d; ++u)
        if (c.gns.basis[u].row == c.gns.basis[u].col) xi[u] = 1;

    auto dot = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        Rational s(0);
        for (int u = 0; u < d; ++u)
            if (x[u] != 0 && y[u] != 0) s += x[u] * y[u] * c.gns.norm2[u];
        return s;
    };

    // Exact Gram-Schmidt of the matrix-unit basis against xi and previously
    // accepted vectors. Off-diagonal units pass through untouched; diagonal
    // candidates mix only among themselves, so every accepted vector is a
    // Delta eigenvector.
    std::vector<std::vector<Rational>> accepted;
    std::vector<Rational> eig;
    for (int u = 0; u < d; ++u) {
        std::vector<Rational> cand(d, Rational(0));
        cand[u] = 1;
        Rational overlap = dot(cand, xi);  // <e_u, xi>, ||xi||^2 = 1
        if (overlap != 0)
            for (int w = 0; w < d; ++w) cand[w] -= overlap * xi[w];
        for (const auto& prev : accepted) {
            Rational num = dot(cand, prev), den = dot(prev, prev);
            if (num != 0)
                for (int w = 0; w < d; ++w) cand[w] -= num / den * prev[w];
        }
        bool zero = true;
        for (const auto& v : cand)
            if (v != 0) zero = false;
        if (zero) continue;
        accepted.push_back(cand);
        eig.push_back(c.flow.delta_eig[u]);
    }
    c.ho_dim = static_cast<int>(accepted.size());

    c.on_basis.push_back(std::vector<double>(d));
    for (int u = 0; u < d; ++u) c.on_basis[0][u] = to_double(xi[u]);
    for (int m = 0; m < c.ho_dim; ++m) {
        double nrm = std::sqrt(to_double(dot(accepted[m], accepted[m])));
        std::vector<double> v(d);
        for (int u = 0; u < d; ++u) v[u] = to_double(accepted[m][u]) / nrm;
        c.on_basis.push_back(std::move(v));
        c.log_eig.push_back(std::log(to_double(eig[m])));
    }
    return c;
}

// pi(x) on ON coordinates: A[m][n] = <pi(x) b_n, b_m> / ||b_m||^2 (ON, so 1).
std::vector<std::vector<std::complex<double>>> pi_on_matrix(const FockComponent& c,
                                                            const AlgebraElement& x) {
    const int d = c.gns.dim;
    const int nb = c.ho_dim + 1;
    std::vector<std::vector<std::complex<double>>> A(nb,
                                                     std::vector<std::complex<double>>(nb, 0.0));
    std::vector<double> metric(d);
    for (int u = 0; u < d; ++u) metric[u] = to_double(c.gns.norm2[u]);
    for (int n = 0; n < nb; ++n) {
        // pi(x) b_n in GNS coordinates: pi(x) e_{(k,i,j)} = sum_p x^k_{pi} e_{(k,p,j)}.
        std::vector<std::complex<double>> img(d, 0.0);
        for (int u = 0; u < d; ++u) {
            double coef = c.on_basis[n][u];
            if (coef == 0.0) continue;
            const GnsIndex& b = c.gns.basis[u];
            int nk = c.algebra.blocks[b.block].size;
            for (int p = 0; p < nk; ++p) {
                std::complex<double> xe = x.blocks[b.block][p * nk + b.row];
                if (xe != 0.0) img[c.gns.index_of(b.block, p, b.col)] += coef * xe;
            }
        }
        for (int m = 0; m < nb; ++m) {
            std::complex<double> acc = 0.0;
            for (int u = 0; u < d; ++u) acc += metric[u] * img[u] * c.on_basis[m][u];
            A[m][n] = acc;
        }
    }
    return A;
}

}  // namespace

long expected_fock_dimension(int ho0, int ho1, int max_len) {
    long total = 1;
    long start0 = 1, start1 = 1;  // product over sequences ending at owner 0 / 1
    for (int n = 1; n <= max_len; ++n) {
        long next0 = (n == 1 ? 1L : start1) * ho0;
        long next1 = (n == 1 ? 1L : start0) * ho1;
        start0 = next0;
        start1 = next1;
        total += start0 + start1;
    }
    return total;
}

TruncatedFock build_fock(const StateAlgebra& a1, const StateAlgebra& a2, int max_len,
                         long dim_cap) {
    if (a1.is_diffuse() || a2.is_diffuse())
        throw DiffuseUnsupported("the Fock simulator needs matrix blocks");
    if (max_len < 1) throw ParameterOutOfRange("word length must be >= 1");
    TruncatedFock f;
    f.comp[0] = build_component(a1);
    f.comp[1] = build_component(a2);
    f.L = max_len;
    long expect = expected_fock_dimension(f.comp[0].ho_dim, f.comp[1].ho_dim, max_len);
    if (expect > dim_cap)
        throw TruncationTooLarge("truncated dimension " + std::to_string(expect) +
                                 " exceeds cap " + std::to_string(dim_cap));

    f.words.push_back({});
    size_t level_begin = 0;
    for (int n = 1; n <= max_len; ++n) {
        size_t level_end = f.words.size();
        for (size_t w = level_begin; w < level_end; ++w)
            for (int o = 0; o < 2; ++o) {
                if (!f.words[w].empty() && f.words[w].back().first == o) continue;
                for (int cix = 0; cix < f.comp[o].ho_dim; ++cix) {
                    FockWord nw = f.words[w];
                    nw.emplace_back(o, cix);
                    f.words.push_back(std::move(nw));
                }
            }
        level_begin = level_end;
    }
    for (int i = 0; i < f.dim(); ++i) f.index[f.words[i]] = i;
    return f;
}

double FockVec::norm() const {
    double s = 0;
    for (const auto& c : coeff) s += std::norm(c);
    return std::sqrt(s);
}

FockVec fock_xi(const TruncatedFock& f) {
    FockVec v;
    v.coeff.assign(f.dim(), 0.0);
    v.coeff[0] = 1.0;
    return v;
}

FockVec left_action(const TruncatedFock& f, int owner, const AlgebraElement& x,
                    const FockVec& v) {
    const FockComponent& c = f.comp[owner];
    std::complex<double> c0 = state_value(c.algebra, x);
    AlgebraElement x0 = x;
    for (size_t k = 0; k < c.algebra.blocks.size(); ++k) {
        int n = c.algebra.blocks[k].size;
        for (int i = 0; i < n; ++i) x0.blocks[k][i * n + i] -= c0;
    }
    auto A = pi_on_matrix(c, x0);  // (1+ho) x (1+ho); column 0 = x0-hat

    FockVec out;
    out.coeff.assign(f.dim(), 0.0);
    out.leakage2 = v.leakage2;
    for (int w = 0; w < f.dim(); ++w) {
        std::complex<double> amp = v.coeff[w];
        if (amp == 0.0) continue;
        const FockWord& word = f.words[w];
        out.coeff[w] += amp * c0;  // scalar part of x

        if (!word.empty() && word.front().first == owner) {
            // pi(x0) on the first letter; component 0 contracts to the tail.
            int a = word.front().second;
            FockWord tail(word.begin() + 1, word.end());
            int tail_ix = f.index.at(tail);
            out.coeff[tail_ix] += amp * A[0][a + 1];
            for (int b = 0; b < c.ho_dim; ++b) {
                std::complex<double> u = A[b + 1][a + 1];
                if (u == 0.0) continue;
                FockWord nw;
                nw.emplace_back(owner, b);
                nw.insert(nw.end(), tail.begin(), tail.end());
                out.coeff[f.index.at(nw)] += amp * u;
            }
        } else {
            // prepend x0-hat
            bool fits = static_cast<int>(word.size()) + 1 <= f.L;
            for (int b = 0; b < c.ho_dim; ++b) {
                std::complex<double> u = A[b + 1][0];
                if (u == 0.0) continue;
                if (!fits) {
                    out.leakage2 += std::norm(amp * u);
                    continue;
                }
                FockWord nw;
                nw.emplace_back(owner, b);
                nw.insert(nw.end(), word.begin(), word.end());
                out.coeff[f.index.at(nw)] += amp * u;
            }
        }
    }
    return out;
}

FockVec delta_action(const TruncatedFock& f, double t, const FockVec& v) {
    FockVec out = v;
    for (int w = 0; w < f.dim(); ++w) {
        if (out.coeff[w] == 0.0) continue;
        double logsum = 0;
        for (const auto& [o, cix] : f.words[w]) logsum += f.comp[o].log_eig[cix];
        out.coeff[w] *= std::exp(std::complex<double>(0, t * logsum));
    }
    return out;
}

double theorem1_residual(const TruncatedFock& f, int owner, const AlgebraElement& x, double t) {
    // sigma_t(x) = Delta^{it} x Delta^{-it}; applied to the fixed vector xi the
    // right factor drops out.
    FockVec lhs = delta_action(f, t, left_action(f, owner, x, fock_xi(f)));
    AlgebraElement xs = sigma_t(f.comp[owner].flow, t, x);
    FockVec rhs = left_action(f, owner, xs, fock_xi(f));
    double s = 0;
    for (int w = 0; w < f.dim(); ++w) s += std::norm(lhs.coeff[w] - rhs.coeff[w]);
    return std::sqrt(s);
}

std::complex<double> free_moment(const TruncatedFock& f,
                                 const std::vector<std::pair<int, AlgebraElement>>& word) {
    FockVec v = fock_xi(f);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = left_action(f, it->first, it->second, v);
    if (std::sqrt(v.leakage2) > 1e-12)
        throw TruncationLeakage("truncation leakage " + std::to_string(std::sqrt(v.leakage2)));
    return v.coeff[0];
}

}  // namespace freefactor
