#include "freefactor/gns.hpp"

#include <map>

namespace freefactor {

GnsSpace build_gns(const StateAlgebra& a) {
    if (a.is_diffuse()) throw DiffuseUnsupported("GNS construction needs matrix blocks");
    validate(a);
    GnsSpace g;
    g.algebra = a;
    for (int k = 0; k < static_cast<int>(a.blocks.size()); ++k) {
        g.block_offset.push_back(g.dim);
        int n = a.blocks[k].size;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                g.basis.push_back(GnsIndex{k, i, j});
                g.norm2.push_back(a.blocks[k].weights[j]);
                g.xi_overlap.push_back(i == j ? a.blocks[k].weights[i] : Rational(0));
            }
        g.dim += n * n;
    }
    return g;
}

std::optional<int> left_unit_action(const GnsSpace& g, int block, int p, int q, int u) {
    const GnsIndex& b = g.basis[u];
    if (b.block != block || b.row != q) return std::nullopt;
    return g.index_of(block, p, b.col);
}

std::optional<int> right_unit_action(const GnsSpace& g, int block, int p, int q, int u) {
    const GnsIndex& b = g.basis[u];
    if (b.block != block || b.col != p) return std::nullopt;
    return g.index_of(block, b.row, q);
}

EquivariantBasis equivariant_basis(const GnsSpace& g) {
    const int d = g.dim;
    auto col = [d](int u, int v) { return u * d + v; };

    // One intertwining equation per matrix unit and target tensor pair.
    std::vector<SparseVec> rows;
    for (int k = 0; k < static_cast<int>(g.algebra.blocks.size()); ++k) {
        int n = g.algebra.blocks[k].size;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                std::map<std::pair<int, int>, std::map<int, Rational>> eq;
                for (int j = 0; j < n; ++j) {
                    int tgt = g.index_of(k, p, j);
                    int src = g.index_of(k, q, j);
                    for (int v = 0; v < d; ++v) eq[{tgt, v}][col(src, v)] += 1;
                }
                for (int i = 0; i < n; ++i) {
                    int tgt = g.index_of(k, i, q);
                    int src = g.index_of(k, i, p);
                    for (int u = 0; u < d; ++u) eq[{u, tgt}][col(u, src)] -= 1;
                }
                for (auto& [key, terms] : eq) {
                    SparseVec r;
                    for (auto& [c, val] : terms)
                        if (val != 0) r.emplace_back(c, val);
                    if (!r.empty()) rows.push_back(std::move(r));
                }
            }
    }

    EquivariantBasis eb;
    eb.gns_dim = d;
    eb.vectors = nullspace_sparse(rows, d * d);
    const int m = static_cast<int>(eb.vectors.size());

    // Pairing and corner Gram via P_Ho = I - P_xi expansion:
    // <PX,PY> = <X,Y> - sum_v t_v(X)t_v(Y) N_v - sum_u r_u(X)r_u(Y) N_u
    //           + sigma(X)sigma(Y), with s_u = <e_u,xi>.
    struct Parts {
        std::map<int, Rational> t, r;
        Rational sigma{0};
    };
    std::vector<Parts> parts(m);
    for (int i = 0; i < m; ++i) {
        for (const auto& [c, val] : eb.vectors[i]) {
            int u = c / d, v = c % d;
            if (g.xi_overlap[u] != 0) parts[i].t[v] += val * g.xi_overlap[u];
            if (g.xi_overlap[v] != 0) parts[i].r[u] += val * g.xi_overlap[v];
            if (g.xi_overlap[u] != 0 && g.xi_overlap[v] != 0)
                parts[i].sigma += val * g.xi_overlap[u] * g.xi_overlap[v];
        }
        eb.pairing.push_back(parts[i].sigma);
    }

    eb.corner_gram.assign(m, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Rational ip(0);
            {
                const auto& x = eb.vectors[i];
                const auto& y = eb.vectors[j];
                size_t a = 0, b = 0;
                while (a < x.size() && b < y.size()) {
                    if (x[a].first < y[b].first)
                        ++a;
                    else if (y[b].first < x[a].first)
                        ++b;
                    else {
                        int u = x[a].first / d, v = x[a].first % d;
                        ip += x[a].second * y[b].second * g.norm2[u] * g.norm2[v];
                        ++a;
                        ++b;
                    }
                }
            }
            Rational acc = ip;
            for (const auto& [v, tv] : parts[i].t) {
                auto it = parts[j].t.find(v);
                if (it != parts[j].t.end()) acc -= tv * it->second * g.norm2[v];
            }
            for (const auto& [u, ru] : parts[i].r) {
                auto it = parts[j].r.find(u);
                if (it != parts[j].r.end()) acc -= ru * it->second * g.norm2[u];
            }
            acc += parts[i].sigma * parts[j].sigma;
            eb.corner_gram[i][j] = acc;
            eb.corner_gram[j][i] = acc;
        }
    return eb;
}

bool is_equivariant(const GnsSpace& g, const SparseVec& x) {
    const int d = g.dim;
    for (int k = 0; k < static_cast<int>(g.algebra.blocks.size()); ++k) {
        int n = g.algebra.blocks[k].size;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                std::map<std::pair<int, int>, Rational> diff;
                for (const auto& [c, val] : x) {
                    int u = c / d, v = c % d;
                    if (auto lu = left_unit_action(g, k, p, q, u)) diff[{*lu, v}] += val;
                    if (auto rv = right_unit_action(g, k, p, q, v)) diff[{u, *rv}] -= val;
                }
                for (const auto& [key, val] : diff)
                    if (val != 0) return false;
            }
    }
    return true;
}

}  // namespace freefactor
