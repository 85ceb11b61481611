#include "freefactor/ratmat.hpp"

#include <algorithm>
#include <map>

namespace freefactor {

// x + c*y, both sorted sparse.
SparseVec sparse_axpy(const SparseVec& x, const Rational& c, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            Rational v = c * y[j].second;
            if (v != 0) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            Rational v = x[i].second + c * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

// |num*den| proxy for pivot magnitude.
Integer pivot_weight(const Rational& q) {
    Integer w = q.get_num() * q.get_den();
    return w < 0 ? Integer(-w) : w;
}

// Reduce a row against fully reduced pivot rows. Pivot rows have a 1 in their
// pivot column and no entries in any other pivot column, so each subtraction
// removes one pivot-column entry and introduces only free-column entries.
SparseVec reduce_row(SparseVec row, const std::map<int, SparseVec>& pivots) {
    for (;;) {
        bool hit = false;
        for (const auto& [col, val] : row) {
            auto it = pivots.find(col);
            if (it != pivots.end()) {
                row = sparse_axpy(row, -val, it->second);
                hit = true;
                break;
            }
        }
        if (!hit) return row;
    }
}

}  // namespace

std::vector<SparseVec> nullspace_sparse(const std::vector<SparseVec>& rows, int ncols) {
    std::map<int, SparseVec> pivots;  // pivot column -> normalized reduced row
    for (const auto& r : rows) {
        SparseVec red = reduce_row(r, pivots);
        if (red.empty()) continue;
        size_t best = 0;
        Integer bw = pivot_weight(red[0].second);
        for (size_t i = 1; i < red.size(); ++i) {
            Integer w = pivot_weight(red[i].second);
            if (w > bw) {
                bw = w;
                best = i;
            }
        }
        int pcol = red[best].first;
        Rational inv = 1 / red[best].second;
        for (auto& [c, v] : red) v *= inv;
        for (auto& [c, prow] : pivots) {
            Rational coeff(0);
            for (const auto& [cc, vv] : prow)
                if (cc == pcol) {
                    coeff = vv;
                    break;
                }
            if (coeff != 0) prow = sparse_axpy(prow, -coeff, red);
        }
        pivots.emplace(pcol, std::move(red));
    }

    std::vector<SparseVec> basis;
    std::vector<char> is_pivot(ncols, 0);
    for (const auto& [c, r] : pivots) is_pivot[c] = 1;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        for (const auto& [pcol, prow] : pivots) {
            for (const auto& [c, val] : prow)
                if (c == f) {
                    v.emplace_back(pcol, -val);
                    break;
                }
        }
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> nullspace_dense(RatMatrix m) {
    int nrows = static_cast<int>(m.size());
    int ncols = nrows ? static_cast<int>(m[0].size()) : 0;
    std::vector<SparseVec> rows;
    rows.reserve(nrows);
    for (int i = 0; i < nrows; ++i) {
        SparseVec r;
        for (int j = 0; j < ncols; ++j)
            if (m[i][j] != 0) r.emplace_back(j, m[i][j]);
        rows.push_back(std::move(r));
    }
    auto sp = nullspace_sparse(rows, ncols);
    std::vector<std::vector<Rational>> out;
    for (const auto& v : sp) {
        std::vector<Rational> d(ncols, Rational(0));
        for (const auto& [c, val] : v) d[c] = val;
        out.push_back(std::move(d));
    }
    return out;
}

std::optional<std::vector<Rational>> solve_dense(RatMatrix m, std::vector<Rational> rhs) {
    int nrows = static_cast<int>(m.size());
    int ncols = nrows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col(nrows, -1);
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int sel = -1;
        Integer bw;
        for (int r = rank; r < nrows; ++r) {
            if (m[r][col] == 0) continue;
            Integer w = m[r][col].get_num() * m[r][col].get_den();
            if (w < 0) w = -w;
            if (sel < 0 || w > bw) {
                sel = r;
                bw = w;
            }
        }
        if (sel < 0) continue;
        std::swap(m[sel], m[rank]);
        std::swap(rhs[sel], rhs[rank]);
        Rational inv = 1 / m[rank][col];
        for (int j = col; j < ncols; ++j) m[rank][j] *= inv;
        rhs[rank] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int j = col; j < ncols; ++j) m[r][j] -= f * m[rank][j];
            rhs[r] -= f * rhs[rank];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < nrows; ++r)
        if (rhs[r] != 0) return std::nullopt;
    std::vector<Rational> x(ncols, Rational(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];
    return x;
}

bool psd_pivots(RatMatrix g, std::vector<Rational>* pivots) {
    int n = static_cast<int>(g.size());
    bool psd = true;
    if (pivots) pivots->clear();
    for (int k = 0; k < n; ++k) {
        Rational d = g[k][k];
        if (pivots) pivots->push_back(d);
        if (d == 0) {
            for (int j = k; j < n; ++j)
                if (g[k][j] != 0 || g[j][k] != 0) psd = false;
            continue;
        }
        if (d < 0) psd = false;
        for (int i = k + 1; i < n; ++i) {
            Rational f = g[i][k] / d;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) g[i][j] -= f * g[k][j];
        }
        for (int j = k + 1; j < n; ++j) g[k][j] = 0;
    }
    return psd;
}

}  // namespace freefactor
