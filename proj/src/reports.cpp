#include "freefactor/reports.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace freefactor {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string CsvSeries::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < headers.size(); ++i) os << (i ? "," : "") << headers[i];
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    return os.str();
}

void CsvSeries::write_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << to_string();
    if (!out) throw IoError("write failed for " + path);
}

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("FREEFACTOR_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

namespace {

// Rational grid point i of N on [1/2, 99/100].
Rational grid_point(int i, int n) {
    return Rational(1, 2) + Rational(49, 100) * Rational(i, n - 1);
}

Rational ef2_phi(const Rational& lambda) {
    return ef_matrix_closed({lambda, 1 - lambda}).ef2;
}

}  // namespace

CsvSeries figure1_series(int samples) {
    if (samples < 2) throw ParameterOutOfRange("figure1 needs at least 2 samples");
    CsvSeries s;
    s.headers = {"lambda", "ef"};
    for (int i = 0; i < samples; ++i) {
        Rational lam = grid_point(i, samples);
        double ef = std::sqrt(to_double(ef2_phi(lam)));
        s.rows.push_back({format_double(to_double(lam)), format_double(ef)});
    }
    return s;
}

std::optional<Rational> figure2_boundary(const Rational& lambda) {
    Rational e2 = ef2_phi(lambda);
    Rational lo(1, 2), hi(99, 100);
    auto inside = [&](const Rational& mu) { return e2 * ef2_phi(mu) >= 1; };
    if (!inside(lo)) return std::nullopt;  // whole row outside
    if (inside(hi)) return std::nullopt;   // no crossing on the grid range
    while (hi - lo > Rational(1, 1000000)) {
        Rational mid = (lo + hi) / 2;
        (inside(mid) ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

CsvSeries figure2_series(int grid) {
    if (grid < 2) throw ParameterOutOfRange("figure2 needs grid >= 2");
    CsvSeries s;
    s.headers = {"lambda", "mu", "in_region", "boundary_mu"};
    std::vector<Rational> pts(grid);
    std::vector<Rational> ef2(grid);
    for (int i = 0; i < grid; ++i) {
        pts[i] = grid_point(i, grid);
        ef2[i] = ef2_phi(pts[i]);
    }
    std::vector<std::string> boundary(grid);
    std::vector<std::vector<char>> in(grid, std::vector<char>(grid));

    int workers = worker_count();
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto run = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= grid) return;
            for (int j = 0; j < grid; ++j) in[i][j] = ef2[i] * ef2[j] >= 1 ? 1 : 0;
            auto b = figure2_boundary(pts[i]);
            boundary[i] = b ? format_double(to_double(*b)) : "nan";
        }
    };
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();

    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            s.rows.push_back({format_double(to_double(pts[i])), format_double(to_double(pts[j])),
                              in[i][j] ? "1" : "0", boundary[i]});
    return s;
}

std::string render_report(const FactorReport& rep) {
    std::ostringstream os;
    os << "hypotheses:\n";
    for (const auto& h : rep.hypothesis_log)
        os << "  [" << (h.pass ? "pass" : "FAIL") << "] " << h.name << " (" << h.detail << ")\n";
    os << "ef^2 values: " << rep.ef1.to_string() << ", " << rep.ef2.to_string() << "\n";
    if (rep.certified) {
        os << "verdict: Certified factor\n";
        os << "T = " << rep.t_invariant->to_string();
        if (rep.t_invariant->kind() == ClosedSubgroup::Kind::LogCyclic)
            os << "  (generator ~ " << format_double(rep.t_invariant->generator()) << ")";
        os << "\n";
        os << "type: " << rep.types->to_string() << "\n";
    } else {
        os << "verdict: Inconclusive: " << rep.reason << "\n";
    }
    return os.str();
}

}  // namespace freefactor
