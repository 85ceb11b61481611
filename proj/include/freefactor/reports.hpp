#ifndef FREEFACTOR_REPORTS_HPP
#define FREEFACTOR_REPORTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "freefactor/classify.hpp"

namespace freefactor {

// Rectangular CSV payload; floats are serialized with 12 significant digits,
// rationals as "p/q".
struct CsvSeries {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;
    void write_file(const std::string& path) const;
};

std::string format_double(double v);

// ef(M_2, phi_lambda) for N rational lambdas evenly spaced on [1/2, 99/100].
// Columns: lambda, ef.
CsvSeries figure1_series(int samples);

// N x N rational grid on [1/2, 99/100]^2. Columns: lambda, mu, in_region,
// boundary_mu (the per-row boundary of ef(lambda) ef(mu) = 1, bisected to
// 1e-6; "nan" when the row has no crossing).
CsvSeries figure2_series(int grid);

// Exact bisection of ef(lambda)^2 ef(mu)^2 = 1 in mu over [1/2, 99/100];
// nullopt when there is no sign change.
std::optional<Rational> figure2_boundary(const Rational& lambda);

// Worker cap for grid sweeps: FREEFACTOR_THREADS, else hardware concurrency.
int worker_count();

std::string render_report(const FactorReport& rep);

}  // namespace freefactor

#endif
