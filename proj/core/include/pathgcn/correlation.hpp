#pragma once

#include <span>
#include <string>
#include <vector>

namespace pathgcn {

struct PearsonResult {
    double r;
    double t;  // r * sqrt((n-2)/(1-r^2)); +/-inf for a perfect fit
};

PearsonResult pearson_r(std::span<const double> x, std::span<const double> y);

// Partial correlation of columns i and j controlling for all remaining
// columns: -P[i][j]/sqrt(P[i][i]*P[j][j]) with P the inverse of the full
// correlation matrix. i == j returns 1 by convention.
double partial_correlation(const std::vector<std::vector<double>>& columns, std::size_t i,
                           std::size_t j);

struct CorrelationRow {
    std::string metric;
    double bivariate_r;
    double bivariate_t;
    double partial_r;
    double partial_t;
};

struct CorrelationReport {
    std::vector<CorrelationRow> rows;
    std::size_t sample_count = 0;
};

// Bivariate and partial correlation of each structure metric against the
// last column (the target). Partial t uses df = n - 2 - #controls.
CorrelationReport correlation_report(const std::vector<std::vector<double>>& metric_columns,
                                     const std::vector<std::string>& metric_names,
                                     const std::vector<double>& target);

}  // namespace pathgcn
