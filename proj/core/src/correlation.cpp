#include "pathgcn/correlation.hpp"

#include <cmath>
#include <limits>

#include "pathgcn/error.hpp"

namespace pathgcn {

namespace {

double mean(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc / static_cast<double>(x.size());
}

// Gauss-Jordan inverse with partial pivoting.
std::vector<std::vector<double>> invert(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-12)
            throw AnalysisError("correlation matrix is singular");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const double d = a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

double t_statistic(double r, std::size_t df) {
    const double denom = 1.0 - r * r;
    if (denom <= 0.0)
        return r >= 0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
    return r * std::sqrt(static_cast<double>(df) / denom);
}

}  // namespace

PearsonResult pearson_r(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ShapeError("pearson_r: sequence lengths differ");
    const std::size_t n = x.size();
    if (n < 3) throw ConfigError("pearson_r: need at least 3 samples");
    const double mx = mean(x), my = mean(y);
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
    }
    if (vx == 0.0 || vy == 0.0)
        throw AnalysisError("pearson_r: correlation undefined for a constant sequence");
    const double r = cov / std::sqrt(vx * vy);
    return {r, t_statistic(r, n - 2)};
}

double partial_correlation(const std::vector<std::vector<double>>& columns, std::size_t i,
                           std::size_t j) {
    const std::size_t k = columns.size();
    if (k < 3) throw ConfigError("partial_correlation: need at least 3 columns");
    if (i >= k || j >= k) throw ConfigError("partial_correlation: column index out of range");
    if (i == j) return 1.0;
    const std::size_t n = columns[0].size();
    if (n <= k) throw ConfigError("partial_correlation: need more rows than columns");

    std::vector<std::vector<double>> corr(k, std::vector<double>(k, 1.0));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            const double r = pearson_r(columns[a], columns[b]).r;
            corr[a][b] = corr[b][a] = r;
        }
    const auto p = invert(corr);
    return -p[i][j] / std::sqrt(p[i][i] * p[j][j]);
}

CorrelationReport correlation_report(const std::vector<std::vector<double>>& metric_columns,
                                     const std::vector<std::string>& metric_names,
                                     const std::vector<double>& target) {
    if (metric_columns.size() != metric_names.size())
        throw ConfigError("correlation_report: names and columns differ in count");
    CorrelationReport report;
    report.sample_count = target.size();

    // full table with the target appended; controls for metric i are all
    // other metrics
    std::vector<std::vector<double>> table = metric_columns;
    table.push_back(target);
    const std::size_t target_idx = table.size() - 1;
    const std::size_t controls = metric_columns.size() - 1;

    for (std::size_t i = 0; i < metric_columns.size(); ++i) {
        CorrelationRow row;
        row.metric = metric_names[i];
        const auto biv = pearson_r(metric_columns[i], target);
        row.bivariate_r = biv.r;
        row.bivariate_t = biv.t;
        row.partial_r = partial_correlation(table, i, target_idx);
        row.partial_t = t_statistic(row.partial_r, target.size() - 2 - controls);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace pathgcn
