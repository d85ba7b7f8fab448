#include "pathgcn/gs_model.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pathgcn/error.hpp"

namespace pathgcn {

namespace {

constexpr std::array<const char*, 4> kColumnNames = {"intercept", "n_vertices", "n_edges",
                                                     "avg_degree"};

// Gaussian elimination with partial pivoting. The normal matrix mixes
// columns of wildly different magnitudes (counts up to 1e6 against degrees
// near 1), so it is symmetrically equilibrated to a unit diagonal first;
// a pivot that collapses after equilibration names the dependent column.
std::array<double, 4> solve_4x4(std::array<std::array<double, 4>, 4> a, std::array<double, 4> b) {
    constexpr int n = 4;
    std::array<double, 4> d{};
    for (int i = 0; i < n; ++i) {
        if (!(a[i][i] > 0.0))
            throw FitError(std::string("least squares: design is rank deficient, column '") +
                           kColumnNames[i] + "' is dependent");
        d[i] = 1.0 / std::sqrt(a[i][i]);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] *= d[i] * d[j];
        b[i] *= d[i];
    }
    std::array<int, 4> col_of = {0, 1, 2, 3};
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-10)
            throw FitError(std::string("least squares: design is rank deficient, column '") +
                           kColumnNames[col_of[col]] + "' is dependent");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::array<double, 4> x{};
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    for (int i = 0; i < n; ++i) x[i] *= d[i];
    return x;
}

}  // namespace

GsModel default_gs_model() {
    return {0.65538, 1.67431e-5, -2.24342e-6, 0.63641};
}

VertexId regression_gs(const GraphStats& stats, const GsModel& model) {
    const double raw = model.beta0 + model.beta1 * static_cast<double>(stats.n_vertices) +
                       model.beta2 * static_cast<double>(stats.n_undirected_edges) +
                       model.beta3 * stats.avg_degree;
    const long long rounded = std::llround(raw);
    return rounded < 1 ? 1 : static_cast<VertexId>(rounded);
}

GsModel fit_least_squares(const SampleTable& samples) {
    if (samples.rows.size() < 4)
        throw FitError("least squares: need at least 4 sample rows, got " +
                       std::to_string(samples.rows.size()));

    // normal equations: (X^T X) beta = X^T y with columns (1, n, e, avg)
    std::array<std::array<double, 4>, 4> xtx{};
    std::array<double, 4> xty{};
    for (const SampleRow& row : samples.rows) {
        const std::array<double, 4> x = {1.0, row.n_vertices, row.n_edges, row.avg_degree};
        const double y = static_cast<double>(row.optimal_gs);
        for (int i = 0; i < 4; ++i) {
            xty[i] += x[i] * y;
            for (int j = 0; j < 4; ++j) xtx[i][j] += x[i] * x[j];
        }
    }
    const auto beta = solve_4x4(xtx, xty);
    return {beta[0], beta[1], beta[2], beta[3]};
}

double fit_residual_norm(const SampleTable& samples, const GsModel& m) {
    double acc = 0.0;
    for (const SampleRow& row : samples.rows) {
        const double pred =
            m.beta0 + m.beta1 * row.n_vertices + m.beta2 * row.n_edges + m.beta3 * row.avg_degree;
        const double d = static_cast<double>(row.optimal_gs) - pred;
        acc += d * d;
    }
    return std::sqrt(acc);
}

SampleTable load_sample_table(std::istream& in) {
    SampleTable table;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (line.find("n_vertices") == std::string::npos)
                throw ParseError("sample table: missing CSV header", line_no);
            continue;
        }
        std::istringstream row(line);
        SampleRow s{};
        char comma;
        long long gs;
        if (!(row >> s.n_vertices >> comma >> s.n_edges >> comma >> s.avg_degree >> comma >>
              s.dim >> comma >> gs) ||
            gs < 1)
            throw ParseError("sample table: bad row", line_no);
        s.optimal_gs = static_cast<VertexId>(gs);
        table.rows.push_back(s);
    }
    return table;
}

SampleTable load_sample_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sample table: " + path);
    return load_sample_table(in);
}

void write_sample_table(std::ostream& out, const SampleTable& table) {
    out << "n_vertices,n_edges,avg_degree,dim,optimal_gs\n";
    out.precision(17);
    for (const SampleRow& s : table.rows)
        out << s.n_vertices << ',' << s.n_edges << ',' << s.avg_degree << ',' << s.dim << ','
            << s.optimal_gs << '\n';
}

GsModel load_gs_model(std::istream& in) {
    GsModel m;
    bool seen[4] = {false, false, false, false};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("gs model: expected key=value", line_no);
        const std::string key = line.substr(0, eq);
        const double value = std::stod(line.substr(eq + 1));
        if (key == "beta0") m.beta0 = value, seen[0] = true;
        else if (key == "beta1") m.beta1 = value, seen[1] = true;
        else if (key == "beta2") m.beta2 = value, seen[2] = true;
        else if (key == "beta3") m.beta3 = value, seen[3] = true;
        else throw ParseError("gs model: unknown key '" + key + "'", line_no);
    }
    for (bool s : seen)
        if (!s) throw ConfigError("gs model: missing coefficient");
    return m;
}

GsModel load_gs_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open gs model: " + path);
    return load_gs_model(in);
}

void write_gs_model(std::ostream& out, const GsModel& m) {
    out.precision(17);
    out << "beta0=" << m.beta0 << "\nbeta1=" << m.beta1 << "\nbeta2=" << m.beta2
        << "\nbeta3=" << m.beta3 << '\n';
}

}  // namespace pathgcn
