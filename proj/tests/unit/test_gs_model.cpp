#include <random>
#include <sstream>

#include "doctest.h"
#include "pathgcn/error.hpp"
#include "pathgcn/gs_model.hpp"

using namespace pathgcn;

namespace {

GraphStats stats_of(VertexId n, EdgeIndex e) {
    GraphStats s;
    s.n_vertices = n;
    s.n_undirected_edges = e;
    s.avg_degree = static_cast<double>(e) / static_cast<double>(n);
    return s;
}

// Independently solved normal equations via Gauss-Jordan on the augmented
// system; the brute-force cross-check for the fit.
std::array<double, 4> oracle_normal_equations(const SampleTable& t) {
    double a[4][5] = {};
    for (const SampleRow& row : t.rows) {
        const double x[4] = {1.0, row.n_vertices, row.n_edges, row.avg_degree};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) a[i][j] += x[i] * x[j];
            a[i][4] += x[i] * row.optimal_gs;
        }
    }
    for (int col = 0; col < 4; ++col) {
        int p = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[p][col])) p = r;
        for (int c = 0; c < 5; ++c) std::swap(a[col][c], a[p][c]);
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 5; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return {a[0][4] / a[0][0], a[1][4] / a[1][1], a[2][4] / a[2][2], a[3][4] / a[3][3]};
}

}  // namespace

TEST_CASE("published coefficients reproduce the reference group sizes") {
    const GsModel m = default_gs_model();
    // expected values computed by direct evaluation of the regression
    CHECK(regression_gs(stats_of(2708, 5278), m) == 2);        // Cora
    CHECK(regression_gs(stats_of(3327, 4552), m) == 2);        // Citeseer
    CHECK(regression_gs(stats_of(19717, 44324), m) == 2);      // Pubmed
    CHECK(regression_gs(stats_of(81306, 1342296), m) == 10);   // Twitter
    CHECK(regression_gs(stats_of(88784, 2093195), m) == 12);   // Blog
    CHECK(regression_gs(stats_of(410236, 2439437), m) == 6);   // Amazon
    CHECK(regression_gs(stats_of(875713, 4322051), m) == 9);   // Google
    CHECK(regression_gs(stats_of(1134890, 2987624), m) == 15); // Youtube
}

TEST_CASE("zero stats clamp to gs=1") {
    GraphStats zero{};
    CHECK(regression_gs(zero, default_gs_model()) == 1);
}

TEST_CASE("regression output is a positive integer for wild inputs") {
    const GsModel m = default_gs_model();
    for (double e : {0.0, 1e5, 1e9}) {
        GraphStats s;
        s.n_vertices = 1;
        s.n_undirected_edges = static_cast<EdgeIndex>(e);
        s.avg_degree = e;
        CHECK(regression_gs(s, m) >= 1);
    }
}

TEST_CASE("noiseless planted coefficients are recovered to 1e-9") {
    const GsModel planted{0.5, 1e-5, -2e-6, 0.6};
    // integer labels with avg_degree solved so each row lies exactly on the
    // planted hyperplane
    SampleTable exact;
    std::mt19937_64 rng(78);
    std::uniform_real_distribution<double> nv(100, 1e6);
    for (int i = 0; i < 12; ++i) {
        SampleRow r{};
        r.n_vertices = std::floor(nv(rng));
        r.n_edges = std::floor(r.n_vertices * 3.0) + i * 1000;
        r.dim = 16;
        const VertexId label = 1 + (i % 7);
        r.avg_degree = (static_cast<double>(label) - planted.beta0 -
                        planted.beta1 * r.n_vertices - planted.beta2 * r.n_edges) /
                       planted.beta3;
        r.optimal_gs = label;
        exact.rows.push_back(r);
    }
    const GsModel fit = fit_least_squares(exact);
    CHECK(fit.beta0 == doctest::Approx(planted.beta0).epsilon(1e-9));
    CHECK(fit.beta1 == doctest::Approx(planted.beta1).epsilon(1e-9));
    CHECK(fit.beta2 == doctest::Approx(planted.beta2).epsilon(1e-9));
    CHECK(fit.beta3 == doctest::Approx(planted.beta3).epsilon(1e-9));

    // noiseless fit followed by the rounding rule reproduces every label
    for (const SampleRow& r : exact.rows) {
        GraphStats s;
        s.n_vertices = static_cast<VertexId>(r.n_vertices);
        s.n_undirected_edges = static_cast<EdgeIndex>(r.n_edges);
        s.avg_degree = r.avg_degree;
        // evaluate with the double-typed inputs the table held
        const double raw = fit.beta0 + fit.beta1 * r.n_vertices + fit.beta2 * r.n_edges +
                           fit.beta3 * r.avg_degree;
        CHECK(static_cast<VertexId>(std::llround(raw)) == r.optimal_gs);
    }
}

TEST_CASE("noisy fit agrees with the independent normal-equation oracle") {
    const GsModel planted{0.5, 1e-5, -2e-6, 0.6};
    SampleTable t;
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> nv(1000, 2e6), dg(1, 60), noise(-0.1, 0.1);
    for (int i = 0; i < 50; ++i) {
        SampleRow r{};
        r.n_vertices = std::floor(nv(rng));
        r.avg_degree = dg(rng);
        r.n_edges = std::floor(r.n_vertices * r.avg_degree / 2.0);
        r.dim = 16;
        const double y = planted.beta0 + planted.beta1 * r.n_vertices +
                         planted.beta2 * r.n_edges + planted.beta3 * r.avg_degree + noise(rng);
        r.optimal_gs = static_cast<VertexId>(std::max(1.0, std::round(y)));
        t.rows.push_back(r);
    }
    const GsModel fit = fit_least_squares(t);
    const auto oracle = oracle_normal_equations(t);
    CHECK(fit.beta0 == doctest::Approx(oracle[0]).epsilon(1e-10));
    CHECK(fit.beta1 == doctest::Approx(oracle[1]).epsilon(1e-10));
    CHECK(fit.beta2 == doctest::Approx(oracle[2]).epsilon(1e-10));
    CHECK(fit.beta3 == doctest::Approx(oracle[3]).epsilon(1e-10));
}

TEST_CASE("too few rows fail the fit") {
    SampleTable t;
    for (int i = 0; i < 3; ++i) t.rows.push_back({100.0 * (i + 1), 300.0, 3.0, 16, 2});
    CHECK_THROWS_AS(fit_least_squares(t), FitError);
}

TEST_CASE("a dependent column is named in the error") {
    SampleTable t;
    // avg_degree held constant makes it linearly dependent on the intercept;
    // n_edges varies nonlinearly so no other dependency exists
    for (int i = 0; i < 8; ++i)
        t.rows.push_back(
            {1000.0 + i, 2000.0 + 37.0 * i + 11.0 * i * i, 5.0, 16, VertexId(2 + i % 3)});
    try {
        fit_least_squares(t);
        FAIL("expected rank error");
    } catch (const FitError& e) {
        CHECK(std::string(e.what()).find("avg_degree") != std::string::npos);
    }
}

TEST_CASE("model file round trip is exact") {
    const GsModel m = default_gs_model();
    std::ostringstream out;
    write_gs_model(out, m);
    std::istringstream in(out.str());
    const GsModel back = load_gs_model(in);
    CHECK(back.beta0 == m.beta0);
    CHECK(back.beta1 == m.beta1);
    CHECK(back.beta2 == m.beta2);
    CHECK(back.beta3 == m.beta3);
}

TEST_CASE("sample table CSV round trip") {
    SampleTable t;
    t.rows.push_back({2708, 5278, 1.949, 16, 2});
    t.rows.push_back({1134890, 2987624, 2.632, 128, 15});
    std::ostringstream out;
    write_sample_table(out, t);
    std::istringstream in(out.str());
    const SampleTable back = load_sample_table(in);
    REQUIRE(back.rows.size() == 2);
    CHECK(back.rows[1].optimal_gs == 15);
    CHECK(back.rows[0].n_vertices == 2708.0);
}
