#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pathgcn/csr_graph.hpp"

namespace pathgcn {

// Linear group-size predictor over (#vertices, #edges, average degree).
struct GsModel {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double beta3 = 0.0;
};

// Published regression coefficients used as the default model.
GsModel default_gs_model();

// Evaluates the regression on (n_vertices, n_undirected_edges, avg_degree),
// rounds to the nearest integer and clamps to >= 1.
VertexId regression_gs(const GraphStats& stats, const GsModel& model);

struct SampleRow {
    double n_vertices;
    double n_edges;
    double avg_degree;
    double dim;
    VertexId optimal_gs;
};

struct SampleTable {
    std::vector<SampleRow> rows;
};

// Least-squares fit of the regression over a sample table via normal
// equations and a partial-pivot Gaussian solve. Requires >= 4 rows and a
// full-rank design; a deficient design names the dependent column.
GsModel fit_least_squares(const SampleTable& samples);

double fit_residual_norm(const SampleTable& samples, const GsModel& model);

// CSV with header "n_vertices,n_edges,avg_degree,dim,optimal_gs".
SampleTable load_sample_table(std::istream& in);
SampleTable load_sample_table_file(const std::string& path);
void write_sample_table(std::ostream& out, const SampleTable& table);

// Text key=value file with the four coefficients.
GsModel load_gs_model(std::istream& in);
GsModel load_gs_model_file(const std::string& path);
void write_gs_model(std::ostream& out, const GsModel& model);

}  // namespace pathgcn
