#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathgcn/adam.hpp"
#include "pathgcn/csr_graph.hpp"
#include "pathgcn/group_cost.hpp"
#include "pathgcn/gs_model.hpp"

namespace pathgcn {

enum class TrainMode { AllActive, IfElse, EppPreprocess, EppOnTheFly };

// Epp aggregation layout: Local gathers sources into compact per-layer
// matrices; Global keeps full-width matrices and dereferences global ids
// (the ablation variant).
enum class GatherMode { Local, Global };

enum class GsStrategyKind { Fixed, Regression, OracleCost, OracleMeasured };

enum class Precision { F64, F32 };

struct GsStrategy {
    GsStrategyKind kind = GsStrategyKind::Regression;
    VertexId fixed = 10;
    GsModel model = default_gs_model();
    double atomic_penalty = 0.25;  // lambda of the oracle cost model
    int measured_repeats = 5;
};

struct RunConfig {
    // data source (CLI level; the engine receives loaded objects)
    std::string graph_path;
    std::string training_set_path;  // empty: sample by ratio
    double ratio = 0.1;
    std::uint64_t seed = 0;

    // model
    std::size_t layers = 2;
    std::size_t f = 128;
    std::size_t dim0 = 16;
    std::size_t classes = 4;
    std::size_t epochs = 100;
    AdamConfig adam{};

    // execution
    TrainMode mode = TrainMode::EppPreprocess;
    GatherMode gather = GatherMode::Local;
    GsStrategy gs{};
    WeightMode weight_mode = WeightMode::Unit;
    Precision precision = Precision::F64;
    bool deterministic = true;
    int workers = 0;        // 0: hardware default
    std::size_t col_chunk = 0;  // feature columns per aggregation task (0: whole row)

    std::string out_path;
    std::string baseline_report_path;

    // dim_0 ... dim_{L-1}, the last layer always maps to classes
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d(layers, dim0);
        d.back() = classes;
        return d;
    }
    void validate() const;
};

const char* to_string(TrainMode m);
const char* to_string(GatherMode m);
const char* to_string(GsStrategyKind k);
const char* to_string(Precision p);
const char* to_string(WeightMode m);

TrainMode parse_train_mode(const std::string& s);
GatherMode parse_gather_mode(const std::string& s);
Precision parse_precision(const std::string& s);
WeightMode parse_weight_mode(const std::string& s);

// "fixed:K", "regression", "regression:<coeff-file>", "oracle:cost",
// "oracle:measured"
GsStrategy parse_gs_strategy(const std::string& s);
std::string gs_strategy_label(const GsStrategy& s);

}  // namespace pathgcn
