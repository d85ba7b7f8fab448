#include "pathgcn/run_config.hpp"

#include "pathgcn/error.hpp"

namespace pathgcn {

void RunConfig::validate() const {
    if (layers < 1) throw ConfigError("layers must be >= 1");
    if (f < 1) throw ConfigError("feature dimension must be >= 1");
    if (dim0 < 1) throw ConfigError("dim0 must be >= 1");
    if (classes < 1) throw ConfigError("classes must be >= 1");
    if (epochs < 1) throw ConfigError("epochs must be >= 1");
    if (training_set_path.empty() && (!(ratio > 0.0) || ratio > 1.0))
        throw ConfigError("training ratio must be in (0, 1]");
    if (gs.kind == GsStrategyKind::Fixed && gs.fixed < 1)
        throw ConfigError("fixed group size must be >= 1");
    if (workers < 0) throw ConfigError("workers must be >= 0");
}

const char* to_string(TrainMode m) {
    switch (m) {
        case TrainMode::AllActive: return "all-active";
        case TrainMode::IfElse: return "ifelse";
        case TrainMode::EppPreprocess: return "epp-preprocess";
        case TrainMode::EppOnTheFly: return "epp-onthefly";
    }
    return "?";
}

const char* to_string(GatherMode m) {
    return m == GatherMode::Local ? "local" : "global";
}

const char* to_string(GsStrategyKind k) {
    switch (k) {
        case GsStrategyKind::Fixed: return "fixed";
        case GsStrategyKind::Regression: return "regression";
        case GsStrategyKind::OracleCost: return "oracle:cost";
        case GsStrategyKind::OracleMeasured: return "oracle:measured";
    }
    return "?";
}

const char* to_string(Precision p) { return p == Precision::F64 ? "f64" : "f32"; }

const char* to_string(WeightMode m) { return m == WeightMode::Unit ? "unit" : "sym-norm"; }

TrainMode parse_train_mode(const std::string& s) {
    if (s == "all-active") return TrainMode::AllActive;
    if (s == "ifelse") return TrainMode::IfElse;
    if (s == "epp-preprocess") return TrainMode::EppPreprocess;
    if (s == "epp-onthefly") return TrainMode::EppOnTheFly;
    throw ConfigError("unknown mode: " + s);
}

GatherMode parse_gather_mode(const std::string& s) {
    if (s == "local") return GatherMode::Local;
    if (s == "global") return GatherMode::Global;
    throw ConfigError("unknown gather mode: " + s);
}

Precision parse_precision(const std::string& s) {
    if (s == "f64") return Precision::F64;
    if (s == "f32") return Precision::F32;
    throw ConfigError("unknown precision: " + s);
}

WeightMode parse_weight_mode(const std::string& s) {
    if (s == "unit") return WeightMode::Unit;
    if (s == "sym-norm") return WeightMode::SymNorm;
    throw ConfigError("unknown weight mode: " + s);
}

GsStrategy parse_gs_strategy(const std::string& s) {
    GsStrategy out;
    if (s.rfind("fixed:", 0) == 0) {
        out.kind = GsStrategyKind::Fixed;
        const long v = std::stol(s.substr(6));
        if (v < 1) throw ConfigError("fixed group size must be >= 1");
        out.fixed = static_cast<VertexId>(v);
        return out;
    }
    if (s == "regression") {
        out.kind = GsStrategyKind::Regression;
        return out;
    }
    if (s.rfind("regression:", 0) == 0) {
        out.kind = GsStrategyKind::Regression;
        out.model = load_gs_model_file(s.substr(11));
        return out;
    }
    if (s == "oracle" || s == "oracle:cost") {
        out.kind = GsStrategyKind::OracleCost;
        return out;
    }
    if (s == "oracle:measured") {
        out.kind = GsStrategyKind::OracleMeasured;
        return out;
    }
    throw ConfigError("unknown gs strategy: " + s);
}

std::string gs_strategy_label(const GsStrategy& s) {
    if (s.kind == GsStrategyKind::Fixed)
        return "fixed:" + std::to_string(s.fixed);
    return to_string(s.kind);
}

}  // namespace pathgcn
