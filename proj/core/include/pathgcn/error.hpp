#pragma once

#include <stdexcept>
#include <string>

namespace pathgcn {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// config/parse/shape -> 2, io -> 3, numeric/fit/analysis -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ParseError : ConfigError {
    ParseError(const std::string& msg, std::size_t line)
        : ConfigError(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};

struct ShapeError : ConfigError {
    using ConfigError::ConfigError;
};

// Execution paths were built for a different (graph, training set, layer count).
struct StalenessError : ConfigError {
    using ConfigError::ConfigError;
};

struct IoError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct FitError : NumericError {
    using NumericError::NumericError;
};

struct AnalysisError : NumericError {
    using NumericError::NumericError;
};

}  // namespace pathgcn
