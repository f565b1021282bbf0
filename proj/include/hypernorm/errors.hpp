#pragma once

#include <stdexcept>
#include <string>

namespace hypernorm {

/// Shape or dimension mismatch between a hypermatrix and its arguments.
class IncompatibleShapeError : public std::invalid_argument {
public:
    explicit IncompatibleShapeError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Invalid or unvalidatable input data (bad entries, bad flags, bad files).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A mathematical hypothesis of the requested operation does not hold
/// (e.g. a bound requested at p < 2, or a non-symmetric input where
/// symmetry is required).
class HypothesisError : public std::invalid_argument {
public:
    explicit HypothesisError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// All-zero gradient in a dual step; the caller re-randomizes the block.
class DegenerateGradientError : public std::runtime_error {
public:
    explicit DegenerateGradientError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Grid search refused because the evaluation count exceeds the cap.
class GridCapError : public std::runtime_error {
public:
    GridCapError(const std::string& what, double estimated_evals)
        : std::runtime_error(what), estimated_evals(estimated_evals) {}

    double estimated_evals;
};

/// Text input could not be parsed; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line(line) {}

    long line;
};

}  // namespace hypernorm
