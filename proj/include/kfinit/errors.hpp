#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kfinit {

/// Shape mismatch between operands. The message names both shapes.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A structured matrix with an eigenvalue too close to zero to invert.
/// The message names the offending eigenvalue.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, double eigenvalue)
        : std::runtime_error(what), eigenvalue_(eigenvalue) {}
    double eigenvalue() const { return eigenvalue_; }

private:
    double eigenvalue_;
};

/// Training produced a non-finite weight or gradient. Carries the number of
/// steps completed before the blow-up.
class DivergedError : public std::runtime_error {
public:
    DivergedError(const std::string& what, std::size_t steps)
        : std::runtime_error(what), steps_(steps) {}
    std::size_t steps() const { return steps_; }

private:
    std::size_t steps_;
};

/// Malformed input file (IDX payload, glyph corpus, ...).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid experiment configuration (bad key, bad value, missing field).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Failure inside the Bayesian initializer. Carries layer index and the
/// recursion step at which the failure occurred.
class InitializerError : public std::runtime_error {
public:
    InitializerError(const std::string& what, std::size_t layer, int step)
        : std::runtime_error(what), layer_(layer), step_(step) {}
    std::size_t layer() const { return layer_; }
    int step() const { return step_; }

private:
    std::size_t layer_;
    int step_;
};

}  // namespace kfinit
