#pragma once

#include <stdexcept>
#include <string>

namespace mhe {

/// Robot and landmark geometry too close for a well-defined bearing.
class DegenerateGeometry : public std::runtime_error {
public:
  explicit DegenerateGeometry(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid or inconsistent configuration values.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A linear-algebra step failed (singular innovation, unsolvable normal equations).
class NumericalFailure : public std::runtime_error {
public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

/// A nonlinear solve could not make progress.
class SolverFailure : public std::runtime_error {
public:
  explicit SolverFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mhe
