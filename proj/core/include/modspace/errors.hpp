#pragma once

#include <stdexcept>
#include <string>

namespace modspace {

/// A function evaluated to NaN/Inf, or a symbol was non-finite at a grid point.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

/// A point fell outside the domain covered by a map or grid.
class CoverageError : public std::runtime_error {
public:
    explicit CoverageError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid norm exponents, grid sizes, or experiment configuration.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Degenerate input (zero denominator, non-injective map on the support, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

} // namespace modspace
