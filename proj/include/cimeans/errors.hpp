#pragma once

#include <stdexcept>
#include <string>

namespace cimeans {

/// Parameter outside the operation's domain (r = 0, R <= 0, bad label, ...).
struct InvalidParameterError : std::invalid_argument {
    explicit InvalidParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Integral certified or detected as non-convergent.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Theorem preconditions not met for the requested check.
struct HypothesisViolationError : std::invalid_argument {
    explicit HypothesisViolationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Symbol lacks a global sup bound, so no ess-sup based estimate exists.
struct UnboundedSymbolError : std::invalid_argument {
    explicit UnboundedSymbolError(const std::string& what) : std::invalid_argument(what) {}
};

/// Series or constant evaluated at a divergent parameter point (alpha = 1).
struct DegenerateConstantError : std::invalid_argument {
    explicit DegenerateConstantError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace cimeans
