#pragma once

#include <stdexcept>
#include <string>

namespace a1lie {

struct RingMismatchError : std::runtime_error {
    explicit RingMismatchError(const std::string& m) : std::runtime_error(m) {}
};

struct PIntegralityError : std::runtime_error {
    explicit PIntegralityError(const std::string& m) : std::runtime_error(m) {}
};

struct CacheCorruptionError : std::runtime_error {
    explicit CacheCorruptionError(const std::string& m) : std::runtime_error(m) {}
};

struct UnsupportedCaseError : std::runtime_error {
    explicit UnsupportedCaseError(const std::string& m) : std::runtime_error(m) {}
};

struct SolverBudgetError : std::runtime_error {
    explicit SolverBudgetError(const std::string& m) : std::runtime_error(m) {}
};

struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace a1lie
