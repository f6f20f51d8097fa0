#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumplex {

// Raised when two independently computed quantities that must agree do not.
// Reaching this from any public entry point means a computation is wrong;
// callers treat it as fatal rather than recoverable.
struct identity_error : std::logic_error {
    explicit identity_error(const std::string& what) : std::logic_error(what) {}
};

// Raised when an enumeration would exceed the caller-supplied work budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void check_identity(bool cond, const std::string& msg) {
    if (!cond) throw identity_error(msg);
}

}  // namespace sumplex
