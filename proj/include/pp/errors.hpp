#pragma once

#include <stdexcept>
#include <string>

namespace pp {

// Bad user-supplied data (files, ids, missing entries). CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exhaustive operation requested on a graph too large for it. CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition that callers must establish was violated.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace pp
