#pragma once

#include <stdexcept>
#include <string>

namespace permstat {

/// Malformed or out-of-range user input (bad permutation text, code outside E_n, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A table-backed or enumerating operation was asked for an n beyond its configured limit.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed. Always a bug.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace permstat
