#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

/// Malformed input: parse failures, mismatched ambients, out-of-range indices.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Well-formed input that violates a mathematical precondition
/// (singular polynomial, non complete intersection, wrong piece dimension).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace milnor
