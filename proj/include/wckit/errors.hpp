#pragma once

#include <stdexcept>
#include <string>

namespace wc {

/// Bad input: violated precondition, unparsable text, exceeded guard.
/// The CLI maps this to exit code 2.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A verified internal invariant did not hold (model bug, not user error).
/// The CLI maps this to exit code 1.
class check_failure : public std::runtime_error {
public:
    explicit check_failure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wc
