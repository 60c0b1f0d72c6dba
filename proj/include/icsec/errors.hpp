// Error types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace icsec {

// A bit word or channel input does not have the width the operation requires.
struct WidthMismatch : std::invalid_argument {
    explicit WidthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A message or jamming tuple does not match the scheme's declared bit counts.
struct LengthMismatch : std::invalid_argument {
    explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A variable name was requested that the distribution does not carry.
struct UnknownVariable : std::invalid_argument {
    explicit UnknownVariable(const std::string& what) : std::invalid_argument(what) {}
};

// An exact enumeration would exceed the configured budget.
struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

// The requested scheme does not exist for these channel parameters.
struct UnsupportedParameters : std::invalid_argument {
    explicit UnsupportedParameters(const std::string& what) : std::invalid_argument(what) {}
};

// A bound or gap was requested outside the regime where it is proven.
struct ConditionsNotMet : std::domain_error {
    explicit ConditionsNotMet(const std::string& what) : std::domain_error(what) {}
};

}  // namespace icsec
