#pragma once

#include <stdexcept>
#include <string>

namespace nearcentral {

/// A precondition of a library operation was not met.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A group-algebra element is not constant on the tagged classes, so it does
/// not lie in the centralizer of S_{n-1}.
class NotCentralizerElement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A brute-force computation was refused because n exceeds the configured
/// limit.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal identity that must hold (exact division, integrality of a
/// count, agreement of overlapping case tables) failed.
class IdentityFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace nearcentral
