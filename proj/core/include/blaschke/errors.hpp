#pragma once

#include <stdexcept>

namespace blaschke {

/// Invalid argument or malformed input data.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A sign-change bracket for a root search could not be established.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested boundary value cannot be attained below the radius cap.
class TargetUnreachable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No initial radius below the cap achieves the requested separation bound.
class SeparationUnreachable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace blaschke
