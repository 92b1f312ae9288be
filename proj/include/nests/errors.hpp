#pragma once

#include <stdexcept>
#include <string>

namespace nests {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input object violates a structural invariant (bad indices, duplicates, non-nest, ...).
class InvalidInstance : public Error {
public:
    using Error::Error;
};

/// Two operands live on different universes.
class UniverseMismatch : public Error {
public:
    using Error::Error;
};

/// A configured size limit was exceeded.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// A map handed to a continuity check is not total on its domain.
class NonTotalMap : public Error {
public:
    using Error::Error;
};

/// Requested operation is not defined for the given arguments.
class Unsupported : public Error {
public:
    using Error::Error;
};

}  // namespace nests
