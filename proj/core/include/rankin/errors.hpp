#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rankin {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed argument: empty spaces, non-positive weights, size mismatches,
/// out-of-range configuration values.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The requested quantity ranges over an empty set: pair suprema on a
/// single-atom space, a simplex in dimension below n-1.
class UndefinedError : public Error {
public:
    using Error::Error;
};

/// Strict construction rejected a vector whose norm deviates from 1.
class NormalizationError : public Error {
public:
    using Error::Error;
};

/// A document could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// One or more theorem preconditions failed. Carries the per-condition
/// detail so callers can report which condition failed and by how much.
class PreconditionError : public Error {
public:
    struct Item {
        std::string condition;  // e.g. "(i) pairing", "(iii) integral"
        double violation = 0.0; // magnitude of the failure
        std::string detail;
    };

    PreconditionError(const std::string& what, std::vector<Item> items)
        : Error(what), items_(std::move(items)) {}

    const std::vector<Item>& items() const noexcept { return items_; }

private:
    std::vector<Item> items_;
};

}  // namespace rankin
