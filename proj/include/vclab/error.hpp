#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace vclab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Wrong widths, mismatched dimensions, malformed members.
class InputShapeError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// Thrown when an exact computation would exceed its enumeration budget.
/// Carries the best lower bound established before stopping, if any.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what, std::optional<std::int64_t> lower_bound = std::nullopt)
        : Error(what), lower_bound_(lower_bound) {}

    std::optional<std::int64_t> lower_bound() const noexcept { return lower_bound_; }

private:
    std::optional<std::int64_t> lower_bound_;
};

}  // namespace vclab
