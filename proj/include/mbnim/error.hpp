#pragma once

#include <stdexcept>
#include <string>

namespace mbnim {

/// Checked 64-bit arithmetic exceeded the machine width.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// A digit vector contains an entry >= its radix.
struct InvalidDigitError : std::invalid_argument {
    explicit InvalidDigitError(const std::string& what) : std::invalid_argument(what) {}
};

/// find_move was asked for a target value not below the Nim sum.
struct LosingPositionError : std::invalid_argument {
    explicit LosingPositionError(const std::string& what) : std::invalid_argument(what) {}
};

/// nonmove_witness was given a vector that is a move of the maximum system.
struct NotAFudgeError : std::invalid_argument {
    explicit NotAFudgeError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation's stated hypothesis on the base does not hold.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRangeError : std::out_of_range {
    explicit IndexOutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mbnim
