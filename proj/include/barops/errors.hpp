#pragma once

#include <stdexcept>
#include <string>

namespace barops {

// Malformed textual input (words, permutations, data files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input that violates a mathematical precondition
// (non-surjective word, slot out of range, disconnected algebra, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A chain-complex slice is missing a basis grade that a computation needs.
struct IncompleteSliceError : DomainError {
    explicit IncompleteSliceError(const std::string& msg) : DomainError(msg) {}
};

} // namespace barops
