#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid input or violated precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed text input; carries the byte offset of the offending token.
class ParseError : public DomainError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : DomainError(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A configured size guard or search budget was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Global size guards shared by all constructors. Thread-safe.
std::size_t max_leaves() noexcept;
void set_max_leaves(std::size_t n) noexcept;

std::size_t max_copies() noexcept;
void set_max_copies(std::size_t n) noexcept;

// Throws ResourceError when n exceeds max_leaves().
void check_leaf_budget(std::size_t n, const char* what);

} // namespace ramsey
