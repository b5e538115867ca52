#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bei {

/// Malformed graph6 or edge-list input.  `offset` is a byte offset within the
/// record (graph6) or a 1-based line number (edge lists).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An exhaustive enumeration was refused because the input exceeds a size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A face or lattice budget ran out part-way through a computation.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bei
