#ifndef PHYLOTORIC_ERRORS_HPP
#define PHYLOTORIC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace phylotoric {

// Base class for all library errors so callers can catch in one place.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (Newick, polynomial syntax, YAML, JSON payloads).
// Carries the byte offset of the first offending character when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    explicit ParseError(const std::string& what) : Error(what), offset_(0) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Precondition violation on an operation (ring mismatch, unknown root id, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Raised when a step budget runs out mid-computation.  The partial basis
// accumulated so far is kept by the caller that owns it.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::uint64_t limit)
        : Error("step budget of " + std::to_string(limit) + " exhausted"), limit_(limit) {}
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
};

} // namespace phylotoric

#endif
