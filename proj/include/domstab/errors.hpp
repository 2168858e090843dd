#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domstab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid graph construction or mismatched vertex universes.
struct GraphError : Error {
    using Error::Error;
};

/// Malformed graph6 input. `offset()` is the byte position of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Instance is larger than an exhaustive routine is willing to enumerate.
struct SizeGuardError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Per-instance time budget ran out.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// The fast solver and the brute-force oracle disagree. Always a bug in this library.
struct OracleMismatch : Error {
    using Error::Error;
};

struct UnknownClaimError : Error {
    using Error::Error;
};

} // namespace domstab
