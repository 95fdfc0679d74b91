#ifndef HRBOUND_ERRORS_HPP
#define HRBOUND_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hrb {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent field data (CLI exit code 2).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A prime may divide the index [O_K : Z[theta]] and no local override was given.
class IndexPrimeError : public Error {
public:
    IndexPrimeError(std::uint64_t p, const std::string& what) : Error(what), prime_(p) {}
    std::uint64_t prime() const noexcept { return prime_; }

private:
    std::uint64_t prime_;
};

/// A coefficient no longer fits its storage type.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Theorem hypotheses on (n, alpha, C_K) are not met (CLI exit code 3).
class HypothesisFailed : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain where a formula is meaningful.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operation called outside its stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace hrb

#endif
