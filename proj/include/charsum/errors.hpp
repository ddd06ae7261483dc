#pragma once

#include <stdexcept>
#include <string>

namespace charsum {

// Base of the library error hierarchy.  exit_code() separates input/validation
// failures (2) from computational guards (3) for the CLI.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual int exit_code() const { return 2; }
};

class GuardError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
};

struct NotPrimeError : Error { using Error::Error; };
struct ReducibleError : Error { using Error::Error; };
struct DegreeMismatchError : Error { using Error::Error; };
struct NotABasisError : Error { using Error::Error; };
struct EvenCharacteristicError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ZeroDenominatorError : Error { using Error::Error; };
struct PoleInSetError : Error { using Error::Error; };
struct UnstableSetError : Error { using Error::Error; };
struct ConditionViolatedError : Error { using Error::Error; };
struct BadParametersError : Error { using Error::Error; };
struct NoSuchCharacterError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

struct TooLargeError : GuardError { using GuardError::GuardError; };
struct TooSmallPrimeError : GuardError { using GuardError::GuardError; };

}  // namespace charsum
