#pragma once

#include <stdexcept>
#include <string>

namespace heckedn {

// Failures of identities that are theorems in the underlying theory.  If one
// of these fires the library has a bug (most likely a labeling transport or
// normalization error), so callers should abort loudly rather than recover.
struct ViolatedTheoremError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivisibleError : ViolatedTheoremError {
    explicit NotDivisibleError(const std::string& what) : ViolatedTheoremError(what) {}
};

struct NotASquareError : ViolatedTheoremError {
    explicit NotASquareError(const std::string& what) : ViolatedTheoremError(what) {}
};

struct NotRationalError : ViolatedTheoremError {
    explicit NotRationalError(const std::string& what) : ViolatedTheoremError(what) {}
};

struct NotIntegralError : ViolatedTheoremError {
    explicit NotIntegralError(const std::string& what) : ViolatedTheoremError(what) {}
};

struct InconsistentEigenvalueError : ViolatedTheoremError {
    explicit InconsistentEigenvalueError(const std::string& what) : ViolatedTheoremError(what) {}
};

struct RankDeficientError : ViolatedTheoremError {
    explicit RankDeficientError(const std::string& what) : ViolatedTheoremError(what) {}
};

// User-input / precondition failures.
struct SeparationFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVectorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TagMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SizeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace heckedn
