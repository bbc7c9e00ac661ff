// campaign-forensics: error taxonomy shared by the library and the CLI.
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace cfx {

/// Process exit codes used by the command-line tools.  Library code throws
/// the matching exception type; main() translates.
enum class ExitCode : int {
    ok = 0,
    validation = 2,  ///< input violated a documented precondition
    io = 3,          ///< file missing/unreadable/unwritable
    numerical = 4,   ///< non-finite values, singular systems, ...
};

/// Base class for all library errors; carries the exit code the CLI maps to.
class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

/// Input data or arguments violated a documented contract.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ExitCode::validation, what) {}
};

/// Filesystem-level failure (missing, unreadable, or unwritable path).
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ExitCode::io, what) {}
};

/// Numerical failure (NaN/Inf inputs, singular regression, ...).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(ExitCode::numerical, what) {}
};

}  // namespace cfx
