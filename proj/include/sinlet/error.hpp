// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sinlet {

/// Coarse error classes. The CLI maps each one to a distinct exit status.
enum class ErrorClass {
    Usage,     // 2
    Parse,     // 3
    Domain,    // 4: numerical / domain / parameter
    Aliasing,  // 5: aliasing and rank deficiency
};

int exit_code(ErrorClass cls) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const noexcept { return cls_; }

private:
    ErrorClass cls_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(ErrorClass::Usage, what) {}
};

/// Input outside an operation's mathematical domain (σ ≤ 0, non-finite t, |v| ≥ c, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorClass::Domain, what) {}
};

/// A tunable parameter outside its admissible range (e.g. c ∉ [1,2], N = 0).
class ParameterError : public DomainError {
public:
    using DomainError::DomainError;
};

/// All-zero or otherwise information-free input.
class DegenerateInputError : public DomainError {
public:
    using DomainError::DomainError;
};

/// θ̇ underflowed; the requested quantity cannot be represented in double precision.
class PrecisionLossError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedKindError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The sample grid is too coarse for the requested number of basis functions.
class AliasingError : public Error {
public:
    AliasingError(const std::string& what, std::size_t max_safe_terms)
        : Error(ErrorClass::Aliasing, what), max_safe_terms_(max_safe_terms) {}
    std::size_t max_safe_terms() const noexcept { return max_safe_terms_; }

private:
    std::size_t max_safe_terms_;
};

/// Rank-deficient least-squares system.
class IllPosedError : public Error {
public:
    IllPosedError(const std::string& what, std::size_t effective_rank)
        : Error(ErrorClass::Aliasing, what), effective_rank_(effective_rank) {}
    std::size_t effective_rank() const noexcept { return effective_rank_; }

private:
    std::size_t effective_rank_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(ErrorClass::Parse, line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace sinlet
