#pragma once

#include <stdexcept>
#include <string>

namespace rmm {

// Base classes group errors by how the CLI maps them to exit codes:
// config errors -> 2, domain errors -> 3, I/O errors -> 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateDenominator : DomainError {
    using DomainError::DomainError;
};

struct NonFinite : DomainError {
    using DomainError::DomainError;
};

struct ZeroPolynomial : DomainError {
    using DomainError::DomainError;
};

struct InvalidParams : DomainError {
    using DomainError::DomainError;
};

struct NegativeWavenumber : DomainError {
    using DomainError::DomainError;
};

struct NegativeEigenvalue : DomainError {
    using DomainError::DomainError;
};

struct ModelMismatch : DomainError {
    using DomainError::DomainError;
};

struct IndexOutOfRange : DomainError {
    using DomainError::DomainError;
};

struct InsufficientRange : DomainError {
    using DomainError::DomainError;
};

struct ParseError : ConfigError {
    using ConfigError::ConfigError;
};

struct UnknownKey : ConfigError {
    using ConfigError::ConfigError;
};

struct MissingKey : ConfigError {
    using ConfigError::ConfigError;
};

struct UnitError : ConfigError {
    using ConfigError::ConfigError;
};

}  // namespace rmm
