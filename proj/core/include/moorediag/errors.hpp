#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moorediag {

/// Base for all precondition violations surfaced to callers (the CLI maps
/// these to exit code 2).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A matrix fails the well-definedness congruence d_j * m_ij = 0 (mod e_i).
struct IllDefinedError : DomainError {
    size_t row, col;
    IllDefinedError(size_t i, size_t j)
        : DomainError("ill-defined homomorphism at entry (" + std::to_string(i) + "," +
                      std::to_string(j) + ")"),
          row(i),
          col(j) {}
};

struct NotExactError : DomainError {
    explicit NotExactError(const std::string& what) : DomainError("not exact: " + what) {}
};

struct InfiniteGroupError : DomainError {
    explicit InfiniteGroupError(const std::string& what) : DomainError("infinite group: " + what) {}
};

struct InfiniteHomSetError : DomainError {
    explicit InfiniteHomSetError(const std::string& what)
        : DomainError("infinite hom set: " + what) {}
};

struct NotInEmdPrimeError : DomainError {
    explicit NotInEmdPrimeError(const std::string& what)
        : DomainError("eta is not surjective with kernel 2A: " + what) {}
};

/// A defining relation of a diagram fails; carries the relation name.
struct RelationError : DomainError {
    std::string relation;
    explicit RelationError(const std::string& name)
        : DomainError("relation failed: " + name), relation(name) {}
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace moorediag
