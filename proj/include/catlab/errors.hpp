#pragma once

#include <stdexcept>
#include <string>

namespace catlab {

/// Input outside an operation's mathematical domain (n < 2 for the bound, point off the lattice, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed file or document (PGM, match-graph JSON, report JSON).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quale identifier that is not part of the match graph.
class UnknownQuale : public std::out_of_range {
public:
    explicit UnknownQuale(const std::string& id)
        : std::out_of_range("unknown quale '" + id + "'"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

/// An internal guarantee failed; always a bug in this library, never bad user input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace catlab
