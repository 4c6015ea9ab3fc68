#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylflow {

/// Syntax error in one of the textual grammars. `position` is a 0-based
/// byte offset into the input.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string msg, std::size_t position)
        : std::runtime_error(std::move(msg)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// A computed term left the configured ambient space. Overflow is always an
/// error: dropping terms would corrupt the spans built downstream.
class TruncationOverflow : public std::runtime_error {
  public:
    TruncationOverflow(std::string msg, std::string term)
        : std::runtime_error(std::move(msg)), term_(std::move(term)) {}

    const std::string& term() const noexcept { return term_; }

  private:
    std::string term_;
};

/// Input outside the domain a routine is defined on (e.g. mu outside the
/// strip 0 <= Re(mu) <= 1 for basis enumeration).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace weylflow
