#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ulrc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-visible precondition or validation failure (bad parameters,
/// malformed profiles, mixed-field operands, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle refused to run because its combinatorial budget
/// would be exceeded. Never a silent approximation.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Cost caps for the exact oracles. Exceeding a cap raises BudgetExceeded.
struct Budget {
  /// Rank computations in subset searches (minimum distance, locality sweep).
  std::uint64_t max_rank_ops = 100'000'000;
  /// Dual codewords visited by the dual-space locality enumeration.
  std::uint64_t max_dual_words = std::uint64_t{1} << 24;
  /// Messages visited by the codeword-enumeration distance oracle.
  std::uint64_t max_messages = std::uint64_t{1} << 20;
};

}  // namespace ulrc
