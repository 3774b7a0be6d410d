#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ulrc/errors.hpp"
#include "ulrc/galois.hpp"

namespace ulrc {

/// Counts k_1..k_r of information symbols per locality, k_r >= 1.
struct InfoLocalityProfile {
  std::vector<int> counts;  // counts[j-1] = number of information symbols of locality j

  long long total() const;
  /// Largest locality with a nonzero count (0 for the empty profile).
  int max_locality() const { return static_cast<int>(counts.size()); }
  /// Throws unless counts are non-negative and the last entry is positive.
  void validate() const;
  /// Drops trailing zero classes.
  static InfoLocalityProfile trimmed(std::vector<int> counts);

  bool operator==(const InfoLocalityProfile&) const = default;
};

/// Counts n_1..n_ra of code symbols per locality, n_ra >= 1.
struct AllSymbolLocalityProfile {
  std::vector<int> counts;

  long long total() const;
  int max_locality() const { return static_cast<int>(counts.size()); }
  void validate() const;
  static AllSymbolLocalityProfile trimmed(std::vector<int> counts);

  bool operator==(const AllSymbolLocalityProfile&) const = default;
};

/// A set of erased coordinate indices, strictly inside [0, n).
struct ErasurePattern {
  std::vector<std::size_t> erased;  // sorted, unique

  static ErasurePattern of(std::vector<std::size_t> indices, std::size_t n);
  bool contains(std::size_t i) const;
  std::size_t size() const { return erased.size(); }
};

/// An (n, k) linear code over a field, represented by its n generator
/// columns (each a length-k vector). Immutable after construction; the
/// rank-k invariant is checked by the constructor. All oracles below are
/// pure functions of the code.
class LinearCode {
 public:
  LinearCode(FieldPtr field, std::vector<std::vector<Elem>> columns,
             std::optional<std::vector<std::size_t>> systematic_positions = std::nullopt);

  const FieldPtr& field() const { return field_; }
  std::size_t length() const { return columns_.size(); }        // n
  std::size_t dimension() const { return k_; }                  // k
  const std::vector<Elem>& column(std::size_t i) const { return columns_[i]; }
  const std::vector<std::vector<Elem>>& columns() const { return columns_; }
  const std::optional<std::vector<std::size_t>>& systematic_positions() const {
    return systematic_positions_;
  }

 private:
  FieldPtr field_;
  std::size_t k_;
  std::vector<std::vector<Elem>> columns_;
  std::optional<std::vector<std::size_t>> systematic_positions_;
};

/// codeword[i] = <message, column_i>.
std::vector<Elem> encode(const LinearCode& code, std::span<const Elem> message);

/// Exact minimum distance by the support-rank method: the smallest t such
/// that some coordinate set T with |T| = t leaves the remaining columns
/// with rank < k. Cost is field-size independent; each subset counts one
/// rank computation against budget.max_rank_ops.
int min_distance(const LinearCode& code, const Budget& budget = {});

/// Exact minimum distance by enumerating all q^k messages; requires
/// q^k <= budget.max_messages. Cross-validates the support-rank oracle.
int min_distance_by_enumeration(const LinearCode& code, const Budget& budget = {});

/// Basis of the dual code { h : <h, c> = 0 for every codeword c }.
std::vector<std::vector<Elem>> dual_basis(const LinearCode& code);

enum class LocalityMethod {
  /// Dual enumeration when q^(n-k) <= 2^16, subset search otherwise.
  Auto,
  /// One pass over the q^(n-k) dual codewords; yields every coordinate's
  /// locality simultaneously. Capped by budget.max_dual_words.
  DualEnumeration,
  /// Progressive sweep over repair-set sizes t = 1, 2, ...; each span
  /// check counts against budget.max_rank_ops.
  SubsetSearch,
};

struct CoordinateLocality {
  /// False when no other coordinates determine this one (then the
  /// locality of Definition-style repair is undefined).
  bool recoverable = false;
  int locality = 0;
  /// Witness repair group: the lexicographically smallest minimum-size
  /// set R with c_i in span(R). Deterministic across both methods.
  std::vector<std::size_t> repair_group;
};

struct LocalityReport {
  std::vector<CoordinateLocality> coords;
  LocalityMethod method_used = LocalityMethod::Auto;

  bool all_recoverable() const;
};

/// Localities and witness repair groups for every coordinate.
LocalityReport locality_all(const LinearCode& code, LocalityMethod method = LocalityMethod::Auto,
                            const Budget& budget = {});

CoordinateLocality coordinate_locality(const LinearCode& code, std::size_t i,
                                       LocalityMethod method = LocalityMethod::Auto,
                                       const Budget& budget = {});

/// Counts n_j of coordinates at each locality j. Errors if any coordinate
/// is unrecoverable.
AllSymbolLocalityProfile all_symbol_profile(const LinearCode& code,
                                            LocalityMethod method = LocalityMethod::Auto,
                                            const Budget& budget = {});

/// Measured information locality profile: coordinates are grouped into
/// locality classes, and k_j is the rank increment contributed by the
/// class of locality j, truncated once the total rank reaches k.
InfoLocalityProfile info_profile(const LinearCode& code,
                                 LocalityMethod method = LocalityMethod::Auto,
                                 const Budget& budget = {});

/// Recovers the message from the surviving symbols, or nullopt when the
/// surviving columns do not have full rank. Failure is a value, never an
/// exception.
std::optional<std::vector<Elem>> erasure_decode(const LinearCode& code,
                                                std::span<const Elem> received,
                                                const ErasurePattern& pattern);

/// Recomputes symbol i from its witness repair group only, touching
/// exactly locality(i) other symbols of the intact codeword.
Elem local_repair(const LinearCode& code, std::span<const Elem> codeword, std::size_t i,
                  LocalityMethod method = LocalityMethod::Auto, const Budget& budget = {});

}  // namespace ulrc
