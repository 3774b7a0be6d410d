#pragma once

#include <optional>
#include <vector>

#include "ulrc/galois.hpp"

namespace ulrc {

/// Coefficient-field adapters so the same elimination code runs over
/// GF(q^m) (ExtOps) and over the subfield GF(q) (BaseOps).
struct ExtOps {
  const FieldSpec* f;
  Elem add(Elem a, Elem b) const { return f->add(a, b); }
  Elem sub(Elem a, Elem b) const { return f->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return f->mul(a, b); }
  Elem inv(Elem a) const { return f->inv(a); }
};

struct BaseOps {
  const FieldSpec* f;
  Elem add(Elem a, Elem b) const { return f->base_add(a, b); }
  Elem sub(Elem a, Elem b) const { return f->base_sub(a, b); }
  Elem mul(Elem a, Elem b) const { return f->base_mul(a, b); }
  Elem inv(Elem a) const { return f->base_inv(a); }
};

/// Incrementally maintained row-echelon basis of absorbed vectors.
template <class Ops>
class EchelonBasisT {
 public:
  EchelonBasisT(Ops ops, std::size_t dim) : ops_(ops), dim_(dim) {}

  /// Reduces v against the basis; if a nonzero remainder survives it is
  /// normalized and inserted, and the rank grows by one.
  bool absorb(std::vector<Elem> v) {
    reduce(v);
    std::size_t pivot = dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == dim_) return false;
    const Elem scale = ops_.inv(v[pivot]);
    for (std::size_t j = pivot; j < dim_; ++j) v[j] = ops_.mul(v[j], scale);
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    pivots_.insert(pivots_.begin() + at, pivot);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
  }

  bool in_span(std::vector<Elem> v) const {
    reduce(v);
    for (Elem x : v)
      if (x != 0) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dim_; }

 private:
  void reduce(std::vector<Elem>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem c = v[pivots_[r]];
      if (c == 0) continue;
      const auto& row = rows_[r];
      for (std::size_t j = pivots_[r]; j < dim_; ++j) v[j] = ops_.sub(v[j], ops_.mul(c, row[j]));
    }
  }

  Ops ops_;
  std::size_t dim_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

using EchelonBasis = EchelonBasisT<ExtOps>;
using BaseEchelonBasis = EchelonBasisT<BaseOps>;

/// In-place reduced row echelon form; returns the pivot columns.
/// Zero rows sink to the bottom.
std::vector<std::size_t> rref(const FieldSpec& field, std::vector<std::vector<Elem>>& rows);

/// Solves A x = b for the unique x; nullopt if the system is
/// underdetermined (column rank < cols) or inconsistent.
std::optional<std::vector<Elem>> solve_unique(const FieldSpec& field,
                                              std::vector<std::vector<Elem>> rows,
                                              std::vector<Elem> rhs);

/// Basis of { h : sum_j h[j] * rows[i][j] = 0 for every i }.
std::vector<std::vector<Elem>> kernel_basis(const FieldSpec& field,
                                            std::vector<std::vector<Elem>> rows,
                                            std::size_t cols);

}  // namespace ulrc
