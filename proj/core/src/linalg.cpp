#include "ulrc/linalg.hpp"

namespace ulrc {

std::vector<std::size_t> rref(const FieldSpec& field, std::vector<std::vector<Elem>>& rows) {
  std::vector<std::size_t> pivot_cols;
  if (rows.empty()) return pivot_cols;
  const std::size_t ncols = rows[0].size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    const Elem scale = field.inv(rows[lead][col]);
    for (std::size_t j = col; j < ncols; ++j) rows[lead][j] = field.mul(rows[lead][j], scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead) continue;
      const Elem c = rows[r][col];
      if (c == 0) continue;
      for (std::size_t j = col; j < ncols; ++j)
        rows[r][j] = field.sub(rows[r][j], field.mul(c, rows[lead][j]));
    }
    pivot_cols.push_back(col);
    ++lead;
  }
  return pivot_cols;
}

std::optional<std::vector<Elem>> solve_unique(const FieldSpec& field,
                                              std::vector<std::vector<Elem>> rows,
                                              std::vector<Elem> rhs) {
  if (rows.size() != rhs.size()) throw PreconditionError("solve_unique: shape mismatch");
  if (rows.empty()) return rhs.empty() ? std::make_optional(std::vector<Elem>{}) : std::nullopt;
  const std::size_t ncols = rows[0].size();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
  auto pivots = rref(field, rows);
  // A pivot in the augmented column marks an inconsistent system.
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  if (pivots.size() < ncols) return std::nullopt;
  std::vector<Elem> x(ncols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][ncols];
  return x;
}

std::vector<std::vector<Elem>> kernel_basis(const FieldSpec& field,
                                            std::vector<std::vector<Elem>> rows,
                                            std::size_t cols) {
  auto pivots = rref(field, rows);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Elem> h(cols, 0);
    h[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) h[pivots[r]] = field.neg(rows[r][f]);
    basis.push_back(std::move(h));
  }
  return basis;
}

}  // namespace ulrc
