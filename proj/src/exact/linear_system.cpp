#include <stdexcept>

#include "hayman/algebra.hpp"

namespace hayman {

LinearSolution solve_linear_system(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t rows = m.size();
  if (rhs.size() != rows) throw std::invalid_argument("solve_linear_system: size mismatch");
  const std::size_t cols = rows == 0 ? 0 : m.front().size();

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    std::swap(rhs[piv], rhs[row]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
      rhs[r] -= f * rhs[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  LinearSolution out;
  for (std::size_t r = row; r < rows; ++r)
    if (rhs[r] != 0) return out;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = rhs[r];
  out.particular = std::move(x);

  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace hayman
