#include "mcdm/grid.hpp"

#include "mcdm/error.hpp"

namespace mcdm {

Grid Grid::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Grid grid(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw ShapeError("ragged grid: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " values, expected " +
                       std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) grid(i, j) = rows[i][j];
  }
  return grid;
}

std::vector<double> Grid::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<std::vector<double>> Grid::to_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

}  // namespace mcdm
