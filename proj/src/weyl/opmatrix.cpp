#include "gwdn/opmatrix.hpp"

#include "gwdn/errors.hpp"

namespace gwdn {

OpMatrix OpMatrix::from_rows(const std::vector<std::vector<QDOperator>>& rows) {
  OpMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw PreconditionFailed("matrix is not square: row " + std::to_string(i) + " has " +
                               std::to_string(rows[i].size()) + " entries, expected " +
                               std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool OpMatrix::is_almost_triangular() const {
  const QDOperator minus_one(-1);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j + 1 && (*this)(i, j) != minus_one) return false;
      if (i > j + 1 && !(*this)(i, j).is_zero()) return false;
    }
  return true;
}

OpMatrix OpMatrix::d_minus() const {
  OpMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      r(i, j) = (i == j ? QDOperator::D() : QDOperator()) - (*this)(i, j);
  return r;
}

OpMatrix antitranspose(const OpMatrix& m) {
  const std::size_t n = m.size();
  OpMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = m(n - 1 - j, n - 1 - i);
  return r;
}

QDOperator right_determinant_leading_minors(const OpMatrix& m) {
  if (!m.is_almost_triangular())
    throw PreconditionFailed("leading-minor recursion needs an almost triangular matrix");
  std::vector<QDOperator> p{QDOperator(1)};
  for (std::size_t i = 0; i < m.size(); ++i) {
    QDOperator next;
    for (std::size_t j = 0; j <= i; ++j) next += m(j, i) * p[j];
    p.push_back(std::move(next));
  }
  return p.back();
}

namespace {

QDOperator cofactor_expand(const OpMatrix& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return QDOperator(1);
  const std::size_t last = cols.back();
  std::vector<std::size_t> sub_cols(cols.begin(), cols.end() - 1);
  QDOperator det;
  for (std::size_t r = 0; r < k; ++r) {
    const QDOperator& entry = m(rows[r], last);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_rows;
    sub_rows.reserve(k - 1);
    for (std::size_t s = 0; s < k; ++s)
      if (s != r) sub_rows.push_back(rows[s]);
    QDOperator term = entry * cofactor_expand(m, sub_rows, sub_cols);
    if ((r + k - 1) % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace

QDOperator right_determinant_cofactor(const OpMatrix& m) {
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return cofactor_expand(m, idx, idx);
}

QDOperator right_determinant(const OpMatrix& m) {
  if (m.is_almost_triangular()) return right_determinant_leading_minors(m);
  return right_determinant_cofactor(m);
}

}  // namespace gwdn
