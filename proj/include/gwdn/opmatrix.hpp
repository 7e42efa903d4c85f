#pragma once

#include "gwdn/qdoperator.hpp"

#include <vector>

namespace gwdn {

/// Square matrix of operators, indices 0..N.
class OpMatrix {
 public:
  explicit OpMatrix(std::size_t size = 0) : n_(size), e_(size * size) {}
  /// Throws PreconditionFailed unless every row has rows.size() entries.
  static OpMatrix from_rows(const std::vector<std::vector<QDOperator>>& rows);

  std::size_t size() const noexcept { return n_; }
  const QDOperator& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  QDOperator& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

  /// Zero strictly below the subdiagonal and -1 on the subdiagonal.
  bool is_almost_triangular() const;

  /// D * Id - this.
  OpMatrix d_minus() const;

  template <typename F>
  OpMatrix map_entries(F&& f) const {
    OpMatrix r(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = f(e_[k]);
    return r;
  }

  friend bool operator==(const OpMatrix&, const OpMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<QDOperator> e_;
};

/// M^tau_ij = M_{N-j,N-i}.
OpMatrix antitranspose(const OpMatrix& m);

/// P_0 = 1, P_{i+1} = sum_{j<=i} M_ji P_j; requires an almost triangular matrix.
QDOperator right_determinant_leading_minors(const OpMatrix& m);

/// Expansion along the rightmost column, entry on the left of its cofactor,
/// cofactor sign (-1)^{i+N}, cofactors expanded the same way.
QDOperator right_determinant_cofactor(const OpMatrix& m);

/// Dispatches to the leading-minor recursion for almost triangular input.
QDOperator right_determinant(const OpMatrix& m);

}  // namespace gwdn
