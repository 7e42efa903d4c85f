#pragma once

#include "gwdn/opmatrix.hpp"
#include "gwdn/series.hpp"

#include <map>

namespace gwdn {

struct DNConfig {
  int n = 1;  // matrix size n + 1
  bool include_a00 = true;
  bool symmetrize = false;
};

/// Rational values for some a_ij; the rest stay symbolic.
struct Specialization {
  std::map<CoefVar, Rational> assignment;
};

/// A^N: a_ij q^{j-i+1} on and above the diagonal, 1 on the subdiagonal.
OpMatrix connection_matrix(const DNConfig& cfg);

/// The intro matrix M: a_ij (Dq)^{j-i+1} on and above the diagonal, 1 on the subdiagonal.
OpMatrix dq_matrix(const DNConfig& cfg);

/// L^Q_N = det_right(D - A^N).
QDOperator quantum_operator(const DNConfig& cfg);

/// L_N from det_right(D - M) = D L_N.
QDOperator dn_operator(const DNConfig& cfg);

/// L_N as left_divide_by_D(regularize(L^Q_N)).
QDOperator dn_operator_via_regularization(const DNConfig& cfg);

/// a_ij -> 0 whenever i > n_target or j > n_target; also a_00 -> 0 when geometric.
CoefPoly restrict_r_N(const CoefPoly& x, int n_target, bool geometric = false);
QDOperator restrict_r_N(const QDOperator& x, int n_target, bool geometric = false);
PerturbedSeries restrict_r_N(const PerturbedSeries& x, int n_target, bool geometric = false);

CoefPoly specialize(const CoefPoly& x, const Specialization& s);
QDOperator specialize(const QDOperator& x, const Specialization& s);
PerturbedSeries specialize(const PerturbedSeries& x, const Specialization& s);

/// Identifies a_ij with a_{N-j,N-i}; the lexicographically smaller pair is kept.
CoefPoly symmetrize_dn(const CoefPoly& x, int n);
QDOperator symmetrize_dn(const QDOperator& x, int n);
PerturbedSeries symmetrize_dn(const PerturbedSeries& x, int n);

/// Projective space preset: a_{0,N} = (N+1)^{N+1}, every other a_ij with i, j <= N is 0.
Specialization projective_space(int n);

}  // namespace gwdn
