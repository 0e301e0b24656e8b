#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eadj/hypergraph.hpp"
#include "eadj/symtensor.hpp"
#include "eadj/uniformization.hpp"

namespace eadj {

struct EigenPair {
  double lambda = 0.0;
  /// Collatz-Wielandt bracket around lambda.
  double lambda_low = 0.0;
  double lambda_high = 0.0;
  std::vector<double> x;
  /// max_i |(A x^{m-1})_i - lambda x_i^{m-1}|
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

struct ResidualReport {
  double residual = 0.0;
  bool passed = false;
};

/// Passes iff the max componentwise residual is <= tol * (1 + |lambda|).
/// Throws Error on a zero vector or a length mismatch.
ResidualReport check_eigenpair(const RealSymTensor& t, double lambda, std::span<const double> x,
                               double tol);
ResidualReport check_eigenpair(const SymTensor& t, double lambda, std::span<const double> x,
                               double tol);

/// Exact max componentwise residual.
Rational eigen_residual_exact(const SymTensor& t, const Rational& lambda,
                              std::span<const Rational> x);

struct Disk {
  Rational center;
  Rational radius;
};

/// Disk i: the diagonal entry a_{i...i} and the off-diagonal absolute sum of
/// the slice at i.
std::vector<Disk> gershgorin_disks(const SymTensor& t);

bool in_disks(const std::vector<Disk>& disks, double lambda, double slack = 0.0);

struct BoundReport {
  /// Largest vertex degree.
  Rational delta;
  /// Largest slice sum over the indices n+1..n+k_max-1 (0 if k_max = 1).
  Rational delta_star;
  Rational bound;
  std::vector<Disk> disks;
};

BoundReport layer_bound(const Hypergraph& h);

/// Dominant H-eigenpair of a nonnegative symmetric tensor. Indices with an
/// empty slice are held at 0. Each connected block of the remaining indices
/// is iterated on t + I, which keeps the iteration from cycling, with the
/// Collatz-Wielandt ratios as a bracket. The block with the largest
/// eigenvalue supplies x. Stops when the bracket is within tol; on reaching
/// max_iter the result is returned with converged = false.
/// Throws Error for order 1, a negative entry or an all-zero tensor.
EigenPair power_iteration(const RealSymTensor& t, double tol = 1e-10,
                          std::size_t max_iter = 10000);
EigenPair power_iteration(const SymTensor& t, double tol = 1e-10, std::size_t max_iter = 10000);

struct MatrixEigen {
  double lambda = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Dominant eigenvalue of a symmetric nonnegative matrix by power iteration
/// on A + I with a Rayleigh quotient estimate.
MatrixEigen matrix_power_iteration(const Matrix& a, double tol = 1e-12,
                                   std::size_t max_iter = 100000);

struct GraphCaseReport {
  Rational c2;
  /// Layered tensor equals c_2 * A bordered by a zero row and column.
  bool block_ok = false;
  /// (0, e_{n+1}) satisfies the eigen-equation exactly.
  bool zero_eigenpair_ok = false;
  double graph_dominant = 0.0;
  double layered_dominant = 0.0;
  bool dominant_ok = false;

  bool passed() const noexcept { return block_ok && zero_eigenpair_ok && dominant_ok; }
};

/// Throws Error unless g is nonempty and 2-uniform.
GraphCaseReport graph_case_check(const Hypergraph& g, double tol = 1e-8,
                                 const CoefficientPolicy& policy = CoefficientPolicy::handshake());

}  // namespace eadj
