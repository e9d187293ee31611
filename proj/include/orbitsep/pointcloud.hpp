#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <string>

#include "orbitsep/permutation.hpp"
#include "orbitsep/rng.hpp"
#include "orbitsep/sym_matrix.hpp"

namespace orbitsep {

/// d x n real coordinate matrix; columns are points.
struct PointCloud {
  Eigen::MatrixXd coords;

  PointCloud() = default;
  explicit PointCloud(Eigen::MatrixXd c);

  int dim() const { return static_cast<int>(coords.rows()); }
  int count() const { return static_cast<int>(coords.cols()); }

  static PointCloud random_gaussian(int d, int n, Rng& rng);

  double max_abs_diff(const PointCloud& other) const;
};

std::ostream& operator<<(std::ostream& os, const PointCloud& p);

/// Subtracts the center of mass; output columns sum to zero. Idempotent.
PointCloud center(const PointCloud& p);

/// Column permutation: output column p(i) is input column i, so
/// gram(permute_columns(P, p)) = conjugate_sym(p, gram(P)).
PointCloud permute_columns(const PointCloud& cloud, const Permutation& p);

/// Gram matrix P^T P of the coordinate columns: diagonal = squared norms,
/// off-diagonal = pairwise inner products. Invariant under P -> QP for
/// orthogonal Q.
SymMatrix gram(const PointCloud& p);

/// conjugation_invariants(gram(center(P))): invariant under translations,
/// O(d), and point relabeling simultaneously.
Eigen::VectorXd cloud_invariants(const PointCloud& p);

/// Best (R, Pi, t) with R P1 Pi + t 1^T ~ P2: R the O(d) Procrustes optimum
/// (reflections permitted), Pi by exhaustive enumeration over S_n.
struct AlignmentResult {
  Eigen::MatrixXd rotation;
  Permutation permutation{1};
  Eigen::VectorXd translation;
  double residual = 0.0;  // Frobenius norm of R P1 Pi + t 1^T - P2
  double scale = 0.0;     // max centered Frobenius norm of the two clouds

  bool same_orbit(double tol = 1e-6) const {
    return residual <= tol * scale || scale == 0.0;
  }
};

/// Minimal-residual alignment over all n! permutations; throws SizeLimitError
/// past the enumeration cap (default n <= 8).
AlignmentResult best_alignment(const PointCloud& p1, const PointCloud& p2,
                               std::size_t cap = 40320);

/// Alignment when the clouds are in the same orbit at the given relative
/// tolerance, otherwise nullopt.
std::optional<AlignmentResult> orbit_align(const PointCloud& p1,
                                           const PointCloud& p2,
                                           double tol = 1e-6,
                                           std::size_t cap = 40320);

/// CSV with header "x0,...,x{d-1}", one point per row. Ragged or non-numeric
/// rows are rejected with FormatError.
PointCloud read_pointcloud_csv(const std::string& path);
void write_pointcloud_csv(const std::string& path, const PointCloud& cloud);

}  // namespace orbitsep
