#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitsep/feature_map.hpp"
#include "orbitsep/sym_matrix.hpp"

namespace orbitsep {

/// Result of enumerating the stabilizer {g : g.f = f} inside an enumerated
/// group, with equality decided by probabilistic polynomial identity testing
/// on random integer matrices.
struct FixerReport {
  std::size_t group_size = 0;
  std::vector<std::size_t> fixer_indices;      // indices into the enumeration
  std::vector<ProductGroupElement> fixers;
  int trials_per_element = 0;
  double evaluation_scale = 0.0;

  /// Closure under composition and inverse; the stabilizer property.
  bool is_subgroup() const;
};

/// g is reported a fixer iff |f(g^{-1} X_t) - f(X_t)| <= 1e-9 * scale for all
/// t, with X_t integer matrices (entries uniform on [-1000, 1000]) and scale
/// the largest |f| component seen on the trial matrices.
FixerReport fixer_subgroup(const FeatureMap<SymMatrix>& f,
                           const std::vector<ProductGroupElement>& group,
                           int trials = 32, std::uint64_t seed = 0,
                           int threads = 1);

struct GaloisWitness {
  std::size_t element_index;  // element of H not fixing some map
  std::size_t map_index;
};

struct GaloisCheck {
  bool distinguishing = false;
  std::vector<std::size_t> common_fixer_indices;
  /// Set when H is not contained in every fixer set: the f*s are not even
  /// H-invariant, a construction bug rather than a separation failure.
  std::optional<GaloisWitness> invariance_bug;
};

/// True iff the intersection of the fixer sets over f_stars equals H exactly.
/// H is given as an explicit element list contained in `group`.
GaloisCheck is_galois_distinguishing(
    const std::vector<FeatureMap<SymMatrix>>& f_stars,
    const std::vector<ProductGroupElement>& group,
    const std::vector<ProductGroupElement>& subgroup, int trials = 32,
    std::uint64_t seed = 0, int threads = 1);

struct BadSetWitness {
  std::size_t element_index = 0;  // g outside the stabilizer
  std::size_t map_index = 0;      // which f*
  Eigen::Index component = 0;     // scalar component of that map
  double residual = 0.0;
};

struct BadSetVerdict {
  bool member = false;
  std::vector<BadSetWitness> witnesses;  // residuals at or below zero_tol
  double zero_tol = 0.0;
};

/// Membership test for the explicit bad set B: the union over scalar
/// components f of the f_stars and over g outside the stabilizer of f of the
/// vanishing sets {X : f(g^{-1} X) - f(X) = 0}. Component stabilizers are
/// enumerated once at construction so scans over many matrices stay cheap.
class BadSetChecker {
 public:
  BadSetChecker(std::vector<FeatureMap<SymMatrix>> f_stars,
                std::vector<ProductGroupElement> group, int trials = 32,
                std::uint64_t seed = 0, int threads = 1);

  /// zero_tol = zero_tol_factor * max |component value| observed on X.
  BadSetVerdict check(const SymMatrix& x, double zero_tol_factor = 1e-9) const;

  const std::vector<ProductGroupElement>& group() const { return group_; }
  /// Stabilizer indices of component c of map j.
  const std::vector<std::size_t>& component_stabilizer(std::size_t j,
                                                       Eigen::Index c) const;

 private:
  std::vector<FeatureMap<SymMatrix>> f_stars_;
  std::vector<ProductGroupElement> group_;
  std::vector<ProductGroupElement> inverses_;
  // stabilizers_[j][c] = sorted element indices fixing component c of map j.
  std::vector<std::vector<std::vector<std::size_t>>> stabilizers_;
};

/// One-shot convenience wrapper around BadSetChecker.
BadSetVerdict bad_set_member(const SymMatrix& x,
                             const std::vector<FeatureMap<SymMatrix>>& f_stars,
                             const std::vector<ProductGroupElement>& group,
                             double zero_tol_factor = 1e-9, int trials = 32,
                             std::uint64_t seed = 0);

}  // namespace orbitsep
