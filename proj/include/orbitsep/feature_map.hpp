#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "orbitsep/errors.hpp"

namespace orbitsep {

/// A named deterministic invariant family: a pure map from a data space to a
/// real feature vector of fixed length. Complex-valued families emit
/// interleaved (re, im) components.
template <class X>
struct FeatureMap {
  std::string name;
  Eigen::Index output_len = 0;
  std::function<Eigen::VectorXd(const X&)> eval;

  Eigen::VectorXd operator()(const X& x) const { return eval(x); }
};

/// Concatenation of a G-invariant family with extra H-invariant maps;
/// output length is additive.
template <class X>
FeatureMap<X> combine(const FeatureMap<X>& g_invariants,
                      const std::vector<FeatureMap<X>>& f_stars) {
  Eigen::Index total = g_invariants.output_len;
  for (const auto& f : f_stars) total += f.output_len;
  std::string name = g_invariants.name;
  for (const auto& f : f_stars) name += "+" + f.name;
  auto parts = f_stars;
  auto head = g_invariants;
  return FeatureMap<X>{
      std::move(name), total,
      [head = std::move(head), parts = std::move(parts), total](const X& x) {
        Eigen::VectorXd out(total);
        Eigen::Index at = 0;
        Eigen::VectorXd h = head.eval(x);
        out.segment(at, h.size()) = h;
        at += h.size();
        for (const auto& f : parts) {
          Eigen::VectorXd v = f.eval(x);
          out.segment(at, v.size()) = v;
          at += v.size();
        }
        return out;
      }};
}

/// Relative max-norm feature equality: ||a - b||_inf <= tol * (1 + scale)
/// with scale the larger max-norm of the two vectors.
inline bool features_equal(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                           double tol) {
  if (a.size() != b.size()) throw DimensionError("feature length mismatch");
  const double scale =
      std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
  return (a - b).cwiseAbs().maxCoeff() <= tol * (1.0 + scale);
}

inline double feature_distance(const Eigen::VectorXd& a,
                               const Eigen::VectorXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace orbitsep
