#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "orbitsep/feature_map.hpp"
#include "orbitsep/parallel.hpp"
#include "orbitsep/repr.hpp"
#include "orbitsep/rng.hpp"

namespace orbitsep {

struct SeparationWitness {
  std::size_t trial = 0;
  std::string kind;              // "false_merge" or "false_split"
  double feature_distance = 0.0;
  double orbit_distance = 0.0;   // min over the group of the domain distance
  int in_bad_set = -1;           // 1 certified in B, 0 outside B, -1 unchecked
  std::string x_repr;
  std::string y_repr;
  std::string element_repr;      // the group element, for same-orbit pairs
};

/// Outcome record of invariance/separation trials. false_splits must stay
/// empty for exactly invariant families; a split is an invariance bug, not a
/// separation failure.
struct SeparationReport {
  std::string family;
  std::string action;
  std::size_t trials = 0;
  std::size_t same_orbit_pairs = 0;
  std::size_t distinct_orbit_pairs = 0;
  double tolerance = 0.0;
  std::vector<SeparationWitness> false_merges;
  std::vector<SeparationWitness> false_splits;

  bool clean() const { return false_merges.empty() && false_splits.empty(); }
  /// True when every false merge carries a bad-set certificate.
  bool merges_certified() const {
    for (const auto& w : false_merges)
      if (w.in_bad_set != 1) return false;
    return true;
  }
};

/// Ground-truth orbit equality by exhausting the group: true iff some g has
/// ||g*x1 - x2||_max <= tol.
template <class Action>
bool same_orbit_bruteforce(const Action& action,
                           const typename Action::Domain& x1,
                           const typename Action::Domain& x2, double tol = 1e-9,
                           std::size_t cap = 1000000) {
  for (const auto& g : action.enumerate(cap))
    if (Action::distance(action.apply(g, x1), x2) <= tol) return true;
  return false;
}

/// Min over the group of the domain distance; the quantitative version of the
/// oracle, recorded in witness rows.
template <class Action>
double orbit_distance_bruteforce(const Action& action,
                                 const typename Action::Domain& x1,
                                 const typename Action::Domain& x2,
                                 std::size_t cap = 1000000) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& g : action.enumerate(cap))
    best = std::min(best, Action::distance(action.apply(g, x1), x2));
  return best;
}

/// Same-orbit side of the harness: checks f(g*x) = f(x) on random (g, x).
/// Violations become false_split witnesses; they are data, not errors.
template <class Action, class Sampler>
SeparationReport invariance_test(const FeatureMap<typename Action::Domain>& f,
                                 const Action& action, Sampler&& sample,
                                 std::size_t trials, double tol,
                                 std::uint64_t seed, int threads = 1) {
  SeparationReport report;
  report.family = f.name;
  report.action = action.name();
  report.trials = trials;
  report.same_orbit_pairs = trials;
  report.tolerance = tol;

  std::vector<std::optional<SeparationWitness>> slots(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const auto x = sample(rng);
    const auto g = action.random_element(rng);
    const auto y = action.apply(g, x);
    const Eigen::VectorXd fx = f(x);
    const Eigen::VectorXd fy = f(y);
    if (!features_equal(fx, fy, tol)) {
      SeparationWitness w;
      w.trial = i;
      w.kind = "false_split";
      w.feature_distance = feature_distance(fx, fy);
      w.orbit_distance = 0.0;
      w.x_repr = repr(x);
      w.y_repr = repr(y);
      w.element_repr = repr(g);
      slots[i] = std::move(w);
    }
  });
  for (auto& slot : slots)
    if (slot) report.false_splits.push_back(std::move(*slot));
  return report;
}

/// Statistical separation trial: a 50/50 mix of constructed same-orbit pairs
/// and independent pairs, feature equality compared against the brute-force
/// orbit oracle. A false merge is a distinct-orbit pair with equal features;
/// when a bad-set checker is supplied every false merge is run through it and
/// the verdict recorded.
template <class Action, class Sampler>
SeparationReport separation_test(
    const FeatureMap<typename Action::Domain>& f, const Action& action,
    Sampler&& sample, std::size_t trials, double tol, std::uint64_t seed,
    const std::function<bool(const typename Action::Domain&)>& badset_checker =
        nullptr,
    int threads = 1, std::size_t enumeration_cap = 1000000) {
  SeparationReport report;
  report.family = f.name;
  report.action = action.name();
  report.trials = trials;
  report.tolerance = tol;

  struct Slot {
    bool same_orbit = false;
    std::optional<SeparationWitness> witness;
  };
  std::vector<Slot> slots(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const auto x = sample(rng);
    const bool construct_same = (i % 2 == 0);
    typename Action::Domain y =
        construct_same ? action.apply(action.random_element(rng), x)
                       : sample(rng);
    const bool same =
        construct_same
            ? true
            : same_orbit_bruteforce(action, x, y, 1e-9, enumeration_cap);
    slots[i].same_orbit = same;
    const Eigen::VectorXd fx = f(x);
    const Eigen::VectorXd fy = f(y);
    const bool equal = features_equal(fx, fy, tol);
    if (equal == same) return;
    SeparationWitness w;
    w.trial = i;
    w.kind = same ? "false_split" : "false_merge";
    w.feature_distance = feature_distance(fx, fy);
    w.orbit_distance =
        same ? 0.0 : orbit_distance_bruteforce(action, x, y, enumeration_cap);
    if (!same && badset_checker)
      w.in_bad_set = (badset_checker(x) || badset_checker(y)) ? 1 : 0;
    w.x_repr = repr(x);
    w.y_repr = repr(y);
    slots[i].witness = std::move(w);
  });
  for (auto& slot : slots) {
    if (slot.same_orbit)
      ++report.same_orbit_pairs;
    else
      ++report.distinct_orbit_pairs;
    if (!slot.witness) continue;
    if (slot.witness->kind == "false_split")
      report.false_splits.push_back(std::move(*slot.witness));
    else
      report.false_merges.push_back(std::move(*slot.witness));
  }
  return report;
}

template <class X>
struct CollisionWitness {
  X x;
  X y;
  double feature_distance = 0.0;
  double orbit_distance = 0.0;
  std::size_t candidates_tried = 0;
};

/// Searches for two points in distinct orbits with (near-)equal features.
/// Random independent pairs never collide numerically, so the search walks
/// structured candidates proposed from each sampled base point (e.g.
/// root-of-unity twists). The budget counts candidate evaluations.
template <class Action, class Sampler, class CandidateGen>
std::optional<CollisionWitness<typename Action::Domain>> collision_search(
    const FeatureMap<typename Action::Domain>& f, const Action& action,
    Sampler&& sample, CandidateGen&& candidates, std::size_t budget,
    std::uint64_t seed, double feature_tol = 1e-9,
    std::size_t enumeration_cap = 1000000) {
  std::size_t tried = 0;
  std::uint64_t base_index = 0;
  while (tried < budget) {
    Rng rng(derive_seed(seed, base_index++));
    const auto x = sample(rng);
    const Eigen::VectorXd fx = f(x);
    for (const auto& y : candidates(x)) {
      if (tried >= budget) break;
      ++tried;
      const Eigen::VectorXd fy = f(y);
      if (feature_distance(fx, fy) > feature_tol) continue;
      if (same_orbit_bruteforce(action, x, y, 1e-9, enumeration_cap)) continue;
      CollisionWitness<typename Action::Domain> w;
      w.x = x;
      w.y = y;
      w.feature_distance = feature_distance(fx, fy);
      w.orbit_distance = orbit_distance_bruteforce(action, x, y, enumeration_cap);
      w.candidates_tried = tried;
      return w;
    }
  }
  return std::nullopt;
}

/// Root-of-unity twist proposals for the scalar action on C^2: all
/// (zeta_M^a x, zeta_M^b y) with M = 2n. Multiplying the coordinates by
/// unrelated 2n-th roots stays inside the feature fibers exactly when the
/// exponent pattern allows it, which is how non-coprime collisions appear.
std::vector<ComplexPair> root_twist_candidates(const ComplexPair& pt, int n);

}  // namespace orbitsep
