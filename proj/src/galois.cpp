#include "orbitsep/galois.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "orbitsep/parallel.hpp"
#include "orbitsep/rng.hpp"

namespace orbitsep {

namespace {

std::vector<SymMatrix> pit_trial_matrices(int n, int trials,
                                          std::uint64_t seed) {
  std::vector<SymMatrix> xs;
  xs.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    xs.push_back(SymMatrix::random_integer(n, -1000, 1000, rng));
  }
  return xs;
}

}  // namespace

bool FixerReport::is_subgroup() const {
  std::set<ProductGroupElement> members(fixers.begin(), fixers.end());
  for (const auto& a : fixers) {
    if (!members.count(a.inverse())) return false;
    for (const auto& b : fixers)
      if (!members.count(a.compose(b))) return false;
  }
  return true;
}

FixerReport fixer_subgroup(const FeatureMap<SymMatrix>& f,
                           const std::vector<ProductGroupElement>& group,
                           int trials, std::uint64_t seed, int threads) {
  if (trials < 1) throw DimensionError("fixer enumeration needs trials >= 1");
  if (group.empty()) throw DimensionError("empty group");
  const int n = group.front().n();

  const auto xs = pit_trial_matrices(n, trials, seed);
  std::vector<Eigen::VectorXd> fx;
  fx.reserve(xs.size());
  double scale = 0.0;
  for (const auto& x : xs) {
    fx.push_back(f(x));
    scale = std::max(scale, fx.back().cwiseAbs().maxCoeff());
  }
  const double tol = 1e-9 * scale;

  std::vector<char> fixer_flags(group.size(), 0);
  parallel_for(group.size(), threads, [&](std::size_t gi) {
    const ProductGroupElement ginv = group[gi].inverse();
    for (std::size_t t = 0; t < xs.size(); ++t) {
      const Eigen::VectorXd moved = f(apply_product(ginv, xs[t]));
      if ((moved - fx[t]).cwiseAbs().maxCoeff() > tol) return;
    }
    fixer_flags[gi] = 1;
  });

  FixerReport report;
  report.group_size = group.size();
  report.trials_per_element = trials;
  report.evaluation_scale = scale;
  for (std::size_t gi = 0; gi < group.size(); ++gi)
    if (fixer_flags[gi]) {
      report.fixer_indices.push_back(gi);
      report.fixers.push_back(group[gi]);
    }
  return report;
}

GaloisCheck is_galois_distinguishing(
    const std::vector<FeatureMap<SymMatrix>>& f_stars,
    const std::vector<ProductGroupElement>& group,
    const std::vector<ProductGroupElement>& subgroup, int trials,
    std::uint64_t seed, int threads) {
  GaloisCheck result;

  // Intersection of fixer sets; empty list of maps fixes everything.
  std::vector<std::size_t> common(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) common[i] = i;
  std::vector<FixerReport> reports;
  reports.reserve(f_stars.size());
  for (const auto& f : f_stars) {
    reports.push_back(fixer_subgroup(f, group, trials,
                                     derive_seed(seed, reports.size()),
                                     threads));
    std::vector<std::size_t> next;
    std::set_intersection(common.begin(), common.end(),
                          reports.back().fixer_indices.begin(),
                          reports.back().fixer_indices.end(),
                          std::back_inserter(next));
    common.swap(next);
  }
  result.common_fixer_indices = common;

  // Map subgroup elements to enumeration indices for exact set comparison.
  std::set<std::size_t> common_set(common.begin(), common.end());
  std::set<std::size_t> subgroup_indices;
  for (const auto& h : subgroup) {
    const auto it = std::find(group.begin(), group.end(), h);
    if (it == group.end())
      throw DimensionError("subgroup element not found in the group");
    subgroup_indices.insert(static_cast<std::size_t>(it - group.begin()));
  }

  // H must sit inside every fixer set; otherwise report the offending pair.
  for (std::size_t j = 0; j < reports.size(); ++j) {
    for (std::size_t hi : subgroup_indices) {
      if (!std::binary_search(reports[j].fixer_indices.begin(),
                              reports[j].fixer_indices.end(), hi)) {
        result.invariance_bug = GaloisWitness{hi, j};
        result.distinguishing = false;
        return result;
      }
    }
  }

  result.distinguishing = common_set == subgroup_indices;
  return result;
}

BadSetChecker::BadSetChecker(std::vector<FeatureMap<SymMatrix>> f_stars,
                             std::vector<ProductGroupElement> group,
                             int trials, std::uint64_t seed, int threads)
    : f_stars_(std::move(f_stars)), group_(std::move(group)) {
  if (group_.empty()) throw DimensionError("empty group");
  const int n = group_.front().n();
  inverses_.reserve(group_.size());
  for (const auto& g : group_) inverses_.push_back(g.inverse());

  const auto xs = pit_trial_matrices(n, trials, seed);
  stabilizers_.resize(f_stars_.size());
  for (std::size_t j = 0; j < f_stars_.size(); ++j) {
    const auto& f = f_stars_[j];
    std::vector<Eigen::VectorXd> fx;
    fx.reserve(xs.size());
    double scale = 0.0;
    for (const auto& x : xs) {
      fx.push_back(f(x));
      scale = std::max(scale, fx.back().cwiseAbs().maxCoeff());
    }
    const double tol = 1e-9 * scale;

    // flags[gi * len + c] = 1 while g still fixes component c on all trials.
    const Eigen::Index len = f.output_len;
    std::vector<char> flags(group_.size() * static_cast<std::size_t>(len), 1);
    parallel_for(group_.size(), threads, [&](std::size_t gi) {
      for (std::size_t t = 0; t < xs.size(); ++t) {
        const Eigen::VectorXd moved = f(apply_product(inverses_[gi], xs[t]));
        for (Eigen::Index c = 0; c < len; ++c)
          if (std::abs(moved(c) - fx[t](c)) > tol)
            flags[gi * static_cast<std::size_t>(len) +
                  static_cast<std::size_t>(c)] = 0;
      }
    });

    stabilizers_[j].resize(static_cast<std::size_t>(len));
    for (Eigen::Index c = 0; c < len; ++c)
      for (std::size_t gi = 0; gi < group_.size(); ++gi)
        if (flags[gi * static_cast<std::size_t>(len) +
                  static_cast<std::size_t>(c)])
          stabilizers_[j][static_cast<std::size_t>(c)].push_back(gi);
  }
}

const std::vector<std::size_t>& BadSetChecker::component_stabilizer(
    std::size_t j, Eigen::Index c) const {
  return stabilizers_.at(j).at(static_cast<std::size_t>(c));
}

BadSetVerdict BadSetChecker::check(const SymMatrix& x,
                                   double zero_tol_factor) const {
  BadSetVerdict verdict;

  std::vector<Eigen::VectorXd> fx;
  fx.reserve(f_stars_.size());
  double scale = 0.0;
  for (const auto& f : f_stars_) {
    fx.push_back(f(x));
    scale = std::max(scale, fx.back().cwiseAbs().maxCoeff());
  }
  verdict.zero_tol = zero_tol_factor * scale;

  for (std::size_t j = 0; j < f_stars_.size(); ++j) {
    const Eigen::Index len = f_stars_[j].output_len;
    for (std::size_t gi = 0; gi < group_.size(); ++gi) {
      // Skip elements stabilizing every component; nothing to evaluate.
      bool all_fixed = true;
      for (Eigen::Index c = 0; c < len && all_fixed; ++c)
        all_fixed = std::binary_search(stabilizers_[j][c].begin(),
                                       stabilizers_[j][c].end(), gi);
      if (all_fixed) continue;
      const Eigen::VectorXd moved = f_stars_[j](apply_product(inverses_[gi], x));
      for (Eigen::Index c = 0; c < len; ++c) {
        if (std::binary_search(stabilizers_[j][c].begin(),
                               stabilizers_[j][c].end(), gi))
          continue;
        const double residual = moved(c) - fx[j](c);
        if (std::abs(residual) <= verdict.zero_tol)
          verdict.witnesses.push_back(
              BadSetWitness{gi, j, c, residual});
      }
    }
  }
  verdict.member = !verdict.witnesses.empty();
  return verdict;
}

BadSetVerdict bad_set_member(const SymMatrix& x,
                             const std::vector<FeatureMap<SymMatrix>>& f_stars,
                             const std::vector<ProductGroupElement>& group,
                             double zero_tol_factor, int trials,
                             std::uint64_t seed) {
  BadSetChecker checker(f_stars, group, trials, seed);
  return checker.check(x, zero_tol_factor);
}

}  // namespace orbitsep
