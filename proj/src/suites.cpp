#include "orbitsep/suites.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "orbitsep/actions.hpp"
#include "orbitsep/galois.hpp"
#include "orbitsep/invariants.hpp"
#include "orbitsep/linalg.hpp"
#include "orbitsep/oracle.hpp"
#include "orbitsep/pointcloud.hpp"

namespace orbitsep {

namespace {

Table witness_table() {
  return Table{{"trial", "kind", "feature_distance", "orbit_distance",
                "in_bad_set", "x", "y", "element"},
               {}};
}

void append_witnesses(Table& table, const SeparationReport& report) {
  auto add = [&table](const SeparationWitness& w) {
    std::string badset = w.in_bad_set < 0 ? "" : (w.in_bad_set ? "1" : "0");
    table.add_row({std::to_string(w.trial), w.kind,
                   fmt_double(w.feature_distance), fmt_double(w.orbit_distance),
                   badset, w.x_repr, w.y_repr, w.element_repr});
  };
  for (const auto& w : report.false_splits) add(w);
  for (const auto& w : report.false_merges) add(w);
}

void summarize_counts(Report& out, const SeparationReport& rep) {
  out.add_summary("trials", std::to_string(rep.trials));
  out.add_summary("same_orbit_pairs", std::to_string(rep.same_orbit_pairs));
  out.add_summary("distinct_orbit_pairs",
                  std::to_string(rep.distinct_orbit_pairs));
  out.add_summary("false_splits", std::to_string(rep.false_splits.size()));
  out.add_summary("false_merges", std::to_string(rep.false_merges.size()));
  out.add_summary("tolerance", fmt_double(rep.tolerance));
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kConjugation: return "conjugation";
    case Family::kDiagOffdiag: return "diag_offdiag";
    case Family::kFStar: return "f_star";
    case Family::kFourier: return "fourier";
    case Family::kVeronese: return "veronese";
    case Family::kSortSep: return "sortsep";
    case Family::kCloud: return "cloud";
  }
  return "?";
}

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "conjugation") return Family::kConjugation;
  if (name == "diag_offdiag") return Family::kDiagOffdiag;
  if (name == "f_star") return Family::kFStar;
  if (name == "fourier") return Family::kFourier;
  if (name == "veronese") return Family::kVeronese;
  if (name == "sortsep") return Family::kSortSep;
  if (name == "cloud") return Family::kCloud;
  throw DimensionError("unknown family: " + name);
}

SuiteResult run_invariance_suite(Family family, const FamilyParams& params,
                                 std::size_t trials, double tol,
                                 std::uint64_t seed, int threads) {
  const int n = params.n;
  SeparationReport rep;
  switch (family) {
    case Family::kConjugation:
    case Family::kDiagOffdiag:
    case Family::kFStar: {
      FeatureMap<SymMatrix> f =
          family == Family::kConjugation   ? make_conjugation_map(n)
          : family == Family::kDiagOffdiag ? make_diag_offdiag_map(n)
                                           : make_f_star_map(n);
      rep = invariance_test(
          f, ConjugationAction{n},
          [n](Rng& rng) { return SymMatrix::random_gaussian(n, rng); }, trials,
          tol, seed, threads);
      break;
    }
    case Family::kFourier:
      rep = invariance_test(
          make_fourier_map(n), CyclicShiftAction{n},
          [n](Rng& rng) { return Signal::random_real(n, rng); }, trials, tol,
          seed, threads);
      break;
    case Family::kVeronese:
      rep = invariance_test(
          make_veronese_separator_map(n, params.j), ScalarRootAction{n},
          [](Rng& rng) { return random_complex_pair(rng); }, trials, tol, seed,
          threads);
      break;
    case Family::kSortSep: {
      const int count = params.count > 0
                            ? params.count
                            : SortSeparatorFamily::default_count(n, params.d);
      const int d = params.d;
      rep = invariance_test(
          make_sort_separator_map(n, d, count, seed), RowPermAction{n, d},
          [n, d](Rng& rng) {
            Eigen::MatrixXd x(n, d);
            for (int i = 0; i < n; ++i)
              for (int c = 0; c < d; ++c) x(i, c) = rng.normal();
            return x;
          },
          trials, tol, seed, threads);
      break;
    }
    case Family::kCloud: {
      // Dedicated path: the motion group (R, Pi, t) is not enumerable.
      return run_pointcloud_suite(params.d, n, trials, 0, tol, seed, threads);
    }
  }

  SuiteResult result;
  result.report.add_summary("suite", "invariance");
  result.report.add_summary("family", rep.family);
  result.report.add_summary("action", rep.action);
  summarize_counts(result.report, rep);
  result.report.table = witness_table();
  append_witnesses(result.report.table, rep);
  result.exit_code = rep.clean() ? kExitPass : kExitViolations;
  result.summary_line = rep.family + " invariance: " +
                        std::to_string(rep.false_splits.size()) +
                        " violations in " + std::to_string(trials) + " trials";
  return result;
}

SuiteResult run_separation_suite(Family family, const FamilyParams& params,
                                 std::size_t pairs, double tol,
                                 std::uint64_t seed, int threads) {
  const int n = params.n;
  SeparationReport rep;
  switch (family) {
    case Family::kConjugation:
    case Family::kDiagOffdiag:
    case Family::kFStar: {
      FeatureMap<SymMatrix> f =
          family == Family::kConjugation   ? make_conjugation_map(n)
          : family == Family::kDiagOffdiag ? make_diag_offdiag_map(n)
                                           : make_f_star_map(n);
      std::function<bool(const SymMatrix&)> badset_checker;
      std::shared_ptr<BadSetChecker> checker;
      if (family == Family::kConjugation && n <= 4) {
        checker = std::make_shared<BadSetChecker>(
            std::vector<FeatureMap<SymMatrix>>{make_f_star_map(n)},
            enumerate_product(n), 32, seed, threads);
        badset_checker = [checker](const SymMatrix& x) {
          return checker->check(x).member;
        };
      }
      rep = separation_test(
          f, ConjugationAction{n},
          [n](Rng& rng) { return SymMatrix::random_gaussian(n, rng); }, pairs,
          tol, seed, badset_checker, threads, 40320);
      break;
    }
    case Family::kFourier:
      rep = separation_test(
          make_fourier_map(n), CyclicShiftAction{n},
          [n](Rng& rng) { return Signal::random_real(n, rng); }, pairs, tol,
          seed, nullptr, threads, 4096);
      break;
    case Family::kVeronese:
      rep = separation_test(
          make_veronese_separator_map(n, params.j), ScalarRootAction{n},
          [](Rng& rng) { return random_complex_pair(rng); }, pairs, tol, seed,
          nullptr, threads, 64);
      break;
    case Family::kSortSep: {
      const int count = params.count > 0
                            ? params.count
                            : SortSeparatorFamily::default_count(n, params.d);
      const int d = params.d;
      rep = separation_test(
          make_sort_separator_map(n, d, count, seed), RowPermAction{n, d},
          [n, d](Rng& rng) {
            Eigen::MatrixXd x(n, d);
            for (int i = 0; i < n; ++i)
              for (int c = 0; c < d; ++c) x(i, c) = rng.normal();
            return x;
          },
          pairs, tol, seed, nullptr, threads, 40320);
      break;
    }
    case Family::kCloud:
      return run_pointcloud_suite(params.d, n, 0, pairs, tol, seed, threads);
  }

  SuiteResult result;
  result.report.add_summary("suite", "separation");
  result.report.add_summary("family", rep.family);
  result.report.add_summary("action", rep.action);
  summarize_counts(result.report, rep);
  result.report.table = witness_table();
  append_witnesses(result.report.table, rep);
  const bool pass = rep.false_splits.empty() && rep.merges_certified();
  result.exit_code = pass ? kExitPass : kExitViolations;
  result.summary_line =
      rep.family + " separation: " + std::to_string(rep.false_merges.size()) +
      " false merges, " + std::to_string(rep.false_splits.size()) +
      " false splits in " + std::to_string(pairs) + " pairs";
  return result;
}

SuiteResult run_galois_suite(int n, int trials, std::uint64_t seed,
                             std::size_t cap, int threads) {
  const auto group = enumerate_product(n, cap);
  const auto embedded = enumerate_embedded_symmetric(n, cap);
  const auto f = make_f_star_map(n);

  const FixerReport fixers = fixer_subgroup(f, group, trials, seed, threads);
  const GaloisCheck check = is_galois_distinguishing({f}, group, embedded,
                                                     trials, seed, threads);

  // Exact set equality between the fixers and the embedded copy of S_n.
  std::set<ProductGroupElement> embedded_set(embedded.begin(), embedded.end());
  bool exact = fixers.fixers.size() == embedded.size();
  std::size_t embedded_found = 0;
  for (const auto& g : fixers.fixers)
    if (embedded_set.count(g))
      ++embedded_found;
    else
      exact = false;

  SuiteResult result;
  result.report.add_summary("suite", "galois-check");
  result.report.add_summary("n", std::to_string(n));
  result.report.add_summary("group_size", std::to_string(group.size()));
  result.report.add_summary("fixer_count", std::to_string(fixers.fixers.size()));
  result.report.add_summary("expected_fixers", std::to_string(embedded.size()));
  result.report.add_summary("embedded_found", std::to_string(embedded_found));
  result.report.add_summary("exact_match", exact ? "1" : "0");
  result.report.add_summary("distinguishing", check.distinguishing ? "1" : "0");
  result.report.add_summary("subgroup_closed",
                            fixers.is_subgroup() ? "1" : "0");
  result.report.add_summary("trials_per_element",
                            std::to_string(fixers.trials_per_element));
  result.report.add_summary("evaluation_scale",
                            fmt_double(fixers.evaluation_scale));

  result.report.table =
      Table{{"fixer_index", "sigma", "tau", "is_embedded"}, {}};
  for (std::size_t i = 0; i < fixers.fixers.size(); ++i) {
    const auto& g = fixers.fixers[i];
    result.report.table.add_row({std::to_string(fixers.fixer_indices[i]),
                                 repr(g.sigma), repr(g.tau),
                                 embedded_set.count(g) ? "1" : "0"});
  }

  const bool pass = exact && check.distinguishing && fixers.is_subgroup();
  result.exit_code = pass ? kExitPass : kExitViolations;
  result.summary_line = "galois-check n=" + std::to_string(n) + ": " +
                        std::to_string(fixers.fixers.size()) + " fixers of " +
                        std::to_string(group.size()) +
                        (pass ? " (exactly the embedded S_n)"
                              : " (MISMATCH with embedded S_n)");
  return result;
}

SuiteResult run_badset_suite(int n, std::size_t trials,
                             double zero_tol_factor, std::uint64_t seed,
                             std::size_t cap, int threads) {
  SuiteResult result;
  result.report.add_summary("suite", "badset");
  const auto group = enumerate_product(n, cap);
  BadSetChecker checker({make_f_star_map(n)}, group, 32, seed, threads);

  struct Row {
    std::size_t trial;
    std::string matrix;
    BadSetWitness witness;
    double zero_tol;
  };
  std::vector<std::optional<Row>> slots(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const SymMatrix x = SymMatrix::random_gaussian(n, rng);
    const BadSetVerdict verdict = checker.check(x, zero_tol_factor);
    if (verdict.member)
      slots[i] = Row{i, repr(x), verdict.witnesses.front(), verdict.zero_tol};
  });

  result.report.table = Table{
      {"trial", "matrix", "element_index", "map_index", "component",
       "residual", "zero_tol"},
      {}};
  std::size_t members = 0;
  for (const auto& slot : slots) {
    if (!slot) continue;
    ++members;
    result.report.table.add_row(
        {std::to_string(slot->trial), slot->matrix,
         std::to_string(slot->witness.element_index),
         std::to_string(slot->witness.map_index),
         std::to_string(slot->witness.component),
         fmt_double(slot->witness.residual), fmt_double(slot->zero_tol)});
  }
  result.report.add_summary("n", std::to_string(n));
  result.report.add_summary("trials", std::to_string(trials));
  result.report.add_summary("members", std::to_string(members));
  result.report.add_summary("zero_tol_factor", fmt_double(zero_tol_factor));
  result.exit_code = members == 0 ? kExitPass : kExitViolations;
  result.summary_line = "badset n=" + std::to_string(n) + ": " +
                        std::to_string(members) + " members in " +
                        std::to_string(trials) + " Gaussian samples";
  return result;
}

SuiteResult run_veronese_suite(int n, int j, std::size_t pairs,
                               std::size_t budget, std::uint64_t seed,
                               int threads) {
  const int g = std::gcd(j, n);
  const auto f = make_veronese_separator_map(n, j);
  const ScalarRootAction action{n};
  auto sampler = [](Rng& rng) { return random_complex_pair(rng); };

  const SeparationReport rep = separation_test(f, action, sampler, pairs, 1e-9,
                                               seed, nullptr, threads, 64);

  const auto collision = collision_search(
      f, action, sampler,
      [n](const ComplexPair& pt) { return root_twist_candidates(pt, n); },
      budget, derive_seed(seed, 0x9e1ULL), 1e-9, 64);

  SuiteResult result;
  result.report.add_summary("suite", "veronese");
  result.report.add_summary("n", std::to_string(n));
  result.report.add_summary("j", std::to_string(j));
  result.report.add_summary("gcd", std::to_string(g));
  summarize_counts(result.report, rep);
  result.report.add_summary("budget", std::to_string(budget));
  result.report.add_summary("collision_found", collision ? "1" : "0");

  result.report.table = witness_table();
  append_witnesses(result.report.table, rep);
  if (collision) {
    result.report.table.add_row(
        {std::to_string(collision->candidates_tried), "collision",
         fmt_double(collision->feature_distance),
         fmt_double(collision->orbit_distance), "", repr(collision->x),
         repr(collision->y), ""});
  }

  const bool violations = !rep.clean() || collision.has_value();
  result.exit_code = violations ? kExitViolations : kExitPass;
  std::ostringstream line;
  line << "veronese n=" << n << " j=" << j << " (gcd " << g << "): "
       << rep.false_merges.size() << " false merges / "
       << rep.false_splits.size() << " false splits in " << pairs << " pairs; "
       << (collision ? "collision witness found" : "no collision within budget");
  result.summary_line = line.str();
  return result;
}

SuiteResult run_sortsep_suite(int n, int d, int count, std::size_t pairs,
                              std::uint64_t seed, int threads) {
  if (count <= 0) count = SortSeparatorFamily::default_count(n, d);
  const auto f = make_sort_separator_map(n, d, count, seed);
  const RowPermAction action{n, d};
  auto sampler = [n, d](Rng& rng) {
    Eigen::MatrixXd x(n, d);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < d; ++c) x(i, c) = rng.normal();
    return x;
  };

  // Invariance at zero tolerance: sorting absorbs row permutations exactly.
  const SeparationReport inv =
      invariance_test(f, action, sampler, pairs, 0.0, seed, threads);
  const SeparationReport sep =
      separation_test(f, action, sampler, pairs, 1e-9, derive_seed(seed, 1),
                      nullptr, threads, 40320);

  SuiteResult result;
  result.report.add_summary("suite", "sortsep");
  result.report.add_summary("n", std::to_string(n));
  result.report.add_summary("d", std::to_string(d));
  result.report.add_summary("count", std::to_string(count));
  result.report.add_summary("invariance_trials", std::to_string(inv.trials));
  result.report.add_summary("invariance_violations",
                            std::to_string(inv.false_splits.size()));
  summarize_counts(result.report, sep);
  result.report.table = witness_table();
  append_witnesses(result.report.table, inv);
  append_witnesses(result.report.table, sep);

  const bool pass = inv.clean() && sep.clean();
  result.exit_code = pass ? kExitPass : kExitViolations;
  std::ostringstream line;
  line << "sortsep n=" << n << " d=" << d << " count=" << count << ": "
       << inv.false_splits.size() << " invariance violations, "
       << sep.false_merges.size() << " false merges in " << pairs << " pairs";
  result.summary_line = line.str();
  return result;
}

SuiteResult run_pointcloud_suite(int d, int n, std::size_t invariance_trials,
                                 std::size_t pairs, double tol,
                                 std::uint64_t seed, int threads) {
  SuiteResult result;
  result.report.add_summary("suite", "pointcloud");
  result.report.add_summary("d", std::to_string(d));
  result.report.add_summary("n", std::to_string(n));
  result.report.table = witness_table();

  auto sample_cloud = [d, n](Rng& rng) {
    return PointCloud::random_gaussian(d, n, rng);
  };

  // Invariance under random rigid motions (R, Pi, t) plus reflections.
  std::vector<std::optional<SeparationWitness>> inv_slots(invariance_trials);
  parallel_for(invariance_trials, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const PointCloud x = sample_cloud(rng);
    const Eigen::MatrixXd rotation = random_orthogonal(d, rng);
    const Permutation perm = Permutation::random(n, rng);
    Eigen::VectorXd shift(d);
    for (int c = 0; c < d; ++c) shift(c) = rng.normal();
    PointCloud y = permute_columns(x, perm);
    y.coords = (rotation * y.coords).colwise() + shift;

    const Eigen::VectorXd fx = cloud_invariants(x);
    const Eigen::VectorXd fy = cloud_invariants(y);
    if (!features_equal(fx, fy, tol)) {
      SeparationWitness w;
      w.trial = i;
      w.kind = "false_split";
      w.feature_distance = feature_distance(fx, fy);
      w.x_repr = repr(x.coords);
      w.y_repr = repr(y.coords);
      w.element_repr = "(R=" + repr(rotation) + ",perm=" + repr(perm) +
                       ",t=" + repr(shift) + ")";
      inv_slots[i] = std::move(w);
    }
  });

  // Separation against the Procrustes + permutation oracle on mixed pairs.
  std::shared_ptr<BadSetChecker> checker;
  if (n >= 2 && n <= 4)
    checker = std::make_shared<BadSetChecker>(
        std::vector<FeatureMap<SymMatrix>>{make_f_star_map(n)},
        enumerate_product(n), 32, seed, threads);

  std::vector<std::optional<SeparationWitness>> sep_slots(pairs);
  std::vector<char> same_flags(pairs, 0);
  parallel_for(pairs, threads, [&](std::size_t i) {
    Rng rng(derive_seed(derive_seed(seed, 0xC10DULL), i));
    const PointCloud x = sample_cloud(rng);
    PointCloud y;
    if (i % 2 == 0) {
      const Eigen::MatrixXd rotation = random_orthogonal(d, rng);
      const Permutation perm = Permutation::random(n, rng);
      Eigen::VectorXd shift(d);
      for (int c = 0; c < d; ++c) shift(c) = rng.normal();
      y = permute_columns(x, perm);
      y.coords = (rotation * y.coords).colwise() + shift;
    } else {
      y = sample_cloud(rng);
    }
    const AlignmentResult alignment = best_alignment(x, y);
    const bool same = alignment.same_orbit(1e-6);
    same_flags[i] = same ? 1 : 0;
    const Eigen::VectorXd fx = cloud_invariants(x);
    const Eigen::VectorXd fy = cloud_invariants(y);
    const bool equal = features_equal(fx, fy, tol);
    if (equal == same) return;
    SeparationWitness w;
    w.trial = i;
    w.kind = same ? "false_split" : "false_merge";
    w.feature_distance = feature_distance(fx, fy);
    w.orbit_distance = alignment.residual;
    if (!same && checker)
      w.in_bad_set = (checker->check(gram(center(x))).member ||
                      checker->check(gram(center(y))).member)
                         ? 1
                         : 0;
    w.x_repr = repr(x.coords);
    w.y_repr = repr(y.coords);
    sep_slots[i] = std::move(w);
  });

  std::size_t inv_violations = 0;
  for (auto& slot : inv_slots)
    if (slot) {
      ++inv_violations;
      result.report.table.add_row(
          {std::to_string(slot->trial), slot->kind,
           fmt_double(slot->feature_distance), fmt_double(slot->orbit_distance),
           "", slot->x_repr, slot->y_repr, slot->element_repr});
    }

  std::size_t same_orbit = 0, distinct_orbit = 0, merges = 0, splits = 0;
  bool merges_certified = true;
  for (std::size_t i = 0; i < pairs; ++i) {
    if (same_flags[i])
      ++same_orbit;
    else
      ++distinct_orbit;
    auto& slot = sep_slots[i];
    if (!slot) continue;
    if (slot->kind == "false_merge") {
      ++merges;
      if (slot->in_bad_set != 1) merges_certified = false;
    } else {
      ++splits;
    }
    std::string badset = slot->in_bad_set < 0 ? "" : (slot->in_bad_set ? "1" : "0");
    result.report.table.add_row(
        {std::to_string(slot->trial), slot->kind,
         fmt_double(slot->feature_distance), fmt_double(slot->orbit_distance),
         badset, slot->x_repr, slot->y_repr, ""});
  }

  result.report.add_summary("invariance_trials",
                            std::to_string(invariance_trials));
  result.report.add_summary("invariance_violations",
                            std::to_string(inv_violations));
  result.report.add_summary("pairs", std::to_string(pairs));
  result.report.add_summary("same_orbit_pairs", std::to_string(same_orbit));
  result.report.add_summary("distinct_orbit_pairs",
                            std::to_string(distinct_orbit));
  result.report.add_summary("false_merges", std::to_string(merges));
  result.report.add_summary("false_splits", std::to_string(splits));
  result.report.add_summary("tolerance", fmt_double(tol));

  const bool pass = inv_violations == 0 && splits == 0 &&
                    (merges == 0 || merges_certified);
  result.exit_code = pass ? kExitPass : kExitViolations;
  std::ostringstream line;
  line << "pointcloud d=" << d << " n=" << n << ": " << inv_violations
       << " invariance violations in " << invariance_trials << " motions, "
       << merges << " false merges / " << splits << " false splits in "
       << pairs << " pairs";
  result.summary_line = line.str();
  return result;
}

SuiteResult run_pointcloud_files(const std::string& path1,
                                 const std::string& path2, double tol) {
  SuiteResult result;
  const PointCloud p1 = read_pointcloud_csv(path1);
  result.report.add_summary("suite", "pointcloud-files");
  result.report.add_summary("in", path1);
  result.report.add_summary("d", std::to_string(p1.dim()));
  result.report.add_summary("n", std::to_string(p1.count()));

  if (path2.empty()) {
    const Eigen::VectorXd features = cloud_invariants(p1);
    result.report.table = Table{{"feature_index", "value"}, {}};
    for (Eigen::Index i = 0; i < features.size(); ++i)
      result.report.table.add_row({std::to_string(i), fmt_double(features(i))});
    result.summary_line = "pointcloud features: " +
                          std::to_string(features.size()) + " values from " +
                          path1;
    return result;
  }

  const PointCloud p2 = read_pointcloud_csv(path2);
  result.report.add_summary("in2", path2);
  const AlignmentResult alignment = best_alignment(p1, p2);
  const Eigen::VectorXd f1 = cloud_invariants(p1);
  const Eigen::VectorXd f2 = cloud_invariants(p2);
  const bool equal = features_equal(f1, f2, tol);
  const bool same = alignment.same_orbit(1e-6);

  result.report.add_summary("feature_distance", fmt_double(feature_distance(f1, f2)));
  result.report.add_summary("features_equal", equal ? "1" : "0");
  result.report.add_summary("alignment_residual", fmt_double(alignment.residual));
  result.report.add_summary("alignment_scale", fmt_double(alignment.scale));
  result.report.add_summary("same_orbit", same ? "1" : "0");
  result.report.table = Table{{"field", "value"}, {}};
  result.report.table.add_row({"rotation", repr(alignment.rotation)});
  result.report.table.add_row({"permutation", repr(alignment.permutation)});
  result.report.table.add_row({"translation", repr(alignment.translation)});
  result.report.table.add_row({"residual", fmt_double(alignment.residual)});

  result.exit_code = (equal == same) ? kExitPass : kExitViolations;
  result.summary_line = std::string("pointcloud compare: ") +
                        (same ? "same orbit" : "distinct orbits") + ", features " +
                        (equal ? "equal" : "different");
  return result;
}

SuiteResult run_mra_suite(const MraConfig& cfg) {
  const MraResult mra = sample_complexity_sweep(cfg);

  SuiteResult result;
  result.report.add_summary("suite", "mra");
  result.report.add_summary("n", std::to_string(cfg.n));
  result.report.add_summary("target_error", fmt_double(cfg.target_error));
  result.report.add_summary("trials", std::to_string(cfg.trials));
  result.report.add_summary("max_samples", std::to_string(cfg.max_samples));
  result.report.add_summary("signal", repr(mra.signal));
  result.report.add_summary("slope", mra.slope_valid ? fmt_double(mra.slope) : "");
  result.report.add_summary("slope_valid", mra.slope_valid ? "1" : "0");
  result.report.add_summary("grid_inversions",
                            std::to_string(mra.grid_inversions));
  result.report.add_summary("censored_sigmas",
                            std::to_string(std::count(mra.censored.begin(),
                                                      mra.censored.end(), true)));

  result.report.table = Table{{"sigma", "N_required", "censored", "mean_err",
                               "power_err", "bispec_err", "align_err"},
                              {}};
  for (const auto& row : mra.rows)
    result.report.table.add_row(
        {fmt_double(row.sigma), std::to_string(row.n_required),
         row.censored ? "1" : "0", fmt_double(row.mean_err),
         fmt_double(row.power_err), fmt_double(row.bispec_err),
         fmt_double(row.align_err)});
  // Summary row: the fitted log-log slope.
  result.report.table.add_row(
      {"slope", mra.slope_valid ? fmt_double(mra.slope) : "", "", "", "", "",
       ""});

  result.exit_code = mra.any_censored() ? kExitResource : kExitPass;
  std::ostringstream line;
  line << "mra n=" << cfg.n << ": slope "
       << (mra.slope_valid ? fmt_double(mra.slope) : std::string("n/a"));
  if (mra.any_censored()) line << " (some sigmas censored at max_samples)";
  result.summary_line = line.str();
  return result;
}

MraConfig parse_mra_config_file(const std::string& path, MraConfig base) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // Trim.
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw FormatError("expected key=value at line " + std::to_string(lineno));
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "n") {
        base.n = std::stoi(value);
      } else if (key == "sigmas") {
        base.sigma_grid.clear();
        std::stringstream ss(value);
        std::string cell;
        while (std::getline(ss, cell, ',')) base.sigma_grid.push_back(std::stod(cell));
      } else if (key == "target_error") {
        base.target_error = std::stod(value);
      } else if (key == "max_samples") {
        base.max_samples = static_cast<std::size_t>(std::stoull(value));
      } else if (key == "trials") {
        base.trials = std::stoi(value);
      } else if (key == "seed") {
        base.seed = std::stoull(value);
      } else if (key == "signal_norm") {
        base.signal_norm = std::stod(value);
      } else if (key == "threads") {
        base.threads = std::stoi(value);
      } else {
        throw FormatError("unknown config key: " + key);
      }
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception&) {
      throw FormatError("bad value for " + key + " at line " +
                        std::to_string(lineno));
    }
  }
  return base;
}

}  // namespace orbitsep
