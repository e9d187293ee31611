#include "orbitsep/mra.hpp"

#include <algorithm>
#include <cmath>

#include "orbitsep/errors.hpp"
#include "orbitsep/parallel.hpp"
#include "orbitsep/rng.hpp"

namespace orbitsep {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::size_t kChunk = 8192;

std::complex<double> unit_phase(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

double principal_angle(double a) {
  while (a > 3.14159265358979323846) a -= kTwoPi;
  while (a < -3.14159265358979323846) a += kTwoPi;
  return a;
}

/// Raw per-sample invariant sums; merged in chunk order.
struct InvariantSums {
  std::complex<double> mean{0.0, 0.0};
  Eigen::VectorXd power;
  Eigen::MatrixXcd bispectrum;
  std::size_t count = 0;

  explicit InvariantSums(int n)
      : power(Eigen::VectorXd::Zero(n)),
        bispectrum(Eigen::MatrixXcd::Zero(n, n)) {}

  void add_spectrum(const Eigen::VectorXcd& spectrum) {
    const int n = static_cast<int>(spectrum.size());
    mean += spectrum(0);
    for (int k = 0; k < n; ++k) power(k) += std::norm(spectrum(k));
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        bispectrum(k, l) +=
            spectrum(k) * spectrum(l) * std::conj(spectrum((k + l) % n));
    ++count;
  }

  void merge(const InvariantSums& other) {
    mean += other.mean;
    power += other.power;
    bispectrum += other.bispectrum;
    count += other.count;
  }
};

Eigen::VectorXcd observation_spectrum(const Signal& x, double sigma,
                                      std::uint64_t sample_seed) {
  const int n = x.size();
  Rng rng(sample_seed);
  const long shift = rng.uniform_int(0, n - 1);
  Eigen::VectorXcd noisy(n);
  const Signal shifted = cyclic_shift(shift, x);
  for (int j = 0; j < n; ++j)
    noisy(j) = shifted[j] + std::complex<double>(sigma * rng.normal(), 0.0);
  return dft(noisy);
}

FourierInvariants debias(const InvariantSums& sums, int n, double sigma) {
  if (sums.count == 0) throw DimensionError("no samples to estimate from");
  const double inv_count = 1.0 / static_cast<double>(sums.count);
  FourierInvariants est;
  est.mean = sums.mean * inv_count;
  est.power = sums.power * inv_count;
  est.bispectrum = sums.bispectrum * inv_count;

  const double noise_power = static_cast<double>(n) * sigma * sigma;
  est.power.array() -= noise_power;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      int axes = 0;
      if (k == 0) ++axes;
      if (l == 0) ++axes;
      if ((k + l) % n == 0) ++axes;
      if (axes)
        est.bispectrum(k, l) -= static_cast<double>(axes) * noise_power * est.mean;
    }
  return est;
}

}  // namespace

void MraConfig::validate() const {
  if (n < 3) throw DimensionError("mra needs n >= 3");
  if (sigma_grid.empty()) throw DimensionError("empty sigma grid");
  for (double s : sigma_grid)
    if (!(s > 0.0)) throw DimensionError("all sigma must be > 0");
  if (!(target_error > 0.0 && target_error < 1.0))
    throw DimensionError("target error must lie in (0, 1)");
  if (trials < 1) throw DimensionError("trials must be >= 1");
  if (max_samples < 1) throw DimensionError("max_samples must be >= 1");
  if (!(signal_norm > 0.0)) throw DimensionError("signal norm must be > 0");
}

std::vector<Signal> generate_observations(const Signal& x, double sigma,
                                          std::size_t count,
                                          std::uint64_t seed) {
  if (sigma < 0.0) throw DimensionError("sigma must be >= 0");
  if (count < 1) throw DimensionError("need at least one observation");
  const int n = x.size();
  std::vector<Signal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    const long shift = rng.uniform_int(0, n - 1);
    const Signal shifted = cyclic_shift(shift, x);
    Eigen::VectorXcd noisy(n);
    for (int j = 0; j < n; ++j)
      noisy(j) = shifted[j] + std::complex<double>(sigma * rng.normal(), 0.0);
    out.emplace_back(std::move(noisy));
  }
  return out;
}

FourierInvariants estimate_invariants(const std::vector<Signal>& samples,
                                      double sigma) {
  if (samples.empty()) throw DimensionError("no samples to estimate from");
  const int n = samples.front().size();
  InvariantSums sums(n);
  for (const auto& s : samples) sums.add_spectrum(dft(s.entries()));
  return debias(sums, n, sigma);
}

FourierInvariants estimate_invariants_streaming(const Signal& x, double sigma,
                                                std::size_t count,
                                                std::uint64_t seed,
                                                int threads) {
  if (count < 1) throw DimensionError("need at least one observation");
  const int n = x.size();
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<InvariantSums> partial(chunks, InvariantSums(n));
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min(count, begin + kChunk);
    for (std::size_t i = begin; i < end; ++i)
      partial[c].add_spectrum(observation_spectrum(x, sigma, derive_seed(seed, i)));
  });
  InvariantSums total(n);
  for (const auto& p : partial) total.merge(p);
  return debias(total, n, sigma);
}

Signal invert_bispectrum(const FourierInvariants& inv,
                         double magnitude_floor_factor) {
  const int n = inv.size();
  if (n < 2) throw DimensionError("inversion needs n >= 2");

  Eigen::VectorXd power = inv.power.cwiseMax(0.0);
  const double pmax = power.maxCoeff();
  if (pmax <= 0.0) return Signal::zero(n);
  const double floor = magnitude_floor_factor * pmax;

  int first_dead = 0;
  int dead_count = 0;
  for (int k = 1; k < n; ++k)
    if (power(k) <= floor) {
      if (!dead_count) first_dead = k;
      ++dead_count;
    }
  if (dead_count == n - 1) {
    // Constant signal: only bin 0 active, phase from the mean's sign.
    Eigen::VectorXcd spectrum = Eigen::VectorXcd::Zero(n);
    const double phase0 = std::abs(inv.mean) > 0.0 ? std::arg(inv.mean) : 0.0;
    spectrum(0) = std::sqrt(power(0)) * unit_phase(phase0);
    return Signal(idft(spectrum));
  }
  if (dead_count > 0)
    throw GenericityError("power spectrum bin " + std::to_string(first_dead) +
                              " is below the magnitude floor",
                          first_dead);

  Eigen::VectorXd phase = Eigen::VectorXd::Zero(n);
  phase(0) = std::abs(inv.mean) > 0.0 ? std::arg(inv.mean) : 0.0;
  phase(1) = 0.0;
  for (int k = 1; k + 1 < n; ++k)
    phase(k + 1) = phase(k) + phase(1) - std::arg(inv.bispectrum(k, 1));

  // The gauge phi[1] = 0 leaves an unknown linear phase. The wrap-around
  // entry b[n-1, 1] pins it modulo 2*pi/n; applying the correction makes the
  // spectrum of exact real-signal invariants conjugate-symmetric again, so
  // the representative is an integer shift rather than a fractional one.
  const double wrapped =
      phase(n - 1) + phase(1) - std::arg(inv.bispectrum(n - 1, 1));
  const double defect = principal_angle(wrapped - phase(0));
  const double gauge_step = -defect / n;
  for (int k = 1; k < n; ++k) phase(k) += gauge_step * k;

  Eigen::VectorXcd spectrum(n);
  for (int k = 0; k < n; ++k)
    spectrum(k) = std::sqrt(power(k)) * unit_phase(phase(k));
  return Signal(idft(spectrum));
}

double align_error(const Signal& x_true, const Signal& x_rec) {
  if (x_true.size() != x_rec.size())
    throw DimensionError("signal length mismatch");
  const int n = x_true.size();
  const Eigen::VectorXcd spec_true = dft(x_true.entries());
  const Eigen::VectorXcd spec_rec = dft(x_rec.entries());
  const double denom = spec_true.norm();
  if (denom == 0.0) return spec_rec.norm() == 0.0 ? 0.0 : 1.0;

  const int grid = 64 * n;
  double best_sq = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid; ++j) {
    const double t = static_cast<double>(j) / 64.0;
    double err_sq = 0.0;
    for (int k = 0; k < n; ++k) {
      const std::complex<double> moved =
          spec_rec(k) * unit_phase(-kTwoPi * k * t / n);
      err_sq += std::norm(moved - spec_true(k));
    }
    best_sq = std::min(best_sq, err_sq);
  }
  return std::sqrt(best_sq) / denom;
}

Signal mra_test_signal(const MraConfig& cfg) {
  cfg.validate();
  const double min_bin = 0.35 * cfg.signal_norm / std::sqrt(cfg.n);
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(derive_seed(mix64(cfg.seed) ^ 0x5197ULL, attempt));
    Signal x = Signal::random_real(cfg.n, rng);
    Eigen::VectorXcd scaled = x.entries() * (cfg.signal_norm / x.norm());
    Signal candidate{std::move(scaled)};
    const Eigen::VectorXcd spectrum = dft(candidate.entries());
    if (spectrum.cwiseAbs().minCoeff() > min_bin) return candidate;
  }
}

bool MraResult::any_censored() const {
  for (bool c : censored)
    if (c) return true;
  return false;
}

namespace {

struct ProbeOutcome {
  std::vector<double> align_errs;
  std::vector<double> mean_errs;
  std::vector<double> power_errs;
  std::vector<double> bispec_errs;
  double median_align = 0.0;
};

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

ProbeOutcome probe(const Signal& x, const FourierInvariants& truth,
                   double sigma, std::size_t count, const MraConfig& cfg,
                   std::uint64_t probe_seed) {
  ProbeOutcome out;
  out.align_errs.resize(static_cast<std::size_t>(cfg.trials));
  out.mean_errs.resize(static_cast<std::size_t>(cfg.trials));
  out.power_errs.resize(static_cast<std::size_t>(cfg.trials));
  out.bispec_errs.resize(static_cast<std::size_t>(cfg.trials));

  const double truth_scale = truth.max_abs();
  parallel_for(static_cast<std::size_t>(cfg.trials), cfg.threads,
               [&](std::size_t t) {
                 const FourierInvariants est = estimate_invariants_streaming(
                     x, sigma, count, derive_seed(probe_seed, t), 1);
                 out.mean_errs[t] = std::abs(est.mean - truth.mean) /
                                    (1.0 + std::abs(truth.mean));
                 out.power_errs[t] =
                     (est.power - truth.power).cwiseAbs().maxCoeff() /
                     (1.0 + truth.power.cwiseAbs().maxCoeff());
                 out.bispec_errs[t] =
                     (est.bispectrum - truth.bispectrum).cwiseAbs().maxCoeff() /
                     (1.0 + truth_scale);
                 try {
                   const Signal rec = invert_bispectrum(est);
                   out.align_errs[t] = align_error(x, rec);
                 } catch (const GenericityError&) {
                   // Estimate too noisy to invert: count as a failed trial.
                   out.align_errs[t] = std::numeric_limits<double>::infinity();
                 }
               });
  out.median_align = median_of(out.align_errs);
  return out;
}

}  // namespace

MraResult sample_complexity_sweep(const MraConfig& cfg) {
  cfg.validate();
  MraResult result;
  result.signal = mra_test_signal(cfg);
  const FourierInvariants truth = fourier_invariants(result.signal);

  result.n_required.resize(cfg.sigma_grid.size(), 0);
  result.censored.resize(cfg.sigma_grid.size(), false);

  for (std::size_t si = 0; si < cfg.sigma_grid.size(); ++si) {
    const double sigma = cfg.sigma_grid[si];
    const std::uint64_t sigma_seed = derive_seed(cfg.seed, 0x100 + si);
    auto run_probe = [&](std::size_t count, std::size_t probe_index) {
      return probe(result.signal, truth, sigma, count, cfg,
                   derive_seed(sigma_seed, probe_index));
    };

    // Doubling phase.
    std::size_t probe_index = 0;
    std::size_t lo = 0;  // largest failing count seen (0 = none)
    std::size_t hi = 1;
    ProbeOutcome hi_outcome = run_probe(hi, probe_index++);
    while (hi_outcome.median_align > cfg.target_error &&
           hi < cfg.max_samples) {
      lo = hi;
      hi = std::min(cfg.max_samples, hi * 2);
      hi_outcome = run_probe(hi, probe_index++);
    }

    if (hi_outcome.median_align > cfg.target_error) {
      result.censored[si] = true;
      result.n_required[si] = cfg.max_samples;
      for (int t = 0; t < cfg.trials; ++t)
        result.rows.push_back(MraTrialRow{
            sigma, t, cfg.max_samples, true,
            hi_outcome.mean_errs[static_cast<std::size_t>(t)],
            hi_outcome.power_errs[static_cast<std::size_t>(t)],
            hi_outcome.bispec_errs[static_cast<std::size_t>(t)],
            hi_outcome.align_errs[static_cast<std::size_t>(t)]});
      continue;
    }

    // Bisection to ~5% relative width.
    while (hi - lo > std::max<std::size_t>(1, lo / 20)) {
      const std::size_t mid = lo + (hi - lo) / 2;
      ProbeOutcome mid_outcome = run_probe(mid, probe_index++);
      if (mid_outcome.median_align <= cfg.target_error) {
        hi = mid;
        hi_outcome = std::move(mid_outcome);
      } else {
        lo = mid;
      }
    }

    result.n_required[si] = hi;
    for (int t = 0; t < cfg.trials; ++t)
      result.rows.push_back(MraTrialRow{
          sigma, t, hi, false,
          hi_outcome.mean_errs[static_cast<std::size_t>(t)],
          hi_outcome.power_errs[static_cast<std::size_t>(t)],
          hi_outcome.bispec_errs[static_cast<std::size_t>(t)],
          hi_outcome.align_errs[static_cast<std::size_t>(t)]});
  }

  // Least-squares slope of log N against log sigma over the uncensored grid.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t si = 0; si < cfg.sigma_grid.size(); ++si) {
    if (result.censored[si]) continue;
    const double lx = std::log(cfg.sigma_grid[si]);
    const double ly = std::log(static_cast<double>(result.n_required[si]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2) {
    const double denom = m * sxx - sx * sx;
    if (denom != 0.0) {
      result.slope = (m * sxy - sx * sy) / denom;
      result.slope_valid = true;
    }
  }

  for (std::size_t si = 0; si + 1 < cfg.sigma_grid.size(); ++si)
    if (!result.censored[si] && !result.censored[si + 1] &&
        result.n_required[si] > result.n_required[si + 1])
      ++result.grid_inversions;

  return result;
}

}  // namespace orbitsep
