#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitsep/fourier_invariants.hpp"
#include "orbitsep/signal.hpp"

namespace orbitsep {

/// Multi-reference alignment sweep configuration.
struct MraConfig {
  int n = 7;
  std::vector<double> sigma_grid = {1.0, 1.4, 2.0, 2.8, 4.0};
  double target_error = 0.3;       // relative L2 after alignment
  std::size_t max_samples = 30000000;
  int trials = 5;                  // repetitions per sigma
  std::uint64_t seed = 0;
  int threads = 1;
  /// The unknown signal is drawn with iid Gaussian entries and rescaled to
  /// this L2 norm; bins are resampled until min |x^[k]| > 0.35 * norm/sqrt(n)
  /// so the genericity precondition holds with margin.
  double signal_norm = 1.0;

  void validate() const;
};

/// y_i = cyclic_shift(t_i, x) + sigma * eps_i with t_i uniform shifts and
/// eps_i iid standard normal real vectors. Sample i depends only on
/// derive_seed(seed, i), so chunked generation is reproducible.
std::vector<Signal> generate_observations(const Signal& x, double sigma,
                                          std::size_t count,
                                          std::uint64_t seed);

/// Averages the degree <= 3 invariants over samples, then removes the known
/// noise bias: power[k] -= n sigma^2, and bispectrum entries with k = 0,
/// l = 0, or k+l = 0 (mod n) each lose n sigma^2 * (estimated mean) per
/// incident axis. The constants were pinned against a Monte Carlo oracle
/// before being frozen here.
FourierInvariants estimate_invariants(const std::vector<Signal>& samples,
                                      double sigma);

/// Streaming variant: generates `count` observations on the fly (per-sample
/// seeds) and accumulates in fixed-size chunks merged in index order, so the
/// result is bit-identical for every thread count.
FourierInvariants estimate_invariants_streaming(const Signal& x, double sigma,
                                                std::size_t count,
                                                std::uint64_t seed,
                                                int threads = 1);

/// Recovers a signal from degree <= 3 invariants. Magnitudes come from the
/// power spectrum; phases from the recursion phi[k+1] = phi[k] + phi[1] -
/// arg b[k,1] with gauge phi[1] = 0 and phi[0] from the mean, then a final
/// linear-phase correction from the wrap-around row so that exact invariants
/// of a real signal return an integer-shift representative. Throws
/// GenericityError naming the first bin whose power falls below
/// magnitude_floor_factor * max power (bin 0 exempt; a spectrum whose
/// nonzero bins are all dead is recovered as the constant signal).
Signal invert_bispectrum(const FourierInvariants& inv,
                         double magnitude_floor_factor = 1e-6);

/// Orbit-level relative L2 error: min over the fractional shift grid
/// t = j/64, j = 0..64n-1, of ||modulate(rec, t) - truth|| / ||truth||.
double align_error(const Signal& x_true, const Signal& x_rec);

struct MraTrialRow {
  double sigma = 0.0;
  int trial = 0;
  std::size_t n_required = 0;
  bool censored = false;
  double mean_err = 0.0;
  double power_err = 0.0;
  double bispec_err = 0.0;
  double align_err = 0.0;
};

struct MraResult {
  Signal signal = Signal::zero(1);
  std::vector<MraTrialRow> rows;           // trials x sigma grid
  std::vector<std::size_t> n_required;     // per sigma
  std::vector<bool> censored;              // per sigma
  double slope = 0.0;                      // log N vs log sigma
  bool slope_valid = false;
  std::size_t grid_inversions = 0;         // N(sigma) decreases step count

  bool any_censored() const;
};

/// Per sigma, finds the minimal sample count whose median-over-trials aligned
/// error meets the target (doubling then bisection), then fits the log-log
/// slope of N(sigma) over the uncensored grid.
MraResult sample_complexity_sweep(const MraConfig& cfg);

/// Draws the sweep's test signal for a given config (exposed for replay).
Signal mra_test_signal(const MraConfig& cfg);

}  // namespace orbitsep
