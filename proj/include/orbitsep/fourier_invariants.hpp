#pragma once

#include <Eigen/Core>
#include <complex>

#include "orbitsep/feature_map.hpp"
#include "orbitsep/signal.hpp"

namespace orbitsep {

/// The degree <= 3 shift invariants of a length-n signal under the
/// unnormalized DFT convention: mean = x^[0], power[k] = |x^[k]|^2,
/// bispectrum b[k,l] = x^[k] x^[l] conj(x^[(k+l) mod n]).
struct FourierInvariants {
  std::complex<double> mean;
  Eigen::VectorXd power;
  Eigen::MatrixXcd bispectrum;

  int size() const { return static_cast<int>(power.size()); }

  /// Max-norm distance across all three pieces.
  double max_abs_diff(const FourierInvariants& other) const;
  /// Largest magnitude across all three pieces.
  double max_abs() const;
};

FourierInvariants fourier_invariants(const Signal& x);

/// Invariants computed directly from a spectrum (saves the DFT when the
/// caller already has it).
FourierInvariants fourier_invariants_from_spectrum(
    const Eigen::VectorXcd& spectrum);

/// Flattened real feature vector: [re mean, im mean, power..., re b...,
/// im b...] (bispectrum in row-major order).
Eigen::VectorXd flatten(const FourierInvariants& inv);

FeatureMap<Signal> make_fourier_map(int n);

}  // namespace orbitsep
