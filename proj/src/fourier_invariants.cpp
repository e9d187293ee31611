#include "orbitsep/fourier_invariants.hpp"

#include <cmath>

#include "orbitsep/errors.hpp"

namespace orbitsep {

double FourierInvariants::max_abs_diff(const FourierInvariants& other) const {
  if (size() != other.size()) throw DimensionError("invariant size mismatch");
  double d = std::abs(mean - other.mean);
  d = std::max(d, (power - other.power).cwiseAbs().maxCoeff());
  d = std::max(d, (bispectrum - other.bispectrum).cwiseAbs().maxCoeff());
  return d;
}

double FourierInvariants::max_abs() const {
  double m = std::abs(mean);
  m = std::max(m, power.cwiseAbs().maxCoeff());
  m = std::max(m, bispectrum.cwiseAbs().maxCoeff());
  return m;
}

FourierInvariants fourier_invariants_from_spectrum(
    const Eigen::VectorXcd& spectrum) {
  const int n = static_cast<int>(spectrum.size());
  if (n < 2) throw DimensionError("fourier invariants need n >= 2");
  FourierInvariants inv;
  inv.mean = spectrum(0);
  inv.power.resize(n);
  for (int k = 0; k < n; ++k) inv.power(k) = std::norm(spectrum(k));
  inv.bispectrum.resize(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      inv.bispectrum(k, l) =
          spectrum(k) * spectrum(l) * std::conj(spectrum((k + l) % n));
  return inv;
}

FourierInvariants fourier_invariants(const Signal& x) {
  return fourier_invariants_from_spectrum(dft(x.entries()));
}

Eigen::VectorXd flatten(const FourierInvariants& inv) {
  const int n = inv.size();
  Eigen::VectorXd out(2 + n + 2 * n * n);
  out(0) = inv.mean.real();
  out(1) = inv.mean.imag();
  out.segment(2, n) = inv.power;
  Eigen::Index at = 2 + n;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      out(at++) = inv.bispectrum(k, l).real();
      out(at++) = inv.bispectrum(k, l).imag();
    }
  return out;
}

FeatureMap<Signal> make_fourier_map(int n) {
  if (n < 2) throw DimensionError("fourier invariants need n >= 2");
  const Eigen::Index len = 2 + n + 2 * n * n;
  return {"fourier_invariants", len,
          [](const Signal& x) { return flatten(fourier_invariants(x)); }};
}

}  // namespace orbitsep
