#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>
#include <iosfwd>

#include "orbitsep/rng.hpp"

namespace orbitsep {

/// Length-n complex vector; real signals carry zero imaginary parts.
class Signal {
 public:
  explicit Signal(Eigen::VectorXcd entries);

  static Signal zero(int n);
  static Signal from_real(const Eigen::VectorXd& v);
  static Signal random_real(int n, Rng& rng);

  int size() const { return static_cast<int>(entries_.size()); }
  const Eigen::VectorXcd& entries() const { return entries_; }
  std::complex<double> operator[](int j) const { return entries_(j); }

  double max_abs_diff(const Signal& other) const;
  double norm() const { return entries_.norm(); }

 private:
  Eigen::VectorXcd entries_;
};

std::ostream& operator<<(std::ostream& os, const Signal& x);

/// y[j] = x[(j - t) mod n]; t may be any integer.
Signal cyclic_shift(long t, const Signal& x);

/// Unnormalized forward DFT, kernel exp(-2*pi*i*j*k/n).
Eigen::VectorXcd dft(const Eigen::VectorXcd& x);

/// Inverse of dft (includes the 1/n factor).
Eigen::VectorXcd idft(const Eigen::VectorXcd& spectrum);

/// Multiplies bin k of the spectrum by exp(-2*pi*i*k*t/n); integer t is an
/// exact cyclic shift, fractional t interpolates between shifts.
Signal modulate(const Signal& x, double t);

using ComplexPair = std::array<std::complex<double>, 2>;

/// (zeta^k * x, zeta^k * y) with zeta = exp(2*pi*i/n): the faithful scalar
/// action of Z/nZ on C^2.
ComplexPair scalar_root_action(long k, int n, const ComplexPair& pt);

ComplexPair random_complex_pair(Rng& rng);

double max_abs_diff(const ComplexPair& a, const ComplexPair& b);

std::ostream& operator<<(std::ostream& os, const ComplexPair& pt);

}  // namespace orbitsep
