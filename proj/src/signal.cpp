#include "orbitsep/signal.hpp"

#include <cmath>
#include <ostream>

#include "orbitsep/errors.hpp"

namespace orbitsep {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Signal::Signal(Eigen::VectorXcd entries) : entries_(std::move(entries)) {
  if (entries_.size() < 1) throw DimensionError("signal needs n >= 1");
}

Signal Signal::zero(int n) { return Signal(Eigen::VectorXcd::Zero(n)); }

Signal Signal::from_real(const Eigen::VectorXd& v) {
  Eigen::VectorXcd entries(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) entries(j) = {v(j), 0.0};
  return Signal(std::move(entries));
}

Signal Signal::random_real(int n, Rng& rng) {
  Eigen::VectorXd v(n);
  for (int j = 0; j < n; ++j) v(j) = rng.normal();
  return from_real(v);
}

double Signal::max_abs_diff(const Signal& other) const {
  if (size() != other.size()) throw DimensionError("signal length mismatch");
  return (entries_ - other.entries_).cwiseAbs().maxCoeff();
}

std::ostream& operator<<(std::ostream& os, const Signal& x) {
  os << '[';
  for (int j = 0; j < x.size(); ++j) {
    if (j) os << ',';
    os << x[j].real();
    if (x[j].imag() != 0.0) os << std::showpos << x[j].imag() << std::noshowpos << 'i';
  }
  return os << ']';
}

Signal cyclic_shift(long t, const Signal& x) {
  const int n = x.size();
  const int tt = static_cast<int>(((t % n) + n) % n);
  Eigen::VectorXcd y(n);
  for (int j = 0; j < n; ++j) y(j) = x.entries()((j - tt + n) % n);
  return Signal(std::move(y));
}

Eigen::VectorXcd dft(const Eigen::VectorXcd& x) {
  const Eigen::Index n = x.size();
  Eigen::VectorXcd spectrum = Eigen::VectorXcd::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (Eigen::Index j = 0; j < n; ++j) {
      const double angle = -kTwoPi * static_cast<double>(j * k % n) /
                           static_cast<double>(n);
      acc += x(j) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    spectrum(k) = acc;
  }
  return spectrum;
}

Eigen::VectorXcd idft(const Eigen::VectorXcd& spectrum) {
  const Eigen::Index n = spectrum.size();
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    std::complex<double> acc{0.0, 0.0};
    for (Eigen::Index k = 0; k < n; ++k) {
      const double angle = kTwoPi * static_cast<double>(j * k % n) /
                           static_cast<double>(n);
      acc += spectrum(k) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    x(j) = acc / static_cast<double>(n);
  }
  return x;
}

Signal modulate(const Signal& x, double t) {
  const int n = x.size();
  Eigen::VectorXcd spectrum = dft(x.entries());
  for (int k = 0; k < n; ++k) {
    const double angle = -kTwoPi * static_cast<double>(k) * t / n;
    spectrum(k) *= std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return Signal(idft(spectrum));
}

ComplexPair scalar_root_action(long k, int n, const ComplexPair& pt) {
  if (n < 1) throw DimensionError("scalar action needs n >= 1");
  const long kk = ((k % n) + n) % n;
  const double angle = kTwoPi * static_cast<double>(kk) / n;
  const std::complex<double> zeta_k{std::cos(angle), std::sin(angle)};
  return {zeta_k * pt[0], zeta_k * pt[1]};
}

ComplexPair random_complex_pair(Rng& rng) {
  return {std::complex<double>{rng.normal(), rng.normal()},
          std::complex<double>{rng.normal(), rng.normal()}};
}

double max_abs_diff(const ComplexPair& a, const ComplexPair& b) {
  return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
}

std::ostream& operator<<(std::ostream& os, const ComplexPair& pt) {
  return os << '(' << pt[0].real() << std::showpos << pt[0].imag() << "i,"
            << std::noshowpos << pt[1].real() << std::showpos << pt[1].imag()
            << std::noshowpos << "i)";
}

}  // namespace orbitsep
