#include "orbitsep/oracle.hpp"

#include <cmath>

namespace orbitsep {

std::vector<ComplexPair> root_twist_candidates(const ComplexPair& pt, int n) {
  const int m = 2 * n;
  const double step = 6.283185307179586476925286766559 / m;
  std::vector<ComplexPair> out;
  out.reserve(static_cast<std::size_t>(m) * m - 1);
  for (int a = 0; a < m; ++a) {
    const std::complex<double> alpha{std::cos(step * a), std::sin(step * a)};
    for (int b = 0; b < m; ++b) {
      if (a == 0 && b == 0) continue;
      const std::complex<double> beta{std::cos(step * b), std::sin(step * b)};
      out.push_back({alpha * pt[0], beta * pt[1]});
    }
  }
  return out;
}

}  // namespace orbitsep
