#include "orbitsep/linalg.hpp"

#include <Eigen/QR>

#include "orbitsep/errors.hpp"

namespace orbitsep {

Eigen::MatrixXd random_orthogonal(int d, Rng& rng) {
  if (d < 1) throw DimensionError("orthogonal sampling needs d >= 1");
  Eigen::MatrixXd gaussian(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gaussian(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

Eigen::MatrixXd random_orthogonal(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_orthogonal(d, rng);
}

}  // namespace orbitsep
