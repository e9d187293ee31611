#include "orbitsep/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "orbitsep/errors.hpp"

namespace orbitsep {

SymMatrix::SymMatrix(int n) : n_(n) {
  if (n < 1) throw DimensionError("symmetric matrix needs n >= 1");
  diag_ = Eigen::VectorXd::Zero(n);
  offdiag_ = Eigen::VectorXd::Zero(n * (n - 1) / 2);
}

SymMatrix::SymMatrix(int n, Eigen::VectorXd diag, Eigen::VectorXd offdiag)
    : n_(n), diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (n < 1) throw DimensionError("symmetric matrix needs n >= 1");
  if (diag_.size() != n || offdiag_.size() != n * (n - 1) / 2)
    throw DimensionError("diag/offdiag lengths do not match n");
}

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& dense) {
  if (dense.rows() != dense.cols() || dense.rows() < 1)
    throw DimensionError("dense matrix must be square and nonempty");
  const int n = static_cast<int>(dense.rows());
  SymMatrix x(n);
  for (int i = 0; i < n; ++i) x.diag_(i) = dense(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      x.offdiag_(pair_index(n, i, j)) = 0.5 * (dense(i, j) + dense(j, i));
  return x;
}

SymMatrix SymMatrix::random_gaussian(int n, Rng& rng) {
  SymMatrix x(n);
  for (int i = 0; i < n; ++i) x.diag_(i) = rng.normal();
  for (int k = 0; k < x.pair_count(); ++k) x.offdiag_(k) = rng.normal();
  return x;
}

SymMatrix SymMatrix::random_integer(int n, long lo, long hi, Rng& rng) {
  SymMatrix x(n);
  for (int i = 0; i < n; ++i)
    x.diag_(i) = static_cast<double>(rng.uniform_int(lo, hi));
  for (int k = 0; k < x.pair_count(); ++k)
    x.offdiag_(k) = static_cast<double>(rng.uniform_int(lo, hi));
  return x;
}

int SymMatrix::pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n || i == j) throw DimensionError("pair index out of range");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> SymMatrix::index_pair(int n, int k) {
  if (k < 0 || k >= n * (n - 1) / 2)
    throw DimensionError("pair index out of range");
  int i = 0;
  while (k >= n - 1 - i) {
    k -= n - 1 - i;
    ++i;
  }
  return {i, i + 1 + k};
}

double SymMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw DimensionError("entry index out of range");
  if (i == j) return diag_(i);
  return offdiag_(pair_index(n_, i, j));
}

Eigen::MatrixXd SymMatrix::to_dense() const {
  Eigen::MatrixXd dense(n_, n_);
  for (int i = 0; i < n_; ++i) {
    dense(i, i) = diag_(i);
    for (int j = i + 1; j < n_; ++j)
      dense(i, j) = dense(j, i) = offdiag_(pair_index(n_, i, j));
  }
  return dense;
}

double SymMatrix::max_abs_diff(const SymMatrix& other) const {
  if (n_ != other.n_) throw DimensionError("size mismatch");
  const double d = (diag_ - other.diag_).cwiseAbs().maxCoeff();
  if (pair_count() == 0) return d;
  return std::max(d, (offdiag_ - other.offdiag_).cwiseAbs().maxCoeff());
}

std::ostream& operator<<(std::ostream& os, const SymMatrix& x) {
  os << "sym(" << x.size() << ";diag=[";
  for (int i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x.diag()(i);
  }
  os << "];offdiag=[";
  for (int k = 0; k < x.pair_count(); ++k) {
    if (k) os << ',';
    os << x.offdiag()(k);
  }
  return os << "])";
}

ProductGroupElement::ProductGroupElement(Permutation s, Permutation t)
    : sigma(std::move(s)), tau(std::move(t)) {
  const int n = sigma.size();
  if (n < 2 || tau.size() != n * (n - 1) / 2)
    throw DimensionError("product element needs sigma on n >= 2 slots and tau on n(n-1)/2 slots");
}

ProductGroupElement ProductGroupElement::compose(
    const ProductGroupElement& other) const {
  return {sigma.compose(other.sigma), tau.compose(other.tau)};
}

ProductGroupElement ProductGroupElement::inverse() const {
  return {sigma.inverse(), tau.inverse()};
}

std::ostream& operator<<(std::ostream& os, const ProductGroupElement& g) {
  return os << "(sigma=" << g.sigma << ",tau=" << g.tau << ')';
}

Permutation induced_pair_perm(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw DimensionError("induced pair permutation needs n >= 2");
  std::vector<int> image(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      image[static_cast<std::size_t>(SymMatrix::pair_index(n, i, j))] =
          SymMatrix::pair_index(n, p(i), p(j));
  return Permutation::from_image(std::move(image));
}

ProductGroupElement embed_in_product(const Permutation& p) {
  return {p, induced_pair_perm(p)};
}

SymMatrix conjugate_sym(const Permutation& p, const SymMatrix& x) {
  const int n = x.size();
  if (p.size() != n) throw DimensionError("permutation/matrix size mismatch");
  SymMatrix y(n);
  for (int i = 0; i < n; ++i) y.diag()(p(i)) = x.diag()(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      y.offdiag()(SymMatrix::pair_index(n, p(i), p(j))) =
          x.offdiag()(SymMatrix::pair_index(n, i, j));
  return y;
}

SymMatrix apply_product(const ProductGroupElement& g, const SymMatrix& x) {
  const int n = x.size();
  if (g.n() != n) throw DimensionError("group element/matrix size mismatch");
  SymMatrix y(n);
  for (int i = 0; i < n; ++i) y.diag()(g.sigma(i)) = x.diag()(i);
  for (int k = 0; k < x.pair_count(); ++k) y.offdiag()(g.tau(k)) = x.offdiag()(k);
  return y;
}

std::vector<ProductGroupElement> enumerate_product(int n, std::size_t cap) {
  if (n < 2) throw DimensionError("product group needs n >= 2");
  const int m = n * (n - 1) / 2;
  // Order is n! * m!; compute with overflow care so the error names the need.
  std::size_t order = 1;
  bool overflow = false;
  auto mul = [&](int k) {
    for (int v = 2; v <= k; ++v) {
      if (order > (std::size_t{1} << 62) / static_cast<std::size_t>(v)) {
        overflow = true;
        return;
      }
      order *= static_cast<std::size_t>(v);
    }
  };
  mul(n);
  if (!overflow) mul(m);
  if (overflow || order > cap)
    throw SizeLimitError(overflow ? cap + 1 : order, cap);

  const auto sigmas = enumerate_symmetric(n, cap);
  const auto taus = enumerate_symmetric(m, cap);
  std::vector<ProductGroupElement> result;
  result.reserve(order);
  for (const auto& s : sigmas)
    for (const auto& t : taus) result.emplace_back(s, t);
  return result;
}

std::vector<ProductGroupElement> enumerate_embedded_symmetric(int n,
                                                              std::size_t cap) {
  const auto sigmas = enumerate_symmetric(n, cap);
  std::vector<ProductGroupElement> result;
  result.reserve(sigmas.size());
  for (const auto& s : sigmas) result.push_back(embed_in_product(s));
  return result;
}

}  // namespace orbitsep
