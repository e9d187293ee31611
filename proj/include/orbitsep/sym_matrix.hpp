#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "orbitsep/permutation.hpp"
#include "orbitsep/rng.hpp"

namespace orbitsep {

/// n x n real symmetric matrix stored as a diagonal vector plus a
/// pair-indexed off-diagonal vector. The pair index of (i,j), i<j, is
/// idx(i,j) = i*n - i*(i+1)/2 + (j-i-1), i.e. lexicographic order of pairs.
class SymMatrix {
 public:
  explicit SymMatrix(int n);
  SymMatrix(int n, Eigen::VectorXd diag, Eigen::VectorXd offdiag);

  static SymMatrix from_dense(const Eigen::MatrixXd& dense);
  static SymMatrix random_gaussian(int n, Rng& rng);
  /// Entries uniform on integers in [lo, hi]; exact in double precision.
  static SymMatrix random_integer(int n, long lo, long hi, Rng& rng);

  int size() const { return n_; }
  int pair_count() const { return n_ * (n_ - 1) / 2; }

  static int pair_index(int n, int i, int j);
  static std::pair<int, int> index_pair(int n, int k);

  const Eigen::VectorXd& diag() const { return diag_; }
  const Eigen::VectorXd& offdiag() const { return offdiag_; }
  Eigen::VectorXd& diag() { return diag_; }
  Eigen::VectorXd& offdiag() { return offdiag_; }

  /// Entry (i, j) for any i, j.
  double at(int i, int j) const;

  Eigen::MatrixXd to_dense() const;

  /// Max-norm distance between the stored coordinate vectors.
  double max_abs_diff(const SymMatrix& other) const;

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.n_ == b.n_ && a.diag_ == b.diag_ && a.offdiag_ == b.offdiag_;
  }

 private:
  int n_;
  Eigen::VectorXd diag_;
  Eigen::VectorXd offdiag_;
};

std::ostream& operator<<(std::ostream& os, const SymMatrix& x);

/// Element of G = S_n x S_m with m = n(n-1)/2, acting on the diagonal and
/// off-diagonal slots independently.
struct ProductGroupElement {
  Permutation sigma;
  Permutation tau;

  ProductGroupElement(Permutation s, Permutation t);

  int n() const { return sigma.size(); }

  ProductGroupElement compose(const ProductGroupElement& other) const;
  ProductGroupElement inverse() const;

  friend bool operator==(const ProductGroupElement& a,
                         const ProductGroupElement& b) {
    return a.sigma == b.sigma && a.tau == b.tau;
  }
  friend bool operator<(const ProductGroupElement& a,
                        const ProductGroupElement& b) {
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    return a.tau < b.tau;
  }
};

std::ostream& operator<<(std::ostream& os, const ProductGroupElement& g);

/// The permutation of pair slots induced by relabeling: sends idx(i,j) to
/// idx(sorted(p(i), p(j))). Injective homomorphism S_n -> S_{n(n-1)/2}.
Permutation induced_pair_perm(const Permutation& p);

/// Embeds p as (p, induced_pair_perm(p)).
ProductGroupElement embed_in_product(const Permutation& p);

/// Y with Y[p(i), p(j)] = X[i, j].
SymMatrix conjugate_sym(const Permutation& p, const SymMatrix& x);

/// Diagonal permuted by g.sigma, off-diagonal by g.tau.
SymMatrix apply_product(const ProductGroupElement& g, const SymMatrix& x);

/// All of S_n x S_{n(n-1)/2}, lexicographic by (sigma.image, tau.image).
std::vector<ProductGroupElement> enumerate_product(int n,
                                                   std::size_t cap = 1000000);

/// S_n embedded in the product group via induced_pair_perm, in the
/// lexicographic order of sigma.
std::vector<ProductGroupElement> enumerate_embedded_symmetric(
    int n, std::size_t cap = 1000000);

}  // namespace orbitsep
