#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <string>
#include <vector>

#include "orbitsep/errors.hpp"
#include "orbitsep/permutation.hpp"
#include "orbitsep/signal.hpp"
#include "orbitsep/sym_matrix.hpp"

namespace orbitsep {

// Finite group actions share an informal interface consumed by the test
// harness templates: Domain, Element, name(), random_element(Rng&),
// enumerate(cap), apply(g, x), and a max-norm distance on the domain.

/// S_n acting on symmetric matrices by simultaneous row/column relabeling.
struct ConjugationAction {
  int n;

  using Domain = SymMatrix;
  using Element = Permutation;

  std::string name() const { return "conjugation(S" + std::to_string(n) + ")"; }
  Element random_element(Rng& rng) const { return Permutation::random(n, rng); }
  std::vector<Element> enumerate(std::size_t cap = 1000000) const {
    return enumerate_symmetric(n, cap);
  }
  Domain apply(const Element& g, const Domain& x) const {
    return conjugate_sym(g, x);
  }
  static double distance(const Domain& a, const Domain& b) {
    return a.max_abs_diff(b);
  }
};

/// G = S_n x S_{n(n-1)/2} acting on diagonal and off-diagonal slots.
struct ProductAction {
  int n;

  using Domain = SymMatrix;
  using Element = ProductGroupElement;

  std::string name() const { return "product(S" + std::to_string(n) + "xS" + std::to_string(n * (n - 1) / 2) + ")"; }
  Element random_element(Rng& rng) const {
    Permutation sigma = Permutation::random(n, rng);
    Permutation tau = Permutation::random(n * (n - 1) / 2, rng);
    return {std::move(sigma), std::move(tau)};
  }
  std::vector<Element> enumerate(std::size_t cap = 1000000) const {
    return enumerate_product(n, cap);
  }
  Domain apply(const Element& g, const Domain& x) const {
    return apply_product(g, x);
  }
  static double distance(const Domain& a, const Domain& b) {
    return a.max_abs_diff(b);
  }
};

/// Z/nZ acting on signals by cyclic shifts.
struct CyclicShiftAction {
  int n;

  using Domain = Signal;
  using Element = long;

  std::string name() const { return "cyclic(Z" + std::to_string(n) + ")"; }
  Element random_element(Rng& rng) const { return rng.uniform_int(0, n - 1); }
  std::vector<Element> enumerate(std::size_t cap = 1000000) const {
    if (static_cast<std::size_t>(n) > cap)
      throw SizeLimitError(static_cast<std::size_t>(n), cap);
    std::vector<Element> ts(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) ts[static_cast<std::size_t>(t)] = t;
    return ts;
  }
  Domain apply(const Element& t, const Domain& x) const {
    return cyclic_shift(t, x);
  }
  static double distance(const Domain& a, const Domain& b) {
    return a.max_abs_diff(b);
  }
};

/// Z/nZ acting on C^2 by scalar root-of-unity multiplication.
struct ScalarRootAction {
  int n;

  using Domain = ComplexPair;
  using Element = long;

  std::string name() const { return "scalar_root(Z" + std::to_string(n) + ")"; }
  Element random_element(Rng& rng) const { return rng.uniform_int(0, n - 1); }
  std::vector<Element> enumerate(std::size_t cap = 1000000) const {
    if (static_cast<std::size_t>(n) > cap)
      throw SizeLimitError(static_cast<std::size_t>(n), cap);
    std::vector<Element> ks(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) ks[static_cast<std::size_t>(k)] = k;
    return ks;
  }
  Domain apply(const Element& k, const Domain& pt) const {
    return scalar_root_action(k, n, pt);
  }
  static double distance(const Domain& a, const Domain& b) {
    return max_abs_diff(a, b);
  }
};

/// S_n permuting the rows of an n x d matrix.
struct RowPermAction {
  int n;
  int d;

  using Domain = Eigen::MatrixXd;
  using Element = Permutation;

  std::string name() const { return "row_perm(S" + std::to_string(n) + ")"; }
  Element random_element(Rng& rng) const { return Permutation::random(n, rng); }
  std::vector<Element> enumerate(std::size_t cap = 1000000) const {
    return enumerate_symmetric(n, cap);
  }
  Domain apply(const Element& g, const Domain& x) const {
    Eigen::MatrixXd y(x.rows(), x.cols());
    for (int i = 0; i < n; ++i) y.row(g(i)) = x.row(i);
    return y;
  }
  static double distance(const Domain& a, const Domain& b) {
    return (a - b).cwiseAbs().maxCoeff();
  }
};

}  // namespace orbitsep
