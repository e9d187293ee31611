#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "orbitsep/feature_map.hpp"
#include "orbitsep/signal.hpp"
#include "orbitsep/sym_matrix.hpp"

namespace orbitsep {

/// p_k = sum_i v_i^k for k = 1..K. Invariant under any permutation of v and
/// determines the multiset of entries when K = len(v) (Newton's identities).
Eigen::VectorXd power_sums(const Eigen::VectorXd& v, int K);

/// Power sums of the diagonal (orders 1..n) followed by power sums of the
/// off-diagonal (orders 1..n(n-1)/2): a separating family for the product
/// action of S_n x S_{n(n-1)/2} on symmetric matrices.
Eigen::VectorXd diag_offdiag_invariants(const SymMatrix& x);

/// f*(X) = sum_{i != j} X[i,i] * X[i,j]. Invariant under conjugation; the
/// only product-group elements fixing it are the embedded relabelings.
double f_star(const SymMatrix& x);

/// diag_offdiag_invariants concatenated with f_star: generically separating
/// for the conjugation action of S_n.
Eigen::VectorXd conjugation_invariants(const SymMatrix& x);

/// (x^n, x^{n-j} y^j, y^n). Separates scalar root-of-unity orbits exactly
/// when gcd(j, n) = 1.
std::array<std::complex<double>, 3> veronese_separators(const ComplexPair& pt,
                                                        int n, int j);

/// All degree-n monomials (x^n, x^{n-1} y, ..., y^n): algebra generators of
/// the invariants of the scalar Z/nZ action.
Eigen::VectorXcd veronese_generators(const ComplexPair& pt, int n);

/// <u, sort(Xv)> with the sort ascending; invariant under row permutations
/// of X exactly (sorting absorbs the permutation bit for bit).
double sort_separator(const Eigen::MatrixXd& x, const Eigen::VectorXd& u,
                      const Eigen::VectorXd& v);

/// A family of sort separators with Gaussian (u_i, v_i) drawn from
/// per-feature streams mix64(seed + i), so feature i does not depend on
/// count.
struct SortSeparatorFamily {
  int n = 0;
  int d = 0;
  std::vector<Eigen::VectorXd> us;
  std::vector<Eigen::VectorXd> vs;

  static SortSeparatorFamily sample(int n, int d, int count,
                                    std::uint64_t seed);
  /// The 2D+1 default with D = n*d.
  static int default_count(int n, int d) { return 2 * n * d + 1; }

  int count() const { return static_cast<int>(us.size()); }
  Eigen::VectorXd evaluate(const Eigen::MatrixXd& x) const;
};

// FeatureMap wrappers. Complex outputs are flattened to (re, im) pairs.
FeatureMap<SymMatrix> make_diag_offdiag_map(int n);
FeatureMap<SymMatrix> make_f_star_map(int n);
FeatureMap<SymMatrix> make_conjugation_map(int n);
FeatureMap<SymMatrix> make_constant_map(int n, double value);
/// Raw diagonal vector; deliberately not conjugation-invariant (negative
/// control for the invariance harness).
FeatureMap<SymMatrix> make_raw_diag_map(int n);
FeatureMap<ComplexPair> make_veronese_separator_map(int n, int j);
FeatureMap<ComplexPair> make_veronese_generator_map(int n);
FeatureMap<Eigen::MatrixXd> make_sort_separator_map(int n, int d, int count,
                                                    std::uint64_t seed);

}  // namespace orbitsep
