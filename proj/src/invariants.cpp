#include "orbitsep/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "orbitsep/errors.hpp"
#include "orbitsep/rng.hpp"

namespace orbitsep {

Eigen::VectorXd power_sums(const Eigen::VectorXd& v, int K) {
  if (K < 1) throw DimensionError("power sums need K >= 1");
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(K);
  Eigen::VectorXd powers = Eigen::VectorXd::Ones(v.size());
  for (int k = 0; k < K; ++k) {
    powers.array() *= v.array();
    sums(k) = powers.sum();
  }
  return sums;
}

Eigen::VectorXd diag_offdiag_invariants(const SymMatrix& x) {
  const int n = x.size();
  if (n < 2) throw DimensionError("diag/offdiag invariants need n >= 2");
  const int m = x.pair_count();
  Eigen::VectorXd out(n + m);
  out.head(n) = power_sums(x.diag(), n);
  out.tail(m) = power_sums(x.offdiag(), m);
  return out;
}

double f_star(const SymMatrix& x) {
  const int n = x.size();
  if (n < 2) throw DimensionError("f* needs n >= 2");
  double acc = 0.0;
  for (int k = 0; k < x.pair_count(); ++k) {
    const auto [i, j] = SymMatrix::index_pair(n, k);
    acc += (x.diag()(i) + x.diag()(j)) * x.offdiag()(k);
  }
  return acc;
}

Eigen::VectorXd conjugation_invariants(const SymMatrix& x) {
  const Eigen::VectorXd base = diag_offdiag_invariants(x);
  Eigen::VectorXd out(base.size() + 1);
  out.head(base.size()) = base;
  out(base.size()) = f_star(x);
  return out;
}

std::array<std::complex<double>, 3> veronese_separators(const ComplexPair& pt,
                                                        int n, int j) {
  if (n < 1) throw DimensionError("veronese separators need n >= 1");
  if (j < 1 || j > n - 1)
    throw DimensionError("veronese exponent j must satisfy 1 <= j <= n-1");
  const std::complex<double> x = pt[0];
  const std::complex<double> y = pt[1];
  return {std::pow(x, n), std::pow(x, n - j) * std::pow(y, j), std::pow(y, n)};
}

Eigen::VectorXcd veronese_generators(const ComplexPair& pt, int n) {
  if (n < 1) throw DimensionError("veronese generators need n >= 1");
  Eigen::VectorXcd out(n + 1);
  for (int j = 0; j <= n; ++j)
    out(j) = std::pow(pt[0], n - j) * std::pow(pt[1], j);
  return out;
}

double sort_separator(const Eigen::MatrixXd& x, const Eigen::VectorXd& u,
                      const Eigen::VectorXd& v) {
  if (u.size() != x.rows() || v.size() != x.cols())
    throw DimensionError("sort separator shape mismatch");
  Eigen::VectorXd w = x * v;
  std::sort(w.data(), w.data() + w.size());
  return u.dot(w);
}

SortSeparatorFamily SortSeparatorFamily::sample(int n, int d, int count,
                                                std::uint64_t seed) {
  if (n < 1 || d < 1) throw DimensionError("sort separators need n, d >= 1");
  if (count < 1) throw DimensionError("sort separator count must be >= 1");
  SortSeparatorFamily family;
  family.n = n;
  family.d = d;
  family.us.reserve(static_cast<std::size_t>(count));
  family.vs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Eigen::VectorXd u(n), v(d);
    for (int r = 0; r < n; ++r) u(r) = rng.normal();
    for (int c = 0; c < d; ++c) v(c) = rng.normal();
    family.us.push_back(std::move(u));
    family.vs.push_back(std::move(v));
  }
  return family;
}

Eigen::VectorXd SortSeparatorFamily::evaluate(const Eigen::MatrixXd& x) const {
  Eigen::VectorXd out(count());
  for (int i = 0; i < count(); ++i) out(i) = sort_separator(x, us[i], vs[i]);
  return out;
}

FeatureMap<SymMatrix> make_diag_offdiag_map(int n) {
  if (n < 2) throw DimensionError("diag/offdiag invariants need n >= 2");
  const Eigen::Index len = n + n * (n - 1) / 2;
  return {"diag_offdiag", len,
          [](const SymMatrix& x) { return diag_offdiag_invariants(x); }};
}

FeatureMap<SymMatrix> make_f_star_map(int n) {
  if (n < 2) throw DimensionError("f* needs n >= 2");
  return {"f_star", 1, [](const SymMatrix& x) {
            Eigen::VectorXd out(1);
            out(0) = f_star(x);
            return out;
          }};
}

FeatureMap<SymMatrix> make_conjugation_map(int n) {
  if (n < 2) throw DimensionError("conjugation invariants need n >= 2");
  const Eigen::Index len = n + n * (n - 1) / 2 + 1;
  return {"conjugation_invariants", len,
          [](const SymMatrix& x) { return conjugation_invariants(x); }};
}

FeatureMap<SymMatrix> make_constant_map(int n, double value) {
  (void)n;
  return {"constant", 1, [value](const SymMatrix&) {
            Eigen::VectorXd out(1);
            out(0) = value;
            return out;
          }};
}

FeatureMap<SymMatrix> make_raw_diag_map(int n) {
  return {"raw_diag", n, [](const SymMatrix& x) -> Eigen::VectorXd {
            return x.diag();
          }};
}

FeatureMap<ComplexPair> make_veronese_separator_map(int n, int j) {
  if (n < 1 || j < 1 || j > n - 1)
    throw DimensionError("veronese exponent j must satisfy 1 <= j <= n-1");
  return {"veronese_separators", 6, [n, j](const ComplexPair& pt) {
            const auto triple = veronese_separators(pt, n, j);
            Eigen::VectorXd out(6);
            for (int i = 0; i < 3; ++i) {
              out(2 * i) = triple[static_cast<std::size_t>(i)].real();
              out(2 * i + 1) = triple[static_cast<std::size_t>(i)].imag();
            }
            return out;
          }};
}

FeatureMap<ComplexPair> make_veronese_generator_map(int n) {
  if (n < 1) throw DimensionError("veronese generators need n >= 1");
  return {"veronese_generators", 2 * (n + 1), [n](const ComplexPair& pt) {
            const Eigen::VectorXcd gens = veronese_generators(pt, n);
            Eigen::VectorXd out(2 * gens.size());
            for (Eigen::Index i = 0; i < gens.size(); ++i) {
              out(2 * i) = gens(i).real();
              out(2 * i + 1) = gens(i).imag();
            }
            return out;
          }};
}

FeatureMap<Eigen::MatrixXd> make_sort_separator_map(int n, int d, int count,
                                                    std::uint64_t seed) {
  auto family = SortSeparatorFamily::sample(n, d, count, seed);
  return {"sort_separators", count,
          [family = std::move(family)](const Eigen::MatrixXd& x) {
            return family.evaluate(x);
          }};
}

}  // namespace orbitsep
