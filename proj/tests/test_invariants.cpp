#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "orbitsep/actions.hpp"
#include "orbitsep/errors.hpp"
#include "orbitsep/invariants.hpp"

using namespace orbitsep;

namespace {

SymMatrix sym2(double a, double b, double c) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, b, c;
  return SymMatrix::from_dense(m);
}

std::multiset<long> rounded_multiset(const Eigen::VectorXd& v) {
  std::multiset<long> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.insert(std::lround(v(i)));
  return out;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("power sums on the spec examples") {
  Eigen::VectorXd v(3);
  v << 1, 2, 3;
  const Eigen::VectorXd p = power_sums(v, 3);
  CHECK(p(0) == 6.0);
  CHECK(p(1) == 14.0);
  CHECK(p(2) == 36.0);

  CHECK(power_sums(Eigen::VectorXd::Zero(4), 3).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(power_sums(v, 0), DimensionError);
}

TEST_CASE("power sums are permutation invariant") {
  Rng rng(2);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform_int(0, 6));
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.normal();
    const auto p = Permutation::random(n, rng);
    Eigen::VectorXd permuted(n);
    for (int i = 0; i < n; ++i) permuted(p(i)) = v(i);
    const Eigen::VectorXd a = power_sums(v, n);
    const Eigen::VectorXd b = power_sums(permuted, n);
    CHECK((a - b).cwiseAbs().maxCoeff() <=
          1e-12 * (1.0 + a.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("power sums with K = len determine the integer multiset") {
  // Newton's identities guarantee this; checked empirically on 10^4 vectors.
  Rng rng(13);
  std::map<std::vector<long>, std::multiset<long>> seen;
  int checked = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform_int(0, 6));
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i)
      v(i) = static_cast<double>(rng.uniform_int(-9, 9));
    const Eigen::VectorXd p = power_sums(v, n);
    std::vector<long> key(static_cast<std::size_t>(n + 1));
    key[0] = n;
    for (int i = 0; i < n; ++i) key[static_cast<std::size_t>(i + 1)] = std::lround(p(i));
    const auto multiset = rounded_multiset(v);
    const auto [it, inserted] = seen.emplace(key, multiset);
    if (!inserted) {
      ++checked;
      CHECK(it->second == multiset);
    }
  }
  CHECK(checked > 100);  // plenty of repeated keys actually exercised
}

TEST_CASE("diag/offdiag invariants on the spec example") {
  const auto x = sym2(1, 2, 3);
  const Eigen::VectorXd f = diag_offdiag_invariants(x);
  REQUIRE(f.size() == 3);
  CHECK(f(0) == 4.0);
  CHECK(f(1) == 10.0);
  CHECK(f(2) == 2.0);
}

TEST_CASE("diag/offdiag invariants are G-invariant") {
  Rng rng(29);
  const ProductAction action{4};
  for (int rep = 0; rep < 100; ++rep) {
    const auto x = SymMatrix::random_gaussian(4, rng);
    const auto g = action.random_element(rng);
    const Eigen::VectorXd a = diag_offdiag_invariants(x);
    const Eigen::VectorXd b = diag_offdiag_invariants(apply_product(g, x));
    CHECK((a - b).cwiseAbs().maxCoeff() <=
          1e-9 * (1.0 + a.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("diag/offdiag invariants separate different diag multisets") {
  Rng rng(37);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3;
    SymMatrix x = SymMatrix::random_integer(n, -5, 5, rng);
    SymMatrix y = x;
    // Force a different diagonal multiset.
    do {
      for (int i = 0; i < n; ++i)
        y.diag()(i) = static_cast<double>(rng.uniform_int(-5, 5));
    } while (rounded_multiset(y.diag()) == rounded_multiset(x.diag()));
    const Eigen::VectorXd fx = diag_offdiag_invariants(x);
    const Eigen::VectorXd fy = diag_offdiag_invariants(y);
    CHECK((fx - fy).cwiseAbs().maxCoeff() > 1e-9);
  }
}

TEST_CASE("f_star hand values") {
  CHECK(f_star(sym2(1, 2, 3)) == 8.0);

  SymMatrix diag_only(4);
  diag_only.diag() << 1, 2, 3, 4;
  CHECK(f_star(diag_only) == 0.0);
  CHECK_THROWS_AS(f_star(SymMatrix(1)), DimensionError);
}

TEST_CASE("f_star is conjugation invariant") {
  Rng rng(41);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform_int(0, 4));
    const auto x = SymMatrix::random_gaussian(n, rng);
    const auto p = Permutation::random(n, rng);
    const double a = f_star(x);
    const double b = f_star(conjugate_sym(p, x));
    CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("conjugation invariants concatenate the parts") {
  const auto x = sym2(1, 2, 3);
  const Eigen::VectorXd f = conjugation_invariants(x);
  REQUIRE(f.size() == 4);
  CHECK(f(0) == 4.0);
  CHECK(f(1) == 10.0);
  CHECK(f(2) == 2.0);
  CHECK(f(3) == 8.0);

  Rng rng(43);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform_int(0, 4));
    const auto m = SymMatrix::random_gaussian(n, rng);
    const auto p = Permutation::random(n, rng);
    const Eigen::VectorXd a = conjugation_invariants(m);
    const Eigen::VectorXd b = conjugation_invariants(conjugate_sym(p, m));
    CHECK((a - b).cwiseAbs().maxCoeff() <=
          1e-9 * (1.0 + a.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("veronese separators on the spec examples") {
  const ComplexPair pt{std::complex<double>(1, 0), std::complex<double>(2, 0)};
  const auto t = veronese_separators(pt, 2, 1);
  CHECK(std::abs(t[0] - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(t[1] - std::complex<double>(2, 0)) < 1e-15);
  CHECK(std::abs(t[2] - std::complex<double>(4, 0)) < 1e-15);

  const ComplexPair neg{std::complex<double>(-1, 0), std::complex<double>(-2, 0)};
  const auto tn = veronese_separators(neg, 2, 1);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(tn[static_cast<std::size_t>(i)] -
                   t[static_cast<std::size_t>(i)]) < 1e-14);

  CHECK_THROWS_AS(veronese_separators(pt, 4, 0), DimensionError);
  CHECK_THROWS_AS(veronese_separators(pt, 4, 4), DimensionError);
}

TEST_CASE("veronese invariance under all rotations") {
  Rng rng(47);
  for (int n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 125; ++rep) {
      const ComplexPair pt = random_complex_pair(rng);
      const int j = 1 + static_cast<int>(rng.uniform_int(0, n - 2));
      const auto base = veronese_separators(pt, n, j);
      for (int k = 0; k < n; ++k) {
        const auto moved =
            veronese_separators(scalar_root_action(k, n, pt), n, j);
        for (std::size_t c = 0; c < 3; ++c)
          CHECK(std::abs(moved[c] - base[c]) <=
                1e-9 * (1.0 + std::abs(base[c])));
      }
    }
  }
}

TEST_CASE("veronese generators") {
  const ComplexPair pt{std::complex<double>(1, 0), std::complex<double>(2, 0)};
  const Eigen::VectorXcd gens = veronese_generators(pt, 2);
  REQUIRE(gens.size() == 3);
  CHECK(std::abs(gens(0) - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(gens(1) - std::complex<double>(2, 0)) < 1e-15);
  CHECK(std::abs(gens(2) - std::complex<double>(4, 0)) < 1e-15);

  Rng rng(53);
  for (int n : {3, 5, 6}) {
    const ComplexPair p = random_complex_pair(rng);
    const Eigen::VectorXcd base = veronese_generators(p, n);
    CHECK(base.size() == n + 1);
    for (int k = 0; k < n; ++k) {
      const Eigen::VectorXcd moved =
          veronese_generators(scalar_root_action(k, n, p), n);
      CHECK((moved - base).cwiseAbs().maxCoeff() <=
            1e-9 * (1.0 + base.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("sort separator basics") {
  Eigen::MatrixXd x(2, 1);
  x << 1, 2;
  Eigen::VectorXd u(2), v(1);
  u << 1, 0;
  v << 1;
  CHECK(sort_separator(x, u, v) == 1.0);

  u << 0, 0;
  CHECK(sort_separator(x, u, v) == 0.0);
  Eigen::VectorXd bad(3);
  CHECK_THROWS_AS(sort_separator(x, bad, v), DimensionError);
}

TEST_CASE("sort separators are exactly invariant under row permutations") {
  Rng rng(59);
  const int n = 5, d = 3;
  const auto family = SortSeparatorFamily::sample(n, d, 7, 123);
  const RowPermAction action{n, d};
  for (int rep = 0; rep < 200; ++rep) {
    Eigen::MatrixXd x(n, d);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < d; ++c) x(i, c) = rng.normal();
    const auto p = action.random_element(rng);
    const Eigen::VectorXd a = family.evaluate(x);
    const Eigen::VectorXd b = family.evaluate(action.apply(p, x));
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);  // bitwise
  }
}

TEST_CASE("sort separator family counts and seed stability") {
  CHECK(SortSeparatorFamily::default_count(5, 3) == 31);  // 2D+1, D = nd
  CHECK(SortSeparatorFamily::default_count(4, 2) == 17);

  const auto small = SortSeparatorFamily::sample(4, 2, 9, 7);  // D+1 variant
  const auto large = SortSeparatorFamily::sample(4, 2, 17, 7);
  for (int i = 0; i < small.count(); ++i) {
    CHECK(small.us[static_cast<std::size_t>(i)] ==
          large.us[static_cast<std::size_t>(i)]);
    CHECK(small.vs[static_cast<std::size_t>(i)] ==
          large.vs[static_cast<std::size_t>(i)]);
  }

  Rng rng(61);
  Eigen::MatrixXd x(4, 2);
  for (int i = 0; i < 4; ++i)
    for (int c = 0; c < 2; ++c) x(i, c) = rng.normal();
  const auto again = SortSeparatorFamily::sample(4, 2, 17, 7);
  CHECK((large.evaluate(x) - again.evaluate(x)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("combine matches conjugation invariants pointwise") {
  const int n = 3;
  const auto combined = combine(make_diag_offdiag_map(n),
                                {make_f_star_map(n)});
  CHECK(combined.output_len == make_conjugation_map(n).output_len);
  Rng rng(67);
  for (int rep = 0; rep < 50; ++rep) {
    const auto x = SymMatrix::random_gaussian(n, rng);
    CHECK((combined(x) - conjugation_invariants(x)).cwiseAbs().maxCoeff() ==
          0.0);
  }
}

}  // TEST_SUITE
