#include <doctest.h>

#include <set>

#include "orbitsep/actions.hpp"
#include "orbitsep/errors.hpp"
#include "orbitsep/linalg.hpp"
#include "orbitsep/permutation.hpp"
#include "orbitsep/signal.hpp"
#include "orbitsep/sym_matrix.hpp"

using namespace orbitsep;

namespace {

SymMatrix sym2(double a, double b, double c) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, b, c;
  return SymMatrix::from_dense(m);
}

}  // namespace

TEST_SUITE("group_actions") {

TEST_CASE("pair index round trip is exact") {
  for (int n = 2; n <= 9; ++n) {
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        CHECK(SymMatrix::pair_index(n, i, j) == k);
        const auto [a, b] = SymMatrix::index_pair(n, k);
        CHECK(a == i);
        CHECK(b == j);
        ++k;
      }
    CHECK(k == n * (n - 1) / 2);
  }
}

TEST_CASE("permutation composition and inverse") {
  Rng rng(7);
  for (int n : {2, 3, 5, 8}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto p = Permutation::random(n, rng);
      const auto q = Permutation::random(n, rng);
      const auto pq = p.compose(q);
      for (int i = 0; i < n; ++i) CHECK(pq(i) == p(q(i)));
      CHECK(p.compose(p.inverse()).is_identity());
      CHECK(p.inverse().compose(p).is_identity());
    }
  }
  CHECK_THROWS_AS(Permutation::from_image({0, 0, 1}), DimensionError);
}

TEST_CASE("induced pair perm on the spec examples") {
  // n=3, swap of 0 and 1: pairs (0,1),(0,2),(1,2) -> (0,1),(1,2),(0,2).
  const auto swap01 = Permutation::from_image({1, 0, 2});
  const auto induced = induced_pair_perm(swap01);
  CHECK(induced.image() == std::vector<int>{0, 2, 1});

  CHECK(induced_pair_perm(Permutation(5)).is_identity());
  CHECK_THROWS_AS(induced_pair_perm(Permutation(1)), DimensionError);
}

TEST_CASE("induced pair perm is a homomorphism") {
  Rng rng(11);
  for (int n : {3, 4, 6}) {
    for (int rep = 0; rep < 25; ++rep) {
      const auto p = Permutation::random(n, rng);
      const auto q = Permutation::random(n, rng);
      CHECK(induced_pair_perm(p.compose(q)) ==
            induced_pair_perm(p).compose(induced_pair_perm(q)));
    }
  }
}

TEST_CASE("induced pair perm is injective for n in 3..5") {
  for (int n : {3, 4, 5}) {
    std::set<std::vector<int>> images;
    for (const auto& p : enumerate_symmetric(n))
      images.insert(induced_pair_perm(p).image());
    CHECK(images.size() == factorial_capped(n, 1000000));
  }
}

TEST_CASE("conjugate_sym hand example and identity") {
  const auto x = sym2(1, 2, 3);
  const auto swapped = conjugate_sym(Permutation::from_image({1, 0}), x);
  CHECK(swapped.at(0, 0) == 3.0);
  CHECK(swapped.at(1, 1) == 1.0);
  CHECK(swapped.at(0, 1) == 2.0);

  CHECK(conjugate_sym(Permutation(2), x) == x);
}

TEST_CASE("conjugate_sym matches dense conjugation and composes") {
  Rng rng(3);
  for (int n : {2, 3, 4, 6}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto x = SymMatrix::random_gaussian(n, rng);
      const auto p = Permutation::random(n, rng);
      const auto q = Permutation::random(n, rng);

      const auto y = conjugate_sym(p, x);
      const Eigen::MatrixXd dense = x.to_dense();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(y.at(p(i), p(j)) == doctest::Approx(dense(i, j)).epsilon(0));

      CHECK(conjugate_sym(p.compose(q), x)
                .max_abs_diff(conjugate_sym(p, conjugate_sym(q, x))) == 0.0);
    }
  }
}

TEST_CASE("conjugation preserves eigenvalues via power traces") {
  Rng rng(5);
  for (int n : {2, 3, 4, 5}) {
    const auto x = SymMatrix::random_gaussian(n, rng);
    const auto p = Permutation::random(n, rng);
    const Eigen::MatrixXd a = x.to_dense();
    const Eigen::MatrixXd b = conjugate_sym(p, x).to_dense();
    Eigen::MatrixXd ap = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd bp = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
      ap = ap * a;
      bp = bp * b;
      CHECK(ap.trace() == doctest::Approx(bp.trace()).epsilon(1e-12));
    }
  }
}

TEST_CASE("apply_product spec example and embedding consistency") {
  // n=3, sigma identity, tau swaps pair slots 0 and 1.
  SymMatrix x(3);
  x.diag() << 1, 2, 3;
  x.offdiag() << 4, 5, 6;
  const ProductGroupElement g{Permutation(3),
                              Permutation::from_image({1, 0, 2})};
  const auto y = apply_product(g, x);
  CHECK(y.diag() == x.diag());
  CHECK(y.offdiag()(0) == 5.0);
  CHECK(y.offdiag()(1) == 4.0);
  CHECK(y.offdiag()(2) == 6.0);

  Rng rng(17);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform_int(0, 3));
    const auto p = Permutation::random(n, rng);
    const auto m = SymMatrix::random_gaussian(n, rng);
    CHECK(apply_product(embed_in_product(p), m).max_abs_diff(
              conjugate_sym(p, m)) == 0.0);
  }
}

TEST_CASE("apply_product respects identity and composition") {
  Rng rng(23);
  const int n = 4;
  const ProductAction action{n};
  const auto x = SymMatrix::random_gaussian(n, rng);
  CHECK(apply_product({Permutation(n), Permutation(n * (n - 1) / 2)}, x)
            .max_abs_diff(x) == 0.0);
  for (int rep = 0; rep < 30; ++rep) {
    const auto g = action.random_element(rng);
    const auto h = action.random_element(rng);
    CHECK(apply_product(g.compose(h), x)
              .max_abs_diff(apply_product(g, apply_product(h, x))) == 0.0);
  }
}

TEST_CASE("cyclic shift basics") {
  const Signal x = Signal::from_real(Eigen::Vector3d(1, 2, 3));
  CHECK(cyclic_shift(0, x).max_abs_diff(x) == 0.0);
  CHECK(cyclic_shift(3, x).max_abs_diff(x) == 0.0);
  const Signal shifted = cyclic_shift(1, x);
  CHECK(shifted[0] == std::complex<double>(3, 0));
  CHECK(shifted[1] == std::complex<double>(1, 0));
  CHECK(shifted[2] == std::complex<double>(2, 0));
  CHECK(cyclic_shift(-1, x).max_abs_diff(cyclic_shift(2, x)) == 0.0);
}

TEST_CASE("scalar root action") {
  const ComplexPair pt{std::complex<double>(1, 0), std::complex<double>(2, 0)};
  const auto same = scalar_root_action(0, 4, pt);
  CHECK(max_abs_diff(same, pt) == 0.0);

  const auto negated = scalar_root_action(1, 2, pt);
  CHECK(std::abs(negated[0] - std::complex<double>(-1, 0)) < 1e-15);
  CHECK(std::abs(negated[1] - std::complex<double>(-2, 0)) < 1e-15);

  // Orbit of a nonzero point under Z/nZ has exactly n elements.
  for (int n : {3, 5, 8}) {
    std::set<std::pair<long long, long long>> orbit;
    for (int k = 0; k < n; ++k) {
      const auto moved = scalar_root_action(k, n, pt);
      orbit.insert({std::llround(moved[0].real() * 1e9),
                    std::llround(moved[0].imag() * 1e9)});
    }
    CHECK(orbit.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("group enumeration sizes and order") {
  CHECK(enumerate_symmetric(3).size() == 6);
  CHECK(enumerate_cyclic(5).size() == 5);
  CHECK(enumerate_product(3).size() == 36);

  const auto s3 = enumerate_symmetric(3);
  for (std::size_t i = 1; i < s3.size(); ++i)
    CHECK(s3[i - 1] < s3[i]);  // lexicographic

  CHECK_THROWS_AS(enumerate_product(5), SizeLimitError);
  try {
    enumerate_symmetric(10, 1000);
  } catch (const SizeLimitError& e) {
    CHECK(e.required() == 3628800);
    CHECK(std::string(e.what()).find("3628800") != std::string::npos);
  }
}

TEST_CASE("product(4) has 17280 elements") {
  CHECK(enumerate_product(4).size() == 17280);
}

TEST_CASE("random orthogonal matrices") {
  for (int d = 1; d <= 6; ++d) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Eigen::MatrixXd q = random_orthogonal(d, seed);
      const Eigen::MatrixXd gram = q.transpose() * q;
      CHECK((gram - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
  const Eigen::MatrixXd q1 = random_orthogonal(4, 42);
  const Eigen::MatrixXd q2 = random_orthogonal(4, 42);
  CHECK((q1 - q2).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::MatrixXd q3 = random_orthogonal(1, 9);
  CHECK(std::abs(std::abs(q3(0, 0)) - 1.0) < 1e-15);
}

TEST_CASE("dense round trip") {
  Rng rng(31);
  const auto x = SymMatrix::random_gaussian(5, rng);
  CHECK(SymMatrix::from_dense(x.to_dense()).max_abs_diff(x) == 0.0);
}

}  // TEST_SUITE
