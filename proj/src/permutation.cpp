#include "orbitsep/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "orbitsep/errors.hpp"

namespace orbitsep {

Permutation::Permutation(int n) {
  if (n < 1) throw DimensionError("permutation size must be positive");
  image_.resize(static_cast<std::size_t>(n));
  std::iota(image_.begin(), image_.end(), 0);
}

Permutation Permutation::from_image(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  if (n < 1) throw DimensionError("permutation size must be positive");
  std::vector<bool> seen(image.size(), false);
  for (int v : image) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw DimensionError("image array is not a bijection on {0..n-1}");
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(image), Unchecked{});
}

Permutation Permutation::random(int n, Rng& rng) {
  Permutation p(n);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_int(0, i));
    std::swap(p.image_[static_cast<std::size_t>(i)],
              p.image_[static_cast<std::size_t>(j)]);
  }
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw DimensionError("cannot compose permutations of different sizes");
  std::vector<int> image(image_.size());
  for (std::size_t i = 0; i < image.size(); ++i)
    image[i] = image_[static_cast<std::size_t>(other.image_[i])];
  return Permutation(std::move(image), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> image(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    image[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return Permutation(std::move(image), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '[';
  for (int i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p(i);
  }
  return os << ']';
}

std::size_t factorial_capped(int n, std::size_t cap) {
  std::size_t result = 1;
  for (int k = 2; k <= n; ++k) {
    if (result > cap / static_cast<std::size_t>(k))
      throw SizeLimitError(cap + 1, cap);
    result *= static_cast<std::size_t>(k);
  }
  return result;
}

std::vector<Permutation> enumerate_symmetric(int n, std::size_t cap) {
  if (n < 1) throw DimensionError("symmetric group needs n >= 1");
  // Compute n! first so the error can name the exact requirement.
  std::size_t order = 1;
  bool overflow = false;
  for (int k = 2; k <= n; ++k) {
    if (order > (std::size_t{1} << 62) / static_cast<std::size_t>(k)) {
      overflow = true;
      break;
    }
    order *= static_cast<std::size_t>(k);
  }
  if (overflow || order > cap)
    throw SizeLimitError(overflow ? cap + 1 : order, cap);

  std::vector<Permutation> result;
  result.reserve(order);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  do {
    result.push_back(Permutation::from_image(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return result;
}

std::vector<Permutation> enumerate_cyclic(int n, std::size_t cap) {
  if (n < 1) throw DimensionError("cyclic group needs n >= 1");
  if (static_cast<std::size_t>(n) > cap)
    throw SizeLimitError(static_cast<std::size_t>(n), cap);
  std::vector<Permutation> result;
  result.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      image[static_cast<std::size_t>(i)] = (i + t) % n;
    result.push_back(Permutation::from_image(std::move(image)));
  }
  return result;
}

}  // namespace orbitsep
