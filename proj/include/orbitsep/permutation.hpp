#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "orbitsep/rng.hpp"

namespace orbitsep {

/// A permutation of {0..n-1}. image()[i] is the slot that slot i goes to,
/// so acting on a vector means y[image[i]] = x[i].
class Permutation {
 public:
  /// Identity on n slots.
  explicit Permutation(int n);

  /// Validates that image is a bijection on {0..n-1}.
  static Permutation from_image(std::vector<int> image);

  /// Uniform random permutation (Fisher-Yates).
  static Permutation random(int n, Rng& rng);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  /// (*this) after other: (p.compose(q))(i) = p(q(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.image_ < b.image_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  std::vector<int> image_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// All of S_n in lexicographic order of image arrays. Throws SizeLimitError
/// if n! exceeds cap.
std::vector<Permutation> enumerate_symmetric(int n, std::size_t cap = 1000000);

/// Cyclic shift subgroup of S_n (shift t maps slot i to slot (i+t) mod n),
/// listed as t = 0..n-1 which is also lexicographic in the image arrays.
std::vector<Permutation> enumerate_cyclic(int n, std::size_t cap = 1000000);

std::size_t factorial_capped(int n, std::size_t cap);

}  // namespace orbitsep
