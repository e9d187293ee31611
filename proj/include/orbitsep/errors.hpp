#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitsep {

/// Mismatched or invalid dimensions in an operation's inputs.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite enumeration would exceed the configured cap.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(std::size_t required, std::size_t cap)
      : std::runtime_error("enumeration needs " + std::to_string(required) +
                           " elements but the cap is " + std::to_string(cap) +
                           "; raise the cap to at least " + std::to_string(required)),
        required_(required),
        cap_(cap) {}

  std::size_t required() const { return required_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

/// A genericity precondition failed (e.g. a vanishing Fourier bin).
class GenericityError : public std::runtime_error {
 public:
  GenericityError(const std::string& what, int bin)
      : std::runtime_error(what), bin_(bin) {}

  int bin() const { return bin_; }

 private:
  int bin_;
};

/// Malformed input file (CSV cloud, key=value config).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orbitsep
