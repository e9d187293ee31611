#pragma once

#include <Eigen/Core>
#include <charconv>
#include <complex>
#include <string>

#include "orbitsep/permutation.hpp"
#include "orbitsep/signal.hpp"
#include "orbitsep/sym_matrix.hpp"

namespace orbitsep {

/// Shortest decimal form that parses back to the same double. Used for every
/// number we emit, so witness rows are replayable bit for bit.
inline std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string fmt_complex(const std::complex<double>& z) {
  std::string s = fmt_double(z.real());
  if (z.imag() >= 0.0 || std::isnan(z.imag())) s += "+";
  s += fmt_double(z.imag()) + "i";
  return s;
}

inline std::string repr(const Eigen::VectorXd& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += fmt_double(v(i));
  }
  return s + "]";
}

inline std::string repr(const Eigen::MatrixXd& m) {
  std::string s = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) s += ";";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) s += ",";
      s += fmt_double(m(r, c));
    }
  }
  return s + "]";
}

inline std::string repr(const Permutation& p) {
  std::string s = "[";
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p(i));
  }
  return s + "]";
}

inline std::string repr(const ProductGroupElement& g) {
  return "(" + repr(g.sigma) + "," + repr(g.tau) + ")";
}

inline std::string repr(const SymMatrix& x) {
  return "{diag:" + repr(x.diag()) + ",offdiag:" + repr(x.offdiag()) + "}";
}

inline std::string repr(const Signal& x) {
  std::string s = "[";
  for (int j = 0; j < x.size(); ++j) {
    if (j) s += ",";
    s += fmt_complex(x[j]);
  }
  return s + "]";
}

inline std::string repr(const ComplexPair& pt) {
  return "(" + fmt_complex(pt[0]) + "," + fmt_complex(pt[1]) + ")";
}

inline std::string repr(long v) { return std::to_string(v); }

}  // namespace orbitsep
