#include "orbitsep/pointcloud.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "orbitsep/errors.hpp"
#include "orbitsep/invariants.hpp"
#include "orbitsep/repr.hpp"

namespace orbitsep {

PointCloud::PointCloud(Eigen::MatrixXd c) : coords(std::move(c)) {
  if (coords.rows() < 1 || coords.cols() < 1)
    throw DimensionError("point cloud needs d >= 1 and n >= 1");
  if (!coords.allFinite())
    throw DimensionError("point cloud entries must be finite");
}

PointCloud PointCloud::random_gaussian(int d, int n, Rng& rng) {
  Eigen::MatrixXd coords(d, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) coords(i, j) = rng.normal();
  return PointCloud(std::move(coords));
}

double PointCloud::max_abs_diff(const PointCloud& other) const {
  if (dim() != other.dim() || count() != other.count())
    throw DimensionError("cloud shape mismatch");
  return (coords - other.coords).cwiseAbs().maxCoeff();
}

std::ostream& operator<<(std::ostream& os, const PointCloud& p) {
  return os << repr(p.coords);
}

PointCloud center(const PointCloud& p) {
  const Eigen::VectorXd mean = p.coords.rowwise().mean();
  PointCloud out = p;
  out.coords.colwise() -= mean;
  return out;
}

PointCloud permute_columns(const PointCloud& cloud, const Permutation& p) {
  if (p.size() != cloud.count())
    throw DimensionError("permutation/cloud size mismatch");
  PointCloud out = cloud;
  for (int i = 0; i < cloud.count(); ++i)
    out.coords.col(p(i)) = cloud.coords.col(i);
  return out;
}

SymMatrix gram(const PointCloud& p) {
  const Eigen::MatrixXd g = p.coords.transpose() * p.coords;
  return SymMatrix::from_dense(g);
}

Eigen::VectorXd cloud_invariants(const PointCloud& p) {
  if (p.count() < 2) throw DimensionError("cloud invariants need n >= 2");
  return conjugation_invariants(gram(center(p)));
}

AlignmentResult best_alignment(const PointCloud& p1, const PointCloud& p2,
                               std::size_t cap) {
  if (p1.dim() != p2.dim() || p1.count() != p2.count())
    throw DimensionError("cloud shape mismatch");
  const int d = p1.dim();
  const int n = p1.count();

  const PointCloud c1 = center(p1);
  const PointCloud c2 = center(p2);
  const double norm1 = c1.coords.norm();
  const double norm2 = c2.coords.norm();
  const double scale = std::max(norm1, norm2);
  const double sq = norm1 * norm1 + norm2 * norm2;

  // Per-column norms feed a cheap lower bound: for any orthogonal R,
  // ||R a - b|| >= | ||a|| - ||b|| |, so most permutations are rejected
  // without an SVD.
  Eigen::VectorXd len1(n), len2(n);
  for (int i = 0; i < n; ++i) {
    len1(i) = c1.coords.col(i).norm();
    len2(i) = c2.coords.col(i).norm();
  }

  const auto perms = enumerate_symmetric(n, cap);

  AlignmentResult best;
  best.scale = scale;
  double best_res_sq = std::numeric_limits<double>::infinity();

  Eigen::MatrixXd permuted(d, n);
  for (const auto& perm : perms) {
    double bound_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double diff = len1(i) - len2(perm(i));
      bound_sq += diff * diff;
    }
    if (bound_sq > best_res_sq) continue;

    for (int i = 0; i < n; ++i) permuted.col(perm(i)) = c1.coords.col(i);
    const Eigen::MatrixXd cross = c2.coords * permuted.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
    // No determinant correction: reflections are part of O(d).
    const double traced = svd.singularValues().sum();
    const double residual_sq = std::max(0.0, sq - 2.0 * traced);
    if (residual_sq < best_res_sq) {
      best_res_sq = residual_sq;
      best.rotation = svd.matrixU() * svd.matrixV().transpose();
      best.permutation = perm;
    }
  }
  best.residual = std::sqrt(best_res_sq);

  const Eigen::VectorXd mean1 = p1.coords.rowwise().mean();
  const Eigen::VectorXd mean2 = p2.coords.rowwise().mean();
  best.translation = mean2 - best.rotation * mean1;
  return best;
}

std::optional<AlignmentResult> orbit_align(const PointCloud& p1,
                                           const PointCloud& p2, double tol,
                                           std::size_t cap) {
  AlignmentResult result = best_alignment(p1, p2, cap);
  if (!result.same_orbit(tol)) return std::nullopt;
  return result;
}

PointCloud read_pointcloud_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open point cloud file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty point cloud file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  const int d = static_cast<int>(header.size());
  for (int c = 0; c < d; ++c)
    if (header[static_cast<std::size_t>(c)] != "x" + std::to_string(c))
      throw FormatError("point cloud header must be x0,...,x" +
                        std::to_string(d - 1));

  std::vector<Eigen::VectorXd> points;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    Eigen::VectorXd point(d);
    int c = 0;
    while (std::getline(ss, cell, ',')) {
      if (c >= d)
        throw FormatError("ragged row at line " + std::to_string(lineno));
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw FormatError("non-numeric cell at line " + std::to_string(lineno));
      }
      if (used != cell.size())
        throw FormatError("non-numeric cell at line " + std::to_string(lineno));
      point(c++) = value;
    }
    if (c != d) throw FormatError("ragged row at line " + std::to_string(lineno));
    points.push_back(std::move(point));
  }
  if (points.empty()) throw FormatError("point cloud file has no points");

  Eigen::MatrixXd coords(d, static_cast<int>(points.size()));
  for (int j = 0; j < static_cast<int>(points.size()); ++j)
    coords.col(j) = points[static_cast<std::size_t>(j)];
  return PointCloud(std::move(coords));
}

void write_pointcloud_csv(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write point cloud file: " + path);
  for (int c = 0; c < cloud.dim(); ++c) {
    if (c) out << ',';
    out << 'x' << c;
  }
  out << '\n';
  for (int j = 0; j < cloud.count(); ++j) {
    for (int c = 0; c < cloud.dim(); ++c) {
      if (c) out << ',';
      out << fmt_double(cloud.coords(c, j));
    }
    out << '\n';
  }
}

}  // namespace orbitsep
