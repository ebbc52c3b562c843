#include "credal/chart.hpp"

#include <Eigen/SVD>

namespace credal {

Real Chart::off_hull_distance(const Vector& p) const {
  const Vector delta = p - origin;
  return (delta - basis * (basis.transpose() * delta)).norm();
}

Chart affine_hull_chart(const Matrix& points) {
  if (points.cols() < 1 || !points.allFinite()) {
    throw ValidationError("InvalidInput", "affine_hull_chart needs finite points");
  }
  Chart chart;
  chart.origin = points.col(0);
  const Index n = points.cols();
  if (n == 1) {
    chart.basis = Matrix(points.rows(), 0);
    return chart;
  }
  Matrix diffs = points.rightCols(n - 1).colwise() - chart.origin;
  Eigen::JacobiSVD<Matrix> svd(diffs, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const Real cutoff = tol::rank * std::max<Real>(1.0, sv.size() > 0 ? sv(0) : 0.0);
  Index k = 0;
  while (k < sv.size() && sv(k) > cutoff) ++k;
  chart.basis = svd.matrixU().leftCols(k);
  return chart;
}

}  // namespace credal
