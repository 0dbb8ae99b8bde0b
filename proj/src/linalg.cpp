#include "phaselab/linalg.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace phaselab {

Matrix unitary_exp(const Matrix& hermitian, double tau) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("unitary_exp: eigendecomposition failed");
  }
  const auto& w = es.eigenvalues();
  const auto& v = es.eigenvectors();
  Vector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    phases(i) = std::polar(1.0, tau * w(i));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

double hermitian_spectral_norm(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  const auto& w = es.eigenvalues();
  return std::max(std::abs(w(0)), std::abs(w(w.size() - 1)));
}

double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Matrix matrix_power(const Matrix& u, long long k) {
  if (k < 0) throw std::invalid_argument("matrix_power: negative exponent");
  Matrix result = Matrix::Identity(u.rows(), u.cols());
  Matrix base = u;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

double unitarity_defect(const Matrix& u) {
  Matrix g = u.adjoint() * u;
  g -= Matrix::Identity(u.rows(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

bool is_unit_vector(const Vector& v, double tol) {
  return std::abs(v.norm() - 1.0) <= tol;
}

}  // namespace phaselab
