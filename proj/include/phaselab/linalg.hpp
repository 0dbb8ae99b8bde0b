// Dense complex linear algebra helpers shared by all modules.
#pragma once

#include <Eigen/Dense>
#include <complex>

namespace phaselab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// e^{i tau h} for Hermitian h, computed through the eigendecomposition of h.
Matrix unitary_exp(const Matrix& hermitian, double tau);

/// Largest singular value.
double operator_norm(const Matrix& a);

/// Spectral norm of a Hermitian matrix (largest |eigenvalue|).
double hermitian_spectral_norm(const Matrix& h);

/// Largest entrywise deviation |a - a^dagger|.
double hermiticity_defect(const Matrix& a);

/// u^k by binary exponentiation (k >= 0).
Matrix matrix_power(const Matrix& u, long long k);

/// Largest entry of |u^dagger u - I|; ~0 for unitary u.
double unitarity_defect(const Matrix& u);

bool is_unit_vector(const Vector& v, double tol = 1e-10);

}  // namespace phaselab
