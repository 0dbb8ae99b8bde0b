#include "phaselab/hamiltonian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace phaselab {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kRangeSlack = 1e-9;

}  // namespace

Matrix HamiltonianModel::total() const {
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& term : terms) h += term;
  return h;
}

HamiltonianModel build_model(const std::vector<Matrix>& terms) {
  if (terms.empty()) throw std::invalid_argument("build_model: at least one term required");
  const Eigen::Index d = terms.front().rows();
  if (d < 2) throw std::invalid_argument("build_model: dimension must be at least 2");

  HamiltonianModel model;
  model.dim = static_cast<int>(d);
  model.num_terms = static_cast<int>(terms.size());
  model.terms = terms;
  model.term_norms.reserve(terms.size());

  for (std::size_t l = 0; l < terms.size(); ++l) {
    const Matrix& h = terms[l];
    if (h.rows() != d || h.cols() != d) {
      std::ostringstream msg;
      msg << "build_model: term " << l << " is " << h.rows() << "x" << h.cols()
          << ", expected " << d << "x" << d;
      throw std::invalid_argument(msg.str());
    }
    const double norm = hermitian_spectral_norm((h + h.adjoint()) / 2.0);
    const double defect = hermiticity_defect(h);
    if (defect > kHermitianTol * std::max(norm, 1.0)) {
      std::ostringstream msg;
      msg << "build_model: term " << l << " is not Hermitian (max deviation " << defect << ")";
      throw std::invalid_argument(msg.str());
    }
    if (norm <= 1e-14) {
      std::ostringstream msg;
      msg << "build_model: term " << l << " has zero norm; sampling probability undefined";
      throw std::invalid_argument(msg.str());
    }
    model.term_norms.push_back(norm);
    model.lambda += norm;
  }

  model.probs.reserve(terms.size());
  for (double norm : model.term_norms) model.probs.push_back(norm / model.lambda);
  return model;
}

Spectrum spectral_decomposition(const HamiltonianModel& model) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(model.total());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("spectral_decomposition: eigendecomposition failed");
  }

  Spectrum spectrum;
  spectrum.eigenvectors = es.eigenvectors();
  spectrum.raw_eigenvalues.resize(model.dim);
  spectrum.phases.resize(model.dim);
  for (int m = 0; m < model.dim; ++m) {
    const double raw = es.eigenvalues()(m);
    if (raw < -kRangeSlack || raw >= kTwoPi + kRangeSlack) {
      std::ostringstream msg;
      msg << "spectral_decomposition: eigenvalue " << raw
          << " outside [0, 2pi); rescale the model first";
      throw std::invalid_argument(msg.str());
    }
    spectrum.raw_eigenvalues[m] = raw;
    double phase = raw / kTwoPi;
    if (phase < 0.0) phase = 0.0;         // within the slack below zero
    if (phase >= 1.0) phase -= 1.0;       // within the slack above 2pi
    spectrum.phases[m] = phase;
  }
  return spectrum;
}

double phase_dist(double w1, double w2) {
  double d = std::abs(w1 - w2);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

double phase_dist(double w, const std::vector<double>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("phase_dist: empty candidate set");
  double best = 0.5;
  for (double c : candidates) best = std::min(best, phase_dist(w, c));
  return best;
}

ResidualReport residual_and_rayleigh(const HamiltonianModel& model, const Vector& psi,
                                     std::optional<double> a) {
  if (psi.size() != model.dim) {
    throw std::invalid_argument("residual_and_rayleigh: vector dimension mismatch");
  }
  if (!is_unit_vector(psi)) {
    throw std::invalid_argument("residual_and_rayleigh: input vector is not normalized");
  }
  const Matrix h = model.total();
  const Vector hpsi = h * psi;
  const double value = a.value_or(std::real(psi.dot(hpsi)));
  return ResidualReport{value, (hpsi - value * psi).norm()};
}

double spectral_gap(const Spectrum& spectrum, double target, const std::set<int>& exclude) {
  const int d = spectrum.dim();
  for (int idx : exclude) {
    if (idx < 0 || idx >= d) {
      throw std::invalid_argument("spectral_gap: exclude index out of range");
    }
  }
  double best = -1.0;
  for (int m = 0; m < d; ++m) {
    if (exclude.count(m)) continue;
    const double dist = phase_dist(target, spectrum.phases[m]);
    if (best < 0.0 || dist < best) best = dist;
  }
  if (best < 0.0) {
    throw std::invalid_argument("spectral_gap: exclusion set covers every eigenphase");
  }
  return best;
}

bool jordan_check(int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("jordan_check: need at least 2 grid points");
  for (int i = 0; i < grid_points; ++i) {
    const double x = (kPi / 2.0) * static_cast<double>(i) / (grid_points - 1);
    if (std::sin(x) < (2.0 / kPi) * x - 1e-12) return false;
  }
  return true;
}

std::pair<HamiltonianModel, AffineMap> normalize_spectrum(const HamiltonianModel& model,
                                                          double margin) {
  if (margin < 0.0 || margin >= 0.5) {
    throw std::invalid_argument("normalize_spectrum: margin must lie in [0, 0.5)");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(model.total(), Eigen::EigenvaluesOnly);
  const double lo = margin * kTwoPi;
  const double hi = (1.0 - margin) * kTwoPi;
  const double wmin = es.eigenvalues()(0);
  const double wmax = es.eigenvalues()(model.dim - 1);

  AffineMap map;
  if (wmax - wmin < 1e-12) {
    map.scale = 1.0;
    map.shift = 0.5 * (lo + hi) - wmin;  // degenerate spread: park at the center
  } else {
    map.scale = (hi - lo) / (wmax - wmin);
    map.shift = lo - map.scale * wmin;
  }

  std::vector<Matrix> scaled;
  scaled.reserve(model.terms.size());
  const Matrix eye = Matrix::Identity(model.dim, model.dim);
  for (const auto& term : model.terms) {
    scaled.push_back(map.scale * term + (map.shift / model.num_terms) * eye);
  }
  return {build_model(scaled), map};
}

std::set<int> degenerate_cluster(const Spectrum& spectrum, int index, double tol) {
  if (index < 0 || index >= spectrum.dim()) {
    throw std::invalid_argument("degenerate_cluster: index out of range");
  }
  std::set<int> cluster;
  const double ref = spectrum.raw_eigenvalues[index];
  for (int m = 0; m < spectrum.dim(); ++m) {
    if (std::abs(spectrum.raw_eigenvalues[m] - ref) <= tol) cluster.insert(m);
  }
  return cluster;
}

double cluster_overlap(const Spectrum& spectrum, const std::set<int>& cluster, const Vector& psi) {
  double total = 0.0;
  for (int m : cluster) {
    if (m < 0 || m >= spectrum.dim()) {
      throw std::invalid_argument("cluster_overlap: index out of range");
    }
    total += std::norm(spectrum.eigenvectors.col(m).dot(psi));
  }
  return total;
}

}  // namespace phaselab
