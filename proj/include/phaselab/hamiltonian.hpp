// Hamiltonians as sums of Hermitian terms: spectra, modular phase
// arithmetic, residuals and spectral gaps.
#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "phaselab/linalg.hpp"

namespace phaselab {

// H = sum_l h_l with the per-term data the randomized propagators need:
// spectral norms, lambda = sum of norms, and the sampling weights
// p_l = |h_l| / lambda.
struct HamiltonianModel {
  std::vector<Matrix> terms;
  std::vector<double> term_norms;
  double lambda = 0.0;
  std::vector<double> probs;
  int dim = 0;
  int num_terms = 0;

  Matrix total() const;
};

// Eigenphases (eigenvalue / 2pi, ascending in [0,1)) and an orthonormal
// eigenbasis. Column m of `eigenvectors` pairs with phases[m].
struct Spectrum {
  std::vector<double> phases;
  std::vector<double> raw_eigenvalues;
  Matrix eigenvectors;

  int dim() const { return static_cast<int>(phases.size()); }
};

// Affine eigenvalue map y = scale*x + shift used by normalize_spectrum, kept
// so callers can translate phases back to the original spectrum.
struct AffineMap {
  double scale = 1.0;
  double shift = 0.0;
  double apply(double x) const { return scale * x + shift; }
  double invert(double y) const { return (y - shift) / scale; }
};

struct ResidualReport {
  double rayleigh = 0.0;   // the reference value a
  double residual = 0.0;   // |H psi - a psi|
};

/// Validates terms (square, equal dims, Hermitian, nonzero norm) and fills in
/// norms, lambda and sampling probabilities.
HamiltonianModel build_model(const std::vector<Matrix>& terms);

/// Eigendecomposition of H = sum of terms. Requires the spectrum inside
/// [0, 2pi) up to 1e-9 slack; phases are the eigenvalues divided by 2pi.
Spectrum spectral_decomposition(const HamiltonianModel& model);

/// Modular distance on the phase circle: min_z |w1 - w2 + z|, in [0, 1/2].
double phase_dist(double w1, double w2);

/// Distance from a phase to a nonempty set of phases.
double phase_dist(double w, const std::vector<double>& candidates);

/// Residual |H psi - a psi| for unit psi; a defaults to the Rayleigh
/// quotient <psi|H|psi>, which minimizes the residual over a.
ResidualReport residual_and_rayleigh(const HamiltonianModel& model, const Vector& psi,
                                     std::optional<double> a = std::nullopt);

/// Minimum modular distance from `target` to the non-excluded eigenphases.
/// Excluding a whole index set supports the cluster reading of the gap.
double spectral_gap(const Spectrum& spectrum, double target, const std::set<int>& exclude);

/// Self-test of the bound machinery: sin(x) >= (2/pi) x on [0, pi/2],
/// sampled on a uniform grid.
bool jordan_check(int grid_points);

/// Affinely rescales the model so the spectrum of H lands in
/// [margin, 1-margin] * 2pi. The identity shift is split evenly across terms.
std::pair<HamiltonianModel, AffineMap> normalize_spectrum(const HamiltonianModel& model,
                                                          double margin = 0.05);

/// Indices whose raw eigenvalue lies within `tol` of raw_eigenvalues[index].
std::set<int> degenerate_cluster(const Spectrum& spectrum, int index, double tol = 1e-10);

/// Sum of |<psi_m|psi>|^2 over a cluster of eigenvector indices. Only the
/// projector is well defined inside a degenerate cluster, so overlaps are
/// always accumulated over the whole cluster.
double cluster_overlap(const Spectrum& spectrum, const std::set<int>& cluster, const Vector& psi);

}  // namespace phaselab
