// Exact simulation of the phase-estimation register: outcome distributions,
// closed-form coefficients, failure probabilities and shot sampling.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "phaselab/propagators.hpp"

namespace phaselab {

// Register geometry for one estimation run: t qubits, n target digits,
// failure radius ell, best dyadic index b and its defect delta.
struct RegisterConfig {
  int t = 1;
  int n = 1;
  long long ell = 1;
  long long b = 0;
  double delta = 0.0;

  /// ell = 2^{t-n}, b/delta from the target phase.
  static RegisterConfig for_phase(double phase, int t, int n);
};

// Exact probability vector over the 2^t register outcomes.
struct OutcomeDistribution {
  std::vector<double> probs;
  int t = 0;
  std::string source;  // "closed-form" | "simulated" | "qdrift-realization(...)"

  long long size() const { return static_cast<long long>(probs.size()); }
};

struct NearestIndex {
  long long b = 0;
  double delta = 0.0;
};

struct PhaseWeight {
  double phase = 0.0;   // eigenphase in [0,1)
  double weight = 0.0;  // |<psi_m|psi>|^2
};

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long num_samples = 0;
};

/// b = floor(2^t phase) mod 2^t and delta = phase - b/2^t.
NearestIndex nearest_index(double phase, int t);

/// Squared register response sin^2(2^t pi theta) / (2^{2t} sin^2(pi theta)),
/// with the removable singularity evaluated as 1 at dyadic phases.
double phase_response(double theta, int t);

/// probs[j] = sum_m weight_m * phase_response(phase_m - j/2^t, t). Weights
/// must sum to 1 within 1e-10.
OutcomeDistribution closed_form_distribution(const std::vector<PhaseWeight>& overlaps, int t);

/// Runs the register transform on the propagator's trajectory: probs[j] =
/// |2^{-t} sum_k e^{-2 pi i kj/2^t} W_k psi|^2, one DFT per state component.
OutcomeDistribution simulate_qpe(const Propagator& propagator, const Vector& psi, int t);

/// Probability mass at cyclic distance > ell from b.
double failure_probability(const OutcomeDistribution& dist, long long b, long long ell);

/// Multinomial measurement emulation; deterministic under seed.
std::map<long long, long long> sample_outcomes(const OutcomeDistribution& dist, long long shots,
                                               std::uint64_t seed);

/// Draws one QDRIFT sequence and returns the exact outcome distribution of
/// that realization.
OutcomeDistribution qdrift_qpe_realization(const HamiltonianModel& model, const Spectrum& spectrum,
                                           const Vector& psi, int t, long long r,
                                           std::uint64_t seed,
                                           QDriftMode mode = QDriftMode::Prefix);

/// Monte Carlo mean of |(V_{rk} ... V_1 - U^k) psi|^2 over realizations.
MonteCarloEstimate qdrift_mse(const HamiltonianModel& model, const Spectrum& spectrum,
                              const Vector& psi, long long k, long long r, long long num_samples,
                              std::uint64_t seed);

namespace detail {
/// In-place forward DFT (e^{-2 pi i jk/N} convention); size must be a power
/// of two.
void fft_radix2(std::vector<Complex>& data);
}  // namespace detail

}  // namespace phaselab
