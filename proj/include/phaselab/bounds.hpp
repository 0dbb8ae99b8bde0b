// Closed-form bounds and resource formulas, as pure functions, plus the xi
// concentration diagnostic for the randomized propagator.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "phaselab/qpe.hpp"

namespace phaselab::bounds {

// A named bound evaluation with its inputs echoed, optionally paired with
// the measured quantity it was checked against.
struct BoundReport {
  std::string name;  // thm1|thm2|thm3|thm4|lemma1_overlap|lemma2_overlap|mmin|mse|markov
  std::map<std::string, double> inputs;
  double value = 0.0;
  std::optional<double> satisfied_by;
  std::optional<double> slack;  // value - satisfied_by

  void set_measured(double measured) {
    satisfied_by = measured;
    slack = value - measured;
  }
  std::string to_json_string() const;
};

enum class Lemma { Lemma1, Lemma2 };

/// Smallest k >= 0 with 2^k >= x (x > 0). The comparison chain stays in
/// exact doubles so grid points like 258 round the same way the integer
/// formula does.
int ceil_log2(double x);

/// t = n + ceil(log2(2 + 1/(2 eps))).
int thm1_qubits(int n, double eps);

/// 1 / (2 (ell - 1)), ell >= 2.
double thm1_failure(long long ell);

/// t = n + ceil(log2(2 + delta^2 / (2 eps gap^2))); delta and gap in the
/// same units.
int thm2_qubits(int n, double eps, double delta_res, double gap);

/// Residual-input failure bound. combined=false returns the non-target term
/// delta^2 / (2 gap^2 (ell-1)); combined=true adds the exact-input term:
/// (1 + delta^2/gap^2) / (2 (ell-1)).
double thm2_failure(long long ell, double delta_res, double gap, bool combined);

/// t = n + ceil(log2(2 + err^2 / (2 gap^2 eps))), with a measured one-step
/// error supplied in place of the unknowable C tau^p.
int thm3_qubits(int n, double eps, double err_onestep, double gap);

/// Overlap lower bounds: Lemma1 -> 1 - (err/gap)^2 (requires err < gap);
/// Lemma2 -> 1 - (err/(2 gap))^2 (requires err < 2 gap).
double lemma_overlap_bound(double err, double gap, Lemma which);

/// Eigenphase displacement bound err/2.
double mmin_bound(double err_onestep);

struct Thm4Requirements {
  long long r_min = 0;  // smallest r with r^{q-1} > 2^{n+6} lambda^2 / eps^2
  int t_min = 0;        // n + ceil(log2(2 + 1/eps))
};
Thm4Requirements thm4_requirements(int n, double eps, double lambda, double q);

/// Concentration scale (2/3) 2^{t/2} sqrt(c lambda^2 / r^{q-1}) bounding the
/// expected xi; requires q > 1 (otherwise it does not vanish with r).
double sigma_t(int t, double c_est, double lambda, long long r, double q);

/// Proof-level failure estimate 1/(4(ell+1)) + 2 sqrt(2) sqrt(sigma_sq)
/// (2 ell + 1)^{1/4} after the optimal nu/delta choice.
double thm4_proof_error(long long ell, double sigma_sq);

/// Markov bound mse / eps^2 on P(|e| > eps).
double markov_failure(double mse, double eps);

/// Mean-square error budget c lambda^2 k / r (tau = 1/r).
double mse_bound(double c, double lambda, long long k, long long r);

// One QDRIFT realization's register perturbation: xi = 2^{-t} sum_k
// |<psi|e_{rk}>| together with the |alpha~_j| it dominates.
struct XiRealization {
  double xi = 0.0;
  std::vector<double> alpha_tilde_abs;
};
XiRealization xi_realization(const HamiltonianModel& model, const Spectrum& spectrum,
                             const Vector& psi, int t, long long r, std::uint64_t seed);

/// Monte Carlo estimate of E[xi]; psi must be an eigenvector of H.
MonteCarloEstimate xi_diagnostic(const HamiltonianModel& model, const Spectrum& spectrum,
                                 const Vector& psi, int t, long long r, long long num_samples,
                                 std::uint64_t seed);

}  // namespace phaselab::bounds
