// Exact, Trotter and QDRIFT propagators: oracles that supply W_k |psi> for
// the controlled powers of the phase-estimation register.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "phaselab/hamiltonian.hpp"

namespace phaselab {

enum class QDriftMode {
  Prefix,              // one sequence; length-rk prefixes stand in for U^k
  IndependentPerPower  // a fresh sequence of length rk for every power k
};

std::string to_string(QDriftMode mode);

// An i.i.d. draw of term indices (1-based, in [1..L]) from the model's
// sampling probabilities. Replays identically for a fixed seed.
struct QDriftSequence {
  std::vector<int> indices;
  std::uint64_t seed = 0;
  QDriftMode mode = QDriftMode::Prefix;
};

// Oracle interface: successive states W_0 psi, W_1 psi, ... for the register
// powers. Implementations are immutable after construction.
class Propagator {
 public:
  virtual ~Propagator() = default;
  virtual int dim() const = 0;
  virtual std::string label() const = 0;
  /// W_k psi for a single power k >= 0.
  virtual Vector power(const Vector& psi, long long k) const = 0;
  /// W_0 psi .. W_{count-1} psi; default loops power(), subclasses override
  /// with incremental products.
  virtual std::vector<Vector> trajectory(const Vector& psi, long long count) const;
};

// U^k via the spectral form: no product accumulation, each power is direct.
class ExactPropagator final : public Propagator {
 public:
  explicit ExactPropagator(Spectrum spectrum);
  int dim() const override { return spectrum_.dim(); }
  std::string label() const override { return "exact"; }
  Vector power(const Vector& psi, long long k) const override;

 private:
  Spectrum spectrum_;
};

// (V_tau)^{rk} with V_tau a first- or second-order product formula step,
// tau = 1/r.
class TrotterPropagator final : public Propagator {
 public:
  TrotterPropagator(const HamiltonianModel& model, long long steps, int order);
  int dim() const override { return dim_; }
  std::string label() const override;
  Vector power(const Vector& psi, long long k) const override;
  std::vector<Vector> trajectory(const Vector& psi, long long count) const override;

  const Matrix& step_matrix() const { return step_; }   // V_tau
  const Matrix& unit_matrix() const { return unit_; }   // (V_tau)^r
  long long steps() const { return steps_; }
  int order() const { return order_; }

 private:
  int dim_ = 0;
  long long steps_ = 1;
  int order_ = 2;
  Matrix step_;
  Matrix unit_;
};

// One realization of the randomized product formula: W_k is the product of
// the first rk sampled step unitaries (Prefix mode) or of a fresh length-rk
// sequence per power (IndependentPerPower).
class QDriftPropagator final : public Propagator {
 public:
  /// max_power bounds the k this realization can serve (sequence length
  /// r * max_power in Prefix mode).
  QDriftPropagator(const HamiltonianModel& model, long long steps_per_unit,
                   std::uint64_t seed, QDriftMode mode, long long max_power);
  int dim() const override { return model_.dim; }
  std::string label() const override;
  Vector power(const Vector& psi, long long k) const override;
  std::vector<Vector> trajectory(const Vector& psi, long long count) const override;

  const QDriftSequence& sequence() const { return sequence_; }
  long long steps_per_unit() const { return steps_; }

 private:
  Vector apply_sequence(const std::vector<int>& indices, long long count, Vector psi) const;

  HamiltonianModel model_;
  long long steps_ = 1;
  std::uint64_t seed_ = 0;
  QDriftMode mode_ = QDriftMode::Prefix;
  long long max_power_ = 0;
  QDriftSequence sequence_;          // Prefix mode only
  std::vector<Matrix> step_matrices_;  // exp(i tau h_l / p_l) per term
};

/// U^k psi from the spectral decomposition (Eq. of the exact propagator).
Vector exact_power(const Spectrum& spectrum, const Vector& psi, long long k);

/// One product-formula step for e^{i tau H}. Order 1 multiplies the term
/// exponentials in ascending index order (rightmost applied first); order 2
/// is the symmetric splitting with the last term in the middle.
Matrix trotter_step(const HamiltonianModel& model, double tau, int order);

/// exp(i tau h_ell / p_ell); ell is 1-based in [1..L].
Matrix qdrift_step(const HamiltonianModel& model, int ell, double tau);

/// i.i.d. categorical draws of term indices from the model probabilities.
QDriftSequence sample_sequence(const HamiltonianModel& model, long long length,
                               std::uint64_t seed, QDriftMode mode = QDriftMode::Prefix);

/// Expected one-step channel sum_l p_l exp(i tau h_l / p_l); not unitary in
/// general but always of operator norm <= 1.
Matrix mean_channel(const HamiltonianModel& model, double tau);

/// |U^k psi - W_k psi| with U^k from the spectrum and W_k from the
/// propagator (which carries its own step count).
double kstep_error(const HamiltonianModel& model, const Spectrum& spectrum, const Vector& psi,
                   const Propagator& propagator, long long k);

}  // namespace phaselab
