#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qts/error.hpp"

namespace qts {

using Complex = std::complex<double>;

/// The 2x2 form of a two-qubit state: entry (i, j) is the amplitude of |ij>.
/// The same shape holds a two-qubit measurement <M| = sum m_ij <ij|.
using TwoQubitMatrix = Eigen::Matrix2cd;

/// Threshold for rank and determinant decisions.
inline constexpr double kDecisionTolerance = 1e-9;
/// Below this norm a vector counts as zero.
inline constexpr double kZeroNorm = 1e-12;

/// Normalised pure state on n >= 1 qubits.
///
/// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of the
/// amplitude index, so |01> sits at index 1 and |10> at index 2.
class PureState {
 public:
  /// Normalises `amplitudes`; throws on a zero vector or a length that is not
  /// 2^n with n >= 1.
  explicit PureState(std::vector<Complex> amplitudes);

  static PureState basis(std::size_t num_qubits, std::size_t index);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

 private:
  std::size_t num_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// A normalised state together with the norm removed from its source vector:
/// source = scale * state.
struct ScaledState {
  PureState state;
  double scale;
};

TwoQubitMatrix state_to_matrix(const PureState& s);
ScaledState matrix_to_state(const TwoQubitMatrix& m);

bool is_entangled(const PureState& s, double tolerance = kDecisionTolerance);

/// Rank of the amplitude array reshaped with the qubits in `cut` as rows and
/// the rest as columns. `cut` must be a non-empty proper subset of qubits.
std::size_t schmidt_rank(const PureState& s, const std::vector<std::size_t>& cut,
                         double tolerance = kDecisionTolerance);

struct MeasurementResult {
  int outcome;
  double probability;
  PureState residual;  // on the remaining n - 1 qubits, order preserved
};

/// Standard-basis projective measurement of one qubit with a chosen outcome.
MeasurementResult measure_qubit(const PureState& s, std::size_t qubit, int outcome);
/// Same, with the outcome drawn from `rng` according to the Born rule.
MeasurementResult measure_qubit(const PureState& s, std::size_t qubit, std::mt19937_64& rng);

/// Bob's qubit after Alice's successful measurement <m| on the input qubit and
/// her half of the link state e: psi'_k = sum_ij psi_i m_ij e_jk, normalised.
ScaledState teleport(const PureState& psi, const TwoQubitMatrix& m, const TwoQubitMatrix& e);

/// Link state between the outer sites after measuring <m| on the middle pair
/// of state(e) (x) state(e2). Equal to e * m * e2; may be zero.
TwoQubitMatrix entanglement_swap(const TwoQubitMatrix& e, const TwoQubitMatrix& m,
                                 const TwoQubitMatrix& e2);

/// (|0..0> + |1..1>)/sqrt(2), n >= 2.
PureState ghz(std::size_t n);
/// Uniform superposition of the n one-hot basis states, n >= 3.
PureState w(std::size_t n);

}  // namespace qts
