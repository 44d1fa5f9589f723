#include "qts/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qts {

namespace {

double norm2(const std::vector<Complex>& v) {
  double acc = 0.0;
  for (const auto& a : v) acc += std::norm(a);
  return std::sqrt(acc);
}

std::size_t qubits_for_length(std::size_t len) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < len) ++n;
  if (n == 0 || (std::size_t{1} << n) != len) {
    throw Error("invalid_state", "amplitude count " + std::to_string(len) + " is not 2^n with n >= 1");
  }
  return n;
}

std::size_t bit_of(std::size_t n, std::size_t qubit) { return std::size_t{1} << (n - 1 - qubit); }

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes)
    : num_qubits_(qubits_for_length(amplitudes.size())), amps_(std::move(amplitudes)) {
  const double nrm = norm2(amps_);
  if (nrm < kZeroNorm) throw Error("zero_state", "state vector is zero");
  for (auto& a : amps_) a /= nrm;
}

PureState PureState::basis(std::size_t num_qubits, std::size_t index) {
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  amps.at(index) = 1.0;
  return PureState(std::move(amps));
}

TwoQubitMatrix state_to_matrix(const PureState& s) {
  if (s.num_qubits() != 2) {
    throw Error("wrong_qubit_count", "expected a two-qubit state, got " + std::to_string(s.num_qubits()));
  }
  TwoQubitMatrix m;
  m << s[0], s[1], s[2], s[3];
  return m;
}

ScaledState matrix_to_state(const TwoQubitMatrix& m) {
  std::vector<Complex> amps{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
  const double scale = norm2(amps);
  if (scale < kZeroNorm) throw Error("zero_state", "zero matrix has no state");
  return {PureState(std::move(amps)), scale};
}

bool is_entangled(const PureState& s, double tolerance) {
  return std::abs(state_to_matrix(s).determinant()) > tolerance;
}

std::size_t schmidt_rank(const PureState& s, const std::vector<std::size_t>& cut, double tolerance) {
  const std::size_t n = s.num_qubits();
  std::vector<std::size_t> rows = cut;
  std::sort(rows.begin(), rows.end());
  if (rows.empty() || rows.size() >= n || std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
      rows.back() >= n) {
    throw Error("invalid_cut", "cut must be a non-empty proper subset of distinct qubits");
  }
  std::vector<std::size_t> cols;
  for (std::size_t q = 0; q < n; ++q) {
    if (!std::binary_search(rows.begin(), rows.end(), q)) cols.push_back(q);
  }

  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(Eigen::Index{1} << rows.size(), Eigen::Index{1} << cols.size());
  for (std::size_t idx = 0; idx < s.amplitudes().size(); ++idx) {
    Eigen::Index r = 0, c = 0;
    for (auto q : rows) r = (r << 1) | ((idx & bit_of(n, q)) ? 1 : 0);
    for (auto q : cols) c = (c << 1) | ((idx & bit_of(n, q)) ? 1 : 0);
    mat(r, c) = s[idx];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat);
  const auto& sv = svd.singularValues();
  return static_cast<std::size_t>((sv.array() > tolerance).count());
}

MeasurementResult measure_qubit(const PureState& s, std::size_t qubit, int outcome) {
  const std::size_t n = s.num_qubits();
  if (n < 2) throw Error("invalid_qubit", "measurement needs at least two qubits");
  if (qubit >= n) throw Error("invalid_qubit", "qubit " + std::to_string(qubit) + " out of range");
  if (outcome != 0 && outcome != 1) throw Error("invalid_outcome", "outcome must be 0 or 1");

  const std::size_t bit = bit_of(n, qubit);
  std::vector<Complex> slice;
  slice.reserve(s.amplitudes().size() / 2);
  double prob = 0.0;
  for (std::size_t idx = 0; idx < s.amplitudes().size(); ++idx) {
    if (((idx & bit) != 0) != (outcome == 1)) continue;
    slice.push_back(s[idx]);
    prob += std::norm(s[idx]);
  }
  if (prob < kZeroNorm) {
    throw Error("impossible_outcome", "outcome " + std::to_string(outcome) + " on qubit " +
                                          std::to_string(qubit) + " has zero probability");
  }
  return {outcome, prob, PureState(std::move(slice))};
}

MeasurementResult measure_qubit(const PureState& s, std::size_t qubit, std::mt19937_64& rng) {
  const std::size_t n = s.num_qubits();
  if (qubit >= n) throw Error("invalid_qubit", "qubit " + std::to_string(qubit) + " out of range");
  const std::size_t bit = bit_of(n, qubit);
  double p1 = 0.0;
  for (std::size_t idx = 0; idx < s.amplitudes().size(); ++idx) {
    if (idx & bit) p1 += std::norm(s[idx]);
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return measure_qubit(s, qubit, u(rng) < p1 ? 1 : 0);
}

ScaledState teleport(const PureState& psi, const TwoQubitMatrix& m, const TwoQubitMatrix& e) {
  if (psi.num_qubits() != 1) throw Error("wrong_qubit_count", "teleport input must be a single qubit");
  std::vector<Complex> out(2);
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) out[k] += psi[i] * m(i, j) * e(j, k);
    }
  }
  const double scale = norm2(out);
  if (scale < kZeroNorm) throw Error("annihilated", "measurement branch annihilates the state");
  return {PureState(std::move(out)), scale};
}

TwoQubitMatrix entanglement_swap(const TwoQubitMatrix& e, const TwoQubitMatrix& m, const TwoQubitMatrix& e2) {
  return e * m * e2;
}

PureState ghz(std::size_t n) {
  if (n < 2) throw Error("invalid_size", "ghz needs n >= 2");
  std::vector<Complex> amps(std::size_t{1} << n);
  amps.front() = 1.0;
  amps.back() = 1.0;
  return PureState(std::move(amps));
}

PureState w(std::size_t n) {
  if (n < 3) throw Error("invalid_size", "w needs n >= 3");
  std::vector<Complex> amps(std::size_t{1} << n);
  for (std::size_t q = 0; q < n; ++q) amps[std::size_t{1} << q] = 1.0;
  return PureState(std::move(amps));
}

}  // namespace qts
