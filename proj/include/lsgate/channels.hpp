// Copyright 2026 The lsgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LSGATE_CHANNELS_HPP
#define LSGATE_CHANNELS_HPP

#include <Eigen/Dense>
#include <random>
#include <string>
#include <vector>

#include "lsgate/pauli.hpp"

namespace lsgate {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Dense matrix of a Pauli string; qubit 0 is the most significant tensor factor.
Mat pauli_matrix(const PauliString& p);
Mat pauli_matrix(Letter l);

struct KrausChannel {
  std::vector<Mat> ops;
  int arity = 1;
  std::string label;

  /// Max-abs entry of sum K^dag K - I.
  double completeness_defect() const;
  bool is_trace_preserving(double tol = 1e-12) const { return completeness_defect() <= tol; }
  /// Same channel applied after a unitary: K_k U.
  KrausChannel after(const Mat& u) const;
  Mat apply(const Mat& rho) const;
  std::string str() const;
};

KrausChannel identity_channel(int arity);
KrausChannel depolarizing2q(double p);
KrausChannel dephasing2q(double p);
/// Printed four-operator set with chi = exp(-2t/T2).
KrausChannel correlated_dephasing(double t, double t2);
/// Independent single-qubit phase flips with probability pd on each of two qubits.
KrausChannel local_dephasing_pair(double pd);

/// Rescales a channel by (sum K^dag K)^{-1/2} from the right.
KrausChannel renormalized(const KrausChannel& ch);

enum class ChannelKind { Depolarizing, Dephasing };
std::string channel_name(ChannelKind k);
ChannelKind parse_channel(std::string_view s);
KrausChannel make_channel(ChannelKind k, double p);
double channel_cap(ChannelKind k);

struct MeasurementEffects {
  Letter basis = Letter::Z;
  Mat plus;   // effect reporting +1
  Mat minus;  // effect reporting -1
  double p_me = 0;
};

MeasurementEffects noisy_measurement_effects(Letter axis, double p_me);

/// <phi_U| (I (x) E)(|phi><phi|) |phi_U> with phi maximally entangled over 2x arity qubits.
/// `channel` is the full noisy process (typically KrausChannel::after(U)).
double entanglement_fidelity(const KrausChannel& channel, const Mat& ideal_unitary);

double avg_gate_fidelity(double f_e, int d);

/// Monte-Carlo mean of <psi|U^dag E(psi) U|psi> over Haar states, with standard error.
struct HaarEstimate {
  double mean = 0;
  double sem = 0;
};
HaarEstimate haar_average_fidelity(const KrausChannel& channel, const Mat& ideal_unitary, int samples,
                                   unsigned long long seed);

/// Haar-random pure state of dimension d.
template <class Rng>
Vec haar_state(int d, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(d);
  for (int k = 0; k < d; ++k) v(k) = {g(rng), g(rng)};
  return v / v.norm();
}

}  // namespace lsgate

#endif
