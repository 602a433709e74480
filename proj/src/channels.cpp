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

#include "lsgate/channels.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lsgate {

using cd = std::complex<double>;

Mat pauli_matrix(Letter l) {
  Mat m(2, 2);
  switch (l) {
    case Letter::I:
      m << 1, 0, 0, 1;
      break;
    case Letter::X:
      m << 0, 1, 1, 0;
      break;
    case Letter::Y:
      m << 0, cd(0, -1), cd(0, 1), 0;
      break;
    case Letter::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Mat pauli_matrix(const PauliString& p) {
  Mat out = Mat::Identity(1, 1);
  for (Letter l : p.letters()) out = Eigen::kroneckerProduct(out, pauli_matrix(l)).eval();
  static const cd phases[4] = {1.0, cd(0, 1), -1.0, cd(0, -1)};
  return phases[p.phase_exp()] * out;
}

double KrausChannel::completeness_defect() const {
  int d = 1 << arity;
  Mat s = Mat::Zero(d, d);
  for (const auto& k : ops) s += k.adjoint() * k;
  return (s - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
}

KrausChannel KrausChannel::after(const Mat& u) const {
  KrausChannel out = *this;
  for (auto& k : out.ops) k = (k * u).eval();
  return out;
}

Mat KrausChannel::apply(const Mat& rho) const {
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (const auto& k : ops) out += k * rho * k.adjoint();
  return out;
}

std::string KrausChannel::str() const {
  std::ostringstream os;
  os << label << " (" << ops.size() << " Kraus operators on " << arity << " qubit(s))\n";
  for (size_t k = 0; k < ops.size(); ++k) os << "K" << k << " =\n" << ops[k] << "\n";
  return os.str();
}

KrausChannel identity_channel(int arity) {
  int d = 1 << arity;
  return KrausChannel{{Mat::Identity(d, d)}, arity, "identity"};
}

namespace {

Mat two(Letter a, Letter b) { return pauli_matrix(PauliString({a, b})); }

}  // namespace

KrausChannel depolarizing2q(double p) {
  if (!(p >= 0 && p <= 15.0 / 16.0)) throw std::domain_error("depolarizing rate outside [0, 15/16]");
  KrausChannel ch;
  ch.arity = 2;
  ch.label = "depolarizing2q";
  ch.ops.push_back(std::sqrt(1 - p) * Mat::Identity(4, 4));
  const Letter ls[4] = {Letter::I, Letter::X, Letter::Y, Letter::Z};
  for (Letter a : ls)
    for (Letter b : ls) {
      if (a == Letter::I && b == Letter::I) continue;
      ch.ops.push_back(std::sqrt(p / 15) * two(a, b));
    }
  return ch;
}

KrausChannel dephasing2q(double p) {
  if (!(p >= 0 && p <= 0.75)) throw std::domain_error("dephasing rate outside [0, 3/4]");
  KrausChannel ch;
  ch.arity = 2;
  ch.label = "dephasing2q";
  ch.ops.push_back(std::sqrt(1 - p) * Mat::Identity(4, 4));
  ch.ops.push_back(std::sqrt(p / 3) * two(Letter::I, Letter::Z));
  ch.ops.push_back(std::sqrt(p / 3) * two(Letter::Z, Letter::I));
  ch.ops.push_back(std::sqrt(p / 3) * two(Letter::Z, Letter::Z));
  return ch;
}

KrausChannel correlated_dephasing(double t, double t2) {
  if (t < 0 || !(t2 > 0)) throw std::invalid_argument("correlated dephasing needs t >= 0 and T2 > 0");
  double chi = std::exp(-2.0 * t / t2);
  double sc = std::sqrt(chi);
  Mat id = Mat::Identity(4, 4);
  Mat z1 = two(Letter::Z, Letter::I), z2 = two(Letter::I, Letter::Z), zz = two(Letter::Z, Letter::Z);
  KrausChannel ch;
  ch.arity = 2;
  ch.label = "correlated_dephasing";
  ch.ops.push_back(0.5 * (sc + 1) * id + 0.5 * (sc - 1) * zz);
  ch.ops.push_back(0.5 * std::sqrt(chi * (1 - chi)) * (z1 + z2));
  ch.ops.push_back(0.25 * (1 - chi) * (id + z1 + z2 + zz));
  ch.ops.push_back(0.25 * (1 - chi) * (id - z1 - z2 + zz));
  return ch;
}

KrausChannel local_dephasing_pair(double pd) {
  if (!(pd >= 0 && pd <= 1)) throw std::domain_error("phase-flip probability outside [0, 1]");
  KrausChannel ch;
  ch.arity = 2;
  ch.label = "local_dephasing_pair";
  ch.ops.push_back((1 - pd) * Mat::Identity(4, 4));
  ch.ops.push_back(std::sqrt((1 - pd) * pd) * two(Letter::Z, Letter::I));
  ch.ops.push_back(std::sqrt((1 - pd) * pd) * two(Letter::I, Letter::Z));
  ch.ops.push_back(pd * two(Letter::Z, Letter::Z));
  return ch;
}

KrausChannel renormalized(const KrausChannel& ch) {
  int d = 1 << ch.arity;
  Mat s = Mat::Zero(d, d);
  for (const auto& k : ch.ops) s += k.adjoint() * k;
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  Mat inv_sqrt = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                 es.eigenvectors().adjoint();
  KrausChannel out = ch;
  for (auto& k : out.ops) k = (k * inv_sqrt).eval();
  out.label += " (renormalized)";
  return out;
}

std::string channel_name(ChannelKind k) { return k == ChannelKind::Depolarizing ? "depolarizing" : "dephasing"; }

ChannelKind parse_channel(std::string_view s) {
  if (s == "depolarizing" || s == "depol" || s == "dp") return ChannelKind::Depolarizing;
  if (s == "dephasing" || s == "deph") return ChannelKind::Dephasing;
  throw std::invalid_argument("unknown channel '" + std::string(s) + "'");
}

KrausChannel make_channel(ChannelKind k, double p) {
  return k == ChannelKind::Depolarizing ? depolarizing2q(p) : dephasing2q(p);
}

double channel_cap(ChannelKind k) { return k == ChannelKind::Depolarizing ? 15.0 / 16.0 : 0.75; }

MeasurementEffects noisy_measurement_effects(Letter axis, double p_me) {
  if (!(p_me >= 0 && p_me <= 0.5)) throw std::domain_error("measurement flip probability outside [0, 1/2]");
  if (axis == Letter::I) throw std::invalid_argument("measurement axis must be X, Y or Z");
  Mat id = Mat::Identity(2, 2);
  Mat s = pauli_matrix(axis);
  Mat pp = 0.5 * (id + s), pm = 0.5 * (id - s);
  MeasurementEffects e;
  e.basis = axis;
  e.p_me = p_me;
  e.plus = (1 - p_me) * pp + p_me * pm;
  e.minus = (1 - p_me) * pm + p_me * pp;
  return e;
}

double entanglement_fidelity(const KrausChannel& channel, const Mat& ideal_unitary) {
  int d = 1 << channel.arity;
  if (ideal_unitary.rows() != d || ideal_unitary.cols() != d)
    throw std::invalid_argument("channel and unitary act on different dimensions");
  // |phi> = sum_k |k>_A |k>_B / sqrt(d), ancilla A is the most significant factor.
  Vec phi = Vec::Zero(d * d);
  for (int k = 0; k < d; ++k) phi(k * d + k) = 1.0 / std::sqrt(double(d));
  Mat rho = phi * phi.adjoint();
  Mat id = Mat::Identity(d, d);
  Mat out = Mat::Zero(d * d, d * d);
  for (const auto& k : channel.ops) {
    Mat big = Eigen::kroneckerProduct(id, k).eval();
    out += big * rho * big.adjoint();
  }
  Vec target = Eigen::kroneckerProduct(id, ideal_unitary).eval() * phi;
  return std::real(target.dot(out * target));
}

double avg_gate_fidelity(double f_e, int d) { return (d * f_e + 1) / (d + 1); }

HaarEstimate haar_average_fidelity(const KrausChannel& channel, const Mat& ideal_unitary, int samples,
                                   unsigned long long seed) {
  int d = 1 << channel.arity;
  std::mt19937_64 rng(seed);
  double sum = 0, sum2 = 0;
  for (int s = 0; s < samples; ++s) {
    Vec psi = haar_state(d, rng);
    Mat out = channel.apply(psi * psi.adjoint());
    Vec target = ideal_unitary * psi;
    double f = std::real(target.dot(out * target));
    sum += f;
    sum2 += f * f;
  }
  HaarEstimate h;
  h.mean = sum / samples;
  double var = std::max(0.0, sum2 / samples - h.mean * h.mean);
  h.sem = std::sqrt(var / std::max(1, samples - 1));
  return h;
}

}  // namespace lsgate
