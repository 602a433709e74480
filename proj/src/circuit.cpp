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

#include "lsgate/circuit.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace lsgate {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::X_NONFT:
      return "X_NONFT";
    case Variant::Z_NONFT:
      return "Z_NONFT";
    case Variant::X_FT:
      return "X_FT";
    case Variant::Z_FT:
      return "Z_FT";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  for (Variant v : {Variant::X_NONFT, Variant::Z_NONFT, Variant::X_FT, Variant::Z_FT})
    if (s == variant_name(v)) return v;
  throw std::invalid_argument("unknown circuit variant '" + std::string(s) + "'");
}

std::vector<size_t> Circuit::two_qubit_positions() const {
  std::vector<size_t> out;
  for (size_t k = 0; k < gates.size(); ++k)
    if (gates[k].two_qubit()) out.push_back(k);
  return out;
}

namespace {

Vec product_state(const std::vector<Vec>& factors) {
  Vec out = Vec::Ones(1);
  for (const auto& f : factors) out = Eigen::kroneckerProduct(out, f).eval();
  return out;
}

Vec ket0() {
  Vec v(2);
  v << 1, 0;
  return v;
}

Vec ket_plus() {
  Vec v(2);
  v << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  return v;
}

Vec ket_minus() {
  Vec v(2);
  v << 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  return v;
}

}  // namespace

Vec Circuit::input_state() const {
  std::vector<Vec> f;
  for (int q = 0; q < n; ++q) {
    bool data = q < 4;
    f.push_back(data && !is_x_type(variant) ? ket_plus() : ket0());
  }
  return product_state(f);
}

Vec Circuit::target_state() const {
  Vec out;
  if (is_x_type(variant)) {
    out = Vec::Zero(32);
    out(0) = out(31) = 1 / std::sqrt(2.0);
  } else {
    out = (product_state(std::vector<Vec>(5, ket_plus())) + product_state(std::vector<Vec>(5, ket_minus()))) /
          std::sqrt(2.0);
  }
  return out;
}

std::string Circuit::to_text() const {
  std::ostringstream os;
  os << "# variant " << variant_name(variant) << " n " << n << "\n";
  for (const auto& g : gates) os << g.str() << "\n";
  return os.str();
}

Circuit Circuit::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Circuit c;
  bool header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string k1, v1, k2;
      int n = 0;
      if (hs >> k1 >> v1 >> k2 >> n && k1 == "variant" && k2 == "n") {
        c.variant = parse_variant(v1);
        c.n = n;
        c.flag = n == 6 ? 5 : -1;
        header = true;
      }
      continue;
    }
    c.gates.push_back(NativeGate::parse(line));
  }
  if (!header) throw std::invalid_argument("gate list lacks a '# variant <name> n <n>' header");
  return c;
}

Circuit build_parity_circuit(Variant v) {
  Circuit c;
  c.variant = v;
  bool ft = is_ft(v);
  bool xt = is_x_type(v);
  c.n = ft ? 6 : 5;
  c.flag = ft ? 5 : -1;
  const int s = c.syndrome;
  auto& g = c.gates;
  auto hadamard = [&g](int q) {
    g.push_back(NativeGate::rz(kPi, q));
    g.push_back(NativeGate::rperp(kPi / 2, kPi / 2, q));
  };
  if (xt)
    for (int d = 0; d < 4; ++d) hadamard(d);
  g.push_back(NativeGate::rperp(kPi / 2, kPi / 2, s));
  if (ft) g.push_back(NativeGate::rperp(kPi / 2, kPi / 2, c.flag));

  // CZ(d, s) up to phase is RZ_d(-pi/2) RZ_s(-pi/2) ZZ(pi/2); the four syndrome
  // RZ(-pi/2) multiply to a global phase and are dropped.
  auto data_gate = [&](int d) {
    g.push_back(NativeGate::zz(kPi / 2, d, s));
    g.push_back(NativeGate::rz(-kPi / 2, d));
    if (xt) hadamard(d);
  };
  auto flag_gate = [&]() { g.push_back(NativeGate::zz(kPi / 2, s, c.flag)); };

  data_gate(0);
  if (ft) flag_gate();
  data_gate(1);
  data_gate(2);
  if (ft) {
    flag_gate();
    // Two ZZ(pi/2) on (s, f) give ZZ(pi) ~ Z_s Z_f; undo it.
    g.push_back(NativeGate::rz(kPi, s));
    g.push_back(NativeGate::rz(kPi, c.flag));
  }
  data_gate(3);
  if (!xt) hadamard(s);
  return c;
}

Mat gate_matrix(const NativeGate& g) {
  double h = g.theta / 2;
  cd em = std::polar(1.0, -h), ep = std::polar(1.0, h);
  switch (g.kind) {
    case NativeGate::Kind::ZZ: {
      Mat m = Mat::Zero(4, 4);
      m(0, 0) = em;
      m(1, 1) = ep;
      m(2, 2) = ep;
      m(3, 3) = em;
      return m;
    }
    case NativeGate::Kind::RZ: {
      Mat m = Mat::Zero(2, 2);
      m(0, 0) = em;
      m(1, 1) = ep;
      return m;
    }
    case NativeGate::Kind::RPerp: {
      Mat m(2, 2);
      double c = std::cos(h), s = std::sin(h);
      cd off = cd(0, -1) * s * std::polar(1.0, -g.phi);  // -i s (cos phi - i sin phi)
      cd off2 = cd(0, -1) * s * std::polar(1.0, g.phi);
      m << c, off, off2, c;
      return m;
    }
  }
  return Mat();
}

Mat full_unitary(const NativeGate& g, int n) {
  Mat u = gate_matrix(g);
  std::vector<int> qs = {g.q0};
  if (g.two_qubit()) qs.push_back(g.q1);
  int dim = 1 << n;
  Mat out(dim, dim);
  // Elementwise embedding, independent of apply_local.
  int k = static_cast<int>(qs.size());
  for (int row = 0; row < dim; ++row)
    for (int col = 0; col < dim; ++col) {
      bool same_rest = true;
      int r_sub = 0, c_sub = 0;
      for (int b = 0; b < n; ++b) {
        int bit = n - 1 - b;
        auto it = std::find(qs.begin(), qs.end(), b);
        int rb = (row >> bit) & 1, cb = (col >> bit) & 1;
        if (it == qs.end()) {
          if (rb != cb) same_rest = false;
        } else {
          int t = static_cast<int>(it - qs.begin());
          r_sub |= rb << (k - 1 - t);
          c_sub |= cb << (k - 1 - t);
        }
      }
      out(row, col) = same_rest ? u(r_sub, c_sub) : cd(0);
    }
  return out;
}

DensityMatrix DensityMatrix::from_pure(const Vec& psi) {
  DensityMatrix d;
  d.rho = psi * psi.adjoint();
  int n = 0;
  while ((1 << n) < psi.size()) ++n;
  d.n = n;
  return d;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

namespace {

// m <- O_full m, with O acting on `qubits`.
void apply_left(Mat& m, int n, const Mat& op, const std::vector<int>& qubits) {
  const int k = static_cast<int>(qubits.size());
  const int sub = 1 << k;
  const int dim = 1 << n;
  int mask = 0;
  std::vector<int> bitpos(k);
  for (int t = 0; t < k; ++t) {
    if (qubits[t] < 0 || qubits[t] >= n) throw std::out_of_range("operand outside register");
    bitpos[t] = n - 1 - qubits[t];
    mask |= 1 << bitpos[t];
  }
  std::vector<int> idx(sub);
  std::vector<cd> tmp(sub);
  for (int base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (int j = 0; j < sub; ++j) {
      int ix = base;
      for (int t = 0; t < k; ++t)
        if ((j >> (k - 1 - t)) & 1) ix |= 1 << bitpos[t];
      idx[j] = ix;
    }
    for (int c = 0; c < m.cols(); ++c) {
      for (int j = 0; j < sub; ++j) tmp[j] = m(idx[j], c);
      for (int r = 0; r < sub; ++r) {
        cd acc = 0;
        for (int j = 0; j < sub; ++j) acc += op(r, j) * tmp[j];
        m(idx[r], c) = acc;
      }
    }
  }
}

}  // namespace

void apply_local(Mat& rho, int n, const Mat& op, const std::vector<int>& qubits) {
  apply_left(rho, n, op, qubits);
  Mat a = rho.adjoint();
  apply_left(a, n, op, qubits);
  rho = a.adjoint();
}

void apply_channel(Mat& rho, int n, const KrausChannel& ch, const std::vector<int>& qubits) {
  if (static_cast<int>(qubits.size()) != ch.arity) throw std::invalid_argument("channel arity mismatch");
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (const auto& k : ch.ops) {
    Mat t = rho;
    apply_local(t, n, k, qubits);
    out += t;
  }
  rho = std::move(out);
}

NoisePlan NoisePlan::uniform(ChannelKind k, double p, size_t gates, double p_me) {
  return NoisePlan{k, std::vector<double>(gates, p), p_me};
}

BudgetSchedule budget_schedule(const TrapLaserConfig& cfg, const GateGeometry& g, const ThermalState& initial,
                               size_t gates, bool heating, const HeatingRates& hr, ChannelKind kind,
                               RateConvention conv) {
  BudgetSchedule s;
  ThermalState th = initial;
  for (size_t k = 0; k < gates; ++k) {
    s.states.push_back(th);
    ErrorBudget b = total_error(cfg, g, th);
    s.budgets.push_back(b);
    s.rates.push_back(channel_rate(b.eps_total, channel_cap(kind), conv));
    if (heating) th = heating_step(th, hr);
  }
  return s;
}

SimResult simulate(const Circuit& c, const NoisePlan& plan) { return simulate(c, plan, c.input_state()); }

SimResult simulate(const Circuit& c, const NoisePlan& plan, const Vec& input) {
  if (input.size() != (1 << c.n)) throw std::invalid_argument("input dimension does not match the register");
  auto positions = c.two_qubit_positions();
  if (!plan.rates.empty() && plan.rates.size() != positions.size())
    throw std::invalid_argument("noise plan needs one rate per two-qubit gate");
  SimResult res;
  Mat rho = input * input.adjoint();
  size_t k2 = 0;
  auto track = [&res, &rho]() {
    double t = std::real(rho.trace());
    res.min_trace = std::min(res.min_trace, t);
    res.max_trace = std::max(res.max_trace, t);
  };
  for (const auto& g : c.gates) {
    std::vector<int> qs = {g.q0};
    if (g.two_qubit()) qs.push_back(g.q1);
    apply_local(rho, c.n, gate_matrix(g), qs);
    if (g.two_qubit()) {
      if (!plan.rates.empty() && plan.rates[k2] > 0) apply_channel(rho, c.n, make_channel(plan.kind, plan.rates[k2]), qs);
      ++k2;
    }
    track();
  }
  if (c.flag >= 0) {
    if (c.flag != c.n - 1) throw std::logic_error("flag qubit must be the last qubit");
    auto eff = noisy_measurement_effects(Letter::X, plan.p_me);
    Mat red = reduce_last_with_effect(rho, eff.plus);
    double kept = std::real(red.trace());
    if (kept < 1e-12) throw std::runtime_error("flag post-selection probability is degenerate");
    res.kept_probability = kept;
    rho = red / kept;
  }
  res.state.rho = std::move(rho);
  res.state.n = 5;
  return res;
}

double state_fidelity(const DensityMatrix& rho, const Vec& target) {
  if (target.size() != rho.rho.rows()) throw std::invalid_argument("state dimensions differ");
  return std::clamp(std::real(target.dot(rho.rho * target)), 0.0, 1.0);
}

std::complex<double> pauli_trace(const Mat& rho, const PauliString& p) {
  int n = static_cast<int>(p.size());
  int dim = 1 << n;
  if (rho.rows() != dim) throw std::invalid_argument("Pauli and state sizes differ");
  int xmask = 0;
  for (int q = 0; q < n; ++q) {
    Letter l = p.at(q);
    if (l == Letter::X || l == Letter::Y) xmask |= 1 << (n - 1 - q);
  }
  static const cd phases[4] = {1.0, cd(0, 1), -1.0, cd(0, -1)};
  cd acc = 0;
  // P|j> = c_j |j ^ x>, so Tr(rho P) = sum_j rho(j, j^x) c_j.
  for (int j = 0; j < dim; ++j) {
    cd c = 1;
    for (int q = 0; q < n; ++q) {
      int b = (j >> (n - 1 - q)) & 1;
      switch (p.at(q)) {
        case Letter::Z:
          if (b) c = -c;
          break;
        case Letter::Y:
          c *= b ? cd(0, -1) : cd(0, 1);
          break;
        default:
          break;
      }
    }
    acc += rho(j, j ^ xmask) * c;
  }
  return phases[p.phase_exp()] * acc;
}

double expectation(const DensityMatrix& rho, const PauliString& p, double p_me) {
  if (!p.is_hermitian()) throw std::invalid_argument("expectation needs a Hermitian Pauli");
  if (!(p_me >= 0 && p_me <= 0.5)) throw std::domain_error("measurement flip probability outside [0, 1/2]");
  double att = std::pow(1 - 2 * p_me, static_cast<double>(p.weight()));
  return att * std::real(pauli_trace(rho.rho, p));
}

double expectation_from_effects(const DensityMatrix& rho, const PauliString& p, double p_me) {
  Mat op = Mat::Identity(1, 1);
  for (Letter l : p.letters()) {
    Mat f = Mat::Identity(2, 2);
    if (l != Letter::I) {
      auto e = noisy_measurement_effects(l, p_me);
      f = e.plus - e.minus;
    }
    op = Eigen::kroneckerProduct(op, f).eval();
  }
  double sign = p.phase_exp() == 2 ? -1.0 : 1.0;
  return sign * std::real((rho.rho * op).trace());
}

Mat reduce_last_with_effect(const Mat& rho, const Mat& effect) {
  int dim = static_cast<int>(rho.rows()) / 2;
  Mat out(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      cd acc = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) acc += effect(b, a) * rho(2 * i + a, 2 * j + b);
      out(i, j) = acc;
    }
  return out;
}

}  // namespace lsgate
