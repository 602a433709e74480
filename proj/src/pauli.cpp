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

#include "lsgate/pauli.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lsgate {

namespace {

int mod4(int k) { return ((k % 4) + 4) % 4; }

uint8_t xbit(Letter l) { return static_cast<uint8_t>(l) & 1; }
uint8_t zbit(Letter l) { return (static_cast<uint8_t>(l) >> 1) & 1; }

Letter letter_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I':
    case '_':
      return Letter::I;
    case 'X':
      return Letter::X;
    case 'Y':
      return Letter::Y;
    case 'Z':
      return Letter::Z;
  }
  throw std::invalid_argument(std::string("bad Pauli letter '") + c + "'");
}

// Strips an optional phase prefix and returns its exponent.
int take_phase(std::string_view& s) {
  int e = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    e = s[0] == '-' ? 2 : 0;
    s.remove_prefix(1);
    if (!s.empty() && s[0] == 'i') {
      e += 1;
      s.remove_prefix(1);
    }
  }
  return e;
}

// Returns k with theta = k*pi/2 (mod 2 pi), or -1 if theta is not such a multiple.
int quarter_turns(double theta) {
  double k = theta / (std::numbers::pi / 2);
  double r = std::round(k);
  if (std::abs(k - r) > 1e-9) return -1;
  return mod4(static_cast<int>(r));
}

// U P U^dag for U = exp(-i theta/2 G), G a Hermitian Pauli, theta = k*pi/2.
// Anticommuting P picks up exp(-i theta G): k=1 -> -iG, k=2 -> -I, k=3 -> +iG.
PauliString rotate(const PauliString& p, const PauliString& g, int k) {
  if (p.commutes_with(g) || k == 0) return p;
  if (k == 2) return p.times_phase(2);
  PauliString gp = compose(g, p);
  return gp.times_phase(k == 1 ? 3 : 1);
}

}  // namespace

char letter_char(Letter l) { return "IXZY"[static_cast<int>(l)]; }

PauliString::PauliString(size_t n) : letters_(n, Letter::I), phase_(0) {}

PauliString::PauliString(std::vector<Letter> letters, int phase_exp)
    : letters_(std::move(letters)), phase_(mod4(phase_exp)) {}

PauliString PauliString::single(size_t n, size_t q, Letter l) {
  if (q >= n) throw std::out_of_range("qubit index outside register");
  PauliString p(n);
  p.letters_[q] = l;
  return p;
}

PauliString PauliString::parse(std::string_view text, size_t n) {
  std::string_view s = text;
  int e = take_phase(s);
  PauliString p(n);
  p.phase_ = e;
  if (s == "I" || s.empty()) return p;
  size_t pos = 0;
  while (pos < s.size()) {
    Letter l = letter_from_char(s[pos++]);
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("missing qubit index in '" + std::string(text) + "'");
    size_t idx = 0;
    std::from_chars(s.data() + start, s.data() + pos, idx);
    if (idx < 1 || idx > n) throw std::out_of_range("qubit index outside register in '" + std::string(text) + "'");
    if (p.letters_[idx - 1] != Letter::I) throw std::invalid_argument("qubit repeated in '" + std::string(text) + "'");
    p.letters_[idx - 1] = l;
  }
  return p;
}

PauliString PauliString::parse_dense(std::string_view text) {
  std::string_view s = text;
  int e = take_phase(s);
  std::vector<Letter> ls;
  for (char c : s) ls.push_back(letter_from_char(c));
  return PauliString(std::move(ls), e);
}

bool PauliString::is_identity_letters() const {
  for (Letter l : letters_)
    if (l != Letter::I) return false;
  return true;
}

size_t PauliString::weight() const {
  size_t w = 0;
  for (Letter l : letters_) w += l != Letter::I;
  return w;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (size() != other.size()) throw std::invalid_argument("Pauli size mismatch");
  int anti = 0;
  for (size_t q = 0; q < size(); ++q) {
    anti ^= (xbit(letters_[q]) & zbit(other.letters_[q])) ^ (zbit(letters_[q]) & xbit(other.letters_[q]));
  }
  return anti == 0;
}

PauliString PauliString::with_phase(int phase_exp) const { return PauliString(letters_, phase_exp); }

std::string PauliString::str() const {
  static const char* prefix[4] = {"", "+i", "-", "-i"};
  std::string out = prefix[phase_];
  bool any = false;
  for (size_t q = 0; q < size(); ++q) {
    if (letters_[q] == Letter::I) continue;
    out += letter_char(letters_[q]);
    out += std::to_string(q + 1);
    any = true;
  }
  if (!any) out += "I";
  return out;
}

std::string PauliString::dense_str() const {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string out = prefix[phase_];
  for (Letter l : letters_) out += letter_char(l);
  return out;
}

PauliString compose(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) throw std::invalid_argument("Pauli size mismatch");
  // Each letter is i^{xz} X^x Z^z; moving Z^z1 past X^x2 costs (-1)^{z1 x2}.
  std::vector<Letter> out(p.size());
  int e = p.phase_exp() + q.phase_exp();
  for (size_t k = 0; k < p.size(); ++k) {
    int x1 = xbit(p.at(k)), z1 = zbit(p.at(k));
    int x2 = xbit(q.at(k)), z2 = zbit(q.at(k));
    int x3 = x1 ^ x2, z3 = z1 ^ z2;
    e += x1 * z1 + x2 * z2 - x3 * z3 + 2 * z1 * x2;
    out[k] = static_cast<Letter>(x3 | (z3 << 1));
  }
  return PauliString(std::move(out), e);
}

PauliString operator*(const PauliString& p, const PauliString& q) { return compose(p, q); }

NativeGate NativeGate::zz(double theta, int a, int b) {
  if (a == b) throw std::invalid_argument("ZZ gate needs two distinct operands");
  return NativeGate{Kind::ZZ, theta, 0.0, a, b};
}

NativeGate NativeGate::rz(double theta, int q) { return NativeGate{Kind::RZ, theta, 0.0, q, -1}; }

NativeGate NativeGate::rperp(double phi, double theta, int q) { return NativeGate{Kind::RPerp, theta, phi, q, -1}; }

std::string NativeGate::str() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case Kind::ZZ:
      os << "zz " << theta << ' ' << q0 << ' ' << q1;
      break;
    case Kind::RZ:
      os << "rz " << theta << ' ' << q0;
      break;
    case Kind::RPerp:
      os << "rperp " << theta << ' ' << q0 << " phi=" << phi;
      break;
  }
  return os.str();
}

NativeGate NativeGate::parse(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::string kind;
  double theta = 0;
  int a = 0;
  is >> kind >> theta >> a;
  if (!is) throw std::invalid_argument("bad gate line '" + std::string(line) + "'");
  if (kind == "zz") {
    int b = -1;
    if (!(is >> b)) throw std::invalid_argument("zz gate needs two operands");
    return zz(theta, a, b);
  }
  if (kind == "rz") return rz(theta, a);
  if (kind == "rperp") {
    std::string tag;
    if (!(is >> tag) || tag.rfind("phi=", 0) != 0) throw std::invalid_argument("rperp gate needs phi=<angle>");
    return rperp(std::stod(tag.substr(4)), theta, a);
  }
  throw std::invalid_argument("unknown gate kind '" + kind + "'");
}

PauliString conjugate_through_gate(const PauliString& p, const NativeGate& g) {
  size_t n = p.size();
  auto check = [n](int q) {
    if (q < 0 || static_cast<size_t>(q) >= n) throw std::out_of_range("gate operand outside register");
  };
  check(g.q0);
  PauliString gen;
  Letter axis = Letter::Z;
  bool negate = false;
  if (g.kind == NativeGate::Kind::RPerp) {
    int a = quarter_turns(g.phi);
    if (a < 0) {
      // Still fine when p does not touch the operand.
      if (p.at(g.q0) == Letter::I) return p;
      throw std::domain_error("rperp axis is not a Clifford point: " + g.str());
    }
    // Axis +X, +Y, -X, -Y; a negative axis is the same as negating the angle.
    axis = (a % 2 == 0) ? Letter::X : Letter::Y;
    negate = a >= 2;
  }
  gen = PauliString::single(n, g.q0, axis);
  if (g.kind == NativeGate::Kind::ZZ) {
    check(g.q1);
    gen = compose(gen, PauliString::single(n, g.q1, Letter::Z));
  }
  if (p.commutes_with(gen)) return p;
  int k = quarter_turns(g.theta);
  if (k < 0) throw std::domain_error("gate angle is not a Clifford point: " + g.str());
  return rotate(p, gen, negate ? mod4(-k) : k);
}

std::string label_name(GeneratorLabel l) {
  switch (l) {
    case GeneratorLabel::NN:
      return "NN";
    case GeneratorLabel::Z5_BIASED:
      return "Z5_BIASED";
    case GeneratorLabel::X_TYPE_NN:
      return "X_TYPE_NN";
    case GeneratorLabel::X_TYPE_Z5:
      return "X_TYPE_Z5";
  }
  return "?";
}

GeneratorLabel parse_label(std::string_view s) {
  if (s == "NN") return GeneratorLabel::NN;
  if (s == "Z5_BIASED" || s == "Z5") return GeneratorLabel::Z5_BIASED;
  if (s == "X_TYPE_NN") return GeneratorLabel::X_TYPE_NN;
  if (s == "X_TYPE_Z5") return GeneratorLabel::X_TYPE_Z5;
  throw std::invalid_argument("unknown generator label '" + std::string(s) + "'");
}

bool GeneratorSet::valid() const {
  for (size_t a = 0; a < generators.size(); ++a)
    for (size_t b = a + 1; b < generators.size(); ++b)
      if (!generators[a].commutes_with(generators[b])) return false;
  // Independence: no nonempty subset multiplies to identity letters.
  size_t m = generators.size();
  if (m > 20) throw std::invalid_argument("generator set too large for subset check");
  for (uint32_t mask = 1; mask < (1u << m); ++mask) {
    PauliString acc = PauliString::identity(generators[0].size());
    for (size_t k = 0; k < m; ++k)
      if (mask & (1u << k)) acc = compose(acc, generators[k]);
    if (acc.is_identity_letters()) return false;
  }
  return true;
}

Signature stabilizer_signature(const PauliString& p, const GeneratorSet& gs) {
  Signature s;
  for (const auto& g : gs.generators) {
    int v = p.commutes_with(g) ? 1 : -1;
    s.signs.push_back(v);
    s.flips += v < 0;
  }
  return s;
}

}  // namespace lsgate
