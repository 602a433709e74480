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

#ifndef LSGATE_PAULI_HPP
#define LSGATE_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lsgate {

/// Single-qubit letter code: bit 0 is the X component, bit 1 the Z component.
enum class Letter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);

/// Signed Pauli word. The phase is i^phase_exp, phase_exp in {0,1,2,3}.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(size_t n);
  PauliString(std::vector<Letter> letters, int phase_exp = 0);

  static PauliString identity(size_t n) { return PauliString(n); }
  /// Single-letter Pauli on qubit q (0-based) of an n-qubit register.
  static PauliString single(size_t n, size_t q, Letter l);

  /// Parses sparse notation such as "X1Z5", "-iY2" or "I" (1-based qubit indices).
  static PauliString parse(std::string_view text, size_t n);
  /// Parses dense notation such as "+XIZ" where position k is qubit k+1.
  static PauliString parse_dense(std::string_view text);

  size_t size() const { return letters_.size(); }
  int phase_exp() const { return phase_; }
  Letter at(size_t q) const { return letters_[q]; }
  const std::vector<Letter>& letters() const { return letters_; }

  bool is_hermitian() const { return (phase_ & 1) == 0; }
  bool is_identity_letters() const;
  size_t weight() const;
  bool commutes_with(const PauliString& other) const;

  PauliString with_phase(int phase_exp) const;
  PauliString times_phase(int phase_exp) const { return with_phase(phase_ + phase_exp); }

  /// Sparse notation with phase prefix: "", "-", "+i" or "-i".
  std::string str() const;
  /// Dense notation, always prefixed with the phase.
  std::string dense_str() const;

  bool operator==(const PauliString& o) const { return phase_ == o.phase_ && letters_ == o.letters_; }
  bool operator!=(const PauliString& o) const { return !(*this == o); }

 private:
  std::vector<Letter> letters_;
  int phase_ = 0;
};

/// Product p*q with tracked phase. Throws std::invalid_argument on size mismatch.
PauliString compose(const PauliString& p, const PauliString& q);
PauliString operator*(const PauliString& p, const PauliString& q);

/// Native trapped-ion gate set.
///   ZZ(theta)        = exp(-i theta/2 Z_a Z_b)
///   RZ(theta)        = exp(-i theta/2 Z)
///   RPerp(phi,theta) = exp(-i theta/2 (cos phi X + sin phi Y))
struct NativeGate {
  enum class Kind { ZZ, RZ, RPerp };
  Kind kind = Kind::RZ;
  double theta = 0.0;
  double phi = 0.0;
  int q0 = 0;
  int q1 = -1;

  static NativeGate zz(double theta, int a, int b);
  static NativeGate rz(double theta, int q);
  static NativeGate rperp(double phi, double theta, int q);

  bool two_qubit() const { return kind == Kind::ZZ; }
  /// "zz 1.5707963267948966 0 4" style line; operands are 0-based.
  std::string str() const;
  static NativeGate parse(std::string_view line);
};

/// Returns U p U^dagger for Clifford angles. Throws std::domain_error otherwise.
PauliString conjugate_through_gate(const PauliString& p, const NativeGate& g);

enum class GeneratorLabel { NN, Z5_BIASED, X_TYPE_NN, X_TYPE_Z5 };

std::string label_name(GeneratorLabel l);
GeneratorLabel parse_label(std::string_view s);

struct GeneratorSet {
  std::vector<PauliString> generators;
  GeneratorLabel label = GeneratorLabel::NN;

  /// Checks pairwise commutation and independence over GF(2).
  bool valid() const;
};

struct Signature {
  std::vector<int> signs;
  int flips = 0;
};

Signature stabilizer_signature(const PauliString& p, const GeneratorSet& gs);

}  // namespace lsgate

#endif
