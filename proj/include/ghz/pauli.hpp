#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace ghz {

/// Fourth root of unity i^k, k in {0,1,2,3}. Multiplication adds exponents
/// mod 4. Every phase produced by Pauli algebra on computational basis
/// states is of this form.
class Phase {
 public:
  constexpr explicit Phase(int exponent) : k_(((exponent % 4) + 4) % 4) {}
  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int exponent() const { return k_; }
  std::complex<double> value() const;
  constexpr bool is_real() const { return k_ % 2 == 0; }
  /// +1 or -1 for real phases, the sign of the imaginary part otherwise.
  constexpr int sign() const { return k_ == 0 || k_ == 1 ? +1 : -1; }

  constexpr Phase operator*(Phase other) const { return Phase(k_ + other.k_); }
  friend constexpr bool operator==(Phase a, Phase b) = default;

 private:
  int k_;
};

/// n-qubit tensor product of {I, X, Y, Z} in bit-pair (symplectic) form.
/// x-mask marks sites carrying X or Y, z-mask marks sites carrying Z or Y;
/// letter I has both bits clear, Y has both set. Qubit i (1-based) occupies
/// bit (n - i), so the leftmost character of the text form is qubit 1 and
/// the most significant bit. Immutable value type.
class PauliString {
 public:
  static constexpr int kMaxQubits = 24;

  PauliString(int n, std::uint32_t x_mask, std::uint32_t z_mask);

  static PauliString identity(int n) { return PauliString(n, 0, 0); }
  /// Parses "XYZI..." with qubit 1 leftmost. Throws std::invalid_argument
  /// naming the offending position on bad characters, or on oversize input.
  static PauliString parse(std::string_view text);

  int qubits() const { return n_; }
  std::uint32_t x_mask() const { return x_; }
  std::uint32_t z_mask() const { return z_; }
  std::uint32_t support_mask() const { return x_ | z_; }

  /// Count of non-identity letters.
  int weight() const;
  bool diagonal() const { return x_ == 0; }
  int y_count() const;
  int z_count() const;

  char letter(int qubit) const;  // 1-based
  std::string str() const;

  friend bool operator==(const PauliString& a, const PauliString& b) = default;

 private:
  int n_;
  std::uint32_t x_, z_;
};

/// Operator product p*q = phase * result, with result masks the XOR of the
/// inputs'. Throws std::invalid_argument on mismatched qubit counts.
std::pair<Phase, PauliString> multiply(const PauliString& p,
                                       const PauliString& q);

/// Action on a computational basis state |bits> with the convention
/// X|b> = |1-b>, Z|b> = (-1)^b |b>, Y|b> = i(-1)^b |1-b>. Output bits are
/// input XOR x-mask; the phase is i^{#Y} * (-1)^{popcount(z-mask & bits)}.
std::pair<Phase, std::uint32_t> apply_to_basis(const PauliString& p,
                                               std::uint32_t bits);

/// True iff p and q anticommute (odd symplectic inner product of masks).
bool anticommutes(const PauliString& p, const PauliString& q);

}  // namespace ghz
