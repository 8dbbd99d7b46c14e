#include "ghz/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace ghz {

std::complex<double> Phase::value() const {
  switch (k_) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

PauliString::PauliString(int n, std::uint32_t x_mask, std::uint32_t z_mask)
    : n_(n), x_(x_mask), z_(z_mask) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("PauliString: qubit count " +
                                std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxQubits));
  const std::uint32_t valid = (n == 32) ? ~0u : ((1u << n) - 1u);
  if ((x_ & ~valid) || (z_ & ~valid))
    throw std::invalid_argument("PauliString: mask bits beyond qubit count");
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("PauliString: empty text");
  if (text.size() > kMaxQubits)
    throw std::invalid_argument("PauliString: length " +
                                std::to_string(text.size()) + " exceeds " +
                                std::to_string(kMaxQubits));
  const int n = static_cast<int>(text.size());
  std::uint32_t x = 0, z = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << (n - 1 - i);  // qubit i+1
    switch (text[i]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw std::invalid_argument(
            "PauliString: invalid character '" + std::string(1, text[i]) +
            "' at position " + std::to_string(i + 1));
    }
  }
  return PauliString(n, x, z);
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

int PauliString::y_count() const { return std::popcount(x_ & z_); }

int PauliString::z_count() const { return std::popcount(z_ & ~x_); }

char PauliString::letter(int qubit) const {
  if (qubit < 1 || qubit > n_)
    throw std::invalid_argument("PauliString: qubit index out of range");
  const std::uint32_t bit = 1u << (n_ - qubit);
  const bool x = x_ & bit, z = z_ & bit;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

std::string PauliString::str() const {
  std::string s(static_cast<size_t>(n_), 'I');
  for (int q = 1; q <= n_; ++q) s[static_cast<size_t>(q - 1)] = letter(q);
  return s;
}

std::pair<Phase, PauliString> multiply(const PauliString& p,
                                       const PauliString& q) {
  if (p.qubits() != q.qubits())
    throw std::invalid_argument("multiply: qubit counts differ");
  const std::uint32_t x3 = p.x_mask() ^ q.x_mask();
  const std::uint32_t z3 = p.z_mask() ^ q.z_mask();
  // Writing each letter as i^{xz} X^x Z^z and commuting Z past X gives the
  // exponent below; all arithmetic is mod 4.
  const int e = std::popcount(p.x_mask() & p.z_mask()) +
                std::popcount(q.x_mask() & q.z_mask()) +
                2 * std::popcount(p.z_mask() & q.x_mask()) -
                std::popcount(x3 & z3);
  return {Phase(e), PauliString(p.qubits(), x3, z3)};
}

std::pair<Phase, std::uint32_t> apply_to_basis(const PauliString& p,
                                               std::uint32_t bits) {
  const int n = p.qubits();
  const std::uint32_t valid = (1u << n) - 1u;
  if (bits & ~valid)
    throw std::invalid_argument("apply_to_basis: bits beyond qubit count");
  const int e = p.y_count() + 2 * std::popcount(p.z_mask() & bits);
  return {Phase(e), bits ^ p.x_mask()};
}

bool anticommutes(const PauliString& p, const PauliString& q) {
  if (p.qubits() != q.qubits())
    throw std::invalid_argument("anticommutes: qubit counts differ");
  const int parity = std::popcount(p.x_mask() & q.z_mask()) +
                     std::popcount(p.z_mask() & q.x_mask());
  return parity % 2 == 1;
}

}  // namespace ghz
