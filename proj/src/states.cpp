#include "ghz/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ghz {

namespace {

constexpr int kMaxQubits = 24;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_sign(int sign) {
  if (sign != +1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
}

}  // namespace

int qubit_count(const Eigen::VectorXcd& psi) {
  const auto len = static_cast<std::uint64_t>(psi.size());
  if (len < 2 || (len & (len - 1)) != 0 || len > (1ull << kMaxQubits))
    throw std::invalid_argument("state length is not a power of two in range");
  return std::countr_zero(len);
}

Eigen::VectorXcd ghz_state(int n, int sign) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("ghz_state: n outside 1..24");
  check_sign(sign);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(1ll << n);
  psi(0) = kInvSqrt2;
  psi(psi.size() - 1) = sign * kInvSqrt2;
  return psi;
}

Eigen::VectorXcd gtilde_state(int n, const MultiIndex& flips, int sign) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("gtilde_state: n outside 1..24");
  check_sign(sign);
  if (flips.ambient() != n)
    throw std::invalid_argument("gtilde_state: flip set has wrong ambient n");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(1ll << n);
  const std::uint32_t up = flips.mask();
  const std::uint32_t down = ~up & ((1u << n) - 1u);
  psi(up) += kInvSqrt2;
  psi(down) += sign * kInvSqrt2;
  return psi;
}

std::complex<double> inner(const Eigen::VectorXcd& a,
                           const Eigen::VectorXcd& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("inner: dimension mismatch");
  return a.dot(b);  // conjugate-linear in a
}

Eigen::MatrixXcd reduced_density_matrix(const Eigen::VectorXcd& psi,
                                        const MultiIndex& subset) {
  const int n = qubit_count(psi);
  if (subset.ambient() != n)
    throw std::invalid_argument("reduced_density_matrix: wrong ambient n");
  if (subset.is_empty() || subset.is_full())
    throw std::invalid_argument(
        "reduced_density_matrix: subset must be a nonempty proper subset");
  const int k = subset.size();
  const MultiIndex env = subset.complement();
  const int ke = env.size();

  // Scatter a subsystem/environment index pair back into a full basis index.
  auto scatter = [n](const MultiIndex& where, std::uint32_t value) {
    std::uint32_t full = 0;
    const auto& idx = where.indices();
    const int len = static_cast<int>(idx.size());
    for (int j = 0; j < len; ++j) {
      if ((value >> (len - 1 - j)) & 1u) full |= 1u << (n - idx[j]);
    }
    return full;
  };

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(1 << k, 1 << k);
  for (std::uint32_t e = 0; e < (1u << ke); ++e) {
    const std::uint32_t env_bits = scatter(env, e);
    for (std::uint32_t r = 0; r < (1u << k); ++r) {
      const std::complex<double> ar = psi(scatter(subset, r) | env_bits);
      if (ar == std::complex<double>(0.0, 0.0)) continue;
      for (std::uint32_t c = 0; c < (1u << k); ++c) {
        rho(r, c) += ar * std::conj(psi(scatter(subset, c) | env_bits));
      }
    }
  }
  return rho;
}

std::optional<GhzForm> detect_generalized_ghz(const Eigen::VectorXcd& psi,
                                              double tol) {
  const int n = qubit_count(psi);
  const std::uint32_t all = (1u << n) - 1u;

  Eigen::Index argmax = 0;
  psi.cwiseAbs().maxCoeff(&argmax);
  std::uint32_t s = static_cast<std::uint32_t>(argmax);
  if (s >> (n - 1)) s = ~s & all;  // choose the branch with leading bit 0
  const std::uint32_t sbar = ~s & all;

  const std::complex<double> as = psi(s), ab = psi(sbar);
  if (std::abs(as) < tol || std::abs(ab) < tol) return std::nullopt;

  Eigen::VectorXcd model = Eigen::VectorXcd::Zero(psi.size());
  const std::complex<double> global = as / std::abs(as);
  model(s) = global * kInvSqrt2;
  model(sbar) = (ab / std::abs(ab)) * kInvSqrt2;
  if ((psi - model).norm() > tol) return std::nullopt;

  double phase = std::arg(ab / as);
  if (phase <= -std::numbers::pi + 1e-15) phase = std::numbers::pi;
  return GhzForm{basis_label(n, s), phase};
}

std::string basis_label(int n, std::uint32_t bits) {
  std::string s(static_cast<size_t>(n), '0');
  for (int q = 1; q <= n; ++q)
    if ((bits >> (n - q)) & 1u) s[static_cast<size_t>(q - 1)] = '1';
  return s;
}

}  // namespace ghz
