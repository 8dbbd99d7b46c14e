#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "ghz/multi_index.hpp"

namespace ghz {

/// Dense state vectors live in Eigen::VectorXcd with 2^n amplitudes indexed
/// by basis bitstring; qubit 1 is the most significant bit.

/// Number of qubits of a dense state; throws unless the length is a power
/// of two in [2, 2^24].
int qubit_count(const Eigen::VectorXcd& psi);

/// (|0...0> + sign |1...1>)/sqrt(2). sign is +1 or -1; 1 <= n <= 24.
Eigen::VectorXcd ghz_state(int n, int sign);

/// GHZ-like vector with spins reversed at `flips` in both branches:
/// (|1_I 0_rest> + sign |0_I 1_rest>)/sqrt(2). Empty flips with sign +1
/// reproduces ghz_state(n, +1).
Eigen::VectorXcd gtilde_state(int n, const MultiIndex& flips, int sign);

/// <a|b>, conjugate-linear in the first argument.
std::complex<double> inner(const Eigen::VectorXcd& a,
                           const Eigen::VectorXcd& b);

/// Partial trace onto `subset` (nonempty proper subset of 1..n). Row/column
/// order of the result follows the subset's own ordering, first index most
/// significant.
Eigen::MatrixXcd reduced_density_matrix(const Eigen::VectorXcd& psi,
                                        const MultiIndex& subset);

struct GhzForm {
  std::string bitstring;  // s with leading bit 0, qubit 1 leftmost
  double relative_phase;  // phi in (-pi, pi]
};

/// Detects psi = (|s> + e^{i phi}|s_bar>)/sqrt(2) up to global phase, with
/// s_bar the bitwise complement of s. The global phase is fixed by making
/// the amplitude at s real positive. Empty result when psi is not of this
/// form within tol.
std::optional<GhzForm> detect_generalized_ghz(const Eigen::VectorXcd& psi,
                                              double tol);

/// "0101..." text form of a basis index, qubit 1 leftmost.
std::string basis_label(int n, std::uint32_t bits);

}  // namespace ghz
