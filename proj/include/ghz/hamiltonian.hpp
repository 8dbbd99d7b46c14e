#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "ghz/pauli.hpp"

namespace ghz {

/// One real-weighted Pauli-string summand.
struct PauliTerm {
  double coefficient;
  PauliString string;
};

/// Real-weighted sum of Pauli strings with a declared body order m. Terms
/// with equal strings are summed at construction, zero terms dropped, and
/// the remainder sorted by masks so serialization is deterministic. The
/// operator is Hermitian by construction.
class FewBodyHamiltonian {
 public:
  /// declared_body_order = -1 means "use the maximum term weight". Unless
  /// allow_full_body is set (oracle tests only), every term weight must be
  /// <= declared_body_order < n.
  FewBodyHamiltonian(int n, std::vector<PauliTerm> terms,
                     int declared_body_order = -1,
                     bool allow_full_body = false);

  int qubits() const { return n_; }
  int declared_body_order() const { return declared_m_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Maximum actual term weight (0 for identity-only or empty operators).
  int body_order() const;

  /// Sum of absolute coefficients; the natural scale for tolerances.
  double coupling_scale() const;

 private:
  int n_;
  int declared_m_;
  std::vector<PauliTerm> terms_;
};

/// Matrix-free matvec: sum over terms of coefficient * (string action).
Eigen::VectorXcd apply(const FewBodyHamiltonian& h,
                       const Eigen::VectorXcd& psi);

/// Dense 2^n x 2^n Hermitian matrix; n <= 12.
Eigen::MatrixXcd to_dense(const FewBodyHamiltonian& h);

/// 4-qubit ring with nearest-neighbour XX and ZZ couplings, periodic
/// boundary (site 5 = site 1): sum_i jx[i] X_i X_{i+1} + jz[i] Z_i Z_{i+1}.
FewBodyHamiltonian ring_xz4(const std::array<double, 4>& jx,
                            const std::array<double, 4>& jz);

/// ring_xz4 with J^z_i = jz/4 on every bond and x-couplings
/// (jx/4, jx/4, -jx/4, -jx/4); ghz_state(4,+1) is an eigenstate with
/// eigenvalue jz.
FewBodyHamiltonian symmetric_ring4(double jx, double jz);

/// (jz/5) sum_i Z_i Z_{i+1} + (jx/5) sum_i (X_i X_{i+1} X_{i+2}
/// - X_i X_{i+1}) on 5 qubits, periodic; 15 terms, body order 3;
/// ghz_state(5,+1) is an eigenstate with eigenvalue jz.
FewBodyHamiltonian five_qubit_three_body(double jx, double jz);

/// All non-identity strings of weight <= m on n qubits in a fixed canonical
/// order: by weight, then support tuple lexicographically, then letters in
/// X<Y<Z odometer order with the first support site most significant. Count
/// is sum_{k=1..m} C(n,k) 3^k. Requires 1 <= m < n <= 12.
std::vector<PauliString> generic_family(int n, int m);

}  // namespace ghz
