#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghz/hamiltonian.hpp"
#include "ghz/rational.hpp"

namespace ghz {

/// [(n+1)/2]: below this body order a GHZ eigenstate forces degeneracy.
inline int m_star(int n) { return (n + 1) / 2; }

/// The conditions "G_+ is an eigenstate" as an integer linear system over
/// coupling space. Columns are Pauli strings; rows are the real and
/// imaginary parts of b0 and of every canonical a/b bucket reachable by the
/// column family. Each complex bucket contribution i^k lands as a single
/// +-1 entry in the matching re or im row, so all entries are in {-1,0,+1}.
struct ConstraintSystem {
  int n = 0;
  int m = 0;
  std::vector<PauliString> columns;
  std::vector<std::string> row_labels;  // "b0.re", "a[(1,2)].re", ...
  Eigen::MatrixXi matrix;               // rows x columns

  int rows() const { return static_cast<int>(matrix.rows()); }
  int cols() const { return static_cast<int>(matrix.cols()); }
};

/// System over the full generic_family(n, m); 1 <= m < n <= 10.
ConstraintSystem build_constraints(int n, int m);

/// System over an explicit column set (all strings on n qubits, weight < n).
ConstraintSystem build_constraints_for(int n,
                                       const std::vector<PauliString>& columns);

struct NullspaceBasis {
  /// Basis vectors over coupling space, exact rationals, one entry per
  /// column of the source system.
  std::vector<std::vector<Rational>> vectors;
  int rank = 0;
  int dimension() const { return static_cast<int>(vectors.size()); }
};

/// Exact rational Gaussian elimination; basis spans the full solution set.
NullspaceBasis nullspace(const ConstraintSystem& system);

struct TheoremReport {
  int n = 0;
  int m = 0;
  int m_star = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double max_residual = 0.0;
  bool all_passed = false;
};

/// Draws random small-integer combinations of the nullspace basis and checks
/// that each resulting Hamiltonian leaves ghz_state(n,-1) an eigenstate with
/// the same eigenvalue as ghz_state(n,+1), residual < 1e-11 relative.
/// Requires m < m_star(n).
TheoremReport verify_forced_degeneracy(int n, int m, int samples,
                                       std::uint64_t seed);

/// Searches for a nullspace Hamiltonian whose phi-bar residual is nonzero
/// and whose spectrum shows ghz_state(n,+1) nondegenerate. Paper models are
/// tried first, then seeded random nullspace samples. Requires
/// m_star(n) <= m < n.
std::optional<FewBodyHamiltonian> find_nondegenerate_witness(int n, int m);

}  // namespace ghz
