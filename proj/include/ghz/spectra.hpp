#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ghz/hamiltonian.hpp"

namespace ghz {

/// Eigenvalues ascending, orthonormal eigenvector columns in matching order.
struct EigenSystem {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

/// Dense complex-Hermitian solve; input must be Hermitian within
/// 1e-12 * max|M| and of dimension <= 4096.
EigenSystem hermitian_eigensystem(const Eigen::MatrixXcd& m);

struct ClusterInfo {
  double value = 0.0;  // mean eigenvalue of the cluster
  int multiplicity = 0;
  int rank = 0;  // 0 = ground cluster
};

struct TargetMatch {
  std::string name;
  double eigenvalue = 0.0;  // cluster value of the best-overlap cluster
  double overlap = 0.0;     // squared overlap with the cluster's span
  double residual = 0.0;    // ||H psi - eigenvalue psi||
  int multiplicity = 0;
  int rank = 0;
  double gap = 0.0;  // distance to the nearest distinct cluster value
};

struct GhzHit {
  double eigenvalue = 0.0;
  std::string bitstring;
  double phase = 0.0;
};

struct SpectralReport {
  int n = 0;
  Eigen::VectorXd eigenvalues;
  std::vector<int> cluster_of;  // cluster index per eigenvalue
  std::vector<ClusterInfo> clusters;
  std::vector<TargetMatch> targets;
  std::vector<GhzHit> census;
};

struct NamedState {
  std::string name;
  Eigen::VectorXcd vector;
};

/// Full dense analysis for n <= 12. Eigenvalue clusters are formed with gap
/// threshold cluster_tol * (lambda_max - lambda_min); each target is matched
/// to the cluster maximizing total squared overlap with its span. The census
/// runs the generalized-GHZ detector on every nondegenerate eigenvector.
SpectralReport analyze(const FewBodyHamiltonian& h,
                       const std::vector<NamedState>& targets,
                       double cluster_tol = 1e-9);

/// Generalized-GHZ eigenvectors among nondegenerate levels, ordered by
/// eigenvalue. n <= 10.
std::vector<GhzHit> ghz_census(const FewBodyHamiltonian& h,
                               double cluster_tol = 1e-9);

using ModelBuilder = std::function<FewBodyHamiltonian(double jx, double jz)>;

struct ScanRow {
  double ratio = 0.0;
  double jz = 0.0;
  double jx = 0.0;
  double ghz_eigenvalue = 0.0;
  int rank = 0;
  int multiplicity = 0;
  bool in_window = false;  // G_+ is nondegenerate and first excited
};

struct ScanResult {
  std::vector<ScanRow> rows;  // ordered by ratio
  /// Maximal ratio intervals where the predicate holds; boundaries refined
  /// by bisection to 1e-6 unless disabled. A boundary that coincides with
  /// the grid edge is reported at the grid edge.
  std::vector<std::pair<double, double>> windows;
};

/// Scans Jx/Jz over `ratios` at fixed jz < 0 for the given n-qubit model,
/// asking where ghz_state(n,+1) is a nondegenerate first excited eigenstate.
ScanResult scan_first_excited_window(const ModelBuilder& model, int n,
                                     const std::vector<double>& ratios,
                                     double jz, bool bisect = true);

}  // namespace ghz
