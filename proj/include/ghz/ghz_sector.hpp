#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ghz/hamiltonian.hpp"
#include "ghz/multi_index.hpp"
#include "ghz/pauli.hpp"

namespace ghz {

/// How a single Pauli string moves a GHZ state through the flip-sector
/// basis: p |G_+> = phase * gtilde(flips, sigma), with flips the X/Y support
/// and sigma = (-1)^{#Y + #Z}. Empty flips means the string is diagonal and
/// maps G_+ to itself (sigma = +1) or to G_- (sigma = -1).
struct FlipAction {
  MultiIndex flips;
  int sigma;    // +1 or -1
  Phase phase;  // i^{#Y}
};

FlipAction string_flip_action(const PauliString& p);

/// Canonical representative of the complement-identified flip class
/// {S, N\S}: the smaller-cardinality set, ties (|S| = n/2) resolved to the
/// set containing qubit 1. Returns (R, f) with
/// gtilde(n, S, sigma) = f * gtilde(n, R, sigma); f is +1 when R == S and
/// sigma otherwise. Requires 1 <= |S| <= n-1.
std::pair<MultiIndex, int> canonical_flip_class(const MultiIndex& s,
                                                int sigma);

/// Decomposition of H |G_source> over the GHZ flip-sector basis:
///   H |G_s> = epsilon |G_s> + b0 |G_-s>
///             + sum_R a[R] gtilde(R, s) + b[R] gtilde(R, -s)
/// with R ranging over canonical flip classes. The a map always carries the
/// family whose relative sign matches the source state. Coefficients are
/// complex because Y-carrying strings contribute i^{#Y} phases.
struct GhzDecomposition {
  int n = 0;
  int source_sign = +1;
  double epsilon = 0.0;
  std::complex<double> b0;
  std::map<MultiIndex, std::complex<double>> a;
  std::map<MultiIndex, std::complex<double>> b;

  /// Rebuilds the right-hand side above as a dense vector.
  Eigen::VectorXcd reconstruct() const;

  /// sqrt(sum |a|^2 + sum |b|^2): norm of the off-GHZ remainder beyond b0.
  double bucket_norm() const;
};

/// Requires body_order(h) < n.
GhzDecomposition decompose_plus(const FewBodyHamiltonian& h);
GhzDecomposition decompose_minus(const FewBodyHamiltonian& h);

/// Exact linear conditions for |G_+> to be an eigenstate, and the residual
/// that decides whether |G_-> is forced to share the eigenvalue.
struct ConditionReport {
  int n = 0;
  int body_order = 0;
  double epsilon = 0.0;
  double tolerance = 0.0;
  bool is_plus_eigenstate = false;
  /// b0 plus every canonical bucket of the plus decomposition, in a fixed
  /// order: "b0" first, then per canonical class "a[(...)]", "b[(...)]".
  std::vector<std::pair<std::string, std::complex<double>>> residuals;
  /// Norm of H|G_-> - epsilon|G_-> - b0|G_+>; equals the phi-bar
  /// remainder when the plus conditions hold, and is flagged hypothetical
  /// otherwise.
  double phi_bar_norm = 0.0;
  bool phi_bar_hypothetical = false;
  bool degeneracy_forced = false;
};

/// tol < 0 selects the scale-invariant default 1e-11 * max(1, sum |J|).
ConditionReport eigenstate_conditions(const FewBodyHamiltonian& h,
                                      double tol = -1.0);

}  // namespace ghz
