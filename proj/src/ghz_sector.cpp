#include "ghz/ghz_sector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "ghz/states.hpp"

namespace ghz {

FlipAction string_flip_action(const PauliString& p) {
  const int n = p.qubits();
  const std::uint32_t flips = p.x_mask();  // X and Y sites
  const int sigma = (p.y_count() + p.z_count()) % 2 == 0 ? +1 : -1;
  return {MultiIndex::from_mask(n, flips), sigma, Phase(p.y_count())};
}

std::pair<MultiIndex, int> canonical_flip_class(const MultiIndex& s,
                                                int sigma) {
  if (sigma != +1 && sigma != -1)
    throw std::invalid_argument("canonical_flip_class: sigma must be +-1");
  const int n = s.ambient();
  if (s.is_empty() || s.is_full())
    throw std::invalid_argument(
        "canonical_flip_class: flip set must be nonempty and proper");
  const MultiIndex comp = s.complement();
  bool keep;
  if (2 * s.size() < n) {
    keep = true;
  } else if (2 * s.size() > n) {
    keep = false;
  } else {
    keep = s.contains(1);  // tie at |S| = n/2
  }
  if (keep) return {s, +1};
  return {comp, sigma};
}

namespace {

GhzDecomposition decompose(const FewBodyHamiltonian& h, int source_sign) {
  const int n = h.qubits();
  if (h.body_order() >= n)
    throw std::invalid_argument("decompose: body order must be below n");
  GhzDecomposition d;
  d.n = n;
  d.source_sign = source_sign;
  for (const auto& term : h.terms()) {
    const FlipAction act = string_flip_action(term.string);
    // p |G_s> = phase * gtilde(S, s * sigma); diagonal strings land on the
    // GHZ pair itself.
    const int family = source_sign * act.sigma;
    if (act.flips.is_empty()) {
      if (family == source_sign) {
        d.epsilon += term.coefficient;  // diagonal strings carry no phase
      } else {
        d.b0 += term.coefficient;
      }
      continue;
    }
    const std::complex<double> c = term.coefficient * act.phase.value();
    const auto [rep, factor] = canonical_flip_class(act.flips, family);
    auto& bucket = (family == source_sign) ? d.a : d.b;
    bucket[rep] += static_cast<double>(factor) * c;
  }
  return d;
}

}  // namespace

GhzDecomposition decompose_plus(const FewBodyHamiltonian& h) {
  return decompose(h, +1);
}

GhzDecomposition decompose_minus(const FewBodyHamiltonian& h) {
  return decompose(h, -1);
}

Eigen::VectorXcd GhzDecomposition::reconstruct() const {
  Eigen::VectorXcd out = epsilon * ghz_state(n, source_sign) +
                         b0 * ghz_state(n, -source_sign);
  for (const auto& [rep, coeff] : a)
    out += coeff * gtilde_state(n, rep, source_sign);
  for (const auto& [rep, coeff] : b)
    out += coeff * gtilde_state(n, rep, -source_sign);
  return out;
}

double GhzDecomposition::bucket_norm() const {
  double s = 0.0;
  for (const auto& [rep, coeff] : a) s += std::norm(coeff);
  for (const auto& [rep, coeff] : b) s += std::norm(coeff);
  return std::sqrt(s);
}

ConditionReport eigenstate_conditions(const FewBodyHamiltonian& h,
                                      double tol) {
  ConditionReport r;
  r.n = h.qubits();
  r.body_order = h.body_order();
  if (tol < 0) tol = 1e-11 * std::max(1.0, h.coupling_scale());
  r.tolerance = tol;

  const GhzDecomposition plus = decompose_plus(h);
  const GhzDecomposition minus = decompose_minus(h);
  r.epsilon = plus.epsilon;

  r.residuals.emplace_back("b0", plus.b0);
  // Keys in canonical class order; report a zero bucket for a class the
  // other family populated so the listing is symmetric.
  std::map<MultiIndex, std::pair<std::complex<double>, std::complex<double>>>
      merged;
  for (const auto& [rep, c] : plus.a) merged[rep].first = c;
  for (const auto& [rep, c] : plus.b) merged[rep].second = c;
  bool ok = std::abs(plus.b0) < tol;
  for (const auto& [rep, ab] : merged) {
    r.residuals.emplace_back("a[" + rep.str() + "]", ab.first);
    r.residuals.emplace_back("b[" + rep.str() + "]", ab.second);
    ok = ok && std::abs(ab.first) < tol && std::abs(ab.second) < tol;
  }
  r.is_plus_eigenstate = ok;

  // Canonical gtilde states with distinct (class, sign) labels are
  // orthonormal, so the minus-side remainder norm is the bucket 2-norm.
  r.phi_bar_norm = minus.bucket_norm();
  r.phi_bar_hypothetical = !r.is_plus_eigenstate;
  r.degeneracy_forced = r.is_plus_eigenstate && r.phi_bar_norm < tol;
  return r;
}

}  // namespace ghz
