#include "ghz/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ghz/states.hpp"

namespace ghz {

namespace {

// Detector tolerance for eigenvectors: far above eigensolver noise, far
// below any structural deviation from GHZ form.
constexpr double kCensusTol = 1e-8;

std::vector<int> cluster_labels(const Eigen::VectorXd& ev, double cluster_tol) {
  const int dim = static_cast<int>(ev.size());
  std::vector<int> label(static_cast<size_t>(dim), 0);
  if (dim == 0) return label;
  const double range = ev(dim - 1) - ev(0);
  const double thr = cluster_tol * range;
  for (int k = 1; k < dim; ++k)
    label[static_cast<size_t>(k)] =
        label[static_cast<size_t>(k - 1)] + (ev(k) - ev(k - 1) > thr ? 1 : 0);
  return label;
}

}  // namespace

EigenSystem hermitian_eigensystem(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigensystem: matrix not square");
  if (m.rows() > 4096)
    throw std::invalid_argument("hermitian_eigensystem: dimension above 4096");
  const double scale = m.cwiseAbs().maxCoeff();
  const double herm_err = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > 1e-12 * std::max(scale, 1e-300) && herm_err > 0)
    throw std::invalid_argument("hermitian_eigensystem: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: solver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SpectralReport analyze(const FewBodyHamiltonian& h,
                       const std::vector<NamedState>& targets,
                       double cluster_tol) {
  const int n = h.qubits();
  if (n > 12) throw std::invalid_argument("analyze: n exceeds dense limit 12");
  SpectralReport report;
  report.n = n;

  const EigenSystem es = hermitian_eigensystem(to_dense(h));
  const int dim = es.dim();
  report.eigenvalues = es.eigenvalues;
  report.cluster_of = cluster_labels(es.eigenvalues, cluster_tol);

  const int nclusters = report.cluster_of.back() + 1;
  report.clusters.resize(static_cast<size_t>(nclusters));
  for (int c = 0; c < nclusters; ++c) report.clusters[static_cast<size_t>(c)].rank = c;
  for (int k = 0; k < dim; ++k) {
    auto& cl = report.clusters[static_cast<size_t>(report.cluster_of[static_cast<size_t>(k)])];
    cl.value += es.eigenvalues(k);
    cl.multiplicity += 1;
  }
  for (auto& cl : report.clusters) cl.value /= cl.multiplicity;

  for (const auto& target : targets) {
    if (target.vector.size() != dim)
      throw std::invalid_argument("analyze: target dimension mismatch");
    std::vector<double> overlap(static_cast<size_t>(nclusters), 0.0);
    for (int k = 0; k < dim; ++k)
      overlap[static_cast<size_t>(report.cluster_of[static_cast<size_t>(k)])] +=
          std::norm(es.eigenvectors.col(k).dot(target.vector));
    const int best = static_cast<int>(
        std::max_element(overlap.begin(), overlap.end()) - overlap.begin());
    const auto& cl = report.clusters[static_cast<size_t>(best)];

    TargetMatch tm;
    tm.name = target.name;
    tm.eigenvalue = cl.value;
    tm.overlap = overlap[static_cast<size_t>(best)];
    tm.residual = (apply(h, target.vector) - cl.value * target.vector).norm();
    tm.multiplicity = cl.multiplicity;
    tm.rank = cl.rank;
    tm.gap = std::numeric_limits<double>::infinity();
    for (const auto& other : report.clusters)
      if (other.rank != cl.rank)
        tm.gap = std::min(tm.gap, std::abs(other.value - cl.value));
    if (!std::isfinite(tm.gap)) tm.gap = 0.0;
    report.targets.push_back(std::move(tm));
  }

  // Census over nondegenerate levels only; degenerate clusters have no
  // preferred eigenbasis.
  for (int k = 0; k < dim; ++k) {
    const int c = report.cluster_of[static_cast<size_t>(k)];
    if (report.clusters[static_cast<size_t>(c)].multiplicity != 1) continue;
    if (auto hit = detect_generalized_ghz(es.eigenvectors.col(k), kCensusTol))
      report.census.push_back({es.eigenvalues(k), hit->bitstring,
                               hit->relative_phase});
  }
  return report;
}

std::vector<GhzHit> ghz_census(const FewBodyHamiltonian& h,
                               double cluster_tol) {
  if (h.qubits() > 10)
    throw std::invalid_argument("ghz_census: n exceeds census limit 10");
  return analyze(h, {}, cluster_tol).census;
}

ScanResult scan_first_excited_window(const ModelBuilder& model, int n,
                                     const std::vector<double>& ratios,
                                     double jz, bool bisect) {
  if (jz >= 0)
    throw std::invalid_argument("scan_first_excited_window: requires jz < 0");
  if (ratios.empty())
    throw std::invalid_argument("scan_first_excited_window: empty ratio grid");
  for (double r : ratios)
    if (!std::isfinite(r))
      throw std::invalid_argument("scan_first_excited_window: non-finite ratio");

  const Eigen::VectorXcd target = ghz_state(n, +1);

  auto evaluate = [&](double ratio) {
    const FewBodyHamiltonian h = model(ratio * jz, jz);
    const SpectralReport rep = analyze(h, {{"G+", target}});
    const TargetMatch& tm = rep.targets.front();
    ScanRow row;
    row.ratio = ratio;
    row.jz = jz;
    row.jx = ratio * jz;
    row.ghz_eigenvalue = tm.eigenvalue;
    row.rank = tm.rank;
    row.multiplicity = tm.multiplicity;
    row.in_window = (tm.rank == 1 && tm.multiplicity == 1);
    return row;
  };

  ScanResult result;
  std::vector<double> grid = ratios;
  std::sort(grid.begin(), grid.end());
  for (double r : grid) result.rows.push_back(evaluate(r));

  auto refine = [&](double lo, double hi) {
    // Invariant: predicate differs at lo and hi.
    const bool at_lo = evaluate(lo).in_window;
    while (hi - lo > 1e-6) {
      const double mid = 0.5 * (lo + hi);
      if (evaluate(mid).in_window == at_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  bool open = result.rows.front().in_window;
  double enter = result.rows.front().ratio;
  for (size_t k = 1; k < result.rows.size(); ++k) {
    const bool now = result.rows[k].in_window;
    if (now == open) continue;
    const double lo = result.rows[k - 1].ratio;
    const double hi = result.rows[k].ratio;
    const double edge = bisect ? refine(lo, hi) : (now ? hi : lo);
    if (now) {
      enter = edge;
    } else {
      result.windows.emplace_back(enter, edge);
    }
    open = now;
  }
  if (open) result.windows.emplace_back(enter, result.rows.back().ratio);
  return result;
}

}  // namespace ghz
