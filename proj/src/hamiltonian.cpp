#include "ghz/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ghz {

FewBodyHamiltonian::FewBodyHamiltonian(int n, std::vector<PauliTerm> terms,
                                       int declared_body_order,
                                       bool allow_full_body)
    : n_(n) {
  if (n < 1 || n > PauliString::kMaxQubits)
    throw std::invalid_argument("FewBodyHamiltonian: n outside 1..24");

  // Dedup by masks, summing coefficients; drop exact zeros.
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> acc;
  int max_weight = 0;
  for (const auto& t : terms) {
    if (t.string.qubits() != n)
      throw std::invalid_argument(
          "FewBodyHamiltonian: term '" + t.string.str() +
          "' has wrong qubit count");
    if (!std::isfinite(t.coefficient))
      throw std::invalid_argument("FewBodyHamiltonian: non-finite coefficient");
    acc[{t.string.x_mask(), t.string.z_mask()}] += t.coefficient;
  }
  terms_.reserve(acc.size());
  for (const auto& [masks, coeff] : acc) {
    if (coeff == 0.0) continue;
    PauliString s(n, masks.first, masks.second);
    max_weight = std::max(max_weight, s.weight());
    terms_.push_back({coeff, s});
  }

  declared_m_ = declared_body_order < 0 ? max_weight : declared_body_order;
  if (max_weight > declared_m_)
    throw std::invalid_argument(
        "FewBodyHamiltonian: term weight " + std::to_string(max_weight) +
        " exceeds declared body order " + std::to_string(declared_m_));
  if (!allow_full_body && declared_m_ >= n)
    throw std::invalid_argument(
        "FewBodyHamiltonian: body order " + std::to_string(declared_m_) +
        " must be below n = " + std::to_string(n));
}

int FewBodyHamiltonian::body_order() const {
  int w = 0;
  for (const auto& t : terms_) w = std::max(w, t.string.weight());
  return w;
}

double FewBodyHamiltonian::coupling_scale() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coefficient);
  return s;
}

Eigen::VectorXcd apply(const FewBodyHamiltonian& h,
                       const Eigen::VectorXcd& psi) {
  const int n = h.qubits();
  const Eigen::Index dim = Eigen::Index(1) << n;
  if (psi.size() != dim)
    throw std::invalid_argument("apply: state dimension mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (const auto& term : h.terms()) {
    const std::uint32_t x = term.string.x_mask();
    const std::uint32_t z = term.string.z_mask();
    const Phase base(term.string.y_count());
    for (std::uint32_t bits = 0; bits < static_cast<std::uint32_t>(dim);
         ++bits) {
      const std::complex<double> amp = psi(bits);
      if (amp == std::complex<double>(0.0, 0.0)) continue;
      const Phase ph = base * Phase(2 * std::popcount(z & bits));
      out(bits ^ x) += term.coefficient * ph.value() * amp;
    }
  }
  return out;
}

Eigen::MatrixXcd to_dense(const FewBodyHamiltonian& h) {
  const int n = h.qubits();
  if (n > 12)
    throw std::invalid_argument("to_dense: n exceeds dense limit of 12");
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : h.terms()) {
    const std::uint32_t x = term.string.x_mask();
    const std::uint32_t z = term.string.z_mask();
    const Phase base(term.string.y_count());
    for (std::uint32_t bits = 0; bits < static_cast<std::uint32_t>(dim);
         ++bits) {
      const Phase ph = base * Phase(2 * std::popcount(z & bits));
      m(bits ^ x, bits) += term.coefficient * ph.value();
    }
  }
  return m;
}

namespace {

PauliString two_site(int n, int i, int j, char letter) {
  std::string s(static_cast<size_t>(n), 'I');
  s[static_cast<size_t>(i - 1)] = letter;
  s[static_cast<size_t>(j - 1)] = letter;
  return PauliString::parse(s);
}

}  // namespace

FewBodyHamiltonian ring_xz4(const std::array<double, 4>& jx,
                            const std::array<double, 4>& jz) {
  std::vector<PauliTerm> terms;
  for (int i = 1; i <= 4; ++i) {
    const int j = i % 4 + 1;  // periodic: site 5 = site 1
    terms.push_back({jx[static_cast<size_t>(i - 1)], two_site(4, i, j, 'X')});
    terms.push_back({jz[static_cast<size_t>(i - 1)], two_site(4, i, j, 'Z')});
  }
  return FewBodyHamiltonian(4, std::move(terms), 2);
}

FewBodyHamiltonian symmetric_ring4(double jx, double jz) {
  return ring_xz4({jx / 4, jx / 4, -jx / 4, -jx / 4},
                  {jz / 4, jz / 4, jz / 4, jz / 4});
}

FewBodyHamiltonian five_qubit_three_body(double jx, double jz) {
  std::vector<PauliTerm> terms;
  for (int i = 1; i <= 5; ++i) {
    const int j = i % 5 + 1;
    const int k = j % 5 + 1;
    terms.push_back({jz / 5, two_site(5, i, j, 'Z')});
    std::string xxx(5, 'I');
    xxx[static_cast<size_t>(i - 1)] = 'X';
    xxx[static_cast<size_t>(j - 1)] = 'X';
    xxx[static_cast<size_t>(k - 1)] = 'X';
    terms.push_back({jx / 5, PauliString::parse(xxx)});
    terms.push_back({-jx / 5, two_site(5, i, j, 'X')});
  }
  return FewBodyHamiltonian(5, std::move(terms), 3);
}

std::vector<PauliString> generic_family(int n, int m) {
  if (m < 1 || m >= n || n > 12)
    throw std::invalid_argument("generic_family: need 1 <= m < n <= 12");
  std::vector<PauliString> out;
  static const char letters[3] = {'X', 'Y', 'Z'};
  for (int k = 1; k <= m; ++k) {
    // Support tuples in lexicographic order.
    std::vector<int> support(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) support[static_cast<size_t>(j)] = j + 1;
    while (true) {
      long count = 1;
      for (int j = 0; j < k; ++j) count *= 3;
      for (long code = 0; code < count; ++code) {
        std::string s(static_cast<size_t>(n), 'I');
        long c = code;
        for (int j = k - 1; j >= 0; --j) {  // first site most significant
          s[static_cast<size_t>(support[static_cast<size_t>(j)] - 1)] =
              letters[c % 3];
          c /= 3;
        }
        out.push_back(PauliString::parse(s));
      }
      // Next combination.
      int j = k - 1;
      while (j >= 0 && support[static_cast<size_t>(j)] == n - (k - 1 - j)) --j;
      if (j < 0) break;
      ++support[static_cast<size_t>(j)];
      for (int t = j + 1; t < k; ++t)
        support[static_cast<size_t>(t)] = support[static_cast<size_t>(t - 1)] + 1;
    }
  }
  return out;
}

}  // namespace ghz
