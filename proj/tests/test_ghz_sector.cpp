#include "ghz/ghz_sector.hpp"

#include <random>

#include "doctest.h"
#include "ghz/states.hpp"
#include "test_util.hpp"

using namespace ghz;

namespace {

MultiIndex mi(int n, std::initializer_list<int> idx) {
  return MultiIndex(n, std::vector<int>(idx));
}

std::complex<double> bucket(const std::map<MultiIndex, std::complex<double>>& m,
                            const MultiIndex& key) {
  const auto it = m.find(key);
  return it == m.end() ? std::complex<double>(0, 0) : it->second;
}

}  // namespace

TEST_CASE("canonical flip class representatives") {
  auto [r1, f1] = canonical_flip_class(mi(4, {3, 4}), +1);
  CHECK(r1 == mi(4, {1, 2}));
  CHECK(f1 == +1);

  auto [r2, f2] = canonical_flip_class(mi(4, {3, 4}), -1);
  CHECK(r2 == mi(4, {1, 2}));
  CHECK(f2 == -1);

  auto [r3, f3] = canonical_flip_class(mi(5, {2, 3, 4}), +1);
  CHECK(r3 == mi(5, {1, 5}));
  CHECK(f3 == +1);

  CHECK_THROWS_AS(canonical_flip_class(MultiIndex::empty(4), +1),
                  std::invalid_argument);
  CHECK_THROWS_AS(canonical_flip_class(mi(3, {1, 2, 3}), +1),
                  std::invalid_argument);
}

TEST_CASE("canonical factor matches the state identity, exhaustively") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      const MultiIndex s = MultiIndex::from_mask(n, mask);
      for (int sigma : {+1, -1}) {
        auto [rep, factor] = canonical_flip_class(s, sigma);
        CHECK(2 * rep.size() <= n);
        if (2 * rep.size() == n) CHECK(rep.contains(1));
        const Eigen::VectorXcd lhs = gtilde_state(n, s, sigma);
        const Eigen::VectorXcd rhs =
            static_cast<double>(factor) * gtilde_state(n, rep, sigma);
        CHECK((lhs - rhs).norm() < 1e-14);
      }
    }
  }
}

TEST_CASE("flip action of single strings") {
  const FlipAction za = string_flip_action(PauliString::parse("ZIII"));
  CHECK(za.flips.is_empty());
  CHECK(za.sigma == -1);  // maps G+ to G-
  CHECK(za.phase == Phase::one());

  const FlipAction xx = string_flip_action(PauliString::parse("XXII"));
  CHECK(xx.flips == mi(4, {1, 2}));
  CHECK(xx.sigma == +1);
  CHECK(xx.phase == Phase::one());

  const FlipAction y = string_flip_action(PauliString::parse("YIII"));
  CHECK(y.flips == mi(4, {1}));
  CHECK(y.sigma == -1);
  CHECK(y.phase == Phase::i());
}

TEST_CASE("flip action reproduces the matvec on random strings") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const PauliString p =
        PauliString::parse(testutil::random_string_text(rng, n, n));
    const FlipAction act = string_flip_action(p);
    const FewBodyHamiltonian h(n, {{1.0, p}}, n, /*allow_full_body=*/true);
    for (int source : {+1, -1}) {
      const Eigen::VectorXcd got = ghz::apply(h, ghz_state(n, source));
      const int family = source * act.sigma;
      const Eigen::VectorXcd expect =
          act.flips.is_empty()
              ? Eigen::VectorXcd(act.phase.value() * ghz_state(n, family))
              : Eigen::VectorXcd(act.phase.value() *
                                 gtilde_state(n, act.flips, family));
      CHECK((got - expect).norm() < 1e-14);
    }
  }
}

TEST_CASE("decompose_plus sorts diagonals into epsilon and b0") {
  const FewBodyHamiltonian even(4, {{1.0, PauliString::parse("ZZII")}});
  const GhzDecomposition d1 = decompose_plus(even);
  CHECK(d1.epsilon == doctest::Approx(1.0));
  CHECK(std::abs(d1.b0) == 0.0);
  CHECK(d1.bucket_norm() == 0.0);

  const FewBodyHamiltonian odd(4, {{1.0, PauliString::parse("ZIII")}});
  const GhzDecomposition d2 = decompose_plus(odd);
  CHECK(d2.epsilon == 0.0);
  CHECK(d2.b0 == std::complex<double>(1.0, 0.0));

  const GhzDecomposition d2m = decompose_minus(odd);
  CHECK(d2m.b0 == std::complex<double>(1.0, 0.0));
  CHECK(d2m.epsilon == 0.0);
}

TEST_CASE("opposite ring couplings cancel inside one bucket") {
  const FewBodyHamiltonian h = ring_xz4({1, 0, -1, 0}, {0, 0, 0, 0});
  const GhzDecomposition d = decompose_plus(h);
  CHECK(d.epsilon == 0.0);
  CHECK(std::abs(d.b0) == 0.0);
  CHECK(std::abs(bucket(d.a, mi(4, {1, 2}))) == 0.0);
  CHECK(d.bucket_norm() < 1e-15);
}

TEST_CASE("minus decomposition carries the doubled x-couplings") {
  const GhzDecomposition d = decompose_minus(symmetric_ring4(1.0, 0.0));
  CHECK(std::abs(bucket(d.a, mi(4, {1, 2}))) == doctest::Approx(0.5));
  CHECK(std::abs(bucket(d.a, mi(4, {1, 4}))) == doctest::Approx(0.5));
  CHECK(std::abs(d.b0) == 0.0);

  const GhzDecomposition zz = decompose_minus(five_qubit_three_body(0.0, 1.0));
  CHECK(zz.epsilon == doctest::Approx(1.0));
  CHECK(std::abs(zz.b0) == 0.0);
  CHECK(zz.bucket_norm() == 0.0);
}

TEST_CASE("reconstruction matches the dense matvec, both sources") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int m = 1 + static_cast<int>(rng() % (n - 1));
    const FewBodyHamiltonian h = testutil::random_hamiltonian(rng, n, m, 8);
    const double scale = std::max(1.0, h.coupling_scale());
    const GhzDecomposition dp = decompose_plus(h);
    CHECK((dp.reconstruct() - ghz::apply(h, ghz_state(n, +1))).norm() <
          1e-12 * scale);
    const GhzDecomposition dm = decompose_minus(h);
    CHECK((dm.reconstruct() - ghz::apply(h, ghz_state(n, -1))).norm() <
          1e-12 * scale);
    CHECK(dp.epsilon == doctest::Approx(dm.epsilon));  // shared epsilon
    CHECK(std::abs(dp.b0 - dm.b0) < 1e-15 * scale);
  }
}

TEST_CASE("plus and minus coefficients coincide below the threshold order") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int mstar = (n + 1) / 2;
    const int m = 1 + static_cast<int>(rng() % (mstar - 1));
    const FewBodyHamiltonian h = testutil::random_hamiltonian(rng, n, m, 8);
    const GhzDecomposition dp = decompose_plus(h);
    const GhzDecomposition dm = decompose_minus(h);
    REQUIRE(dp.a.size() == dm.a.size());
    REQUIRE(dp.b.size() == dm.b.size());
    for (const auto& [rep, c] : dp.a)
      CHECK(std::abs(c - bucket(dm.a, rep)) < 1e-15);
    for (const auto& [rep, c] : dp.b)
      CHECK(std::abs(c - bucket(dm.b, rep)) < 1e-15);
  }
}

TEST_CASE("condition report flags eigenstates correctly both ways") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const FewBodyHamiltonian h =
        testutil::random_hamiltonian(rng, n, n - 1, 6);
    const ConditionReport report = eigenstate_conditions(h);
    const Eigen::VectorXcd g = ghz_state(n, +1);
    const double residual =
        (ghz::apply(h, g) - report.epsilon * g).norm();
    const bool direct = residual < report.tolerance;
    CHECK(report.is_plus_eigenstate == direct);
  }
}

TEST_CASE("relaxed conditions accept opposing buckets and report phi-bar") {
  const double c = 0.8;
  const FewBodyHamiltonian h(4, {{c, PauliString::parse("XXII")},
                                 {-c, PauliString::parse("IIXX")}});
  const ConditionReport report = eigenstate_conditions(h);
  CHECK(report.is_plus_eigenstate);
  CHECK(report.epsilon == 0.0);
  CHECK(report.phi_bar_norm == doctest::Approx(2 * c));
  CHECK(!report.phi_bar_hypothetical);
  CHECK(!report.degeneracy_forced);
}

TEST_CASE("condition report on the built-in models") {
  const ConditionReport r1 = eigenstate_conditions(symmetric_ring4(1.0, -1.0));
  CHECK(r1.is_plus_eigenstate);
  CHECK(r1.epsilon == doctest::Approx(-1.0));
  CHECK(r1.phi_bar_norm > 0.1);
  CHECK(!r1.degeneracy_forced);

  const ConditionReport r2 = eigenstate_conditions(symmetric_ring4(0.0, -1.0));
  CHECK(r2.is_plus_eigenstate);
  CHECK(r2.phi_bar_norm == 0.0);
  CHECK(r2.degeneracy_forced);

  const ConditionReport r3 =
      eigenstate_conditions(ring_xz4({1, 0, 0, 0}, {0, 0, 0, 0}));
  CHECK(!r3.is_plus_eigenstate);
  bool found = false;
  for (const auto& [key, value] : r3.residuals) {
    if (key == "a[(1,2)]") {
      found = true;
      CHECK(value == std::complex<double>(1.0, 0.0));
    }
  }
  CHECK(found);
  CHECK(r3.phi_bar_hypothetical);
}
