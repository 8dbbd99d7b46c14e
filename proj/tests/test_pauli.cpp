#include "ghz/pauli.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace ghz;
using testutil::kron_string;

TEST_CASE("parse encodes letters into bit pairs") {
  const PauliString p = PauliString::parse("XXII");
  CHECK(p.qubits() == 4);
  CHECK(p.x_mask() == 0b1100u);
  CHECK(p.z_mask() == 0u);
  CHECK(p.str() == "XXII");

  const PauliString id = PauliString::parse("IIII");
  CHECK(id.weight() == 0);
  CHECK(id == PauliString::identity(4));

  const PauliString q = PauliString::parse("ZYXI");
  CHECK(q.weight() == 3);
  CHECK(q.x_mask() == 0b0110u);  // qubits 2,3
  CHECK(q.z_mask() == 0b1100u);  // qubits 1,2
  CHECK(q.y_count() == 1);
  CHECK(q.z_count() == 1);
}

TEST_CASE("parse round-trips and reports errors") {
  for (const char* text : {"X", "IZYX", "YYYYYYYY", "IXIZIYIXIZ"})
    CHECK(PauliString::parse(text).str() == text);

  CHECK_THROWS_WITH_AS(PauliString::parse("XQ"),
                       doctest::Contains("position 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse(std::string(25, 'X')),
                  std::invalid_argument);
}

TEST_CASE("weight counts non-identity letters") {
  CHECK(PauliString::parse("IIII").weight() == 0);
  CHECK(PauliString::parse("ZIZI").weight() == 2);
  CHECK(PauliString::parse("XYZXY").weight() == 5);
}

TEST_CASE("single-qubit products") {
  auto [ph, r] = multiply(PauliString::parse("X"), PauliString::parse("Y"));
  CHECK(ph == Phase::i());
  CHECK(r.str() == "Z");

  auto [ph2, r2] = multiply(PauliString::parse("Z"), PauliString::parse("Z"));
  CHECK(ph2 == Phase::one());
  CHECK(r2.str() == "I");

  CHECK_THROWS_AS(multiply(PauliString::parse("X"), PauliString::parse("XX")),
                  std::invalid_argument);
}

TEST_CASE("XZ times ZX against the matrix oracle") {
  // Oracle value: kron("XZ") * kron("ZX") equals +1 * kron("YY").
  auto [ph, r] = multiply(PauliString::parse("XZ"), PauliString::parse("ZX"));
  CHECK(r.str() == "YY");
  CHECK(ph == Phase::one());

  const Eigen::MatrixXcd prod = kron_string("XZ") * kron_string("ZX");
  const Eigen::MatrixXcd expect = ph.value() * kron_string(r.str());
  CHECK((prod - expect).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("multiplication agrees with matrices on random pairs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const std::string a = testutil::random_string_text(rng, n, n);
    const std::string b = testutil::random_string_text(rng, n, n);
    auto [ph, r] = multiply(PauliString::parse(a), PauliString::parse(b));
    const Eigen::MatrixXcd prod = kron_string(a) * kron_string(b);
    const Eigen::MatrixXcd expect = ph.value() * kron_string(r.str());
    CHECK((prod - expect).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("every string squares to the identity") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const PauliString p =
        PauliString::parse(testutil::random_string_text(rng, n, n));
    auto [ph, r] = multiply(p, p);
    CHECK(ph == Phase::one());
    CHECK(r == PauliString::identity(n));
  }
}

TEST_CASE("commutation matches the symplectic inner product") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const PauliString p =
        PauliString::parse(testutil::random_string_text(rng, n, n));
    const PauliString q =
        PauliString::parse(testutil::random_string_text(rng, n, n));
    auto [ph_pq, r_pq] = multiply(p, q);
    auto [ph_qp, r_qp] = multiply(q, p);
    CHECK(r_pq == r_qp);
    if (anticommutes(p, q)) {
      CHECK(ph_qp == ph_pq * Phase::minus_one());
    } else {
      CHECK(ph_qp == ph_pq);
    }
  }
}

TEST_CASE("basis action fixes the documented phase convention") {
  // Y|0> = i|1>, Y|1> = -i|0>; the ghz_sector signs all hang off this.
  const PauliString y = PauliString::parse("Y");
  auto [p0, b0] = apply_to_basis(y, 0);
  CHECK(b0 == 1u);
  CHECK(p0 == Phase::i());
  auto [p1, b1] = apply_to_basis(y, 1);
  CHECK(b1 == 0u);
  CHECK(p1 == Phase::minus_i());

  auto [pz, bz] = apply_to_basis(PauliString::parse("Z"), 1);
  CHECK(bz == 1u);
  CHECK(pz == Phase::minus_one());

  auto [pxx, bxx] = apply_to_basis(PauliString::parse("XX"), 0b00);
  CHECK(bxx == 0b11u);
  CHECK(pxx == Phase::one());

  // "YZ" on |10>: frozen from the 4x4 oracle below.
  auto [pyz, byz] = apply_to_basis(PauliString::parse("YZ"), 0b10);
  CHECK(byz == 0b00u);
  CHECK(pyz == Phase::minus_i());
  const Eigen::MatrixXcd m = kron_string("YZ");
  CHECK(m(0b00, 0b10) == std::complex<double>(0, -1));
}

TEST_CASE("basis action agrees entrywise with Kronecker matrices for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const long strings = 1l << (2 * n);
    for (long code = 0; code < strings; ++code) {
      std::string text(static_cast<size_t>(n), 'I');
      long c = code;
      for (int q = 0; q < n; ++q) {
        text[static_cast<size_t>(q)] = "IXYZ"[c % 4];
        c /= 4;
      }
      const PauliString p = PauliString::parse(text);
      const Eigen::MatrixXcd m = kron_string(text);
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        auto [ph, out] = apply_to_basis(p, bits);
        for (std::uint32_t row = 0; row < (1u << n); ++row) {
          const std::complex<double> expect =
              row == out ? ph.value() : std::complex<double>(0, 0);
          CHECK(std::abs(m(row, bits) - expect) < 1e-15);
        }
      }
    }
  }
}

TEST_CASE("apply_to_basis validates input width") {
  CHECK_THROWS_AS(apply_to_basis(PauliString::parse("XX"), 0b100),
                  std::invalid_argument);
}
