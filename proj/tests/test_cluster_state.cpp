#include <doctest.h>

#include <cmath>
#include <random>

#include "clusterghz/cluster_state.hpp"
#include "test_support.hpp"

using namespace clusterghz;

namespace {

bool states_equal(const StateVector& a, const StateVector& b) {
  return a.n == b.n && (a.amps - b.amps).norm() < 1e-9;
}

// Literal expansion of the defining tensor product: each |1> at site a
// multiplies the neighbor amplitude by the Z eigenvalue of site a+dir,
// with the off-chain neighbor treated as absent.
StateVector expansion_oracle(int n, int dir) {
  StateVector psi{n, Eigen::VectorXcd(1ll << n)};
  const double norm = std::pow(2.0, -0.5 * n);
  for (std::uint64_t idx = 0; idx < (1ull << n); ++idx) {
    double sign = 1.0;
    for (int a = 1; a <= n; ++a) {
      const int neighbor = a + dir;
      if (neighbor < 1 || neighbor > n) continue;
      const bool bit_a = (idx >> (n - a)) & 1;
      const bool bit_neighbor = (idx >> (n - neighbor)) & 1;
      if (bit_a && bit_neighbor) sign = -sign;
    }
    psi.amps[static_cast<Eigen::Index>(idx)] = sign * norm;
  }
  return psi;
}

}  // namespace

TEST_CASE("chain generators carry X with Z neighbors") {
  const auto g3 = stabilizer_generators(3);
  CHECK(g3[0] == make_pauli("XZI"));
  CHECK(g3[1] == make_pauli("ZXZ"));
  CHECK(g3[2] == make_pauli("IZX"));

  const auto g4 = stabilizer_generators(4);
  CHECK(g4[0] == make_pauli("XZII"));
  CHECK(g4[1] == make_pauli("ZXZI"));
  CHECK(g4[2] == make_pauli("IZXZ"));
  CHECK(g4[3] == make_pauli("IIZX"));

  const auto g2 = stabilizer_generators(2);
  CHECK(g2[0] == make_pauli("XZ"));
  CHECK(g2[1] == make_pauli("ZX"));

  for (int n = 2; n <= 8; ++n) {
    const auto gens = stabilizer_generators(n);
    for (size_t a = 0; a < gens.size(); ++a)
      for (size_t b = a + 1; b < gens.size(); ++b)
        CHECK(commutes(gens[a], gens[b]));
  }
  CHECK_THROWS_AS(stabilizer_generators(1), std::domain_error);
}

TEST_CASE("cluster state amplitudes and eigenvalue equations") {
  const StateVector phi2 = build_cluster_state(2);
  CHECK(phi2.amps[0] == std::complex<double>(0.5, 0));
  CHECK(phi2.amps[1] == std::complex<double>(0.5, 0));
  CHECK(phi2.amps[2] == std::complex<double>(0.5, 0));
  CHECK(phi2.amps[3] == std::complex<double>(-0.5, 0));

  // (|+>|0>|+> + |->|1>|->)/sqrt(2)
  StateVector phi3_literal{3, (product_state("+0+").amps +
                               product_state("-1-").amps) /
                                  std::sqrt(2.0)};
  CHECK(states_equal(build_cluster_state(3), phi3_literal));

  // (|+0+0> + |+0-1> + |-1-0> + |-1+1>)/2
  StateVector phi4_literal{
      4, (product_state("+0+0").amps + product_state("+0-1").amps +
          product_state("-1-0").amps + product_state("-1+1").amps) /
             2.0};
  CHECK(states_equal(build_cluster_state(4), phi4_literal));

  for (int n = 2; n <= 12; ++n) {
    const StateVector phi = build_cluster_state(n);
    CHECK(std::abs(phi.amps.norm() - 1.0) < 1e-9);
    const double mod = std::pow(2.0, -0.5 * n);
    for (Eigen::Index i = 0; i < phi.amps.size(); ++i)
      CHECK(std::abs(std::abs(phi.amps[i]) - mod) < 1e-9);
    for (const auto& e : stabilizer_generators(n))
      CHECK(eigenstate_check(e, phi, +1));
  }
  CHECK_THROWS_AS(build_cluster_state(15), std::length_error);
}

TEST_CASE("forward and reversed product expansions agree") {
  for (int n = 2; n <= 10; ++n) {
    const StateVector direct = build_cluster_state(n);
    CHECK(states_equal(direct, expansion_oracle(n, +1)));
    CHECK(states_equal(direct, expansion_oracle(n, -1)));
  }
}

TEST_CASE("apply_pauli acts linearly and matches dense matrices") {
  const StateVector phi3 = build_cluster_state(3);
  CHECK(states_equal(apply_pauli(make_pauli("ZXZ"), phi3), phi3));
  CHECK(states_equal(apply_pauli(identity_word(3), phi3), phi3));
  CHECK(states_equal(apply_pauli(make_pauli("-YXY"), phi3), phi3));

  std::mt19937_64 rng(test_seed() + 10);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 1 + int(rng() % 5);
    const PauliWord p = clusterghz::testing::random_word(rng, n);
    StateVector psi{n, Eigen::VectorXcd::Random(1ll << n)};
    psi.amps.normalize();
    const StateVector fast = apply_pauli(p, psi);
    const Eigen::VectorXcd dense = to_matrix(p) * psi.amps;
    CHECK((fast.amps - dense).norm() < 1e-9);
    if (p.hermitian())
      CHECK(states_equal(apply_pauli(p, fast), psi));
  }
  CHECK_THROWS_AS(apply_pauli(make_pauli("XX"), phi3), std::invalid_argument);
}

TEST_CASE("expectations of stabilizer and non-stabilizer words") {
  const StateVector phi3 = build_cluster_state(3);
  CHECK(std::abs(expectation(make_pauli("ZXZ"), phi3) - 1.0) < 1e-9);
  CHECK(std::abs(expectation(make_pauli("XII"), phi3)) < 1e-9);

  const StateVector phi4 = build_cluster_state(4);
  CHECK(std::abs(expectation(make_pauli("ZXIX"), phi4) - 1.0) < 1e-9);
}

TEST_CASE("eigenstate_check accepts only true eigenpairs") {
  const StateVector phi3 = build_cluster_state(3);
  const StateVector phi4 = build_cluster_state(4);
  CHECK(eigenstate_check(make_pauli("IZXZ"), phi4, +1));
  CHECK(eigenstate_check(make_pauli("YXY"), phi3, -1));
  CHECK_FALSE(eigenstate_check(make_pauli("XII"), phi3, +1));
  CHECK_FALSE(eigenstate_check(make_pauli("XII"), phi3, -1));
  CHECK_THROWS_AS(eigenstate_check(make_pauli("+iXZI"), phi3, +1),
                  std::domain_error);
}

TEST_CASE("algebraic stabilizer eigenvalues match the statevector") {
  CHECK(stabilizer_eigenvalue(make_pauli("ZXZ")) == +1);
  CHECK(stabilizer_eigenvalue(make_pauli("YXY")) == -1);
  CHECK(stabilizer_eigenvalue(make_pauli("XII")) == 0);

  std::mt19937_64 rng(test_seed() + 11);
  for (int n = 2; n <= 6; ++n) {
    const StateVector phi = build_cluster_state(n);
    for (int rep = 0; rep < 100; ++rep) {
      PauliWord w = clusterghz::testing::random_word(rng, n);
      w.phase_exp = 0;
      const int lambda = stabilizer_eigenvalue(w);
      const auto mean = expectation(w, phi);
      if (lambda == 0)
        CHECK(std::abs(mean) < 1e-9);
      else
        CHECK(std::abs(mean - double(lambda)) < 1e-9);
    }
  }
}

TEST_CASE("pair basis vectors expand as stated") {
  const auto [tail_plus, tail_minus] = primed_basis_vectors(Side::tail);
  CHECK(tail_plus.amps[0] == std::complex<double>(0.5, 0));
  CHECK(tail_plus.amps[1] == std::complex<double>(0.5, 0));
  CHECK(tail_plus.amps[2] == std::complex<double>(0.5, 0));
  CHECK(tail_plus.amps[3] == std::complex<double>(-0.5, 0));
  CHECK(std::abs(tail_plus.amps.dot(tail_minus.amps)) < 1e-12);
  CHECK(std::abs(tail_plus.amps.norm() - 1.0) < 1e-12);

  const auto [head_plus, head_minus] = primed_basis_vectors(Side::head);
  CHECK(std::abs(head_plus.amps.dot(head_minus.amps)) < 1e-12);
  CHECK(std::abs(head_minus.amps.norm() - 1.0) < 1e-12);

  // tail basis is (|0+> + |1->)/sqrt2 and (|0+> - |1->)/sqrt2
  StateVector lit{2, (product_state("0+").amps + product_state("1-").amps) /
                         std::sqrt(2.0)};
  CHECK(states_equal(tail_plus, lit));
  // head basis is (|+0> + |-1>)/sqrt2 and (|+0> - |-1>)/sqrt2
  StateVector lit2{2, (product_state("+0").amps - product_state("-1").amps) /
                          std::sqrt(2.0)};
  CHECK(states_equal(head_minus, lit2));
}

TEST_CASE("pair-basis decompositions reproduce the cluster state") {
  CHECK(decomposition_check(4, Side::tail));
  CHECK(decomposition_check(4, Side::head));
  CHECK(decomposition_check(5, Side::head));
  CHECK(decomposition_check(5, Side::tail));
  for (int n = 6; n <= 10; ++n) {
    CHECK(decomposition_check(n, Side::head));
    CHECK(decomposition_check(n, Side::tail));
  }
  CHECK_THROWS_AS(decomposition_check(3, Side::tail), std::invalid_argument);

  // The four-term five-qubit displays, written out literally.
  const auto [plusp, minusp] = primed_basis_vectors(Side::tail);
  const auto [pluspp, minuspp] = primed_basis_vectors(Side::head);
  auto kron = [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    Eigen::VectorXcd out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
      out.segment(i * b.size(), b.size()) = a[i] * b;
    return out;
  };
  const StateVector phi5 = build_cluster_state(5);
  Eigen::VectorXcd head_form =
      0.5 * (kron(pluspp.amps, product_state("0+0").amps) +
             kron(pluspp.amps, product_state("0-1").amps) +
             kron(minuspp.amps, product_state("1-0").amps) +
             kron(minuspp.amps, product_state("1+1").amps));
  CHECK((head_form - phi5.amps).norm() < 1e-9);
  // The primed computational pair basis: |0>' = |0+>, |1>' = |1->.
  Eigen::VectorXcd tail_form =
      0.5 * (kron(product_state("+0+").amps, product_state("0+").amps) +
             kron(product_state("+0-").amps, product_state("1-").amps) +
             kron(product_state("-1-").amps, product_state("0+").amps) +
             kron(product_state("-1+").amps, product_state("1-").amps));
  CHECK((tail_form - phi5.amps).norm() < 1e-9);
  CHECK(states_equal(StateVector{2, (plusp.amps + minusp.amps) / std::sqrt(2.0)},
                     product_state("0+")));
  CHECK(states_equal(StateVector{2, (plusp.amps - minusp.amps) / std::sqrt(2.0)},
                     product_state("1-")));
}

TEST_CASE("phi family interpolates through the cluster state") {
  const StateVector phi4 = build_cluster_state(4);
  CHECK(states_equal(build_phi_family(0.5, 0.5), phi4));

  const double r = 1.0 / std::sqrt(2.0);
  const StateVector extreme = build_phi_family(r, 0.0);
  const char* words[4] = {"ZXIX", "YYIX", "YXXY", "ZYXY"};
  const int pattern[4] = {+1, +1, +1, -1};
  for (int i = 0; i < 4; ++i)
    CHECK(eigenstate_check(make_pauli(words[i]), extreme, pattern[i]));

  CHECK_THROWS_AS(build_phi_family(1.0, 0.0), std::domain_error);
}
