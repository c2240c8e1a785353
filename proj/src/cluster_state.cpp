#include "clusterghz/cluster_state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace clusterghz {

namespace {

constexpr double kTol = 1e-9;

// Site masks use bit a-1 for site a, basis indices use bit n-a.
std::uint64_t to_index_mask(std::uint64_t site_mask, int n) {
  std::uint64_t idx = 0;
  for (int a = 1; a <= n; ++a)
    if (site_mask & (1ull << (a - 1))) idx |= 1ull << (n - a);
  return idx;
}

std::complex<double> unit_phase(int k) {
  constexpr std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units[((k % 4) + 4) % 4];
}

void check_dims(const PauliWord& p, const StateVector& psi, const char* who) {
  if (p.n != psi.n)
    throw std::invalid_argument(std::string(who) +
                                ": operator and state dimensions differ");
}

}  // namespace

std::vector<PauliWord> stabilizer_generators(int n) {
  if (n < 2)
    throw std::domain_error("stabilizer_generators: chain needs n >= 2");
  std::vector<PauliWord> gens;
  gens.reserve(static_cast<size_t>(n));
  for (int a = 1; a <= n; ++a) {
    PauliWord e = single_site(n, a, Letter::X);
    if (a > 1) e = multiply(e, single_site(n, a - 1, Letter::Z));
    if (a < n) e = multiply(e, single_site(n, a + 1, Letter::Z));
    gens.push_back(e);
  }
  return gens;
}

StateVector build_cluster_state(int n, int limit) {
  if (n < 1) throw std::domain_error("build_cluster_state: n must be >= 1");
  if (n > limit)
    throw std::length_error("build_cluster_state: n = " + std::to_string(n) +
                            " exceeds statevector limit " +
                            std::to_string(limit));
  const std::uint64_t dim = 1ull << n;
  const double norm = std::pow(2.0, -0.5 * n);
  StateVector psi{n, Eigen::VectorXcd(static_cast<Eigen::Index>(dim))};
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    // Adjacent sites are adjacent index bits, so idx & (idx >> 1) counts the
    // 11 neighbor pairs.
    const int pairs = std::popcount(idx & (idx >> 1));
    psi.amps[static_cast<Eigen::Index>(idx)] = (pairs & 1) ? -norm : norm;
  }
  return psi;
}

StateVector product_state(std::string_view sites) {
  const int n = static_cast<int>(sites.size());
  if (n < 1 || n > kDefaultStatevectorLimit)
    throw std::invalid_argument("product_state: bad site count");
  StateVector psi{n, Eigen::VectorXcd::Ones(1)};
  const double r = 1.0 / std::sqrt(2.0);
  for (char c : sites) {
    Eigen::Vector2cd q;
    switch (c) {
      case '0': q << 1, 0; break;
      case '1': q << 0, 1; break;
      case '+': q << r, r; break;
      case '-': q << r, -r; break;
      default:
        throw std::invalid_argument("product_state: invalid site character");
    }
    Eigen::VectorXcd next(psi.amps.size() * 2);
    for (Eigen::Index i = 0; i < psi.amps.size(); ++i) {
      next[2 * i] = psi.amps[i] * q[0];
      next[2 * i + 1] = psi.amps[i] * q[1];
    }
    psi.amps = std::move(next);
  }
  return psi;
}

StateVector apply_pauli(const PauliWord& p, const StateVector& psi) {
  check_dims(p, psi, "apply_pauli");
  const std::uint64_t xm = to_index_mask(p.x_mask, p.n);
  const std::uint64_t zm = to_index_mask(p.z_mask, p.n);
  const int y_count = std::popcount(p.x_mask & p.z_mask);
  const std::complex<double> base = unit_phase(p.phase_exp + y_count);
  StateVector out{psi.n, Eigen::VectorXcd(psi.amps.size())};
  const std::uint64_t dim = 1ull << p.n;
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    const double sign = (std::popcount(idx & zm) & 1) ? -1.0 : 1.0;
    out.amps[static_cast<Eigen::Index>(idx ^ xm)] =
        base * sign * psi.amps[static_cast<Eigen::Index>(idx)];
  }
  return out;
}

std::complex<double> expectation(const PauliWord& p, const StateVector& psi) {
  check_dims(p, psi, "expectation");
  return psi.amps.dot(apply_pauli(p, psi).amps);
}

bool eigenstate_check(const PauliWord& p, const StateVector& psi, int lambda) {
  if (!p.hermitian())
    throw std::domain_error("eigenstate_check: operator is not Hermitian");
  if (lambda != 1 && lambda != -1)
    throw std::domain_error("eigenstate_check: eigenvalue must be +-1");
  check_dims(p, psi, "eigenstate_check");
  const StateVector applied = apply_pauli(p, psi);
  return (applied.amps - double(lambda) * psi.amps).norm() < kTol;
}

int stabilizer_eigenvalue(const PauliWord& w) {
  if (!w.hermitian() || w.phase_exp != 0)
    throw std::domain_error(
        "stabilizer_eigenvalue: expected an unsigned Hermitian word");
  if (w.n < 2) throw std::domain_error("stabilizer_eigenvalue: n must be >= 2");
  const auto gens = stabilizer_generators(w.n);
  const PauliWord prod = resolve(StabilizerProduct{w.n, w.x_mask}, gens);
  if (prod.x_mask != w.x_mask || prod.z_mask != w.z_mask) return 0;
  return prod.sign();
}

std::pair<StateVector, StateVector> primed_basis_vectors(Side side) {
  StateVector plus{2, Eigen::VectorXcd(4)};
  StateVector minus{2, Eigen::VectorXcd(4)};
  // tail: |+>' = (|0+> + |1->)/sqrt2, head: |+>'' = (|+0> + |-1>)/sqrt2.
  // Both expand to (1,1,1,-1)/2; the minus vectors differ.
  plus.amps << 0.5, 0.5, 0.5, -0.5;
  if (side == Side::tail)
    minus.amps << 0.5, 0.5, -0.5, 0.5;
  else
    minus.amps << 0.5, -0.5, 0.5, 0.5;
  return {plus, minus};
}

bool decomposition_check(int n, Side side, int limit) {
  if (n < 4 || n > limit)
    throw std::invalid_argument("decomposition_check: n out of range");
  const StateVector base = build_cluster_state(n - 1, limit);
  const Eigen::Index base_dim = base.amps.size();
  const double r = 1.0 / std::sqrt(2.0);
  StateVector rebuilt{n, Eigen::VectorXcd::Zero(2 * base_dim)};
  if (side == Side::tail) {
    // |0>_{n-1} -> |0>|+>, |1>_{n-1} -> |1>|->: append site n.
    for (Eigen::Index b = 0; b < base_dim; ++b) {
      const bool one = (b & 1) != 0;
      rebuilt.amps[2 * b] += base.amps[b] * r;
      rebuilt.amps[2 * b + 1] += base.amps[b] * (one ? -r : r);
    }
  } else {
    // |0>_1 -> |+>|0>, |1>_1 -> |->|1>: prepend a new site 1.
    for (Eigen::Index b = 0; b < base_dim; ++b) {
      const bool one = (b >> (n - 2)) & 1;
      rebuilt.amps[b] += base.amps[b] * r;
      rebuilt.amps[base_dim + b] += base.amps[b] * (one ? -r : r);
    }
  }
  const StateVector direct = build_cluster_state(n, limit);
  return (rebuilt.amps - direct.amps).norm() < kTol;
}

StateVector build_phi_family(std::complex<double> alpha,
                             std::complex<double> beta) {
  const double weight = std::norm(alpha) + std::norm(beta);
  if (std::abs(weight - 0.5) > kTol)
    throw std::domain_error(
        "build_phi_family: requires |alpha|^2 + |beta|^2 = 1/2");
  StateVector psi{4, Eigen::VectorXcd::Zero(16)};
  psi.amps = alpha * (product_state("+0+0").amps + product_state("-1+1").amps) +
             beta * (product_state("+0-1").amps + product_state("-1-0").amps);
  return psi;
}

}  // namespace clusterghz
