#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "clusterghz/pauli.hpp"

namespace clusterghz {

/// Dense amplitudes of an n-qubit pure state. The basis index of
/// |b1 b2 ... bn> carries b1 as the most significant bit, matching the
/// site-1-leftmost convention of PauliWord.
struct StateVector {
  int n = 0;
  Eigen::VectorXcd amps;
};

/// Which end of the chain a two-qubit block replaces: `tail` pairs the last
/// two sites (primed basis), `head` the first two (double-primed basis).
enum class Side { head, tail };

/// Chain correlation operators E_a = X_a (x) Z_{a-1} (x) Z_{a+1}, with the
/// boundary Z factors dropped at the segment ends. Requires n >= 2.
std::vector<PauliWord> stabilizer_generators(int n);

/// The 1D cluster state: amplitudes are all of modulus 2^{-n/2} with sign
/// (-1)^{sum_a b_a b_{a+1}}; the unique joint +1 eigenstate of the chain
/// generators.
StateVector build_cluster_state(int n, int limit = kDefaultStatevectorLimit);

/// Product state from a character per site, each of {0, 1, +, -}.
StateVector product_state(std::string_view sites);

StateVector apply_pauli(const PauliWord& p, const StateVector& psi);

std::complex<double> expectation(const PauliWord& p, const StateVector& psi);

/// True iff ||p psi - lambda psi|| < 1e-9. p must be Hermitian, lambda +-1.
bool eigenstate_check(const PauliWord& p, const StateVector& psi, int lambda);

/// Exact eigenvalue of the unsigned Hermitian word w on the cluster state of
/// w.n qubits, decided in the Pauli algebra: +1 or -1 when +-w is a product
/// of generators, 0 otherwise (zero mean). The candidate generator subset is
/// forced by the x mask, since generator a is the only one with X at site a.
int stabilizer_eigenvalue(const PauliWord& w);

/// The two-qubit pair basis: tail gives (|+>', |->'), head (|+>'', |->'').
std::pair<StateVector, StateVector> primed_basis_vectors(Side side);

/// Rebuilds the n-qubit cluster state from the (n-1)-qubit one by replacing
/// an end qubit with the matching pair basis, and compares with the direct
/// construction. head: |0>_1 -> |+>|0>, |1>_1 -> |->|1> on new sites (1,2);
/// tail: |0>_{n-1} -> |0>|+>, |1>_{n-1} -> |1>|-> on sites (n-1, n).
bool decomposition_check(int n, Side side,
                         int limit = kDefaultStatevectorLimit);

/// Four-qubit family alpha(|+0+0> + |-1+1>) + beta(|+0-1> + |-1-0>),
/// normalized when |alpha|^2 + |beta|^2 = 1/2 (checked to 1e-9).
StateVector build_phi_family(std::complex<double> alpha,
                             std::complex<double> beta);

}  // namespace clusterghz
