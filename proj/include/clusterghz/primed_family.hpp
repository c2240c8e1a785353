#pragma once

#include <utility>
#include <vector>

#include "clusterghz/cluster_state.hpp"
#include "clusterghz/pauli.hpp"

namespace clusterghz {

/// The recursively built Pauli-like operator sets of one chain segment.
///
/// Members are full n-qubit words (identity outside the segment), signed,
/// and all Hermitian. For a segment of length L each set holds 2^{L-1}
/// entries, in recursion order: the first branch of the defining relation
/// comes first at every level.
struct PrimedFamily {
  Side side = Side::tail;
  int first = 1;   ///< first site of the segment
  int last = 1;    ///< last site of the segment
  int n = 1;       ///< total chain length the words live on
  std::vector<PauliWord> x_set, y_set, z_set, i_set;

  int length() const { return last - first + 1; }
};

/// Tail family on sites [k, n], built from the segment-end base
/// X' = X_n, Y' = Y_n, Z' = Z_n, I' = I by prepending one site at a time:
///   Y'(k) in {-X_k Y'(k+1), Y_k Z'(k+1)}    Z'(k) in {I_k X'(k+1), Z_k I'(k+1)}
///   I'(k) in {Z_k X'(k+1), I_k I'(k+1)}     X'(k) in {X_k Z'(k+1), Y_k Y'(k+1)}
PrimedFamily primed_family_tail(int k, int n);

/// Head family on sites [1, j], appending one site at a time:
///   Y''(j) in {Z''(j-1) Y_j, -Y''(j-1) X_j}  Z''(j) in {X''(j-1), I''(j-1) Z_j}
///   I''(j) in {X''(j-1) Z_j, I''(j-1)}       X''(j) in {Z''(j-1) X_j, Y''(j-1) Y_j}
PrimedFamily primed_family_head(int j, int n);

/// Checks the single-qubit Pauli algebra on the whole family, exactly:
/// every (y, z) pair multiplies to a member of x_set via x = -i y z, all
/// such triples pairwise anticommute with xy = iz, yz = ix, zx = iy, every
/// member squares to +I, and i_set members are Hermitian involutions.
bool family_algebra_check(const PrimedFamily& f);

/// Verifies the two-qubit representation rules on the matching pair basis:
/// x|+-> = +-|+->, y|+-> = -+i|-+>, z|+-> = |-+>, i|+-> = |+->, for every
/// member of each set. Only segments of length 2 are supported.
bool basis_action_check(const PrimedFamily& f,
                        const std::pair<StateVector, StateVector>& basis);

/// The 2^{j-1} products of generators over all subsets of {1..j-1}, as
/// n-qubit words, in ascending subset-mask order. With `reflected` each
/// generator index i is first mapped to n+1-i.
std::vector<PauliWord> stabilizer_subset_products(int j, int n,
                                                  bool reflected);

/// Verifies the coset presentation of a family: each set equals its anchor
/// word times the matching generator-subset products, signs included, as a
/// bijection. head (segment [1, j]):
///   y'' = Z_{j-1} Y_j A_j, z'' = Z_j A_j, i'' = A_j, x'' = Z_{j-1} X_j A_j.
/// tail (segment [j+2, n], A' reflected):
///   y' = Y_{j+2} Z_{j+3} A', z' = Z_{j+2} A', i' = A', x' = X_{j+2} Z_{j+3} A'.
/// Boundary anchors drop the neighbor factor that falls off the segment.
bool membership_check(Side side, int j, int n);

}  // namespace clusterghz
