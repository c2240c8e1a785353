#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "clusterghz/cluster_state.hpp"
#include "clusterghz/pauli.hpp"
#include "clusterghz/primed_family.hpp"

namespace clusterghz {

struct FormRow {
  PauliWord word;     ///< Hermitian, normalized to + phase
  int eigenvalue = 0; ///< +1 or -1 on the cluster state
};

/// How a form was generated: grouping index j (head sites 1..j, middle site
/// j+1, tail sites j+2..n) and the positions of the chosen members inside
/// the head and tail families. When `reversed` is set the stored rows are
/// the site-reversed image of that construction.
struct FormProvenance {
  int j = -1;
  int middle = -1;
  int head_z = -1, head_y = -1;
  int tail_z = -1, tail_y = -1;
  bool reversed = false;
};

/// One all-versus-nothing argument: four commuting observables whose
/// cluster-state eigenvalues multiply to -1 while every site letter appears
/// an even number of times, so no deterministic +-1 assignment matches.
struct GhzForm {
  int n = 0;
  std::array<FormRow, 4> rows;
  FormProvenance provenance;
};

/// Deduplication key: the four "letters:+1|-1" row encodings, sorted.
std::string canonical_key(const GhzForm& form);

/// Site order reversed in every row; eigenvalues unchanged. An involution.
GhzForm reverse_form(const GhzForm& form);

/// All distinct forms for the n-qubit chain: for each grouping j in
/// [floor(n/2), n-2] and each (Z'', Y'') x (Z', Y') family choice, the rows
///   Z'' X_{j+1} Z',  Y'' Y_{j+1} Z',  Y'' X_{j+1} Y',  Z'' Y_{j+1} Y'
/// with recursion signs folded into the eigenvalues, closed under site
/// reversal and deduplicated by canonical key. Sorted by key.
std::vector<GhzForm> enumerate_forms(int n);

/// True iff (a) every row is an eigen-operator of psi with the recorded
/// eigenvalue, (b) each non-identity letter occurs an even number of times
/// per site across the rows, and (c) the eigenvalue product is -1,
/// equivalently the product of the four row words is exactly -I.
bool verify_contradiction(const GhzForm& form, const StateVector& psi);

/// Independent reconstruction: scans all 4-subsets of the 2^n-element
/// stabilizer group for sets that satisfy the contradiction conditions and
/// split, for some contiguous tripartition, into two head values times two
/// tail values with an X/Y middle-site pattern. Sorted by canonical key.
/// Allowed for n <= 7.
std::vector<GhzForm> brute_force_form_oracle(int n);

struct ContradictionSubsetCounts {
  std::uint64_t all = 0;         ///< subsets passing (b) and (c) only
  std::uint64_t structured = 0;  ///< subsets also matching a tripartition
};

/// Counts contradiction-bearing 4-subsets of the stabilizer group with and
/// without the tripartition structure filter.
ContradictionSubsetCounts count_contradiction_subsets(int n);

nlohmann::json form_to_json(const GhzForm& form);

/// Throws std::invalid_argument on a malformed document.
GhzForm form_from_json(const nlohmann::json& doc);

}  // namespace clusterghz
