#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clusterghz/cluster_state.hpp"
#include "clusterghz/pauli.hpp"

namespace clusterghz {

struct BellTerm {
  int coeff = 1;    ///< +1 or -1
  PauliWord word;   ///< Hermitian, normalized to + phase
};

/// The commuting triple behind (1 + E1) E2 (1 + E3), with the grouping j.
struct BellFactors {
  PauliWord e1, e2, e3;
  int j = -1;
};

/// A signed sum of Pauli words, optionally carrying its factored provenance.
struct BellOperator {
  int n = 0;
  std::vector<BellTerm> terms;
  std::optional<BellFactors> factored;
};

/// Position of one (Z, Y) member pair inside a primed family.
struct FamilyChoice {
  int z = 0;
  int y = 0;
};

/// The four-term operator Z''XZ' + Y''YZ' - Y''XY' + Z''YY' for grouping j,
/// with the chosen family members' signs folded into the coefficients, and
/// the factored triple E1 = X''Z_{j+1}, E2 = Z''X_{j+1}Z', E3 = Z_{j+1}X'.
BellOperator standard_bell_operator(int n, int j, FamilyChoice head,
                                    FamilyChoice tail);

/// Expands (1 + E1) E2 (1 + E3) in the Pauli algebra and compares with the
/// stored term list. Requires `factored`.
bool factored_expansion_check(const BellOperator& b);

/// Verifies B^2 = 4 (1 + E1)(1 + E3) term-for-term in the exact algebra,
/// and, when n fits the dense limit, that the largest eigenvalue is 4.
bool bell_square_check(const BellOperator& b,
                       int dense_limit = kDefaultDenseLimit);

/// sum_i coeff_i <psi| word_i |psi>. Imaginary parts cancel for Hermitian
/// terms; the real part is returned.
double quantum_value(const BellOperator& b, const StateVector& psi);

/// Exhaustive maximum of s1*ac*e + s2*bd*e + s3*bc*f + s4*ad*f over the 2^6
/// deterministic +-1 assignments to the six party observables
/// (a, b, c, d, e, f) = (z'', y'', x, y, z', y'). Terms with sign 0 are
/// absent; used directly for reduced expressions.
int lhv_party_bound_for_signs(const std::array<int, 4>& term_signs);

/// The local-hidden-variable bound of the standard four-term expression,
/// treating the tripartition's compound observables as primitive +-1
/// symbols. Requires `factored`. Always exhaustive, exact.
int lhv_party_bound(const BellOperator& b);

/// Exhaustive maximum of the signed term sum over +-1 assignments to every
/// (site, letter) pair; 2^{3n} assignments, so n is capped by `lhv_limit`.
int lhv_qubit_bound(const BellOperator& b, int lhv_limit = kDefaultLhvLimit);

/// E_{j+1} prod_{m != j+1} (1 + E_m), expanded into 2^{n-1} signed words.
/// The middle index j+1 must lie in [1, n].
BellOperator grand_bell_operator(int n, int j);

/// The same operator assembled as (1 + E_j) sum_{w in A} w (1 + E_{j+2})
/// with A = E_{j+1} A_j * A'_{n-j-1}; defined for 1 <= j <= n-2. Terms are
/// sorted by word. Agrees with grand_bell_operator term-for-term.
BellOperator grand_bell_operator_grouped(int n, int j);

/// Signed term coefficients keyed by letter string; zeros dropped.
std::map<std::string, int> term_map(const BellOperator& b);

Eigen::MatrixXcd bell_matrix(const BellOperator& b,
                             int dense_limit = kDefaultDenseLimit);

struct SpectralSummary {
  double max_eigenvalue = 0;
  int multiplicity = 0;
  bool matches_state = false;  ///< top eigenspace is spanned by psi
};

SpectralSummary max_eigen_check(const BellOperator& b, const StateVector& psi,
                                int dense_limit = kDefaultDenseLimit);

/// One grouping row of the Bell-operator membership table: the admissible
/// E1, E2, E3 values as generator products, both as labels ("E1E3") and as
/// generator index masks, plus the mirror relabeling when the mirrored
/// grouping is distinct.
struct TableIIIRow {
  int j = -1;
  std::string grouping;
  std::vector<std::string> e1_labels, e2_labels, e3_labels;
  std::vector<std::uint64_t> e1_subsets, e2_subsets, e3_subsets;
  std::string mirror;
};

/// Membership listing E1 in E_j A_j, E2 in E_{j+1} A_j * A'_{n-j-1},
/// E3 in E_{j+2} A'_{n-j-1} for every grouping j in [floor(n/2), n-2].
std::vector<TableIIIRow> table_iii(int n);

}  // namespace clusterghz
