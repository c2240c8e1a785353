#pragma once

#include <string>

namespace clusterghz {

/// CSV of the two-site pair-operator compatibility table on sites (3, 4):
/// each row is one (Y', Z') choice with the resulting X' = -i Y' Z'.
std::string render_table_i();

/// CSV of the operator sets used by the five-qubit construction: the head
/// families on (1,3) and (1,2) and the tail family on (4,5). Columns are
/// ragged; short columns are blank-padded.
std::string render_table_ii();

/// CSV of the Bell-operator membership listing for chain length n:
/// grouping, E1_set, E2_set, E3_set, mirror.
std::string render_table_iii(int n);

/// Reference copies the regenerated tables are diffed against.
const std::string& golden_table_i();
const std::string& golden_table_ii();
const std::string& golden_table_iii(int n);  ///< n in {4, 5, 6}

}  // namespace clusterghz
