#include "clusterghz/tables.hpp"

#include <stdexcept>
#include <vector>

#include "clusterghz/bell.hpp"
#include "clusterghz/primed_family.hpp"

namespace clusterghz {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

const std::string kGoldenTableI =
    "Y'(3,4),Z'(3,4),X'(3,4)\n"
    "-X3Y4,I3X4,X3Z4\n"
    "-X3Y4,Z3I4,Y3Y4\n"
    "Y3Z4,I3X4,Y3Y4\n"
    "Y3Z4,Z3I4,X3Z4\n";

const std::string kGoldenTableII =
    "Z''(1,3),Y''(1,3),Z''(1,2),Y''(1,2),Z'(4,5),Y'(4,5)\n"
    "Z1X2I3,X1I2Y3,X1I2,Z1Y2,I4X5,-X4Y5\n"
    "Y1Y2I3,I1Z2Y3,I1Z2,-Y1X2,Z4I5,Y4Z5\n"
    "X1Z2Z3,-Z1Y2X3,,,,\n"
    "I1I2Z3,Y1X2X3,,,,\n";

const std::string kGoldenTableIII4 =
    "grouping,E1_set,E2_set,E3_set,mirror\n"
    "\"(1, 2), 3, 4\",E2|E1E2,E3|E1E3,E4,1<->4;2<->3\n";

const std::string kGoldenTableIII5 =
    "grouping,E1_set,E2_set,E3_set,mirror\n"
    "\"(1, 2), 3, (4, 5)\",E2|E1E2,E3|E1E3|E3E5|E1E3E5,E4|E4E5,\n"
    "\"(1, 3), 4, 5\",E3|E1E3|E2E3|E1E2E3,E4|E1E4|E2E4|E1E2E4,E5,"
    "1<->5;2<->4\n";

const std::string kGoldenTableIII6 =
    "grouping,E1_set,E2_set,E3_set,mirror\n"
    "\"(1, 3), 4, (5, 6)\",E3|E1E3|E2E3|E1E2E3,"
    "E4|E1E4|E2E4|E4E6|E1E2E4|E1E4E6|E2E4E6|E1E2E4E6,E5|E5E6,"
    "1<->6;2<->5;3<->4\n"
    "\"(1, 4), 5, 6\",E4|E1E4|E2E4|E3E4|E1E2E4|E1E3E4|E2E3E4|E1E2E3E4,"
    "E5|E1E5|E2E5|E3E5|E1E2E5|E1E3E5|E2E3E5|E1E2E3E5,E6,"
    "1<->6;2<->5;3<->4\n";

}  // namespace

std::string render_table_i() {
  const PrimedFamily f = primed_family_tail(3, 4);
  std::string csv = "Y'(3,4),Z'(3,4),X'(3,4)\n";
  for (const auto& y : f.y_set) {
    for (const auto& z : f.z_set) {
      const PauliWord x = with_phase_shift(multiply(y, z), 3);
      csv += site_notation(y, 3, 4) + "," + site_notation(z, 3, 4) + "," +
             site_notation(x, 3, 4) + "\n";
    }
  }
  return csv;
}

std::string render_table_ii() {
  const PrimedFamily head3 = primed_family_head(3, 5);
  const PrimedFamily head2 = primed_family_head(2, 5);
  const PrimedFamily tail45 = primed_family_tail(4, 5);

  struct Column {
    const std::vector<PauliWord>* members;
    int first, last;
  };
  const std::vector<Column> columns = {
      {&head3.z_set, 1, 3}, {&head3.y_set, 1, 3}, {&head2.z_set, 1, 2},
      {&head2.y_set, 1, 2}, {&tail45.z_set, 4, 5}, {&tail45.y_set, 4, 5}};

  std::string csv = "Z''(1,3),Y''(1,3),Z''(1,2),Y''(1,2),Z'(4,5),Y'(4,5)\n";
  size_t height = 0;
  for (const auto& col : columns) height = std::max(height, col.members->size());
  for (size_t r = 0; r < height; ++r) {
    std::vector<std::string> cells;
    for (const auto& col : columns)
      cells.push_back(r < col.members->size()
                          ? site_notation((*col.members)[r], col.first, col.last)
                          : "");
    csv += join(cells, ",") + "\n";
  }
  return csv;
}

std::string render_table_iii(int n) {
  std::string csv = "grouping,E1_set,E2_set,E3_set,mirror\n";
  for (const auto& row : table_iii(n)) {
    csv += "\"" + row.grouping + "\"," + join(row.e1_labels, "|") + "," +
           join(row.e2_labels, "|") + "," + join(row.e3_labels, "|") + "," +
           row.mirror + "\n";
  }
  return csv;
}

const std::string& golden_table_i() { return kGoldenTableI; }

const std::string& golden_table_ii() { return kGoldenTableII; }

const std::string& golden_table_iii(int n) {
  switch (n) {
    case 4: return kGoldenTableIII4;
    case 5: return kGoldenTableIII5;
    case 6: return kGoldenTableIII6;
  }
  throw std::invalid_argument("golden_table_iii: reference data covers n = 4..6");
}

}  // namespace clusterghz
