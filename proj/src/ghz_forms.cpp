#include "clusterghz/ghz_forms.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace clusterghz {

namespace {

FormRow make_row(const PauliWord& signed_product) {
  if (!signed_product.hermitian())
    throw std::logic_error("make_row: row product is not Hermitian");
  FormRow row;
  row.word = unsigned_word(signed_product);
  row.eigenvalue = stabilizer_eigenvalue(row.word);
  if (row.eigenvalue == 0)
    throw std::logic_error("make_row: row is not a stabilizer element");
  return row;
}

std::string row_key(const FormRow& row) {
  return letters(row.word) + (row.eigenvalue > 0 ? ":+1" : ":-1");
}

// Letters of each row split at the tripartition [1..j] | j+1 | [j+2..n].
struct SplitRow {
  std::string head, tail;
  char mid = 'I';
};

// True when the four rows realize the head x tail choice pattern at
// grouping j: middle letters two X and two Y, exactly two head values and
// two tail values each used twice, and no two rows sharing both.
bool structured_at(const std::array<std::string, 4>& words, int j) {
  std::array<SplitRow, 4> split;
  int x_count = 0;
  for (int r = 0; r < 4; ++r) {
    split[r].head = words[r].substr(0, static_cast<size_t>(j));
    split[r].mid = words[r][static_cast<size_t>(j)];
    split[r].tail = words[r].substr(static_cast<size_t>(j + 1));
    if (split[r].mid == 'X') ++x_count;
    else if (split[r].mid != 'Y') return false;
  }
  if (x_count != 2) return false;

  auto two_values_twice = [](auto proj) {
    std::map<std::string, int> counts;
    for (int r = 0; r < 4; ++r) ++counts[proj(r)];
    if (counts.size() != 2) return false;
    for (const auto& [value, count] : counts)
      if (count != 2) return false;
    return true;
  };
  if (!two_values_twice([&](int r) { return split[r].head; })) return false;
  if (!two_values_twice([&](int r) { return split[r].tail; })) return false;

  // Rows sharing a head (or a tail) must differ in the middle letter.
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (split[a].head == split[b].head && split[a].mid == split[b].mid)
        return false;
      if (split[a].tail == split[b].tail && split[a].mid == split[b].mid)
        return false;
    }
  }
  return true;
}

std::optional<int> find_structure(const std::array<std::string, 4>& words,
                                  int n) {
  for (int j = 1; j <= n - 2; ++j)
    if (structured_at(words, j)) return j;
  return std::nullopt;
}

bool letters_even_per_site(const std::array<std::string, 4>& words, int n) {
  for (int site = 0; site < n; ++site) {
    int counts[4] = {0, 0, 0, 0};
    for (int r = 0; r < 4; ++r) {
      switch (words[static_cast<size_t>(r)][static_cast<size_t>(site)]) {
        case 'X': ++counts[0]; break;
        case 'Y': ++counts[1]; break;
        case 'Z': ++counts[2]; break;
        default: break;
      }
    }
    for (int c : counts)
      if (c & 1) return false;
  }
  return true;
}

std::array<std::string, 4> row_letter_array(const GhzForm& form) {
  return {letters(form.rows[0].word), letters(form.rows[1].word),
          letters(form.rows[2].word), letters(form.rows[3].word)};
}

// Shared scan over 4-subsets of the stabilizer group. Calls `emit` for each
// subset passing the letter-parity and eigenvalue-product conditions.
template <typename Emit>
void scan_stabilizer_subsets(int n, Emit&& emit) {
  if (n < 3) throw std::domain_error("stabilizer subset scan: n must be >= 3");
  if (n > 7)
    throw std::length_error("stabilizer subset scan: n > 7 is intractable");
  const auto gens = stabilizer_generators(n);
  const std::uint64_t group = 1ull << n;
  std::vector<PauliWord> element(group);
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> by_masks;
  for (std::uint64_t mask = 0; mask < group; ++mask) {
    element[mask] = resolve(StabilizerProduct{n, mask}, gens);
    by_masks[{element[mask].x_mask, element[mask].z_mask}] = mask;
  }
  // The first three subset members force the masks of the fourth.
  for (std::uint64_t i = 0; i < group; ++i) {
    for (std::uint64_t j = i + 1; j < group; ++j) {
      for (std::uint64_t k = j + 1; k < group; ++k) {
        const std::uint64_t need_x =
            element[i].x_mask ^ element[j].x_mask ^ element[k].x_mask;
        const std::uint64_t need_z =
            element[i].z_mask ^ element[j].z_mask ^ element[k].z_mask;
        const auto it = by_masks.find({need_x, need_z});
        if (it == by_masks.end() || it->second <= k) continue;
        const std::uint64_t l = it->second;
        const std::array<const PauliWord*, 4> words = {
            &element[i], &element[j], &element[k], &element[l]};
        int eig_product = 1;
        for (const auto* w : words) eig_product *= w->sign();
        if (eig_product != -1) continue;
        std::array<std::string, 4> rows = {letters(*words[0]), letters(*words[1]),
                                           letters(*words[2]), letters(*words[3])};
        if (!letters_even_per_site(rows, n)) continue;
        emit(words, rows);
      }
    }
  }
}

}  // namespace

std::string canonical_key(const GhzForm& form) {
  std::array<std::string, 4> keys = {row_key(form.rows[0]), row_key(form.rows[1]),
                                     row_key(form.rows[2]), row_key(form.rows[3])};
  std::sort(keys.begin(), keys.end());
  return keys[0] + "|" + keys[1] + "|" + keys[2] + "|" + keys[3];
}

GhzForm reverse_form(const GhzForm& form) {
  GhzForm out = form;
  for (auto& row : out.rows) row.word = reverse_sites(row.word);
  out.provenance.reversed = !form.provenance.reversed;
  return out;
}

std::vector<GhzForm> enumerate_forms(int n) {
  if (n < 3) throw std::domain_error("enumerate_forms: n must be >= 3");
  std::map<std::string, GhzForm> dedup;
  auto insert = [&](const GhzForm& f) { dedup.emplace(canonical_key(f), f); };

  for (int j = n / 2; j <= n - 2; ++j) {
    const PrimedFamily head = primed_family_head(j, n);
    const PrimedFamily tail = primed_family_tail(j + 2, n);
    const PauliWord mid_x = single_site(n, j + 1, Letter::X);
    const PauliWord mid_y = single_site(n, j + 1, Letter::Y);
    for (size_t hz = 0; hz < head.z_set.size(); ++hz) {
      for (size_t hy = 0; hy < head.y_set.size(); ++hy) {
        for (size_t tz = 0; tz < tail.z_set.size(); ++tz) {
          for (size_t ty = 0; ty < tail.y_set.size(); ++ty) {
            const PauliWord& zpp = head.z_set[hz];
            const PauliWord& ypp = head.y_set[hy];
            const PauliWord& zp = tail.z_set[tz];
            const PauliWord& yp = tail.y_set[ty];
            GhzForm f;
            f.n = n;
            f.rows[0] = make_row(multiply(multiply(zpp, mid_x), zp));
            f.rows[1] = make_row(multiply(multiply(ypp, mid_y), zp));
            f.rows[2] = make_row(multiply(multiply(ypp, mid_x), yp));
            f.rows[3] = make_row(multiply(multiply(zpp, mid_y), yp));
            f.provenance = {j,        j + 1,    static_cast<int>(hz),
                            static_cast<int>(hy), static_cast<int>(tz),
                            static_cast<int>(ty), false};
            insert(f);
            insert(reverse_form(f));
          }
        }
      }
    }
  }

  std::vector<GhzForm> out;
  out.reserve(dedup.size());
  for (auto& [key, form] : dedup) out.push_back(std::move(form));
  return out;
}

bool verify_contradiction(const GhzForm& form, const StateVector& psi) {
  if (form.n != psi.n)
    throw std::invalid_argument("verify_contradiction: dimension mismatch");
  PauliWord word_product = identity_word(form.n);
  int eig_product = 1;
  for (const auto& row : form.rows) {
    if (!row.word.hermitian() || row.word.phase_exp != 0) return false;
    if (row.eigenvalue != 1 && row.eigenvalue != -1) return false;
    if (!eigenstate_check(row.word, psi, row.eigenvalue)) return false;
    word_product = multiply(word_product, row.word);
    eig_product *= row.eigenvalue;
  }
  if (!letters_even_per_site(row_letter_array(form), form.n)) return false;
  const PauliWord minus_identity{form.n, 0, 0, 2};
  return eig_product == -1 && word_product == minus_identity;
}

std::vector<GhzForm> brute_force_form_oracle(int n) {
  std::map<std::string, GhzForm> found;
  scan_stabilizer_subsets(n, [&](const std::array<const PauliWord*, 4>& words,
                                 const std::array<std::string, 4>& rows) {
    const auto j = find_structure(rows, n);
    if (!j) return;
    GhzForm f;
    f.n = n;
    for (int r = 0; r < 4; ++r) {
      f.rows[static_cast<size_t>(r)].word = unsigned_word(*words[static_cast<size_t>(r)]);
      f.rows[static_cast<size_t>(r)].eigenvalue = words[static_cast<size_t>(r)]->sign();
    }
    f.provenance.j = *j;
    f.provenance.middle = *j + 1;
    found.emplace(canonical_key(f), f);
  });
  std::vector<GhzForm> out;
  out.reserve(found.size());
  for (auto& [key, form] : found) out.push_back(std::move(form));
  return out;
}

ContradictionSubsetCounts count_contradiction_subsets(int n) {
  ContradictionSubsetCounts counts;
  scan_stabilizer_subsets(n, [&](const std::array<const PauliWord*, 4>&,
                                 const std::array<std::string, 4>& rows) {
    ++counts.all;
    if (find_structure(rows, n)) ++counts.structured;
  });
  return counts;
}

nlohmann::json form_to_json(const GhzForm& form) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : form.rows)
    rows.push_back({{"pauli", letters(row.word)}, {"eigenvalue", row.eigenvalue}});
  nlohmann::json provenance = {{"j", form.provenance.j},
                               {"middle", form.provenance.middle},
                               {"head_z", form.provenance.head_z},
                               {"head_y", form.provenance.head_y},
                               {"tail_z", form.provenance.tail_z},
                               {"tail_y", form.provenance.tail_y},
                               {"reversed", form.provenance.reversed}};
  return {{"n", form.n}, {"rows", rows}, {"provenance", provenance}};
}

GhzForm form_from_json(const nlohmann::json& doc) {
  try {
    GhzForm form;
    form.n = doc.at("n").get<int>();
    const auto& rows = doc.at("rows");
    if (!rows.is_array() || rows.size() != 4)
      throw std::invalid_argument("form_from_json: expected exactly 4 rows");
    for (size_t r = 0; r < 4; ++r) {
      const auto& row = rows[r];
      const PauliWord word = make_pauli(row.at("pauli").get<std::string>());
      if (word.n != form.n)
        throw std::invalid_argument("form_from_json: row length != n");
      if (word.phase_exp != 0)
        throw std::invalid_argument("form_from_json: rows must be unsigned");
      const int eig = row.at("eigenvalue").get<int>();
      if (eig != 1 && eig != -1)
        throw std::invalid_argument("form_from_json: eigenvalue must be +-1");
      form.rows[r] = {word, eig};
    }
    if (doc.contains("provenance")) {
      const auto& p = doc["provenance"];
      form.provenance.j = p.value("j", -1);
      form.provenance.middle = p.value("middle", -1);
      form.provenance.head_z = p.value("head_z", -1);
      form.provenance.head_y = p.value("head_y", -1);
      form.provenance.tail_z = p.value("tail_z", -1);
      form.provenance.tail_y = p.value("tail_y", -1);
      form.provenance.reversed = p.value("reversed", false);
    }
    return form;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("form_from_json: ") + e.what());
  }
}

}  // namespace clusterghz
