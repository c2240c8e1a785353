#include "clusterghz/bell.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "clusterghz/primed_family.hpp"

namespace clusterghz {

namespace {

constexpr double kTol = 1e-9;

BellTerm normalized_term(int formula_sign, const PauliWord& product) {
  if (!product.hermitian())
    throw std::logic_error("bell term: product is not Hermitian");
  return BellTerm{formula_sign * product.sign(), unsigned_word(product)};
}

// Gaussian-integer coefficient accumulator keyed by letter string. Exact,
// so cancellation-aware comparisons stay free of floating error.
using CoeffMap = std::map<std::string, std::pair<long long, long long>>;

void accumulate(CoeffMap& map, long long scale, const PauliWord& p) {
  auto& [re, im] = map[letters(p)];
  switch (p.phase_exp & 3) {
    case 0: re += scale; break;
    case 1: im += scale; break;
    case 2: re -= scale; break;
    case 3: im -= scale; break;
  }
}

void drop_zeros(CoeffMap& map) {
  for (auto it = map.begin(); it != map.end();)
    it = (it->second.first == 0 && it->second.second == 0) ? map.erase(it)
                                                           : std::next(it);
}

std::string product_label(std::uint64_t subset) {
  std::string label;
  for (int i = 0; subset >> i; ++i)
    if (subset & (1ull << i)) label += "E" + std::to_string(i + 1);
  return label.empty() ? "I" : label;
}

std::vector<std::uint64_t> reflected_subsets(int count, int n) {
  // Subsets of {1..count-1} with each index i mapped to n+1-i.
  std::vector<std::uint64_t> out;
  out.reserve(1ull << (count - 1));
  for (std::uint64_t mask = 0; mask < (1ull << (count - 1)); ++mask) {
    std::uint64_t refl = 0;
    for (int i = 1; i <= count - 1; ++i)
      if (mask & (1ull << (i - 1))) refl |= 1ull << (n + 1 - i - 1);
    out.push_back(refl);
  }
  return out;
}

std::vector<int> subset_indices(std::uint64_t subset) {
  std::vector<int> indices;
  for (int i = 0; subset >> i; ++i)
    if (subset & (1ull << i)) indices.push_back(i + 1);
  return indices;
}

// Listing order: fewer factors first, then by ascending index tuple.
void sort_product_sets(std::vector<std::uint64_t>& subsets,
                       std::vector<std::string>& labels) {
  std::sort(subsets.begin(), subsets.end(),
            [](std::uint64_t a, std::uint64_t b) {
              const auto ia = subset_indices(a);
              const auto ib = subset_indices(b);
              if (ia.size() != ib.size()) return ia.size() < ib.size();
              return ia < ib;
            });
  labels.clear();
  for (const std::uint64_t s : subsets) labels.push_back(product_label(s));
}

}  // namespace

BellOperator standard_bell_operator(int n, int j, FamilyChoice head_choice,
                                    FamilyChoice tail_choice) {
  if (n < 3) throw std::invalid_argument("standard_bell_operator: n < 3");
  if (j < n / 2 || j > n - 2)
    throw std::invalid_argument(
        "standard_bell_operator: grouping j must lie in [floor(n/2), n-2]");
  const PrimedFamily head = primed_family_head(j, n);
  const PrimedFamily tail = primed_family_tail(j + 2, n);
  const auto pick = [](const std::vector<PauliWord>& set, int idx,
                       const char* what) -> const PauliWord& {
    if (idx < 0 || static_cast<size_t>(idx) >= set.size())
      throw std::invalid_argument(std::string("standard_bell_operator: ") +
                                  what + " choice out of range");
    return set[static_cast<size_t>(idx)];
  };
  const PauliWord& zpp = pick(head.z_set, head_choice.z, "head Z");
  const PauliWord& ypp = pick(head.y_set, head_choice.y, "head Y");
  const PauliWord& zp = pick(tail.z_set, tail_choice.z, "tail Z");
  const PauliWord& yp = pick(tail.y_set, tail_choice.y, "tail Y");

  const PauliWord mid_x = single_site(n, j + 1, Letter::X);
  const PauliWord mid_y = single_site(n, j + 1, Letter::Y);
  const PauliWord mid_z = single_site(n, j + 1, Letter::Z);

  BellOperator b;
  b.n = n;
  b.terms = {normalized_term(+1, multiply(multiply(zpp, mid_x), zp)),
             normalized_term(+1, multiply(multiply(ypp, mid_y), zp)),
             normalized_term(-1, multiply(multiply(ypp, mid_x), yp)),
             normalized_term(+1, multiply(multiply(zpp, mid_y), yp))};

  const PauliWord xpp = with_phase_shift(multiply(ypp, zpp), 3);
  const PauliWord xp = with_phase_shift(multiply(yp, zp), 3);
  b.factored = BellFactors{multiply(xpp, mid_z),
                           multiply(multiply(zpp, mid_x), zp),
                           multiply(mid_z, xp), j};
  return b;
}

std::map<std::string, int> term_map(const BellOperator& b) {
  CoeffMap acc;
  for (const auto& t : b.terms) accumulate(acc, t.coeff, t.word);
  drop_zeros(acc);
  std::map<std::string, int> out;
  for (const auto& [word, coeff] : acc) {
    if (coeff.second != 0)
      throw std::logic_error("term_map: non-Hermitian accumulated term");
    out[word] = static_cast<int>(coeff.first);
  }
  return out;
}

bool factored_expansion_check(const BellOperator& b) {
  if (!b.factored)
    throw std::invalid_argument("factored_expansion_check: no factored form");
  const auto& f = *b.factored;
  CoeffMap expansion;
  accumulate(expansion, 1, f.e2);
  accumulate(expansion, 1, multiply(f.e1, f.e2));
  accumulate(expansion, 1, multiply(f.e2, f.e3));
  accumulate(expansion, 1, multiply(f.e1, multiply(f.e2, f.e3)));
  drop_zeros(expansion);

  CoeffMap stored;
  for (const auto& t : b.terms) accumulate(stored, t.coeff, t.word);
  drop_zeros(stored);
  return expansion == stored;
}

bool bell_square_check(const BellOperator& b, int dense_limit) {
  if (!b.factored)
    throw std::invalid_argument("bell_square_check: no factored form");
  const auto& f = *b.factored;
  // Commutation and involution of the factored triple.
  for (const PauliWord* e : {&f.e1, &f.e2, &f.e3}) {
    if (!e->hermitian()) return false;
    if (!(multiply(*e, *e) == identity_word(b.n))) return false;
  }
  if (!commutes(f.e1, f.e2) || !commutes(f.e1, f.e3) || !commutes(f.e2, f.e3))
    return false;

  CoeffMap square;
  for (const auto& ti : b.terms)
    for (const auto& tk : b.terms)
      accumulate(square, ti.coeff * tk.coeff, multiply(ti.word, tk.word));
  drop_zeros(square);

  CoeffMap rhs;
  accumulate(rhs, 4, identity_word(b.n));
  accumulate(rhs, 4, f.e1);
  accumulate(rhs, 4, f.e3);
  accumulate(rhs, 4, multiply(f.e1, f.e3));
  drop_zeros(rhs);
  if (square != rhs) return false;

  if (b.n <= dense_limit) {
    const Eigen::MatrixXcd m = bell_matrix(b, dense_limit);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (std::abs(es.eigenvalues().maxCoeff() - 4.0) > kTol) return false;
  }
  return true;
}

double quantum_value(const BellOperator& b, const StateVector& psi) {
  if (b.n != psi.n)
    throw std::invalid_argument("quantum_value: dimension mismatch");
  std::complex<double> total = 0;
  for (const auto& t : b.terms)
    total += double(t.coeff) * expectation(t.word, psi);
  return total.real();
}

int lhv_party_bound_for_signs(const std::array<int, 4>& s) {
  int best = 0;
  for (int bits = 0; bits < 64; ++bits) {
    const int a = (bits & 1) ? -1 : 1;   // z''
    const int bb = (bits & 2) ? -1 : 1;  // y''
    const int c = (bits & 4) ? -1 : 1;   // x
    const int d = (bits & 8) ? -1 : 1;   // y
    const int e = (bits & 16) ? -1 : 1;  // z'
    const int f = (bits & 32) ? -1 : 1;  // y'
    const int value =
        s[0] * a * c * e + s[1] * bb * d * e + s[2] * bb * c * f + s[3] * a * d * f;
    best = std::max(best, value);
  }
  return best;
}

int lhv_party_bound(const BellOperator& b) {
  if (!b.factored)
    throw std::invalid_argument(
        "lhv_party_bound: tripartition unknown without the factored form");
  return lhv_party_bound_for_signs({+1, +1, -1, +1});
}

int lhv_qubit_bound(const BellOperator& b, int lhv_limit) {
  if (b.n > lhv_limit)
    throw std::length_error("lhv_qubit_bound: n = " + std::to_string(b.n) +
                            " exceeds assignment-scan limit " +
                            std::to_string(lhv_limit));
  // Symbol bit 3*(site-1) + {0,1,2} for the X, Y, Z value at that site.
  std::vector<std::uint64_t> masks;
  std::vector<int> coeffs;
  masks.reserve(b.terms.size());
  for (const auto& t : b.terms) {
    std::uint64_t mask = 0;
    for (int site = 1; site <= b.n; ++site) {
      switch (t.word.letter(site)) {
        case Letter::X: mask |= 1ull << (3 * (site - 1) + 0); break;
        case Letter::Y: mask |= 1ull << (3 * (site - 1) + 1); break;
        case Letter::Z: mask |= 1ull << (3 * (site - 1) + 2); break;
        case Letter::I: break;
      }
    }
    masks.push_back(mask);
    coeffs.push_back(t.coeff);
  }
  int best = 0;
  const std::uint64_t assignments = 1ull << (3 * b.n);
  for (std::uint64_t assign = 0; assign < assignments; ++assign) {
    int value = 0;
    for (size_t i = 0; i < masks.size(); ++i)
      value += (std::popcount(assign & masks[i]) & 1) ? -coeffs[i] : coeffs[i];
    best = std::max(best, value);
  }
  return best;
}

BellOperator grand_bell_operator(int n, int j) {
  const int middle = j + 1;
  if (n < 2 || middle < 1 || middle > n)
    throw std::invalid_argument("grand_bell_operator: middle index invalid");
  const auto gens = stabilizer_generators(n);
  BellOperator b;
  b.n = n;
  b.terms.reserve(1ull << (n - 1));
  // Subset mask over the n-1 generators other than the middle one.
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    PauliWord acc = identity_word(n);
    int pos = 0;
    for (int m = 1; m <= n; ++m) {
      if (m == middle) {
        acc = multiply(acc, gens[static_cast<size_t>(m - 1)]);
      } else {
        if (mask & (1ull << pos)) acc = multiply(acc, gens[static_cast<size_t>(m - 1)]);
        ++pos;
      }
    }
    b.terms.push_back(normalized_term(+1, acc));
  }
  return b;
}

BellOperator grand_bell_operator_grouped(int n, int j) {
  if (j < 1 || j + 2 > n)
    throw std::invalid_argument("grand_bell_operator_grouped: j out of range");
  const auto gens = stabilizer_generators(n);
  const auto head_products = stabilizer_subset_products(j, n, false);
  const auto tail_products = stabilizer_subset_products(n - j - 1, n, true);
  const PauliWord& ej = gens[static_cast<size_t>(j - 1)];
  const PauliWord& emid = gens[static_cast<size_t>(j)];
  const PauliWord& ej2 = gens[static_cast<size_t>(j + 1)];

  CoeffMap acc;
  for (int use_left : {0, 1}) {
    for (const auto& a : head_products) {
      for (const auto& ap : tail_products) {
        for (int use_right : {0, 1}) {
          PauliWord w = multiply(emid, multiply(a, ap));
          if (use_left) w = multiply(ej, w);
          if (use_right) w = multiply(w, ej2);
          accumulate(acc, 1, w);
        }
      }
    }
  }
  drop_zeros(acc);

  BellOperator b;
  b.n = n;
  for (const auto& [word, coeff] : acc) {
    if (coeff.second != 0 || std::abs(coeff.first) != 1)
      throw std::logic_error("grand_bell_operator_grouped: bad coefficient");
    b.terms.push_back({static_cast<int>(coeff.first), make_pauli(word)});
  }
  return b;
}

Eigen::MatrixXcd bell_matrix(const BellOperator& b, int dense_limit) {
  if (b.n > dense_limit)
    throw std::length_error("bell_matrix: n exceeds dense limit");
  const Eigen::Index dim = 1ll << b.n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : b.terms)
    m += double(t.coeff) * to_matrix(t.word, dense_limit);
  return m;
}

SpectralSummary max_eigen_check(const BellOperator& b, const StateVector& psi,
                                int dense_limit) {
  if (b.n != psi.n)
    throw std::invalid_argument("max_eigen_check: dimension mismatch");
  const Eigen::MatrixXcd m = bell_matrix(b, dense_limit);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const auto& evals = es.eigenvalues();
  const double top = evals(evals.size() - 1);
  // Spectra here are integer-spaced, so a coarse degeneracy window is safe.
  int multiplicity = 0;
  double overlap = 0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) >= top - 1e-6) {
      ++multiplicity;
      overlap += std::norm(es.eigenvectors().col(i).dot(psi.amps));
    }
  }
  SpectralSummary summary;
  summary.max_eigenvalue = top;
  summary.multiplicity = multiplicity;
  summary.matches_state = (multiplicity == 1) && overlap >= 1.0 - kTol;
  return summary;
}

std::vector<TableIIIRow> table_iii(int n) {
  if (n < 3) throw std::invalid_argument("table_iii: n must be >= 3");
  std::vector<TableIIIRow> rows;
  for (int j = n / 2; j <= n - 2; ++j) {
    TableIIIRow row;
    row.j = j;
    row.grouping = (j > 1 ? "(1, " + std::to_string(j) + ")" : "1") + ", " +
                   std::to_string(j + 1) + ", " +
                   (j + 2 < n ? "(" + std::to_string(j + 2) + ", " +
                                    std::to_string(n) + ")"
                              : std::to_string(n));

    const std::uint64_t head_count = 1ull << (j - 1);
    const auto tail_sets = reflected_subsets(n - j - 1, n);
    for (std::uint64_t t = 0; t < head_count; ++t)
      row.e1_subsets.push_back(t | (1ull << (j - 1)));
    for (const std::uint64_t tp : tail_sets)
      for (std::uint64_t t = 0; t < head_count; ++t)
        row.e2_subsets.push_back(t | (1ull << j) | tp);
    for (const std::uint64_t tp : tail_sets)
      row.e3_subsets.push_back(tp | (1ull << (j + 1)));
    sort_product_sets(row.e1_subsets, row.e1_labels);
    sort_product_sets(row.e2_subsets, row.e2_labels);
    sort_product_sets(row.e3_subsets, row.e3_labels);

    if (n - j - 1 != j) {
      std::string mirror;
      for (int k = 1; k <= n / 2; ++k) {
        if (!mirror.empty()) mirror += ";";
        mirror += std::to_string(k) + "<->" + std::to_string(n + 1 - k);
      }
      row.mirror = mirror;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace clusterghz
