#include "clusterghz/primed_family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace clusterghz {

namespace {

constexpr double kTol = 1e-9;

std::vector<PauliWord> prefixed(const PauliWord& factor,
                                const std::vector<PauliWord>& members) {
  std::vector<PauliWord> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(multiply(factor, m));
  return out;
}

std::vector<PauliWord> concat(std::vector<PauliWord> a,
                              std::vector<PauliWord> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::set<std::string> key_set(const std::vector<PauliWord>& words) {
  std::set<std::string> keys;
  for (const auto& w : words) keys.insert(to_string(w));
  return keys;
}

bool same_members(const std::vector<PauliWord>& a,
                  const std::vector<PauliWord>& b) {
  return a.size() == b.size() && key_set(a) == key_set(b);
}

}  // namespace

PrimedFamily primed_family_tail(int k, int n) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("primed_family_tail: start site out of range");
  PrimedFamily f{Side::tail, k, n, n, {}, {}, {}, {}};
  if (k == n) {
    f.x_set = {single_site(n, n, Letter::X)};
    f.y_set = {single_site(n, n, Letter::Y)};
    f.z_set = {single_site(n, n, Letter::Z)};
    f.i_set = {identity_word(n)};
    return f;
  }
  const PrimedFamily inner = primed_family_tail(k + 1, n);
  const PauliWord xk = single_site(n, k, Letter::X);
  const PauliWord neg_xk = single_site(n, k, Letter::X, 2);
  const PauliWord yk = single_site(n, k, Letter::Y);
  const PauliWord zk = single_site(n, k, Letter::Z);
  f.y_set = concat(prefixed(neg_xk, inner.y_set), prefixed(yk, inner.z_set));
  f.z_set = concat(inner.x_set, prefixed(zk, inner.i_set));
  f.i_set = concat(prefixed(zk, inner.x_set), inner.i_set);
  f.x_set = concat(prefixed(xk, inner.z_set), prefixed(yk, inner.y_set));
  return f;
}

PrimedFamily primed_family_head(int j, int n) {
  if (n < 1 || j < 1 || j > n)
    throw std::invalid_argument("primed_family_head: end site out of range");
  PrimedFamily f{Side::head, 1, j, n, {}, {}, {}, {}};
  if (j == 1) {
    f.x_set = {single_site(n, 1, Letter::X)};
    f.y_set = {single_site(n, 1, Letter::Y)};
    f.z_set = {single_site(n, 1, Letter::Z)};
    f.i_set = {identity_word(n)};
    return f;
  }
  const PrimedFamily inner = primed_family_head(j - 1, n);
  const PauliWord xj = single_site(n, j, Letter::X);
  const PauliWord neg_xj = single_site(n, j, Letter::X, 2);
  const PauliWord yj = single_site(n, j, Letter::Y);
  const PauliWord zj = single_site(n, j, Letter::Z);
  f.y_set = concat(prefixed(yj, inner.z_set), prefixed(neg_xj, inner.y_set));
  f.z_set = concat(inner.x_set, prefixed(zj, inner.i_set));
  f.i_set = concat(prefixed(zj, inner.x_set), inner.i_set);
  f.x_set = concat(prefixed(xj, inner.z_set), prefixed(yj, inner.y_set));
  return f;
}

bool family_algebra_check(const PrimedFamily& f) {
  const PauliWord id = identity_word(f.n);
  const auto all_sets = {&f.x_set, &f.y_set, &f.z_set, &f.i_set};
  const size_t expected = 1ull << (f.length() - 1);
  for (const auto* set : all_sets) {
    if (set->size() != expected) return false;
    if (key_set(*set).size() != expected) return false;  // distinct, signs counted
    for (const auto& m : *set) {
      if (!m.hermitian()) return false;
      if (!(multiply(m, m) == id)) return false;
    }
  }

  const auto x_keys = key_set(f.x_set);
  std::set<std::string> produced;
  for (const auto& y : f.y_set) {
    for (const auto& z : f.z_set) {
      const PauliWord x = with_phase_shift(multiply(y, z), 3);  // -i y z
      if (!x.hermitian()) return false;
      if (!x_keys.count(to_string(x))) return false;
      produced.insert(to_string(x));
      // Pairwise anticommutation and the cyclic commutator identities,
      // checked as xy = iz, yz = ix, zx = iy.
      if (commutes(x, y) || commutes(y, z) || commutes(z, x)) return false;
      if (!(multiply(x, y) == with_phase_shift(z, 1))) return false;
      if (!(multiply(y, z) == with_phase_shift(x, 1))) return false;
      if (!(multiply(z, x) == with_phase_shift(y, 1))) return false;
    }
  }
  // Every x member arises from some (y, z) pairing.
  return produced == x_keys;
}

bool basis_action_check(const PrimedFamily& f,
                        const std::pair<StateVector, StateVector>& basis) {
  if (f.length() != 2)
    throw std::invalid_argument(
        "basis_action_check: only two-site segments have a pair basis");
  const StateVector& plus = basis.first;
  const StateVector& minus = basis.second;
  const std::complex<double> i1(0, 1);

  auto maps_to = [](const PauliWord& w, const StateVector& in,
                    std::complex<double> factor, const StateVector& expect) {
    const StateVector got = apply_pauli(w, in);
    return (got.amps - factor * expect.amps).norm() < kTol;
  };

  for (const auto& m : f.x_set) {
    const PauliWord w = segment_word(m, f.first, f.last);
    if (!maps_to(w, plus, 1.0, plus)) return false;
    if (!maps_to(w, minus, -1.0, minus)) return false;
  }
  for (const auto& m : f.y_set) {
    const PauliWord w = segment_word(m, f.first, f.last);
    if (!maps_to(w, plus, -i1, minus)) return false;
    if (!maps_to(w, minus, i1, plus)) return false;
  }
  for (const auto& m : f.z_set) {
    const PauliWord w = segment_word(m, f.first, f.last);
    if (!maps_to(w, plus, 1.0, minus)) return false;
    if (!maps_to(w, minus, 1.0, plus)) return false;
  }
  for (const auto& m : f.i_set) {
    const PauliWord w = segment_word(m, f.first, f.last);
    if (!maps_to(w, plus, 1.0, plus)) return false;
    if (!maps_to(w, minus, 1.0, minus)) return false;
  }
  return true;
}

std::vector<PauliWord> stabilizer_subset_products(int j, int n,
                                                  bool reflected) {
  if (j < 1 || j > n)
    throw std::invalid_argument("stabilizer_subset_products: j out of range");
  const auto gens = stabilizer_generators(n);
  std::vector<PauliWord> out;
  out.reserve(1ull << (j - 1));
  for (std::uint64_t mask = 0; mask < (1ull << (j - 1)); ++mask) {
    PauliWord acc = identity_word(n);
    for (int i = 1; i <= j - 1; ++i) {
      if (mask & (1ull << (i - 1))) {
        const int index = reflected ? n + 1 - i : i;
        acc = multiply(acc, gens[static_cast<size_t>(index - 1)]);
      }
    }
    out.push_back(acc);
  }
  return out;
}

bool membership_check(Side side, int j, int n) {
  PrimedFamily fam;
  std::vector<PauliWord> subset_products;
  PauliWord anchor_y = identity_word(n), anchor_z = identity_word(n),
            anchor_x = identity_word(n);
  if (side == Side::head) {
    if (j < 1 || j > n)
      throw std::invalid_argument("membership_check: head segment invalid");
    fam = primed_family_head(j, n);
    subset_products = stabilizer_subset_products(j, n, false);
    anchor_y = single_site(n, j, Letter::Y);
    anchor_x = single_site(n, j, Letter::X);
    if (j >= 2) {
      const PauliWord zprev = single_site(n, j - 1, Letter::Z);
      anchor_y = multiply(zprev, anchor_y);
      anchor_x = multiply(zprev, anchor_x);
    }
    anchor_z = single_site(n, j, Letter::Z);
  } else {
    if (j < 1 || j + 2 > n)
      throw std::invalid_argument("membership_check: tail segment invalid");
    fam = primed_family_tail(j + 2, n);
    subset_products = stabilizer_subset_products(n - j - 1, n, true);
    anchor_y = single_site(n, j + 2, Letter::Y);
    anchor_x = single_site(n, j + 2, Letter::X);
    if (j + 3 <= n) {
      const PauliWord znext = single_site(n, j + 3, Letter::Z);
      anchor_y = multiply(anchor_y, znext);
      anchor_x = multiply(anchor_x, znext);
    }
    anchor_z = single_site(n, j + 2, Letter::Z);
  }

  auto coset = [&](const PauliWord& anchor) {
    std::vector<PauliWord> out;
    out.reserve(subset_products.size());
    for (const auto& a : subset_products) out.push_back(multiply(anchor, a));
    return out;
  };

  return same_members(fam.y_set, coset(anchor_y)) &&
         same_members(fam.z_set, coset(anchor_z)) &&
         same_members(fam.x_set, coset(anchor_x)) &&
         same_members(fam.i_set, subset_products);
}

}  // namespace clusterghz
