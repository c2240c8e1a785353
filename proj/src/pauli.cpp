#include "clusterghz/pauli.hpp"

#include <array>
#include <bit>
#include <complex>

#include <unsupported/Eigen/KroneckerProduct>

namespace clusterghz {

namespace {

// i exponent k in L1 * L2 = i^k * (L1 xor L2), indexed by code(L1)*4+code(L2)
// with codes I=0, X=1, Z=2, Y=3.
constexpr std::array<int, 16> kProductPhase = {
    0, 0, 0, 0,   // I *
    0, 0, 3, 1,   // X * {I,X,Z,Y}: XZ = -iY, XY = iZ
    0, 1, 0, 3,   // Z * {I,X,Z,Y}: ZX = iY,  ZY = -iX
    0, 3, 1, 0};  // Y * {I,X,Z,Y}: YX = -iZ, YZ = iX

void check_sites(int n) {
  if (n < 1 || n > kMaxSites)
    throw std::invalid_argument("PauliWord: qubit count must be in [1, " +
                                std::to_string(kMaxSites) + "]");
}

std::complex<double> unit_phase(int k) {
  constexpr std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units[((k % 4) + 4) % 4];
}

}  // namespace

PauliWord make_pauli(std::string_view spec) {
  int phase = 0;
  if (!spec.empty() && (spec.front() == '+' || spec.front() == '-')) {
    phase = spec.front() == '+' ? 0 : 2;
    spec.remove_prefix(1);
    if (!spec.empty() && spec.front() == 'i') {
      phase += 1;
      spec.remove_prefix(1);
    }
  }
  if (spec.empty())
    throw std::invalid_argument("make_pauli: empty letter body");
  check_sites(static_cast<int>(spec.size()));

  PauliWord p;
  p.n = static_cast<int>(spec.size());
  p.phase_exp = phase;
  for (int site = 1; site <= p.n; ++site) {
    const std::uint64_t bit = 1ull << (site - 1);
    switch (spec[site - 1]) {
      case 'I': break;
      case 'X': p.x_mask |= bit; break;
      case 'Y': p.x_mask |= bit; p.z_mask |= bit; break;
      case 'Z': p.z_mask |= bit; break;
      default:
        throw std::invalid_argument(std::string("make_pauli: invalid letter '") +
                                    spec[site - 1] + "'");
    }
  }
  return p;
}

PauliWord identity_word(int n) {
  check_sites(n);
  return PauliWord{n, 0, 0, 0};
}

PauliWord single_site(int n, int site, Letter l, int phase_exp) {
  check_sites(n);
  if (site < 1 || site > n)
    throw std::invalid_argument("single_site: site out of range");
  PauliWord p{n, 0, 0, ((phase_exp % 4) + 4) % 4};
  const std::uint64_t bit = 1ull << (site - 1);
  const int code = static_cast<int>(l);
  if (code & 1) p.x_mask |= bit;
  if (code & 2) p.z_mask |= bit;
  return p;
}

PauliWord multiply(const PauliWord& a, const PauliWord& b) {
  if (a.n != b.n)
    throw std::invalid_argument("multiply: qubit counts differ (" +
                                std::to_string(a.n) + " vs " +
                                std::to_string(b.n) + ")");
  int phase = a.phase_exp + b.phase_exp;
  // Only sites where both words act nontrivially can contribute a phase.
  std::uint64_t overlap = (a.x_mask | a.z_mask) & (b.x_mask | b.z_mask);
  while (overlap) {
    const int bit = std::countr_zero(overlap);
    overlap &= overlap - 1;
    const std::uint64_t m = 1ull << bit;
    const int ca = int((a.x_mask & m) != 0) | (int((a.z_mask & m) != 0) << 1);
    const int cb = int((b.x_mask & m) != 0) | (int((b.z_mask & m) != 0) << 1);
    phase += kProductPhase[ca * 4 + cb];
  }
  return PauliWord{a.n, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask, phase & 3};
}

PauliWord inverse(const PauliWord& p) {
  return PauliWord{p.n, p.x_mask, p.z_mask, (4 - p.phase_exp) & 3};
}

bool commutes(const PauliWord& a, const PauliWord& b) {
  if (a.n != b.n)
    throw std::invalid_argument("commutes: qubit counts differ");
  const int anti = std::popcount(a.x_mask & b.z_mask) +
                   std::popcount(a.z_mask & b.x_mask);
  return (anti & 1) == 0;
}

std::string letters(const PauliWord& p) {
  std::string s(static_cast<size_t>(p.n), 'I');
  for (int site = 1; site <= p.n; ++site) s[site - 1] = letter_char(p.letter(site));
  return s;
}

std::string to_string(const PauliWord& p) {
  constexpr const char* prefix[4] = {"+", "+i", "-", "-i"};
  return prefix[p.phase_exp & 3] + letters(p);
}

PauliWord reverse_sites(const PauliWord& p) {
  PauliWord q{p.n, 0, 0, p.phase_exp};
  for (int site = 1; site <= p.n; ++site) {
    const std::uint64_t bit = 1ull << (site - 1);
    const std::uint64_t rev = 1ull << (p.n - site);
    if (p.x_mask & bit) q.x_mask |= rev;
    if (p.z_mask & bit) q.z_mask |= rev;
  }
  return q;
}

PauliWord segment_word(const PauliWord& p, int first, int last) {
  if (first < 1 || last > p.n || first > last)
    throw std::invalid_argument("segment_word: bad site range");
  const std::uint64_t inside =
      (last - first + 1 == kMaxSites)
          ? ~0ull
          : ((1ull << (last - first + 1)) - 1) << (first - 1);
  if (((p.x_mask | p.z_mask) & ~inside) != 0)
    throw std::invalid_argument("segment_word: support outside segment");
  PauliWord q{last - first + 1, (p.x_mask & inside) >> (first - 1),
              (p.z_mask & inside) >> (first - 1), p.phase_exp};
  return q;
}

std::string site_notation(const PauliWord& p, int first, int last) {
  if (!p.hermitian())
    throw std::domain_error("site_notation: word is not Hermitian");
  std::string s = p.sign() < 0 ? "-" : "";
  for (int site = first; site <= last; ++site) {
    s += letter_char(p.letter(site));
    s += std::to_string(site);
  }
  return s;
}

Eigen::MatrixXcd to_matrix(const PauliWord& p, int dense_limit) {
  if (p.n > dense_limit)
    throw std::length_error("to_matrix: " + std::to_string(p.n) +
                            " qubits exceeds dense limit " +
                            std::to_string(dense_limit));
  const std::complex<double> i1(0, 1);
  Eigen::Matrix2cd site[4];
  site[0] << 1, 0, 0, 1;          // I
  site[1] << 0, 1, 1, 0;          // X
  site[2] << 1, 0, 0, -1;         // Z
  site[3] << 0, -i1, i1, 0;       // Y

  Eigen::MatrixXcd m = site[static_cast<int>(p.letter(1))];
  for (int a = 2; a <= p.n; ++a)
    m = Eigen::kroneckerProduct(m, site[static_cast<int>(p.letter(a))]).eval();
  return unit_phase(p.phase_exp) * m;
}

PauliWord resolve(const StabilizerProduct& sp,
                  const std::vector<PauliWord>& generators) {
  const int n = static_cast<int>(generators.size());
  if (sp.n != n)
    throw std::invalid_argument("resolve: generator count does not match n");
  if (n < 1) throw std::invalid_argument("resolve: no generators");
  if (n < kMaxSites && (sp.subset >> n) != 0)
    throw std::invalid_argument("resolve: generator index out of range");
  PauliWord acc = identity_word(generators.front().n);
  for (int i = 0; i < n; ++i)
    if (sp.subset & (1ull << i)) acc = multiply(acc, generators[i]);
  return acc;
}

}  // namespace clusterghz
