#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace clusterghz {

inline constexpr int kMaxSites = 64;
inline constexpr int kDefaultDenseLimit = 8;
inline constexpr int kDefaultStatevectorLimit = 14;
inline constexpr int kDefaultLhvLimit = 7;

/// Single-site Pauli letter, encoded as (x bit) | (z bit << 1).
enum class Letter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline char letter_char(Letter l) {
  constexpr char c[4] = {'I', 'X', 'Z', 'Y'};
  return c[static_cast<int>(l)];
}

/// A signed n-qubit Pauli operator in symplectic form.
///
/// The operator is i^phase_exp times the tensor product of the site letters,
/// where the letter at site a decodes from (x, z) bits as (0,0) -> I,
/// (1,0) -> X, (1,1) -> Y, (0,1) -> Z. Site 1 is the leftmost letter and owns
/// bit 0 of both masks. The phase exponent is an exact integer mod 4, so every
/// product of words is computed without floating error.
struct PauliWord {
  int n = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  int phase_exp = 0;  ///< exponent of i, kept reduced mod 4

  Letter letter(int site) const {
    const std::uint64_t bit = 1ull << (site - 1);
    const int code =
        int((x_mask & bit) != 0) | (int((z_mask & bit) != 0) << 1);
    return static_cast<Letter>(code);
  }

  /// An observable: overall scalar is +1 or -1, never +-i.
  bool hermitian() const { return (phase_exp & 1) == 0; }

  /// +1 or -1; throws for non-Hermitian words.
  int sign() const {
    if (!hermitian())
      throw std::domain_error("PauliWord::sign: word is not Hermitian");
    return phase_exp == 0 ? 1 : -1;
  }

  bool is_identity_letters() const { return x_mask == 0 && z_mask == 0; }

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
};

/// Parses the string codec `[+|-|+i|-i]?[IXYZ]{n}` (site 1 leftmost).
/// Throws std::invalid_argument for an empty body or a bad character.
PauliWord make_pauli(std::string_view spec);

PauliWord identity_word(int n);

/// Word with a single (possibly signed) letter at `site`, identity elsewhere.
PauliWord single_site(int n, int site, Letter l, int phase_exp = 0);

/// Exact group product. Per-site rule: XZ = -iY and cyclic variants.
PauliWord multiply(const PauliWord& a, const PauliWord& b);

inline PauliWord operator*(const PauliWord& a, const PauliWord& b) {
  return multiply(a, b);
}

/// Same masks, conjugated phase; multiply(p, inverse(p)) == +I.
PauliWord inverse(const PauliWord& p);

/// The word scaled by i^k.
inline PauliWord with_phase_shift(const PauliWord& p, int k) {
  PauliWord q = p;
  q.phase_exp = ((p.phase_exp + k) % 4 + 4) % 4;
  return q;
}

/// Sign-stripped copy (phase forced to 0). Requires a Hermitian word.
inline PauliWord unsigned_word(const PauliWord& p) {
  if (!p.hermitian())
    throw std::domain_error("unsigned_word: word is not Hermitian");
  PauliWord q = p;
  q.phase_exp = 0;
  return q;
}

/// True iff pq == qp, from the parity of pairwise-anticommuting sites.
bool commutes(const PauliWord& a, const PauliWord& b);

/// Letter body only, no sign prefix.
std::string letters(const PauliWord& p);

/// Normalized codec form with an explicit sign prefix, e.g. "+XZI", "-i YY"
/// without the space. make_pauli(to_string(p)) == p.
std::string to_string(const PauliWord& p);

/// Site order reversed: site a <-> site n+1-a. Phase unchanged.
PauliWord reverse_sites(const PauliWord& p);

/// The word restricted to sites [first, last], which must carry its entire
/// support. The result has last-first+1 sites and keeps the phase.
PauliWord segment_word(const PauliWord& p, int first, int last);

/// Subscripted rendering over a site range, e.g. "-X3Y4" or "Z1X2I3".
std::string site_notation(const PauliWord& p, int first, int last);

/// Dense 2^n x 2^n matrix: Kronecker product of the single-site matrices
/// times i^phase_exp. Entries are exact elements of {0, +-1, +-i}.
Eigen::MatrixXcd to_matrix(const PauliWord& p,
                           int dense_limit = kDefaultDenseLimit);

/// A formal product of stabilizer generators indexed by a subset of {1..n};
/// bit i-1 of `subset` selects generator i.
struct StabilizerProduct {
  int n = 0;
  std::uint64_t subset = 0;
};

/// Product of the selected generators in ascending index order; the empty
/// subset resolves to +I.
PauliWord resolve(const StabilizerProduct& sp,
                  const std::vector<PauliWord>& generators);

}  // namespace clusterghz
