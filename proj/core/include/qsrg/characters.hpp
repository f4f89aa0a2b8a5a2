#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qsrg/group.hpp"
#include "qsrg/spectrum.hpp"

namespace qsrg {

/// Isomorphism G -> Z_{m1} x ... x Z_{mr} for abelian G, with
/// m1 >= m2 >= ... and m_{i+1} | m_i (so m1 is the exponent of G).
struct AbelianDecomposition {
  std::vector<int> cyclic_orders;
  std::vector<std::vector<int>> coordinate_map;  // per element, residues
  int exponent() const { return cyclic_orders.empty() ? 1 : cyclic_orders.front(); }
};

AbelianDecomposition decompose_abelian(const FiniteGroup& g);

/// Element of Z[zeta_M], stored as integer coefficients on powers of
/// zeta_M and compared in the canonical basis (remainder mod the M-th
/// cyclotomic polynomial). Zero and integer detection are exact.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(int order_of_unity);
  void add_root(long long exponent);  // += zeta_M^exponent
  void add(const CyclotomicSum& other);
  void negate();

  int order() const { return m_; }
  std::vector<long long> canonical() const;  // length phi(M), unique
  bool is_zero() const;
  std::optional<long long> as_integer() const;
  std::complex<double> approx() const;

  bool operator==(const CyclotomicSum& other) const;

 private:
  int m_;
  std::vector<long long> coeffs_;  // on zeta_M^0 .. zeta_M^{M-1}
};

/// Cyclotomic polynomial Phi_M as integer coefficients, low degree first.
std::vector<long long> cyclotomic_polynomial(int m);

/// Degree-1 character of an abelian group, chi(g) = zeta_M^{e(g)} where
/// e(g) = sum_i (M/m_i) * a_i * x_i mod M.
struct AbelianCharacter {
  std::vector<int> frequency;  // a_i, 0 <= a_i < m_i
};

class CharacterTable {
 public:
  /// All |G| characters of an abelian group, trivial character first,
  /// then in lexicographic frequency order. Throws NotAbelian.
  explicit CharacterTable(const FiniteGroup& g);

  int size() const { return static_cast<int>(chars_.size()); }
  const AbelianCharacter& character(int i) const { return chars_[i]; }
  const AbelianDecomposition& decomposition() const { return dec_; }
  int root_order() const { return dec_.exponent(); }

  /// e(g) in [0, M).
  long long exponent_of(const AbelianCharacter& chi, Element g) const;
  std::complex<double> value(const AbelianCharacter& chi, Element g) const;

  CyclotomicSum char_sum(const AbelianCharacter& chi, const ElementSet& s) const;
  bool trivial_on(const AbelianCharacter& chi, const ElementSet& s) const;

  /// <chi_i, chi_j>, exact: 1 if i == j else 0 for a valid table.
  long long inner_product_numerator(int i, int j) const;  // n * <chi_i, chi_j>

 private:
  int n_;
  AbelianDecomposition dec_;
  std::vector<AbelianCharacter> chars_;
};

std::vector<AbelianCharacter> character_table(const FiniteGroup& g);

/// Eigenvalues of Cay(G,S) for abelian G: the multiset {chi(S)}.
/// S must be inverse-closed and identity-free (all values real).
Spectrum abelian_cayley_spectrum(const FiniteGroup& g, const ElementSet& s);

/// Number of ordered pairs of characters, both nontrivial on H, whose
/// product is trivial on H. Equals ell*(n-ell) for every proper
/// nontrivial H of an abelian group.
long long fixed_dim_sum_check(const FiniteGroup& g, const SubgroupData& h);

}  // namespace qsrg
