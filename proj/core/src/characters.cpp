#include "qsrg/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsrg {

namespace {

std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
  // den monic-leading; division is exact for cyclotomic factors.
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<long long> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    const long long c = num[i] / den[dd];
    q[i - dd] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<long long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
  return num;
}

CyclotomicSum::CyclotomicSum(int order_of_unity)
    : m_(order_of_unity), coeffs_(order_of_unity, 0) {}

void CyclotomicSum::add_root(long long exponent) {
  long long e = exponent % m_;
  if (e < 0) e += m_;
  ++coeffs_[e];
}

void CyclotomicSum::add(const CyclotomicSum& other) {
  for (int i = 0; i < m_; ++i) coeffs_[i] += other.coeffs_[i];
}

void CyclotomicSum::negate() {
  for (long long& c : coeffs_) c = -c;
}

std::vector<long long> CyclotomicSum::canonical() const {
  const std::vector<long long> phi = cyclotomic_polynomial(m_);
  const int d = static_cast<int>(phi.size()) - 1;  // phi(m), monic
  std::vector<long long> a = coeffs_;
  for (int i = m_ - 1; i >= d; --i) {
    const long long t = a[i];
    if (t == 0) continue;
    for (int j = 0; j <= d; ++j) a[i - d + j] -= t * phi[j];
  }
  a.resize(d);
  return a;
}

bool CyclotomicSum::is_zero() const {
  for (long long c : canonical())
    if (c != 0) return false;
  return true;
}

std::optional<long long> CyclotomicSum::as_integer() const {
  const std::vector<long long> c = canonical();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  return c[0];
}

std::complex<double> CyclotomicSum::approx() const {
  std::complex<double> sum = 0;
  for (int i = 0; i < m_; ++i) {
    if (coeffs_[i] == 0) continue;
    const double theta = 2.0 * std::numbers::pi * i / m_;
    sum += static_cast<double>(coeffs_[i]) * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return sum;
}

bool CyclotomicSum::operator==(const CyclotomicSum& other) const {
  return m_ == other.m_ && canonical() == other.canonical();
}

namespace {

struct DecompositionPiece {
  std::vector<int> orders;
  // element index -> coordinates (only defined on the subgroup handled)
  std::vector<std::vector<int>> coords;
};

DecompositionPiece decompose_subset(const FiniteGroup& g, const ElementSet& s) {
  DecompositionPiece piece;
  piece.coords.assign(g.order(), {});
  if (s.size() == 1) return piece;

  Element gen = s.front();
  int max_order = 0;
  for (Element e : s) {
    const int o = g.element_order(e);
    if (o > max_order) {
      max_order = o;
      gen = e;
    }
  }
  const ElementSet cyc = subgroup_generated(g, {gen}).elements;

  // A maximal-order cyclic subgroup is a direct summand. Grow a subgroup
  // K <= S meeting <gen> trivially until no single element of S can be
  // added; since gen has maximal order in S, such a maximal K is a full
  // complement (the standard basis-theorem exchange argument).
  ElementSet comp{g.identity()};
  for (bool grew = true; grew;) {
    grew = false;
    for (Element x : s) {
      if (set_contains(comp, x)) continue;
      ElementSet gens = comp;
      gens.push_back(x);
      std::sort(gens.begin(), gens.end());
      const ElementSet closed = subgroup_generated(g, gens).elements;
      if (!std::includes(s.begin(), s.end(), closed.begin(), closed.end())) continue;
      bool trivial_meet = true;
      for (Element e : closed)
        if (e != g.identity() && set_contains(cyc, e)) {
          trivial_meet = false;
          break;
        }
      if (trivial_meet) {
        comp = closed;
        grew = true;
      }
    }
  }
  if (comp.size() * cyc.size() != s.size()) throw NotAbelian("no cyclic complement found");
  const ElementSet* complement = &comp;

  DecompositionPiece rest = decompose_subset(g, *complement);
  piece.orders.push_back(max_order);
  piece.orders.insert(piece.orders.end(), rest.orders.begin(), rest.orders.end());

  // x = gen^a * y with y in the complement, uniquely.
  for (Element x : s) {
    Element y = x;
    for (int a = 0; a < max_order; ++a) {
      if (set_contains(*complement, y)) {
        piece.coords[x].push_back(a);
        const auto& tail = rest.coords[y];
        piece.coords[x].insert(piece.coords[x].end(), tail.begin(), tail.end());
        break;
      }
      y = g.mul(y, g.inv(gen));
    }
  }
  return piece;
}

}  // namespace

AbelianDecomposition decompose_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) throw NotAbelian("group is not abelian");
  ElementSet all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  DecompositionPiece piece = decompose_subset(g, all);
  AbelianDecomposition dec;
  dec.cyclic_orders = std::move(piece.orders);
  dec.coordinate_map = std::move(piece.coords);
  return dec;
}

CharacterTable::CharacterTable(const FiniteGroup& g)
    : n_(g.order()), dec_(decompose_abelian(g)) {
  // Mixed-radix counting gives lexicographic order, trivial character first.
  const int r = static_cast<int>(dec_.cyclic_orders.size());
  std::vector<int> freq(r, 0);
  chars_.reserve(n_);
  while (true) {
    chars_.push_back(AbelianCharacter{freq});
    int i = r - 1;
    while (i >= 0) {
      if (++freq[i] < dec_.cyclic_orders[i]) break;
      freq[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  if (static_cast<int>(chars_.size()) != n_) throw Error("character count mismatch");
}

long long CharacterTable::exponent_of(const AbelianCharacter& chi, Element g) const {
  const int m = dec_.exponent();
  long long e = 0;
  const auto& x = dec_.coordinate_map[g];
  for (std::size_t i = 0; i < chi.frequency.size(); ++i)
    e += static_cast<long long>(m / dec_.cyclic_orders[i]) * chi.frequency[i] * x[i];
  return e % m;
}

std::complex<double> CharacterTable::value(const AbelianCharacter& chi, Element g) const {
  const double theta = 2.0 * std::numbers::pi * exponent_of(chi, g) / dec_.exponent();
  return {std::cos(theta), std::sin(theta)};
}

CyclotomicSum CharacterTable::char_sum(const AbelianCharacter& chi, const ElementSet& s) const {
  CyclotomicSum sum(dec_.exponent());
  for (Element g : s) sum.add_root(exponent_of(chi, g));
  return sum;
}

bool CharacterTable::trivial_on(const AbelianCharacter& chi, const ElementSet& s) const {
  for (Element g : s)
    if (exponent_of(chi, g) != 0) return false;
  return true;
}

long long CharacterTable::inner_product_numerator(int i, int j) const {
  CyclotomicSum sum(dec_.exponent());
  for (Element g = 0; g < n_; ++g)
    sum.add_root(exponent_of(chars_[i], g) - exponent_of(chars_[j], g));
  const auto v = sum.as_integer();
  if (!v) throw Error("character inner product is not an integer");
  return *v;
}

std::vector<AbelianCharacter> character_table(const FiniteGroup& g) {
  CharacterTable t(g);
  std::vector<AbelianCharacter> out;
  out.reserve(t.size());
  for (int i = 0; i < t.size(); ++i) out.push_back(t.character(i));
  return out;
}

Spectrum abelian_cayley_spectrum(const FiniteGroup& g, const ElementSet& s) {
  for (Element e : s) {
    if (e == g.identity()) throw BadConnectionSet("identity in connection set");
    if (!set_contains(s, g.inv(e)))
      throw BadConnectionSet("connection set is not inverse-closed");
  }
  CharacterTable table(g);

  // chi(S) is real for inverse-closed S; equal canonical cyclotomic forms
  // are exactly equal values.
  std::vector<std::pair<std::vector<long long>, CyclotomicSum>> groups;
  std::vector<int> mults;
  for (int i = 0; i < table.size(); ++i) {
    CyclotomicSum v = table.char_sum(table.character(i), s);
    std::vector<long long> key = v.canonical();
    bool merged = false;
    for (std::size_t k = 0; k < groups.size(); ++k)
      if (groups[k].first == key) {
        ++mults[k];
        merged = true;
        break;
      }
    if (!merged) {
      groups.emplace_back(std::move(key), std::move(v));
      mults.push_back(1);
    }
  }

  Spectrum spectrum;
  spectrum.dimension = g.order();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    SpectrumEntry e;
    e.mult = mults[k];
    if (auto iv = groups[k].second.as_integer()) {
      e.exact = true;
      e.ivalue = *iv;
    } else {
      const std::complex<double> v = groups[k].second.approx();
      if (std::abs(v.imag()) > 1e-9) throw Error("non-real eigenvalue from character sum");
      e.exact = false;
      e.avalue = v.real();
    }
    spectrum.entries.push_back(e);
  }
  spectrum.canonicalize();
  return spectrum;
}

long long fixed_dim_sum_check(const FiniteGroup& g, const SubgroupData& h) {
  CharacterTable table(g);
  const int n = g.order();
  std::vector<bool> trivial(n);
  for (int i = 0; i < n; ++i) trivial[i] = table.trivial_on(table.character(i), h.elements);

  const int m = table.root_order();
  long long count = 0;
  for (int i = 0; i < n; ++i) {
    if (trivial[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (trivial[j]) continue;
      bool product_trivial = true;
      for (Element e : h.elements) {
        if ((table.exponent_of(table.character(i), e) +
             table.exponent_of(table.character(j), e)) %
                m !=
            0) {
          product_trivial = false;
          break;
        }
      }
      if (product_trivial) ++count;
    }
  }
  return count;
}

}  // namespace qsrg
