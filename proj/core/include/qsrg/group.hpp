#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsrg/error.hpp"

namespace qsrg {

/// Element of a group, identified by its row/column index in the
/// multiplication table. Labels are cosmetic only.
using Element = int;
using ElementSet = std::vector<Element>;  // always sorted, no duplicates

/// A finite group given by its full multiplication table.
/// table[i][j] is the index of g_i * g_j. Immutable after construction.
class FiniteGroup {
 public:
  /// Validates the table: identity, inverses, Latin-square rows/columns,
  /// associativity over all triples. Throws NotAGroup otherwise.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table,
                                std::vector<std::string> labels = {});

  int order() const { return n_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverses_[a]; }
  const std::vector<std::vector<Element>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_abelian() const;
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }

  /// Order of the cyclic subgroup generated by g.
  int element_order(Element g) const;

  std::string label(Element g) const;

 private:
  FiniteGroup() = default;
  int n_ = 0;
  Element identity_ = 0;
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> labels_;
};

/// A subgroup of a parent group, stored as a sorted element set with
/// cached order, index and normality.
struct SubgroupData {
  const FiniteGroup* parent = nullptr;
  ElementSet elements;
  int k = 0;    // |H|
  int ell = 0;  // [G:H]
  bool is_normal = false;

  bool contains(Element g) const;
};

ElementSet set_complement(const FiniteGroup& g, const ElementSet& s);
bool set_contains(const ElementSet& s, Element g);

/// Smallest subgroup containing the generators. Empty generator set gives
/// the trivial subgroup.
SubgroupData subgroup_generated(const FiniteGroup& g, const ElementSet& generators);

/// Every subgroup of G exactly once, sorted by (order, elements).
/// Closure of cyclic subgroups under pairwise joins.
std::vector<SubgroupData> all_subgroups(const FiniteGroup& g, int max_order = 24);

/// gSg^-1 == S for all g.
bool is_normal_set(const FiniteGroup& g, const ElementSet& s);

/// Generators of the cyclic subgroup <g>.
ElementSet atom(const FiniteGroup& g, Element x);

/// True iff S is a union of atoms.
bool is_eulerian(const FiniteGroup& g, const ElementSet& s);

/// G x G with componentwise multiplication; index(a,b) = a*n + b.
FiniteGroup direct_square(const FiniteGroup& g, int max_order = 16);

/// G1 x G2, index(a,b) = a*|G2| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Quotient by a normal subgroup, on minimal coset representatives.
FiniteGroup quotient(const FiniteGroup& g, const SubgroupData& h);

/// Cayley-table text format:
///   line 1: n
///   next n lines: n whitespace-separated 0-based indices
///   optional: "labels: a b c ..."
FiniteGroup read_cayley_table(std::istream& in);
FiniteGroup read_cayley_table_file(const std::string& path);
void write_cayley_table(std::ostream& out, const FiniteGroup& g);

}  // namespace qsrg
