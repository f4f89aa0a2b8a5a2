#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qsrg/group.hpp"

namespace qsrg {

enum class FamilyKind { Cyclic, Dihedral, Symmetric, DirectProduct, TableFile };

/// Recipe for a built-in group. Direct products hold operand specs.
struct GroupFamilySpec {
  FamilyKind kind;
  int parameter = 0;                     // cyclic order / dihedral m / symmetric degree
  std::vector<GroupFamilySpec> factors;  // direct product operands
  std::string path;                      // table file

  std::string name() const;
};

/// Deterministic element orderings:
///   cyclic:   residues 0..n-1
///   dihedral D_m (order 2m): rotations r^0..r^{m-1}, then reflections s*r^0..
///   symmetric S_m: one-line permutations in lexicographic order
///   product:  index(g1,g2) = index(g1)*|G2| + index(g2)
FiniteGroup build_family(const GroupFamilySpec& spec);

FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int m);   // order 2m
FiniteGroup make_symmetric(int m);  // m <= 6

/// Grammar: Z<n> | D<n> | S<n> | spec x spec (left-assoc) | @<path>
GroupFamilySpec parse_group_spec(const std::string& s);

}  // namespace qsrg
