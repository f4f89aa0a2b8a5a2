#include "qsrg/group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace qsrg {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table,
                                    std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    for (Element e : row)
      if (e < 0 || e >= n) throw NotAGroup("table entry out of range");
  }

  // Latin-square property.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table[i][j]])
        throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
      seen_row[table[i][j]] = true;
      if (seen_col[table[j][i]])
        throw NotAGroup("column " + std::to_string(i) + " is not a permutation");
      seen_col[table[j][i]] = true;
    }
  }

  // Two-sided identity.
  Element identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = table[e][j] == j && table[j][e] == j;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw NotAGroup("no identity element");

  std::vector<Element> inverses(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (table[i][j] == identity && table[j][i] == identity) {
        inverses[i] = j;
        break;
      }
    if (inverses[i] < 0) throw NotAGroup("element " + std::to_string(i) + " has no inverse");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw NotAGroup("associativity fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");

  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw NotAGroup("label count does not match order");

  FiniteGroup g;
  g.n_ = n;
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.inverses_ = std::move(inverses);
  g.labels_ = std::move(labels);
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (table_[i][j] != table_[j][i]) return false;
  return true;
}

int FiniteGroup::element_order(Element g) const {
  int ord = 1;
  Element x = g;
  while (x != identity_) {
    x = mul(x, g);
    ++ord;
  }
  return ord;
}

std::string FiniteGroup::label(Element g) const {
  if (!labels_.empty()) return labels_[g];
  return std::to_string(g);
}

bool SubgroupData::contains(Element g) const { return set_contains(elements, g); }

bool set_contains(const ElementSet& s, Element g) {
  return std::binary_search(s.begin(), s.end(), g);
}

ElementSet set_complement(const FiniteGroup& g, const ElementSet& s) {
  ElementSet out;
  out.reserve(g.order() - s.size());
  for (int i = 0; i < g.order(); ++i)
    if (!set_contains(s, i)) out.push_back(i);
  return out;
}

namespace {

ElementSet close_under_product(const FiniteGroup& g, ElementSet seed) {
  std::set<Element> closure(seed.begin(), seed.end());
  closure.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> current(closure.begin(), closure.end());
    for (Element a : current)
      for (Element b : current)
        if (closure.insert(g.mul(a, b)).second) grew = true;
  }
  return {closure.begin(), closure.end()};
}

SubgroupData make_subgroup(const FiniteGroup& g, ElementSet elements) {
  SubgroupData h;
  h.elements = std::move(elements);
  h.k = static_cast<int>(h.elements.size());
  h.ell = g.order() / h.k;
  h.is_normal = is_normal_set(g, h.elements);
  return h;
}

}  // namespace

SubgroupData subgroup_generated(const FiniteGroup& g, const ElementSet& generators) {
  for (Element e : generators)
    if (e < 0 || e >= g.order()) throw Error("generator index out of range");
  return make_subgroup(g, close_under_product(g, generators));
}

std::vector<SubgroupData> all_subgroups(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order)
    throw OrderBoundExceeded("subgroup enumeration capped at order " +
                             std::to_string(max_order));

  std::set<ElementSet> found;
  // Cyclic subgroups first, then close under pairwise joins to fixpoint.
  for (int e = 0; e < g.order(); ++e)
    found.insert(close_under_product(g, {e}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSet> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        ElementSet join;
        std::set_union(current[i].begin(), current[i].end(), current[j].begin(),
                       current[j].end(), std::back_inserter(join));
        if (found.insert(close_under_product(g, join)).second) grew = true;
      }
  }

  std::vector<SubgroupData> out;
  out.reserve(found.size());
  for (const auto& elems : found) out.push_back(make_subgroup(g, elems));
  std::sort(out.begin(), out.end(), [](const SubgroupData& a, const SubgroupData& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.elements < b.elements;
  });
  return out;
}

bool is_normal_set(const FiniteGroup& g, const ElementSet& s) {
  for (int x = 0; x < g.order(); ++x)
    for (Element e : s)
      if (!set_contains(s, g.conj(x, e))) return false;
  return true;
}

ElementSet atom(const FiniteGroup& g, Element x) {
  ElementSet cyc = subgroup_generated(g, {x}).elements;
  ElementSet out;
  for (Element y : cyc)
    if (subgroup_generated(g, {y}).elements == cyc) out.push_back(y);
  return out;
}

bool is_eulerian(const FiniteGroup& g, const ElementSet& s) {
  for (Element e : s)
    for (Element a : atom(g, e))
      if (!set_contains(s, a)) return false;
  return true;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int a1 = i / nb, b1 = i % nb, a2 = j / nb, b2 = j % nb;
      table[i][j] = a.mul(a1, a2) * nb + b.mul(b1, b2);
    }
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i)
      labels.push_back("(" + a.label(i / nb) + "," + b.label(i % nb) + ")");
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

FiniteGroup direct_square(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order)
    throw OrderBoundExceeded("direct square capped at base order " +
                             std::to_string(max_order));
  return direct_product(g, g);
}

FiniteGroup quotient(const FiniteGroup& g, const SubgroupData& h) {
  if (!h.is_normal) throw NotNormal("quotient by a non-normal subgroup");
  const int n = g.order();

  // Coset representative = minimal element index of the coset gH.
  std::vector<Element> rep(n);
  std::vector<Element> reps;
  for (int x = 0; x < n; ++x) {
    Element m = x;
    for (Element e : h.elements) m = std::min(m, g.mul(x, e));
    rep[x] = m;
    if (m == x) reps.push_back(x);
  }

  const int q = static_cast<int>(reps.size());
  std::vector<int> index_of(n, -1);
  for (int i = 0; i < q; ++i) index_of[reps[i]] = i;

  std::vector<std::vector<Element>> table(q, std::vector<Element>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i][j] = index_of[rep[g.mul(reps[i], reps[j])]];
  return FiniteGroup::from_table(std::move(table));
}

FiniteGroup read_cayley_table(std::istream& in) {
  std::string line;
  int n = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (ls >> n) break;
  }
  if (n <= 0) throw ParseError("missing or invalid order line", 0);

  std::vector<std::vector<Element>> table;
  table.reserve(n);
  while (static_cast<int>(table.size()) < n && std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Element> row;
    long long v;
    while (ls >> v) {
      if (v < 0 || v >= n)
        throw ParseError("table index out of range: " + std::to_string(v), 0);
      row.push_back(static_cast<Element>(v));
    }
    if (row.empty()) continue;
    if (static_cast<int>(row.size()) != n)
      throw ParseError("expected " + std::to_string(n) + " entries per row", 0);
    table.push_back(std::move(row));
  }
  if (static_cast<int>(table.size()) != n) throw ParseError("truncated table", 0);

  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "labels:") {
      std::string tok;
      while (ls >> tok) labels.push_back(tok);
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

FiniteGroup read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open Cayley-table file: " + path);
  return read_cayley_table(in);
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) out << (j ? " " : "") << g.mul(i, j);
    out << "\n";
  }
  if (!g.labels().empty()) {
    out << "labels:";
    for (const auto& l : g.labels()) out << " " << l;
    out << "\n";
  }
}

}  // namespace qsrg
