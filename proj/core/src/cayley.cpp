#include "qsrg/cayley.hpp"

#include <bit>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace qsrg {

BitGraph::BitGraph(int n)
    : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64),
      rows_(n, std::vector<std::uint64_t>(words_, 0)) {}

void BitGraph::add_edge(int u, int v) {
  rows_[u][static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  rows_[v][static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
}

void BitGraph::toggle_edge(int u, int v) {
  rows_[u][static_cast<std::size_t>(v) >> 6] ^= std::uint64_t{1} << (v & 63);
  rows_[v][static_cast<std::size_t>(u) >> 6] ^= std::uint64_t{1} << (u & 63);
}

int BitGraph::degree(int u) const {
  int d = 0;
  for (std::uint64_t w : rows_[u]) d += std::popcount(w);
  return d;
}

int BitGraph::common_neighbors(int u, int v) const {
  int c = 0;
  for (std::size_t i = 0; i < words_; ++i) c += std::popcount(rows_[u][i] & rows_[v][i]);
  return c;
}

IntMatrix BitGraph::adjacency_matrix() const {
  IntMatrix m(n_, std::vector<long long>(n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (adjacent(i, j)) m[i][j] = 1;
  return m;
}

namespace {

int pair_index(int a, int b, int n) { return a * n + b; }

void validate_connection_set(const FiniteGroup& group, const ConnectionSet& s) {
  for (Element e : s.elements) {
    if (e < 0 || e >= group.order()) throw BadConnectionSet("element out of range");
    if (e == group.identity()) throw BadConnectionSet("identity in connection set");
    if (!set_contains(s.elements, group.inv(e)))
      throw BadConnectionSet("not inverse-closed: missing inverse of element " +
                             std::to_string(e));
  }
}

}  // namespace

ConnectionSet connection_set_SH(const FiniteGroup& g, const SubgroupData& h) {
  const int n = g.order();
  ConnectionSet s;
  s.provenance = Provenance::S_H;
  if (h.k == n)
    s.flag = SHFlag::FullH;
  else if (h.k == 1)
    s.flag = SHFlag::TrivialH;
  for (int kind = 1; kind <= 3; ++kind) {
    ConnectionSet c = connection_component(g, h, kind);
    s.elements.insert(s.elements.end(), c.elements.begin(), c.elements.end());
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

ConnectionSet connection_component(const FiniteGroup& g, const SubgroupData& h, int kind) {
  const int n = g.order();
  ConnectionSet s;
  s.provenance = kind == 1   ? Provenance::S_H_1
                 : kind == 2 ? Provenance::S_H_2
                             : Provenance::S_H_3;
  if (kind < 1 || kind > 3) throw Error("component kind must be 1, 2 or 3");
  const Element one = g.identity();
  for (Element x = 0; x < n; ++x) {
    if (h.contains(x)) continue;
    if (kind == 1)
      s.elements.push_back(pair_index(x, one, n));
    else if (kind == 2)
      s.elements.push_back(pair_index(one, x, n));
    else
      s.elements.push_back(pair_index(x, x, n));
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

CayleyGraph cayley_graph(const FiniteGroup& group, const ConnectionSet& s) {
  validate_connection_set(group, s);
  const int n = group.order();
  CayleyGraph g;
  g.graph = BitGraph(n);
  g.connection = s;
  g.degree = s.size();
  // u ~ v iff u v^-1 in S; S inverse-closed makes this symmetric.
  for (int u = 0; u < n; ++u)
    for (Element e : s.elements) g.graph.add_edge(u, group.mul(e, u));
  return g;
}

CayleyGraph gamma_H(const FiniteGroup& gsq, const FiniteGroup& g, const SubgroupData& h) {
  return cayley_graph(gsq, connection_set_SH(g, h));
}

CayleyGraph gamma_H_component(const FiniteGroup& gsq, const FiniteGroup& g,
                              const SubgroupData& h, int kind) {
  return cayley_graph(gsq, connection_component(g, h, kind));
}

bool verify_alpha_isomorphism(const FiniteGroup& g, const SubgroupData& h) {
  const int n = g.order();
  FiniteGroup gsq = direct_square(g);
  const CayleyGraph g1 = gamma_H_component(gsq, g, h, 1);
  const CayleyGraph g2 = gamma_H_component(gsq, g, h, 2);
  const CayleyGraph g3 = gamma_H_component(gsq, g, h, 3);

  // In the u v^-1 adjacency convention used here, (x,y) -> (y^-1, x y^-1)
  // carries component 1 onto component 2 and (x,y) -> (y, y x^-1) carries
  // component 2 onto component 3, for arbitrary H:
  //   m12(u) m12(v)^-1 = (y^-1 y', x x'^-1) when y = y'
  //   m23(u) m23(v)^-1 = (y y'^-1, y y'^-1) when x = x'
  std::vector<int> m12(n * n), m23(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      m12[pair_index(x, y, n)] = pair_index(g.inv(y), g.mul(x, g.inv(y)), n);
      m23[pair_index(x, y, n)] = pair_index(y, g.mul(y, g.inv(x)), n);
    }

  for (int u = 0; u < n * n; ++u)
    for (int v = 0; v < n * n; ++v) {
      if (g1.graph.adjacent(u, v) != g2.graph.adjacent(m12[u], m12[v])) return false;
      if (g2.graph.adjacent(u, v) != g3.graph.adjacent(m23[u], m23[v])) return false;
    }
  return true;
}

BitGraph cartesian_product(const BitGraph& a, const BitGraph& b) {
  const int na = a.vertex_count(), nb = b.vertex_count();
  BitGraph out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      const int u = i * nb + j;
      for (int j2 = 0; j2 < nb; ++j2)
        if (b.adjacent(j, j2) && u < i * nb + j2) out.add_edge(u, i * nb + j2);
      for (int i2 = 0; i2 < na; ++i2)
        if (a.adjacent(i, i2) && u < i2 * nb + j) out.add_edge(u, i2 * nb + j);
    }
  return out;
}

bool is_connected(const BitGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && g.adjacent(u, v)) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
  }
  return count == n;
}

std::string export_adjacency(const CayleyGraph& g, const std::string& group_name,
                             const std::string& subgroup_desc) {
  nlohmann::json header;
  header["vertices"] = g.vertex_count();
  header["degree"] = g.degree;
  header["group"] = group_name;
  header["subgroup"] = subgroup_desc;
  std::ostringstream out;
  out << header.dump() << "\n";
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = 0; v < g.vertex_count(); ++v) out << (g.graph.adjacent(u, v) ? '1' : '0');
    out << "\n";
  }
  return out.str();
}

}  // namespace qsrg
