#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsrg/exact_rank.hpp"
#include "qsrg/group.hpp"

namespace qsrg {

enum class Provenance { S_H, S_H_1, S_H_2, S_H_3, Custom };

/// Special cases of Definition of Gamma_H(G) that are constructible but
/// excluded from the QSRG theorems.
enum class SHFlag {
  None,
  TrivialH,  // H = {1}: strongly regular case
  FullH,     // H = G: edgeless graph
};

/// Inverse-closed, identity-free subset of a group, as element indices.
struct ConnectionSet {
  ElementSet elements;
  Provenance provenance = Provenance::Custom;
  SHFlag flag = SHFlag::None;

  int size() const { return static_cast<int>(elements.size()); }
};

/// Dense symmetric 0/1 adjacency with 64-bit packed rows.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(int n);

  int vertex_count() const { return n_; }
  bool adjacent(int u, int v) const {
    return (rows_[u][static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  void toggle_edge(int u, int v);
  int degree(int u) const;
  int common_neighbors(int u, int v) const;
  const std::vector<std::uint64_t>& row(int u) const { return rows_[u]; }

  IntMatrix adjacency_matrix() const;
  bool operator==(const BitGraph& other) const = default;

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Cayley graph with its connection-set provenance. Vertex order is the
/// group element index order, never re-sorted.
struct CayleyGraph {
  BitGraph graph;
  ConnectionSet connection;
  int degree = 0;

  int vertex_count() const { return graph.vertex_count(); }
};

/// S_H = {(g,1),(1,g),(g,g) | g in G\H} as indices in G x G
/// (index(a,b) = a*n + b). |S_H| = 3(n-k).
ConnectionSet connection_set_SH(const FiniteGroup& g, const SubgroupData& h);

/// The Type-1/2/3 component of S_H, each of size n-k.
ConnectionSet connection_component(const FiniteGroup& g, const SubgroupData& h, int kind);

/// Adjacency: u ~ v iff u * v^-1 in S. Throws BadConnectionSet if S
/// contains the identity or is not inverse-closed.
CayleyGraph cayley_graph(const FiniteGroup& group, const ConnectionSet& s);

/// Gamma_H(G) = Cay(G x G, S_H). gsq must be direct_square(g).
CayleyGraph gamma_H(const FiniteGroup& gsq, const FiniteGroup& g, const SubgroupData& h);
CayleyGraph gamma_H_component(const FiniteGroup& gsq, const FiniteGroup& g,
                              const SubgroupData& h, int kind);

/// Exhaustively checks explicit bijections of G x G carrying the edges of
/// the Type-1 component graph onto the Type-2, and Type-2 onto Type-3, so
/// the three component graphs are pairwise isomorphic for every H.
bool verify_alpha_isomorphism(const FiniteGroup& g, const SubgroupData& h);

/// Box product on pairs, vertex order row-major (consistent with
/// direct_square indexing).
BitGraph cartesian_product(const BitGraph& a, const BitGraph& b);

/// BFS reachability from vertex 0.
bool is_connected(const BitGraph& g);

/// One 0/1 line per vertex, preceded by a JSON header line.
std::string export_adjacency(const CayleyGraph& g, const std::string& group_name,
                             const std::string& subgroup_desc);

}  // namespace qsrg
