#include "qsrg/qsrg_params.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qsrg {

int common_neighbors(const BitGraph& g, int u, int v) { return g.common_neighbors(u, v); }

QsrgParams qsrg_parameters(const BitGraph& g) {
  const int n = g.vertex_count();
  QsrgParams p;
  p.vertex_count = n;
  p.degree = n > 0 ? g.degree(0) : 0;
  for (int u = 1; u < n; ++u)
    if (g.degree(u) != p.degree) throw NotRegular("vertex " + std::to_string(u));

  bool have_a = false;
  std::set<int> cs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int c = g.common_neighbors(u, v);
      if (g.adjacent(u, v)) {
        if (!have_a) {
          p.a = c;
          have_a = true;
        } else if (c != p.a) {
          throw NotQsrgError(u, v);
        }
      } else {
        cs.insert(c);
        p.witnesses.emplace(c, std::make_pair(u, v));
      }
    }
  p.c_set.assign(cs.begin(), cs.end());
  p.grade = static_cast<int>(p.c_set.size());
  p.degenerate = p.c_set.empty();
  return p;
}

int predicted_a(int n, int k) { return n - 2 * k + 2; }

std::vector<int> predicted_c_set(int n, int k, int ell, bool h_normal) {
  std::set<int> cs;
  if (ell == 2) {
    cs = {0, 2, n - k};
  } else if (h_normal) {
    if (k == 2)
      cs = {2, 6, n - k};
    else
      cs = {0, 2, 6, n - k};
  } else {
    if (k == 2)
      cs = {2, 4, 6, n - k};
    else
      cs = {0, 2, 4, 6, n - k};
  }
  return {cs.begin(), cs.end()};
}

std::string qsrg_report_json(const QsrgParams& p, const std::vector<int>& predicted) {
  nlohmann::json j;
  j["n"] = p.vertex_count;
  j["degree"] = p.degree;
  j["a"] = p.a;
  j["c_set"] = p.c_set;
  j["grade"] = p.grade;
  j["matches_prediction"] = p.c_set == predicted;
  nlohmann::json w;
  for (const auto& [c, pair] : p.witnesses)
    w[std::to_string(c)] = nlohmann::json::array({pair.first, pair.second});
  j["witnesses"] = w;
  return j.dump();
}

}  // namespace qsrg
