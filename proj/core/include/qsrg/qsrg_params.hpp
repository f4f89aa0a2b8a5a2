#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qsrg/cayley.hpp"
#include "qsrg/error.hpp"

namespace qsrg {

struct NotQsrgError : Error {
  NotQsrgError(int u, int v)
      : Error("not quasi-strongly regular: adjacent pair (" + std::to_string(u) + "," +
              std::to_string(v) + ") breaks the common-neighbor constant"),
        witness{u, v} {}
  std::pair<int, int> witness;
};

/// Measured QSRG parameters of a regular graph. degenerate marks graphs
/// with no non-adjacent pairs (complete graphs), where the c-set is empty.
struct QsrgParams {
  int vertex_count = 0;
  int degree = 0;
  int a = 0;  // common neighbors of every adjacent pair
  std::vector<int> c_set;
  int grade = 0;
  bool degenerate = false;
  std::map<int, std::pair<int, int>> witnesses;  // c value -> one non-adjacent pair
};

int common_neighbors(const BitGraph& g, int u, int v);

/// Full scan of all vertex pairs. Throws NotRegular / NotQsrgError.
QsrgParams qsrg_parameters(const BitGraph& g);

/// a = n - 2k + 2. Values <= 0 occur only outside the theorem's scope.
int predicted_a(int n, int k);

/// Case-selected c-set with duplicates merged:
///   ell = 2:                    {0, 2, n-k}
///   ell > 2, normal,   k = 2:   {2, 6, n-k}
///   ell > 2, normal,   k > 2:   {0, 2, 6, n-k}
///   ell > 2, non-normal, k = 2: {2, 4, 6, n-k}
///   ell > 2, non-normal, k > 2: {0, 2, 4, 6, n-k}
std::vector<int> predicted_c_set(int n, int k, int ell, bool h_normal);

std::string qsrg_report_json(const QsrgParams& p, const std::vector<int>& predicted);

}  // namespace qsrg
