#pragma once

#include <cstdint>
#include <vector>

namespace qsrg {

/// Dense square integer matrix, row-major.
using IntMatrix = std::vector<std::vector<long long>>;

/// Exact rank over Q by integer-preserving elimination with
/// arbitrary-precision integers and per-row content reduction.
/// No floating arithmetic anywhere.
int exact_rank(const IntMatrix& m);

/// Rank of m over GF(p). Always <= exact_rank(m), so a full-rank result
/// here is an exact certificate that m is nonsingular over Q.
int rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// dim - rank(A - lambda*I), computed exactly. A fast modular full-rank
/// check short-circuits the common multiplicity-zero case.
int integer_multiplicity(const IntMatrix& adjacency, long long lambda);

}  // namespace qsrg
