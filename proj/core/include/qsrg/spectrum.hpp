#pragma once

#include <string>
#include <vector>

#include "qsrg/error.hpp"
#include "qsrg/exact_rank.hpp"

namespace qsrg {

/// One eigenvalue with its multiplicity. Exact entries were established by
/// integer rank computations; approx entries are tolerance-clustered
/// numeric values and are never promoted to exact.
struct SpectrumEntry {
  bool exact = true;
  long long ivalue = 0;
  double avalue = 0.0;
  int mult = 0;

  double value() const { return exact ? static_cast<double>(ivalue) : avalue; }
};

/// Canonical multiset of (eigenvalue, multiplicity) pairs: descending by
/// value, exact before approx at numeric ties.
struct Spectrum {
  std::vector<SpectrumEntry> entries;
  int dimension = 0;

  static Spectrum from_integer_pairs(std::vector<std::pair<long long, int>> pairs);

  void canonicalize();  // sort, merge equal exact values, drop zero mults
  std::string to_string() const;
  std::string to_json() const;
};

struct IntegralityReport {
  bool is_integral = false;
  int integer_mass = 0;
  int residual_dimension = 0;
};

/// Exact integer pass: integer_multiplicity for every candidate in
/// [-max_row_sum, max_row_sum]. Any residual dimension is filled by a
/// symmetric eigensolver, cross-checked against the exact counts
/// (NumericMismatch on disagreement) and clustered.
Spectrum full_spectrum(const IntMatrix& adjacency);

IntegralityReport is_integral(const Spectrum& s);

/// Exact multiset equality on exact parts; approx parts matched within
/// the cluster tolerance.
bool isospectral(const Spectrum& a, const Spectrum& b, double tol = 1e-6);

/// Sum of value^p * mult, p in {0,1,2}.
double spectral_moment(const Spectrum& s, int p);

double cluster_tolerance(long long max_row_sum);

}  // namespace qsrg
