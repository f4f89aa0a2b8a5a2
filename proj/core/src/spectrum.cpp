#include "qsrg/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace qsrg {

double cluster_tolerance(long long max_row_sum) {
  return 1e-7 * std::max<double>(1.0, static_cast<double>(max_row_sum));
}

Spectrum Spectrum::from_integer_pairs(std::vector<std::pair<long long, int>> pairs) {
  Spectrum s;
  for (auto [v, m] : pairs) {
    SpectrumEntry e;
    e.exact = true;
    e.ivalue = v;
    e.mult = m;
    s.entries.push_back(e);
    s.dimension += m;
  }
  s.canonicalize();
  return s;
}

void Spectrum::canonicalize() {
  // Merge equal exact values.
  std::vector<SpectrumEntry> merged;
  std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.value() != b.value()) return a.value() > b.value();
    return a.exact && !b.exact;  // exact first at numeric ties
  });
  for (const SpectrumEntry& e : entries) {
    if (e.mult == 0) continue;
    if (!merged.empty() && merged.back().exact && e.exact &&
        merged.back().ivalue == e.ivalue) {
      merged.back().mult += e.mult;
    } else {
      merged.push_back(e);
    }
  }
  entries = std::move(merged);
}

std::string Spectrum::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ", ";
    if (entries[i].exact)
      out << entries[i].ivalue;
    else
      out << entries[i].avalue;
    out << ":" << entries[i].mult;
  }
  out << "}";
  return out.str();
}

std::string Spectrum::to_json() const {
  // ordered_json keeps the documented {value, kind, mult} field order.
  nlohmann::ordered_json j;
  j["entries"] = nlohmann::json::array();
  for (const SpectrumEntry& e : entries) {
    nlohmann::ordered_json je;
    if (e.exact) {
      je["value"] = std::to_string(e.ivalue);
      je["kind"] = "int";
    } else {
      je["value"] = e.avalue;
      je["kind"] = "approx";
    }
    je["mult"] = e.mult;
    j["entries"].push_back(je);
  }
  j["dimension"] = dimension;
  return j.dump();
}

IntegralityReport is_integral(const Spectrum& s) {
  IntegralityReport r;
  for (const SpectrumEntry& e : s.entries)
    if (e.exact) r.integer_mass += e.mult;
  r.residual_dimension = s.dimension - r.integer_mass;
  r.is_integral = r.residual_dimension == 0;
  return r;
}

bool isospectral(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.dimension != b.dimension) return false;
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const SpectrumEntry& x = a.entries[i];
    const SpectrumEntry& y = b.entries[i];
    if (x.exact != y.exact || x.mult != y.mult) return false;
    if (x.exact) {
      if (x.ivalue != y.ivalue) return false;
    } else {
      if (std::abs(x.avalue - y.avalue) > tol) return false;
    }
  }
  return true;
}

double spectral_moment(const Spectrum& s, int p) {
  double sum = 0;
  for (const SpectrumEntry& e : s.entries) {
    double v = 1;
    for (int i = 0; i < p; ++i) v *= e.value();
    sum += v * e.mult;
  }
  return sum;
}

Spectrum full_spectrum(const IntMatrix& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > 4096) throw Error("matrix dimension exceeds 4096 guard");

  long long delta = 0;
  for (const auto& row : adjacency) {
    long long s = 0;
    for (long long v : row) s += std::llabs(v);
    delta = std::max(delta, s);
  }

  Spectrum spectrum;
  spectrum.dimension = n;
  int integer_mass = 0;
  for (long long lambda = -delta; lambda <= delta; ++lambda) {
    const int m = integer_multiplicity(adjacency, lambda);
    if (m > 0) {
      SpectrumEntry e;
      e.exact = true;
      e.ivalue = lambda;
      e.mult = m;
      spectrum.entries.push_back(e);
      integer_mass += m;
    }
  }

  if (integer_mass > n) throw NumericMismatch("integer multiplicities exceed dimension");

  if (integer_mass < n) {
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(adjacency[i][j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericMismatch("eigensolver failed");
    std::vector<double> numeric(solver.eigenvalues().data(),
                                solver.eigenvalues().data() + n);
    std::sort(numeric.begin(), numeric.end());

    const double tol = cluster_tolerance(delta);
    std::vector<bool> used(numeric.size(), false);
    // The numeric multiplicity of each exact integer eigenvalue must match
    // the exact count; anything else is an eigensolver accuracy problem.
    for (const SpectrumEntry& e : spectrum.entries) {
      int found = 0;
      for (std::size_t i = 0; i < numeric.size(); ++i)
        if (!used[i] && std::abs(numeric[i] - static_cast<double>(e.ivalue)) <= tol) {
          used[i] = true;
          ++found;
        }
      if (found != e.mult)
        throw NumericMismatch("numeric multiplicity " + std::to_string(found) +
                              " != exact " + std::to_string(e.mult) + " at eigenvalue " +
                              std::to_string(e.ivalue));
    }

    // Cluster the non-integer residue.
    std::vector<double> residue;
    for (std::size_t i = 0; i < numeric.size(); ++i)
      if (!used[i]) residue.push_back(numeric[i]);
    std::size_t i = 0;
    while (i < residue.size()) {
      std::size_t j = i + 1;
      double sum = residue[i];
      while (j < residue.size() && residue[j] - residue[j - 1] <= tol) {
        sum += residue[j];
        ++j;
      }
      SpectrumEntry e;
      e.exact = false;
      e.avalue = sum / static_cast<double>(j - i);
      e.mult = static_cast<int>(j - i);
      spectrum.entries.push_back(e);
      i = j;
    }
  }

  spectrum.canonicalize();
  int total = 0;
  for (const SpectrumEntry& e : spectrum.entries) total += e.mult;
  if (total != n) throw NumericMismatch("spectrum multiplicities do not sum to dimension");
  return spectrum;
}

}  // namespace qsrg
