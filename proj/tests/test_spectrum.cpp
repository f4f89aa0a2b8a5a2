#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qsrg/cayley.hpp"
#include "qsrg/exact_rank.hpp"
#include "qsrg/group_spec.hpp"
#include "qsrg/spectrum.hpp"

using namespace qsrg;

namespace {

IntMatrix c4_adjacency() {
  IntMatrix a(4, std::vector<long long>(4, 0));
  for (int u = 0; u < 4; ++u) a[u][(u + 1) % 4] = a[(u + 1) % 4][u] = 1;
  return a;
}

IntMatrix gamma_adjacency(const std::string& spec, const ElementSet& generators) {
  const FiniteGroup g = build_family(parse_group_spec(spec));
  const SubgroupData h = subgroup_generated(g, generators);
  return gamma_H(direct_square(g), g, h).graph.adjacency_matrix();
}

}  // namespace

TEST_CASE("exact rank basics") {
  CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(rank_mod_p({{1, 2}, {2, 4}}, 2147483647) == 1);
}

TEST_CASE("integer multiplicities on C4") {
  const IntMatrix a = c4_adjacency();
  CHECK(integer_multiplicity(a, 0) == 2);
  CHECK(integer_multiplicity(a, 1) == 0);
  CHECK(integer_multiplicity(a, 2) == 1);
  CHECK(integer_multiplicity(a, -2) == 1);
}

TEST_CASE("paper normal-case spectrum") {
  const Spectrum s = full_spectrum(gamma_adjacency("Z6", {3}));
  CHECK(s.to_string() == "{12:1, 4:9, 0:6, -2:18, -6:2}");
  CHECK(s.dimension == 36);
  const IntegralityReport r = is_integral(s);
  CHECK(r.is_integral);
  CHECK(r.residual_dimension == 0);
  CHECK(r.integer_mass == 36);
}

TEST_CASE("paper non-normal spectrum with irrational pair") {
  const FiniteGroup s3 = make_symmetric(3);
  int b = -1;
  for (int x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) {
      b = x;
      break;
    }
  REQUIRE(b > 0);
  const SubgroupData h = subgroup_generated(s3, {b});
  const Spectrum s = full_spectrum(gamma_H(direct_square(s3), s3, h).graph.adjacency_matrix());

  int exact_mass = 0;
  for (const SpectrumEntry& e : s.entries)
    if (e.exact) exact_mass += e.mult;
  CHECK(exact_mass == 28);

  auto exact_mult = [&s](long long v) {
    for (const SpectrumEntry& e : s.entries)
      if (e.exact && e.ivalue == v) return e.mult;
    return 0;
  };
  CHECK(exact_mult(12) == 1);
  CHECK(exact_mult(4) == 7);
  CHECK(exact_mult(0) == 4);
  CHECK(exact_mult(-2) == 16);

  const double r13 = std::sqrt(13.0);
  int hits = 0;
  for (const SpectrumEntry& e : s.entries)
    if (!e.exact) {
      CHECK(e.mult == 4);
      if (std::abs(e.avalue - (-1 + r13)) < 1e-6) ++hits;
      if (std::abs(e.avalue - (-1 - r13)) < 1e-6) ++hits;
    }
  CHECK(hits == 2);
  CHECK_FALSE(is_integral(s).is_integral);
  CHECK(is_integral(s).residual_dimension == 8);
}

TEST_CASE("K5 spectrum") {
  IntMatrix k5(5, std::vector<long long>(5, 1));
  for (int i = 0; i < 5; ++i) k5[i][i] = 0;
  CHECK(full_spectrum(k5).to_string() == "{4:1, -1:4}");
}

TEST_CASE("edgeless graph is integral") {
  const Spectrum s = full_spectrum(IntMatrix(3, std::vector<long long>(3, 0)));
  CHECK(s.to_string() == "{0:3}");
  CHECK(is_integral(s).is_integral);
}

TEST_CASE("isospectrality") {
  const Spectrum a = full_spectrum(gamma_adjacency("Z8", {2}));
  // H = <(2,0)> x <(0,1)> = {(0,0),(0,1),(2,0),(2,1)} in Z4xZ2: indices 0,1,4,5.
  const Spectrum b = full_spectrum(gamma_adjacency("Z4xZ2", {1, 4}));
  CHECK(isospectral(a, b));
  CHECK(a.to_string() == "{12:1, 4:18, 0:24, -4:21}");

  const Spectrum z6 = full_spectrum(gamma_adjacency("Z6", {3}));
  CHECK_FALSE(isospectral(a, z6));
  CHECK(isospectral(z6, z6));
}

TEST_CASE("moments") {
  const Spectrum s = full_spectrum(gamma_adjacency("Z6", {3}));
  CHECK(spectral_moment(s, 0) == doctest::Approx(36));
  CHECK(spectral_moment(s, 1) == doctest::Approx(0));
  CHECK(spectral_moment(s, 2) == doctest::Approx(432));
}

TEST_CASE("spectrum json shape") {
  const Spectrum s = full_spectrum(gamma_adjacency("Z6", {3}));
  const std::string j = s.to_json();
  CHECK(j.find("\"entries\"") != std::string::npos);
  CHECK(j.find("{\"value\":\"12\",\"kind\":\"int\",\"mult\":1}") != std::string::npos);
  CHECK(j.find("\"dimension\":36") != std::string::npos);
}

TEST_CASE("canonical ordering is deterministic") {
  Spectrum s = Spectrum::from_integer_pairs({{-2, 3}, {5, 1}, {-2, 2}, {0, 4}, {7, 0}});
  CHECK(s.to_string() == "{5:1, 0:4, -2:5}");
  CHECK(s.dimension == 10);
}
