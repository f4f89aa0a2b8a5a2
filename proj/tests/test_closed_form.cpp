#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsrg/cayley.hpp"
#include "qsrg/closed_form.hpp"
#include "qsrg/group_spec.hpp"

using namespace qsrg;

TEST_CASE("four case tables") {
  const ClosedFormPrediction ell3 = predicted_spectrum(6, 2);
  CHECK(ell3.case_tag == CaseTag::Ell3);
  CHECK(ell3.entries.to_string() == "{12:1, 4:9, 0:6, -2:18, -6:2}");
  CHECK(ell3.kappa == 5);

  const ClosedFormPrediction ell2 = predicted_spectrum(6, 3);
  CHECK(ell2.case_tag == CaseTag::Ell2);
  CHECK(ell2.entries.to_string() == "{9:1, 3:12, 0:8, -3:15}");
  CHECK(ell2.kappa == 4);

  const ClosedFormPrediction k2 = predicted_spectrum(8, 2);
  CHECK(k2.case_tag == CaseTag::EllGe4K2);
  CHECK(k2.entries.to_string() == "{18:1, 6:12, 2:9, -2:36, -6:6}");
  CHECK(k2.kappa == 5);

  const ClosedFormPrediction kbig = predicted_spectrum(12, 3);
  CHECK(kbig.case_tag == CaseTag::EllGe4Kgt2);
  CHECK(kbig.entries.to_string() == "{27:1, 9:24, 3:9, 0:32, -3:72, -9:6}");
  CHECK(kbig.kappa == 6);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(predicted_spectrum(6, 4), Error);  // 4 does not divide 6
  CHECK_THROWS_AS(predicted_spectrum(6, 1), Error);
  CHECK_THROWS_AS(predicted_spectrum(6, 6), Error);
}

TEST_CASE("moment identities across the sweep range") {
  for (int n = 4; n <= 16; ++n)
    for (int k = 2; k < n; ++k) {
      if (n % k != 0) continue;
      const ClosedFormPrediction p = predicted_spectrum(n, k);
      long long mass = 0, m1 = 0, m2 = 0;
      for (const SpectrumEntry& e : p.entries.entries) {
        REQUIRE(e.exact);
        REQUIRE(e.mult >= 1);
        mass += e.mult;
        m1 += e.ivalue * e.mult;
        m2 += e.ivalue * e.ivalue * e.mult;
      }
      CHECK(mass == static_cast<long long>(n) * n);
      CHECK(m1 == 0);
      CHECK(m2 == static_cast<long long>(n) * n * 3 * (n - k));
      CHECK(p.kappa >= 3);  // small parameters can merge below 4
      CHECK(p.kappa <= 6);
    }
}

TEST_CASE("kappa in 456 on the theorem range") {
  for (int n = 6; n <= 16; ++n)
    for (int k = 2; k < n; ++k) {
      if (n % k != 0) continue;
      const int kappa = predicted_spectrum(n, k).kappa;
      CHECK(kappa >= 4);
      CHECK(kappa <= 6);
    }
}

TEST_CASE("predictions match measured spectra") {
  struct Case {
    const char* spec;
    ElementSet gens;
  };
  for (const Case& c :
       {Case{"Z6", {2}}, Case{"Z6", {3}}, Case{"Z8", {4}}, Case{"Z12", {4}}}) {
    const FiniteGroup g = build_family(parse_group_spec(c.spec));
    const SubgroupData h = subgroup_generated(g, c.gens);
    REQUIRE(h.is_normal);
    const Spectrum measured =
        full_spectrum(gamma_H(direct_square(g), g, h).graph.adjacency_matrix());
    const ClosedFormPrediction p = predicted_spectrum(g.order(), h.k);
    const KappaVerdict v = kappa_check(p, measured);
    CHECK(v.spectrum_match);
    CHECK(v.kappa_match);
    CHECK(v.kappa_in_456);
  }
}

TEST_CASE("partial predictions") {
  const PartialPrediction p = predicted_partial(6, 2);
  REQUIRE(p.bounds.size() == 3);
  CHECK(p.bounds[0].value == 12);
  CHECK(p.bounds[0].min_mult == 1);
  CHECK(p.bounds[0].exact);
  CHECK(p.bounds[1].value == 0);  // n - 3k = 0 here
  CHECK(p.bounds[1].min_mult == 4);
  CHECK(p.bounds[2].value == 4);
  CHECK(p.bounds[2].min_mult == 6);
  CHECK_FALSE(p.zero_eigenvalue);

  CHECK(predicted_partial(8, 4).zero_eigenvalue);
}

TEST_CASE("partial bounds hold on a non-normal instance") {
  const FiniteGroup s3 = make_symmetric(3);
  int b = -1;
  for (int x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) {
      b = x;
      break;
    }
  const SubgroupData h = subgroup_generated(s3, {b});
  const Spectrum s =
      full_spectrum(gamma_H(direct_square(s3), s3, h).graph.adjacency_matrix());
  auto mult_of = [&s](long long v) {
    for (const SpectrumEntry& e : s.entries)
      if (e.exact && e.ivalue == v) return e.mult;
    return 0;
  };
  CHECK(mult_of(12) == 1);
  CHECK(mult_of(0) >= 4);
  CHECK(mult_of(4) >= 6);
}

TEST_CASE("prediction json") {
  const std::string j = prediction_json(predicted_spectrum(6, 2));
  CHECK(j.find("\"case_tag\":\"ell3\"") != std::string::npos);
  CHECK(j.find("\"kappa\":5") != std::string::npos);
  CHECK(j.find("\"dimension\":36") != std::string::npos);
}
