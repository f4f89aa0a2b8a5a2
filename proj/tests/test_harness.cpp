#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qsrg/harness.hpp"

using namespace qsrg;

TEST_CASE("parse subgroup") {
  const FiniteGroup z6 = make_cyclic(6);
  CHECK(parse_subgroup(z6, "3").elements == ElementSet{0, 3});
  CHECK(parse_subgroup(z6, "2,3").k == 6);
  CHECK(parse_subgroup(z6, "").k == 1);
  CHECK_THROWS_AS(parse_subgroup(z6, "x"), std::exception);
}

TEST_CASE("corpus is deterministic and bounded") {
  const auto specs = builtin_corpus_specs(12);
  CHECK(specs == builtin_corpus_specs(12));
  CHECK(std::find(specs.begin(), specs.end(), "Z6") != specs.end());
  CHECK(std::find(specs.begin(), specs.end(), "S3") != specs.end());
  CHECK(std::find(specs.begin(), specs.end(), "D6") != specs.end());
  for (const std::string& s : specs)
    CHECK(build_family(parse_group_spec(s)).order() <= 12);
  const auto small = builtin_corpus_specs(6);
  CHECK(std::find(small.begin(), small.end(), "Z8") == small.end());
}

TEST_CASE("analyze normal instance") {
  RunConfig config;
  config.group_spec = "Z6";
  config.subgroup_spec = "3";
  const AnalyzeResult res = analyze(config);
  CHECK(res.instance.n == 6);
  CHECK(res.instance.k == 2);
  CHECK(res.instance.ell == 3);
  CHECK(res.instance.normal);
  CHECK(res.spectrum.to_string() == "{12:1, 4:9, 0:6, -2:18, -6:2}");
  CHECK(res.integrality.is_integral);
  REQUIRE(res.qsrg.has_value());
  CHECK(res.qsrg->a == 4);
  CHECK(res.qsrg->c_set == std::vector<int>{2, 4, 6});
  REQUIRE(res.prediction.has_value());
  CHECK(res.closed_form_match);
  CHECK(res.partial_bounds_ok);

  const std::string text = res.render("text");
  CHECK(text.find("MATCH") != std::string::npos);
  const std::string json = res.render("json");
  CHECK(json.find("\"closed_form_match\":true") != std::string::npos);
}

TEST_CASE("analyze non-normal instance") {
  RunConfig config;
  config.group_spec = "S3";
  config.subgroup_spec = "1";  // any non-identity element; order-2 ones are transpositions
  const FiniteGroup s3 = make_symmetric(3);
  // pick an actual transposition index
  for (int x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) {
      config.subgroup_spec = std::to_string(x);
      break;
    }
  const AnalyzeResult res = analyze(config);
  CHECK_FALSE(res.instance.normal);
  CHECK_FALSE(res.integrality.is_integral);
  CHECK_FALSE(res.prediction.has_value());
  CHECK(res.partial_bounds_ok);
}

TEST_CASE("analyze edgeless instance flagged") {
  RunConfig config;
  config.group_spec = "Z6";
  config.subgroup_spec = "1";  // <1> = Z6
  const AnalyzeResult res = analyze(config);
  CHECK(res.instance.flag == SHFlag::FullH);
  CHECK_FALSE(res.qsrg.has_value());
  CHECK(res.spectrum.to_string() == "{0:36}");
  CHECK(res.render("text").find("edgeless") != std::string::npos);
}

TEST_CASE("verify passes on a small corpus") {
  RunConfig config;
  config.max_order = 8;
  const VerifyReport report = verify(config);
  CHECK(report.ok());
  CHECK(report.checks > 100);
  CHECK_FALSE(report.counts_by_tag.empty());
}

TEST_CASE("verify theorem filter") {
  RunConfig config;
  config.max_order = 6;
  config.theorem_filter = "c-set";
  const VerifyReport report = verify(config);
  CHECK(report.ok());
  REQUIRE(report.counts_by_tag.size() == 1);
  CHECK(report.counts_by_tag[0].first == "c-set");

  config.theorem_filter = "no-such-tag";
  CHECK_THROWS_AS(verify(config), Error);
}

TEST_CASE("fault injection is detected") {
  RunConfig config;
  config.max_order = 6;
  config.inject_fault = true;
  const VerifyReport report = verify(config);
  CHECK_FALSE(report.ok());
  // The flipped bit must trip a spectral or counting assertion.
  bool structural = false;
  for (const VerifyFailure& f : report.failures)
    if (f.theorem_tag == "perron" || f.theorem_tag == "moments" ||
        f.theorem_tag == "regularity" || f.theorem_tag == "components")
      structural = true;
  CHECK(structural);
}

TEST_CASE("sweep rows and determinism") {
  RunConfig config;
  config.max_order = 8;
  const auto rows = sweep(config);

  // Row count = sum over corpus groups of proper nontrivial subgroup counts.
  std::size_t want = 0;
  for (const std::string& s : builtin_corpus_specs(8)) {
    const FiniteGroup g = build_family(parse_group_spec(s));
    for (const SubgroupData& h : all_subgroups(g))
      if (h.k > 1 && h.k < g.order()) ++want;
  }
  CHECK(rows.size() == want);

  for (const SweepRow& r : rows) {
    CHECK(r.error.empty());
    if (r.normal && r.n >= 5) CHECK(r.closed_form_match);
    if (!r.normal) CHECK_FALSE(r.integral);
    if (r.n < 5) CHECK(r.below_precondition);
  }

  // Identical configs produce byte-identical output; --jobs must not
  // change row order.
  const std::string csv = render_sweep(rows, "csv");
  CHECK(csv == render_sweep(sweep(config), "csv"));
  RunConfig parallel = config;
  parallel.jobs = 4;
  CHECK(csv == render_sweep(sweep(parallel), "csv"));
  CHECK(csv.substr(0, 5) == "group");
}

TEST_CASE("compare isospectral pair") {
  RunConfig config;
  config.group_spec = "Z8";
  config.subgroup_spec = "2";
  config.group_spec2 = "Z4xZ2";
  config.subgroup_spec2 = "1,4";
  const CompareResult res = compare(config);
  CHECK(res.isospectral);
  CHECK(res.verdict.find("isospectral") == 0);
  CHECK(res.verdict.find("not") == std::string::npos);
}

TEST_CASE("compare different spectra") {
  RunConfig config;
  config.group_spec = "Z6";
  config.subgroup_spec = "3";
  config.group_spec2 = "S3";
  config.subgroup_spec2 = "1";
  const FiniteGroup s3 = make_symmetric(3);
  for (int x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) {
      config.subgroup_spec2 = std::to_string(x);
      break;
    }
  const CompareResult res = compare(config);
  CHECK_FALSE(res.isospectral);
  CHECK(res.verdict == "not isospectral");
}

TEST_CASE("compare instance with itself") {
  RunConfig config;
  config.group_spec = "Z6";
  config.subgroup_spec = "3";
  config.group_spec2 = "Z6";
  config.subgroup_spec2 = "3";
  const CompareResult res = compare(config);
  CHECK(res.isospectral);
  CHECK(res.distinguishing_invariant.empty());
  CHECK(res.verdict.find("indistinguishable") != std::string::npos);
}
