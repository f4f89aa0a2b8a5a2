#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsrg/cayley.hpp"
#include "qsrg/closed_form.hpp"
#include "qsrg/group_spec.hpp"
#include "qsrg/qsrg_params.hpp"
#include "qsrg/spectrum.hpp"

namespace qsrg {

struct RunConfig {
  std::string group_spec;
  std::string subgroup_spec;  // comma-separated generator element indices
  std::string group_spec2;
  std::string subgroup_spec2;
  int max_order = 12;         // hard cap 16 for Gamma_H construction
  std::string format = "text";  // json | csv | text
  int jobs = 1;
  std::string theorem_filter;  // empty = all
  bool inject_fault = false;   // test mode: flip one adjacency bit per instance
};

constexpr int kHardOrderCap = 16;

/// One (G, H) instance with everything the theorems talk about.
struct Instance {
  std::string group_name;
  std::string subgroup_desc;  // sorted element list
  int n = 0, k = 0, ell = 0;
  bool normal = false;
  bool below_precondition = false;  // n < 5: outside the QSRG theorems
  SHFlag flag = SHFlag::None;
};

/// Build H from generator indices given in the subgroup spec.
SubgroupData parse_subgroup(const FiniteGroup& g, const std::string& spec);

struct AnalyzeResult {
  Instance instance;
  Spectrum spectrum;
  IntegralityReport integrality;
  std::optional<QsrgParams> qsrg;  // absent for edgeless case
  std::optional<ClosedFormPrediction> prediction;  // only for normal H
  bool closed_form_match = false;
  bool partial_bounds_ok = false;
  std::string render(const std::string& format) const;
};

AnalyzeResult analyze(const RunConfig& config);

struct VerifyFailure {
  std::string group_name;
  std::string subgroup_desc;
  std::string theorem_tag;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  int checks = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::pair<std::string, int>> counts_by_tag;  // tag -> checks run
  bool ok() const { return failures.empty(); }
  std::string render(const std::string& format) const;
};

/// Runs the full invariant suite on the built-in corpus. The theorem
/// filter restricts to one tag (e.g. "c-set", "integrality").
VerifyReport verify(const RunConfig& config);

/// Known tags accepted by verify's filter.
std::vector<std::string> verify_theorem_tags();

struct SweepRow {
  std::string group_name;
  std::string subgroup_desc;
  int n = 0, k = 0, ell = 0;
  bool normal = false;
  bool below_precondition = false;
  bool integral = false;
  int kappa = 0;
  int grade = 0;
  std::string spectrum;
  bool closed_form_match = false;  // normal H only; false otherwise
  std::string error;               // per-row failure, run continues
};

std::vector<SweepRow> sweep(const RunConfig& config);
std::string render_sweep(const std::vector<SweepRow>& rows, const std::string& format);

struct CompareResult {
  bool isospectral = false;
  // distinguished by a named invariant / indistinguishable by the
  // implemented invariants. Never claims isomorphism.
  std::string verdict;
  std::string distinguishing_invariant;
  std::string spectrum1;
  std::string spectrum2;
  std::string render(const std::string& format) const;
};

CompareResult compare(const RunConfig& config);

/// Deterministic built-in corpus: products of Z2,Z3,Z4,Z6,Z8,Z12 plus
/// D3-D6 and S3, restricted to |G| <= max_order.
std::vector<std::string> builtin_corpus_specs(int max_order);

}  // namespace qsrg
