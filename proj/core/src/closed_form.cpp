#include "qsrg/closed_form.hpp"

#include "json.hpp"

namespace qsrg {

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Ell2:
      return "ell2";
    case CaseTag::Ell3:
      return "ell3";
    case CaseTag::EllGe4K2:
      return "ell_ge4_k2";
    case CaseTag::EllGe4Kgt2:
      return "ell_ge4_kgt2";
  }
  return "?";
}

ClosedFormPrediction predicted_spectrum(int n, int k) {
  if (k <= 1 || k >= n) throw Error("subgroup order must be proper and nontrivial");
  if (n % k != 0) throw Error("invalid index: " + std::to_string(k) + " does not divide " +
                              std::to_string(n));
  const long long N = n, K = k, L = n / k;
  const long long nn = N * N;

  ClosedFormPrediction p;
  std::vector<std::pair<long long, int>> pairs;
  if (L == 2) {
    p.case_tag = CaseTag::Ell2;
    pairs = {{3 * K, 1},
             {K, static_cast<int>(3 * N - 6)},
             {-K, static_cast<int>(3 * N - 3)},
             {0, static_cast<int>(nn - 6 * N + 8)}};
  } else if (L == 3) {
    p.case_tag = CaseTag::Ell3;
    pairs = {{6 * K, 1},
             {2 * K, static_cast<int>(3 * N - 9)},
             {-K, static_cast<int>(6 * N - 18)},
             {-3 * K, 2},
             {0, static_cast<int>(nn - 9 * N + 24)}};
  } else if (K == 2) {
    p.case_tag = CaseTag::EllGe4K2;
    pairs = {{6 * L - 6, 1},
             {2 * L - 6, static_cast<int>(3 * L - 3)},
             {2 * L - 2, static_cast<int>(3 * L)},
             {-6, static_cast<int>(L * L - 3 * L + 2)},
             {-2, static_cast<int>(3 * L * L - 3 * L)}};
  } else {
    p.case_tag = CaseTag::EllGe4Kgt2;
    pairs = {{3 * (L - 1) * K, 1},
             {(L - 3) * K, static_cast<int>(3 * L - 3)},
             {(L - 1) * K, static_cast<int>(3 * N - 3 * L)},
             {-3 * K, static_cast<int>(L * L - 3 * L + 2)},
             {-K, static_cast<int>(3 * N * L - 3 * L * L - 3 * N + 3 * L)},
             {0, static_cast<int>(nn - 3 * N * L + 2 * L * L)}};
  }
  p.entries = Spectrum::from_integer_pairs(std::move(pairs));
  p.kappa = static_cast<int>(p.entries.entries.size());
  return p;
}

PartialPrediction predicted_partial(int n, int k) {
  if (k <= 0 || k >= n) throw Error("subgroup order must be proper");
  const long long N = n, K = k, L = n / k;
  PartialPrediction p;
  p.bounds.push_back({3 * (N - K), 1, true});
  p.bounds.push_back({N - 3 * K, 2 * (L - 1), false});
  p.bounds.push_back({N - K, 2 * (N - L), false});
  p.zero_eigenvalue = k > 2;
  return p;
}

KappaVerdict kappa_check(const ClosedFormPrediction& prediction, const Spectrum& measured) {
  KappaVerdict v;
  v.predicted_kappa = prediction.kappa;
  v.measured_kappa = static_cast<int>(measured.entries.size());
  v.kappa_match = v.predicted_kappa == v.measured_kappa;
  v.kappa_in_456 = v.measured_kappa >= 4 && v.measured_kappa <= 6;
  v.spectrum_match = isospectral(prediction.entries, measured);
  return v;
}

std::string prediction_json(const ClosedFormPrediction& p) {
  nlohmann::json j = nlohmann::json::parse(p.entries.to_json());
  j["case_tag"] = to_string(p.case_tag);
  j["kappa"] = p.kappa;
  return j.dump();
}

}  // namespace qsrg
