#pragma once

#include <string>
#include <vector>

#include "qsrg/spectrum.hpp"

namespace qsrg {

enum class CaseTag { Ell2, Ell3, EllGe4K2, EllGe4Kgt2 };

std::string to_string(CaseTag t);

/// Complete predicted spectrum of Gamma_H(G) for H normal, from (n, k)
/// alone. All values integer; coincident values merged and
/// zero-multiplicity entries dropped before canonicalization.
struct ClosedFormPrediction {
  CaseTag case_tag;
  Spectrum entries;
  int kappa = 0;  // distinct eigenvalues after merging
};

/// Case selected by ell = n/k:
///   ell = 2:        (3k  k     -k    0    ; 1  3n-6  3n-3   n^2-6n+8)
///   ell = 3:        (6k  2k    -k   -3k  0; 1  3n-9  6n-18  2  n^2-9n+24)
///   ell >= 4, k=2:  (6l-6 2l-6 2l-2 -6 -2; 1  3l-3  3l  l^2-3l+2  3l^2-3l)
///   ell >= 4, k>2:  (3(l-1)k (l-3)k (l-1)k -3k -k 0 ;
///                    1  3l-3  3n-3l  l^2-3l+2  3nl-3l^2-3n+3l  n^2-3nl+2l^2)
/// Throws Error if k does not divide n or k is not in (1, n).
ClosedFormPrediction predicted_spectrum(int n, int k);

/// Spectral facts valid for arbitrary H (no normality needed).
struct PartialPrediction {
  struct Bound {
    long long value;
    long long min_mult;
    bool exact;  // multiplicity is exactly min_mult (Perron only)
  };
  std::vector<Bound> bounds;  // (3(n-k),1,exact), (n-3k,2(l-1)), (n-k,2(n-l))
  bool zero_eigenvalue = false;  // k > 2
};

PartialPrediction predicted_partial(int n, int k);

struct KappaVerdict {
  int predicted_kappa = 0;
  int measured_kappa = 0;
  bool kappa_match = false;
  bool kappa_in_456 = false;
  bool spectrum_match = false;
};

KappaVerdict kappa_check(const ClosedFormPrediction& prediction, const Spectrum& measured);

std::string prediction_json(const ClosedFormPrediction& p);

}  // namespace qsrg
