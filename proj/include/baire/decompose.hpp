#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baire/dnorm.hpp"

namespace baire {

/// Continuous phi on the subspace with |f - phi| <= eps there; zero off it.
/// Each point that is not in the tail of another subspace point keeps its
/// value and spreads it over its whole tail.
/// Throws PreconditionFailed (with the offending address) when osc(f|within) > eps.
PatternFn interpose(const PatternFn& f, const Rat& eps, const ClosedMark& within);
PatternFn interpose_on(const PatternFn& f, const Rat& eps, const Mark& within);

struct StaircaseResult {
  SimpleDCS simple;         // sum (j/n) chi_{K_j}
  PatternFn approximation;  // simple, evaluated
  PatternFn residual;       // f - approximation, >= 0 and lsc
  CertPtr residual_certificate;
  Rat nominal_bound;    // 1/n
  Rat certified_bound;  // validated bound for the residual
};

/// Level-set quantization of f, which must satisfy ||f||_inf <= 1, be
/// continuous on the open set U and vanish off U.
StaircaseResult staircase(const PatternFn& f, const Mark& U, int n);

/// f supported on the open set `support` with i(f|support) <= n.
struct GnWitness {
  PatternFn f;
  Mark support;
  int n = 0;

  /// Support open, f vanishing off it, index bound met. Throws PreconditionFailed.
  void validate() const;
  /// Whole space as support, n = i(f).
  static GnWitness of(const PatternFn& f);
};

struct TraceStep {
  int depth = 0;
  int step = 0;
  Rat eps;
  std::size_t w_size = 0;  // pattern nodes in W
  Rat h_bound;
  Rat g_sup;  // ||g_j||_inf after the step
};

struct SDApprox {
  std::string path;  // "pipeline" or "semicontinuous"
  SimpleDCS simple;
  PatternFn approximation{Space()};
  Rat residual_bound;  // validated bound on ||f - approximation||_D
  CertPtr certificate;
  Rat nominal_residual;  // the bound the construction promises
  CertPtr norm_certificate;  // certificate for f itself (pipeline only)
  std::optional<Rat> norm_bound;
  std::optional<Rat> chosen_eps;
  int chosen_index = 0;
  std::vector<TraceStep> trace;
};

inline Rat lambda_n(int n) { return Rat((std::int64_t{1} << (n + 1)) - 1); }

/// Approximation within tol in D-norm together with a certificate
/// ||f||_D <= (2^{n+1} - 1) ||f||_inf + tol.
SDApprox sd_decompose(const GnWitness& w, const Rat& tol);

/// Semicontinuous f: piecewise interpolation along os_j(f, eps) for a
/// critical eps with eps < eta and eps * i(f, eps) < eta, certified by
/// 6 eps (i + 1). Continuous f uses eps = eta/2 when no critical eps fits;
/// otherwise falls back to sd_decompose(f, eta).
SDApprox usc_sd_approx(const PatternFn& f, const Rat& eta);

struct SdVerdict {
  bool strong = true;
  int index = 0;
  int rank = 0;
  Rat quasinorm;
  // eps * i(f, eps) = small_eps_slope * eps on (0, min D], so it tends to 0.
  int small_eps_slope = 0;
  bool limit_condition = true;
  SDApprox approximation;
};

SdVerdict sd_test(const PatternFn& f, const Rat& tol = Rat(1, 100));

}  // namespace baire
