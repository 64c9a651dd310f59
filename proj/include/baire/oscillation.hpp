#pragma once

#include <utility>
#include <vector>

#include "baire/function.hpp"

namespace baire {

/// Envelopes and oscillations of f relative to a subspace. Every table is
/// zero off the domain.
struct OscReport {
  Mark domain;
  PatternFn upper;  // Uf, the usc envelope
  PatternFn lower;  // Lf, the lsc envelope
  PatternFn uosc;   // lower oscillation: limsup_{y->x} |f(y) - f(x)|
  PatternFn osc;    // U(uosc)
  PatternFn oosc;   // upper oscillation, Uf - Lf
};

/// Throws EmptySubspaceError on the empty subspace.
OscReport envelopes(const PatternFn& f, const ClosedMark& within);
/// Same computation on an arbitrary subset with its induced topology.
OscReport envelopes_on(const PatternFn& f, const Mark& domain);

enum class Flavor {
  Osc,       // os_j(f, eps), thresholding osc
  UpperOsc,  // K_j(f, eps), thresholding the upper oscillation
};

struct DerivationTrail {
  Rat eps;
  Flavor flavor = Flavor::Osc;
  std::vector<Mark> sets;  // from the starting domain down to the first empty set
  bool terminal = false;   // reached the empty set

  /// Last j with sets[j] nonempty (-1 for an empty starting domain).
  int index() const { return static_cast<int>(sets.size()) - 2; }
};

/// Throws std::invalid_argument unless eps > 0.
DerivationTrail derivation(const PatternFn& f, const Rat& eps, Flavor flavor = Flavor::Osc);
DerivationTrail derivation_on(const PatternFn& f, const Mark& domain, const Rat& eps, Flavor flavor = Flavor::Osc);

/// i(f, eps).
int index(const PatternFn& f, const Rat& eps);
/// i(f|domain, eps).
int index_on(const PatternFn& f, const Mark& domain, const Rat& eps);

/// Distinct positive differences of values of f taken on `domain`, ascending.
/// Every oscillation value of f on any subspace of the domain is 0 or lies here.
std::vector<Rat> critical_set(const PatternFn& f);
std::vector<Rat> critical_set_on(const PatternFn& f, const Mark& domain);

struct IndexReport {
  std::vector<Rat> critical;                   // D
  std::vector<std::pair<Rat, int>> per_eps;    // (eps, i(f, eps)) for eps in D
  int index = 0;                               // i(f)
  int beta = 1;                                // i(f) + 1
  Rat quasinorm;                               // sup_eps eps * i(f, eps)
};

IndexReport full_index(const PatternFn& f);
IndexReport full_index_on(const PatternFn& f, const Mark& domain);

/// Which oscillation thresholds drive the L(theta) recursion.
enum class LThetaRule {
  Sum,      // osc f and osc g against eps/2
  Product,  // osc f against eps/(2G), osc g against eps/(2F)
  Lattice,  // osc f and osc g against eps
};

/// The closed set L(theta): start from the whole space and, for each bit,
/// keep the points where the oscillation of f (bit 0) or g (bit 1) relative
/// to the current set reaches its threshold. The empty string gives the
/// whole space.
ClosedMark ltheta_set(const PatternFn& f, const PatternFn& g, const Rat& eps, const std::vector<int>& theta,
                      LThetaRule rule = LThetaRule::Sum);

}  // namespace baire
