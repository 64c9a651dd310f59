#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "baire/function.hpp"

namespace baire {

/// A difference of closed sets, outer \ minus, both closed in some ambient
/// subspace (the whole space unless stated otherwise).
struct DiffClosed {
  Mark outer;
  Mark minus;

  Mark set() const { return outer - minus; }

  /// Presents a locally closed subset of `ambient` as closure minus set.
  /// Throws NotClosed when the set is not a difference of closed sets.
  static DiffClosed of(const Mark& set, const Mark& ambient);
  static DiffClosed of(const Mark& set) { return of(set, Mark(set.space(), true)); }

  /// outer, minus inside ambient, minus inside outer, both relatively closed.
  bool valid_in(const Mark& ambient) const;
};

struct SimpleTerm {
  Rat coeff;
  DiffClosed set;
};

/// Finite combination sum c_i * chi_{W_i} of pairwise disjoint differences of closed sets.
struct SimpleDCS {
  Space space;
  std::vector<SimpleTerm> terms;

  PatternFn evaluate() const;
  bool pairwise_disjoint() const;
};

struct DNormCertificate;
using CertPtr = std::shared_ptr<const DNormCertificate>;

namespace cert {

/// f >= 0 and lsc: ||f||_D = ||f||_inf.
struct NonnegLsc {};

/// f = u - v with u, v >= 0 lsc: ||f||_D <= ||u + v||_inf.
struct LscSplit {
  PatternFn u;
  PatternFn v;
};

struct SumTerm {
  PatternFn part;
  CertPtr cert;
};

/// Triangle inequality over f = sum of parts.
struct Sum {
  std::vector<SumTerm> terms;
};

/// f vanishes off region = outer \ minus and `inner` bounds f on the region.
/// Factor 2 for a difference of closed sets, 1 when the region is open.
struct Extension {
  DiffClosed region;
  Rat factor;
  CertPtr inner;
};

struct LocalPart {
  Mark support;
  CertPtr cert;
};

/// f supported on disjoint open parts with separated closures: the bound is
/// the largest part bound.
struct Localization {
  std::vector<LocalPart> parts;
};

/// f supported on an open set and continuous there: ||f||_D = ||f||_inf.
struct ContinuousOnOpen {
  Mark support;
};

}  // namespace cert

struct DNormCertificate {
  std::variant<cert::NonnegLsc, cert::LscSplit, cert::Sum, cert::Extension, cert::Localization, cert::ContinuousOnOpen>
      node;
};

CertPtr make_nonneg_lsc();
CertPtr make_lsc_split(PatternFn u, PatternFn v);
CertPtr make_sum(std::vector<cert::SumTerm> terms);
CertPtr make_extension(DiffClosed region, Rat factor, CertPtr inner);
CertPtr make_localization(std::vector<cert::LocalPart> parts);
CertPtr make_continuous_on_open(Mark support);

struct Rejection {
  std::string node_path;
  std::string condition;
};

struct CheckResult {
  std::optional<Rat> bound;
  std::optional<Rejection> rejection;
  bool ok() const { return bound.has_value(); }
};

/// Validates every side condition and recomputes the claimed bound on ||f||_D.
CheckResult check_certificate(const PatternFn& f, const DNormCertificate& c);
/// Same, for f restricted to the subspace `domain`.
CheckResult check_certificate_on(const PatternFn& f, const Mark& domain, const DNormCertificate& c);

/// Level-set decomposition along the chain of discontinuity sets.
SimpleDCS to_simple_dcs(const PatternFn& f);
/// Decomposition of f restricted to `domain`; term sets are presented
/// relative to the domain.
SimpleDCS to_simple_dcs_on(const PatternFn& f, const Mark& domain);

/// Sum/Extension certificate for a simple function whose term sets are
/// presented relative to `ambient`. Bound: sum of factor * |c_i|.
CertPtr simple_dcs_certificate(const SimpleDCS& s, const Mark& ambient);

struct NormAnnotations {
  // Sharper claims from the transfinite-oscillation literature. Reported only.
  Rat index_lower_sharp;  // sup_eps eps * i(f, eps), would be a lower bound
  Rat optimal_upper;      // (2 i(f) + 1) * ||f||_inf
  std::string note;
};

struct DNormBounds {
  Rat lower;
  Rat upper;
  CertPtr certificate;
  std::string certificate_source;
  NormAnnotations annotations;
};

/// Proven lower bound and the best validated upper bound among the built-in
/// candidate certificates and any `extra` ones.
DNormBounds bounds(const PatternFn& f, const std::vector<CertPtr>& extra = {});

}  // namespace baire
