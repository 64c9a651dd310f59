#include "baire/oscillation.hpp"

#include <algorithm>
#include <stdexcept>

#include "baire/detail/subtree_range.hpp"
#include "baire/errors.hpp"

namespace baire {
namespace {

void require_positive(const Rat& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive, got " + eps.str());
}

int subspace_rank(const Mark& domain) {
  auto h = cb_heights_in(domain);
  return *std::max_element(h.begin(), h.end());
}

// Sets exactly one derivation step: points of `current` whose oscillation
// relative to `current` reaches eps. When `allowed` is given every oscillation
// value met must be zero or belong to it.
Mark derive_step(const PatternFn& f, const Mark& current, const Rat& eps, Flavor flavor,
                 const std::vector<Rat>* allowed) {
  auto rep = envelopes_on(f, current);
  const PatternFn& measure = flavor == Flavor::Osc ? rep.osc : rep.oosc;
  Mark next(f.space());
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (!current[i]) continue;
    const Rat& v = measure[i];
    if (allowed && !v.is_zero() && !std::binary_search(allowed->begin(), allowed->end(), v)) {
      throw SoundnessFault("oscillation value " + v.str() + " outside the critical set");
    }
    next.set(i, v >= eps);
  }
  return next;
}

DerivationTrail derive(const PatternFn& f, const Mark& domain, const Rat& eps, Flavor flavor,
                       const std::vector<Rat>* allowed) {
  require_positive(eps);
  require_same_space(f.space(), domain.space(), "derivation");
  DerivationTrail trail{eps, flavor, {domain}, false};
  if (domain.empty()) {
    trail.terminal = true;
    return trail;
  }
  // Each step lands inside the derived set of the previous one, so heights
  // strictly drop.
  const std::size_t cap = static_cast<std::size_t>(subspace_rank(domain)) + 2;
  while (!trail.sets.back().empty()) {
    if (trail.sets.size() >= cap) throw SoundnessFault("derivation trail did not reach the empty set");
    Mark next = derive_step(f, trail.sets.back(), eps, flavor, allowed);
    if (!is_closed_in(next, trail.sets.back())) throw SoundnessFault("derivation step produced a non-closed set");
    trail.sets.push_back(std::move(next));
  }
  trail.terminal = true;
  return trail;
}

}  // namespace

OscReport envelopes_on(const PatternFn& f, const Mark& domain) {
  require_same_space(f.space(), domain.space(), "envelopes");
  const Space& s = f.space();
  OscReport rep{domain, PatternFn(s), PatternFn(s), PatternFn(s), PatternFn(s), PatternFn(s)};
  auto range = detail::subtree_range(s, f.values(), domain);
  for (NodeId i = 0; i < s.size(); ++i) {
    if (!domain[i]) continue;
    const Rat& fx = f[i];
    auto t = detail::tail_range(s, range, i);
    Rat hi = t ? std::max(fx, t->first) : fx;
    Rat lo = t ? std::min(fx, t->second) : fx;
    rep.upper.set(i, hi);
    rep.lower.set(i, lo);
    rep.oosc.set(i, hi - lo);
    rep.uosc.set(i, std::max(hi - fx, fx - lo));
  }
  auto urange = detail::subtree_range(s, rep.uosc.values(), domain);
  for (NodeId i = 0; i < s.size(); ++i) {
    if (!domain[i]) continue;
    auto t = detail::tail_range(s, urange, i);
    rep.osc.set(i, t ? std::max(rep.uosc[i], t->first) : rep.uosc[i]);
  }
  return rep;
}

OscReport envelopes(const PatternFn& f, const ClosedMark& within) {
  if (within.empty()) throw EmptySubspaceError("envelopes on the empty subspace");
  return envelopes_on(f, within.mark());
}

DerivationTrail derivation(const PatternFn& f, const Rat& eps, Flavor flavor) {
  return derive(f, Mark(f.space(), true), eps, flavor, nullptr);
}

DerivationTrail derivation_on(const PatternFn& f, const Mark& domain, const Rat& eps, Flavor flavor) {
  return derive(f, domain, eps, flavor, nullptr);
}

int index(const PatternFn& f, const Rat& eps) { return derivation(f, eps).index(); }

int index_on(const PatternFn& f, const Mark& domain, const Rat& eps) {
  return derivation_on(f, domain, eps).index();
}

std::vector<Rat> critical_set_on(const PatternFn& f, const Mark& domain) {
  require_same_space(f.space(), domain.space(), "critical_set");
  std::vector<Rat> values;
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (domain[i]) values.push_back(f[i]);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Rat> diffs;
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = a + 1; b < values.size(); ++b) diffs.push_back(values[b] - values[a]);
  }
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  return diffs;
}

std::vector<Rat> critical_set(const PatternFn& f) { return critical_set_on(f, Mark(f.space(), true)); }

IndexReport full_index_on(const PatternFn& f, const Mark& domain) {
  IndexReport rep;
  rep.critical = critical_set_on(f, domain);
  rep.quasinorm = Rat(0);
  int previous = -1;
  // Between consecutive critical values every threshold set is the same, so
  // eps -> i(f, eps) is a step function constant on each (d_k, d_{k+1}] and
  // the supremum of eps * i(f, eps) is attained at a critical value.
  for (const Rat& eps : rep.critical) {
    int i = std::max(0, derive(f, domain, eps, Flavor::Osc, &rep.critical).index());
    if (previous >= 0 && i > previous) throw SoundnessFault("i(f, eps) increased with eps");
    previous = i;
    rep.per_eps.emplace_back(eps, i);
    rep.index = std::max(rep.index, i);
    rep.quasinorm = std::max(rep.quasinorm, eps * Rat(i));
  }
  rep.beta = rep.index + 1;
  return rep;
}

IndexReport full_index(const PatternFn& f) { return full_index_on(f, Mark(f.space(), true)); }

ClosedMark ltheta_set(const PatternFn& f, const PatternFn& g, const Rat& eps, const std::vector<int>& theta,
                      LThetaRule rule) {
  require_positive(eps);
  require_same_space(f.space(), g.space(), "ltheta_set");
  Rat threshold_f = eps / Rat(2);
  Rat threshold_g = eps / Rat(2);
  if (rule == LThetaRule::Product) {
    const Rat F = f.sup_norm();
    const Rat G = g.sup_norm();
    if (F.is_zero() || G.is_zero()) throw std::invalid_argument("product rule needs nonzero sup norms");
    threshold_f = eps / (Rat(2) * G);
    threshold_g = eps / (Rat(2) * F);
  } else if (rule == LThetaRule::Lattice) {
    threshold_f = eps;
    threshold_g = eps;
  }
  Mark current(f.space(), true);
  for (int bit : theta) {
    if (current.empty()) break;
    if (bit != 0 && bit != 1) throw std::invalid_argument("theta must be a bit string");
    current = bit == 0 ? derive_step(f, current, threshold_f, Flavor::Osc, nullptr)
                       : derive_step(g, current, threshold_g, Flavor::Osc, nullptr);
  }
  return ClosedMark::validate(std::move(current));
}

}  // namespace baire
