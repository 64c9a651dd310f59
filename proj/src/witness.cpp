#include "baire/witness.hpp"

#include <stdexcept>

#include "baire/errors.hpp"
#include "baire/oscillation.hpp"

namespace baire {

Space homogeneous(int n) {
  if (n < 0) throw std::invalid_argument("negative rank");
  Space s = Space::leaf();
  for (int k = 0; k < n; ++k) s = Space::limit({}, {s});
  return s;
}

Chain build_chain_on(const Space& space, int n) {
  if (n < 1) throw std::invalid_argument("chain length must be at least 1");
  if (rank(space) < n) throw std::invalid_argument("space rank is below the chain length");
  Chain c{space, {}};
  for (int j = 0; j <= n; ++j) c.sets.push_back(height_at_least(space, j));
  return c;
}

Chain build_chain(int n) {
  if (n < 1) throw std::invalid_argument("chain length must be at least 1");
  return build_chain_on(homogeneous(n), n);
}

Mark build_E(const Chain& chain) {
  Mark e(chain.space);
  const std::size_t len = chain.sets.size();
  for (std::size_t j = 0; j < len; j += 2) {
    Mark next = j + 1 < len ? chain.sets[j + 1].mark() : Mark(chain.space);
    e = e | (chain.sets[j].mark() - next);
  }
  return e;
}

Mark build_E(int n) { return build_E(build_chain(n)); }

CertPtr witness_certificate(const Chain& chain, const Rat& c) {
  const Mark full(chain.space, true);
  std::vector<cert::SumTerm> terms;
  const std::size_t len = chain.sets.size();
  for (std::size_t j = 0; j < len; j += 2) {
    Mark minus = j + 1 < len ? chain.sets[j + 1].mark() : Mark(chain.space);
    DiffClosed region{chain.sets[j].mark(), minus};
    Mark w = region.set();
    Rat factor = is_open_in(w, full) ? Rat(1) : Rat(2);
    PatternFn part = c * PatternFn::indicator(w);
    CertPtr inner = c.sign() >= 0 ? make_nonneg_lsc() : make_continuous_on_open(w);
    terms.push_back({part, make_extension(region, factor, inner)});
  }
  return make_sum(std::move(terms));
}

WitnessReport verify_witness_on(const Space& space, int n, const std::vector<Rat>& eps_grid) {
  WitnessReport rep;
  rep.n = n;
  rep.chain = build_chain_on(space, n);
  rep.E = build_E(rep.chain);
  const auto& K = rep.chain.sets;
  for (int j = 1; j <= n; ++j) {
    bool nd = K[j].mark().subset_of(K[j - 1].mark()) && !(K[j] == K[j - 1]) &&
              is_relatively_nowhere_dense(K[j], K[j - 1]);
    rep.nowhere_dense.push_back(nd);
    if (!nd) rep.violations.push_back("K_" + std::to_string(j) + " is not nowhere dense in K_" + std::to_string(j - 1));
  }

  PatternFn f = PatternFn::indicator(rep.E);
  for (const Rat& eps : eps_grid) {
    if (eps.sign() <= 0 || eps > Rat(1)) throw std::invalid_argument("grid values must lie in (0, 1]");
    DerivationTrail trail = derivation(f, eps);
    rep.indices.emplace_back(eps, trail.index());
    if (trail.index() != n) {
      rep.violations.push_back("i(chi_E, " + eps.str() + ") = " + std::to_string(trail.index()));
    }
    bool match = trail.sets.size() == K.size() + 1 && trail.sets.back().empty();
    for (std::size_t j = 0; match && j < K.size(); ++j) match = trail.sets[j] == K[j].mark();
    rep.trail_matches.push_back(match);
    if (!match) rep.violations.push_back("trail at eps " + eps.str() + " differs from the chain");
  }

  rep.certificate = witness_certificate(rep.chain);
  CheckResult r = check_certificate(f, *rep.certificate);
  if (!r.ok()) {
    rep.violations.push_back("certificate rejected at " + r.rejection->node_path + ": " + r.rejection->condition);
    rep.upper = Rat(0);
  } else {
    rep.upper = *r.bound;
    if (rep.upper > Rat(n + 1)) rep.violations.push_back("certified bound " + rep.upper.str() + " exceeds n + 1");
  }
  rep.lower = std::max(f.sup_norm(), Rat(n, 4));
  for (const auto& [eps, i] : full_index(f).per_eps) rep.lower = std::max(rep.lower, eps * Rat(i) / Rat(4));
  if (rep.ok() && rep.lower > rep.upper) throw SoundnessFault("witness lower bound above the certified bound");
  return rep;
}

WitnessReport verify_witness(int n, const std::vector<Rat>& eps_grid) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  return verify_witness_on(homogeneous(n), n, eps_grid);
}

Prop15Report prop15_demo(int max_rank) {
  if (max_rank < 1) throw std::invalid_argument("max rank must be at least 1");
  Prop15Report rep;
  bool all = true;
  for (int n = 1; n <= max_rank; ++n) {
    Chain chain = build_chain(n);
    const Rat c(1, n);
    PatternFn f = c * PatternFn::indicator(build_E(chain));
    Prop15Row row;
    row.n = n;
    row.eps = c;
    row.index = index(f, c);
    row.product = row.eps * Rat(row.index);
    CheckResult r = check_certificate(f, *witness_certificate(chain, c));
    if (!r.ok()) throw SoundnessFault("rank " + std::to_string(n) + ": norm premise certificate rejected");
    row.norm_bound = *r.bound;
    row.premise = row.norm_bound <= Rat(2);
    all = all && row.product >= Rat(1) && row.premise;
    rep.rows.push_back(row);
  }
  rep.conclusion = all;
  rep.note =
      "analytic conclusion over verified pieces: the pieces placed on disjoint open sets of one compactum "
      "give f with ||f||_D <= 2 by localization, while eps * i(f, eps) >= 1 at every eps = 1/n, so f is a "
      "D-function outside SD";
  return rep;
}

}  // namespace baire
