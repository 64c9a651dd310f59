#pragma once

#include <string>
#include <utility>
#include <vector>

#include "baire/dnorm.hpp"

namespace baire {

/// T_0 = leaf, T_n = limit of a single-slot cycle of T_{n-1}.
Space homogeneous(int n);

struct Chain {
  Space space;
  std::vector<ClosedMark> sets;  // K_0 = whole space, ..., K_n
};

/// T_n with K_j = j-th derived set. Throws std::invalid_argument for n < 1.
Chain build_chain(int n);
/// K_j = j-th derived set of a given space of rank >= n.
Chain build_chain_on(const Space& space, int n);

/// Union of K_{2i} \ K_{2i+1} (with K_{n+1} empty).
Mark build_E(const Chain& chain);
Mark build_E(int n);

/// Sum of per-difference Extension terms for c * chi_E; bound |c| (1 + 2 [n/2]).
CertPtr witness_certificate(const Chain& chain, const Rat& c = Rat(1));

struct WitnessReport {
  int n = 0;
  Chain chain;
  Mark E{Space()};
  std::vector<bool> nowhere_dense;  // step j: K_j nowhere dense in K_{j-1}
  std::vector<std::pair<Rat, int>> indices;
  std::vector<bool> trail_matches;  // per grid eps: derivation trail == chain + empty set
  CertPtr certificate;
  Rat upper;
  Rat lower;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Grid values must lie in (0, 1].
WitnessReport verify_witness(int n, const std::vector<Rat>& eps_grid);
WitnessReport verify_witness_on(const Space& space, int n, const std::vector<Rat>& eps_grid);

struct Prop15Row {
  int n = 0;
  Rat eps;
  int index = 0;
  Rat product;
  Rat norm_bound;  // certified bound for (1/n) chi_{E_n}
  bool premise = false;  // norm_bound <= 2
};

struct Prop15Report {
  std::vector<Prop15Row> rows;
  bool conclusion = false;
  std::string note;
};

Prop15Report prop15_demo(int max_rank);

}  // namespace baire
