#pragma once

#include <optional>
#include <vector>

#include "baire/expansion.hpp"
#include "baire/function.hpp"

// Brute-force recomputation of every limit quantity on a finite unrolling.
// Nothing here reuses the symbolic engine: neighbourhoods are enumerated
// explicitly. The basic neighbourhood N_k(v) is v together with the subtrees
// of the tail children from repetition k on, and a limit quantity is the
// infimum over k of the supremum over N_k(v).
namespace baire::oracle {

using Members = std::vector<char>;

Members lift(const Expansion& e, const Mark& mark);
std::vector<Rat> lift(const Expansion& e, const PatternFn& f);

/// Collapses a per-vertex table to one entry per pattern node. Returns
/// nullopt when two unrolled copies of the same pattern node disagree.
template <class T>
std::optional<std::vector<T>> collapse(const Expansion& e, std::size_t pattern_size, const std::vector<T>& per_vertex,
                                       const T& fill) {
  std::vector<T> out(pattern_size, fill);
  std::vector<char> seen(pattern_size, 0);
  for (std::size_t v = 0; v < e.vertices.size(); ++v) {
    auto p = e.vertices[v].pattern;
    if (!seen[p]) {
      out[p] = per_vertex[v];
      seen[p] = 1;
    } else if (!(out[p] == per_vertex[v])) {
      return std::nullopt;
    }
  }
  return out;
}

Members cluster_points(const Expansion& e, const Members& member);
/// Cantor-Bendixson heights by iterated removal of isolated points; -1 off the set.
std::vector<int> heights(const Expansion& e, const Members& member);
bool is_closed(const Expansion& e, const Members& member);

struct Envelopes {
  std::vector<Rat> upper, lower, uosc, osc, oosc;  // zero off the domain
};

Envelopes envelopes(const Expansion& e, const std::vector<Rat>& f, const Members& member);

bool is_usc(const Expansion& e, const std::vector<Rat>& f, const Members& member);
bool is_lsc(const Expansion& e, const std::vector<Rat>& f, const Members& member);
bool is_continuous(const Expansion& e, const std::vector<Rat>& f, const Members& member);

/// The os_j (upper_flavor = false) or K_j (upper_flavor = true) chain, ending
/// with the first empty set.
std::vector<Members> derivation(const Expansion& e, const std::vector<Rat>& f, const Members& member, const Rat& eps,
                                bool upper_flavor);
int index(const Expansion& e, const std::vector<Rat>& f, const Members& member, const Rat& eps);

}  // namespace baire::oracle
