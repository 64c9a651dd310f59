#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "baire/function.hpp"

namespace baire {

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t count = 300;
  int max_rank = 4;  // at most 4
  std::vector<Rat> values{Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 3), Rat(1, 2), Rat(1)};
  int cycle_slots = 2;  // at most 2
  int prefix_len = 2;   // at most 2
  std::size_t max_nodes = 40;

  /// Throws std::invalid_argument when a limit is exceeded.
  void validate() const;
};

struct CorpusEntry {
  std::string name;
  PatternFn f;
};

/// Draws from mt19937_64 reduced by modulo, so sequences do not depend on the
/// standard library's distribution implementations.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

/// Constants, indicators of every derived set, and chi_E witnesses up to rank 4.
std::vector<CorpusEntry> pinned_corpus();
/// Pinned entries followed by `count` random ones.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec);

Space random_space(CorpusRng& rng, const CorpusSpec& spec, int rank_budget);
PatternFn random_fn(CorpusRng& rng, const Space& space, const std::vector<Rat>& values);
Mark random_mark(CorpusRng& rng, const Space& space, unsigned percent);
/// Closure of a random mark.
ClosedMark random_closed(CorpusRng& rng, const Space& space, unsigned percent);

/// Continuous function agreeing with f on every point outside all tails:
/// each such point spreads its value over its tail.
PatternFn continuous_variant(const PatternFn& f);

}  // namespace baire
