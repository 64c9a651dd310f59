#include "baire/corpus.hpp"

#include <stdexcept>

#include "baire/witness.hpp"

namespace baire {
namespace {

Space grow(CorpusRng& rng, const CorpusSpec& spec, int budget, std::size_t& nodes) {
  const bool root = nodes++ == 0;
  if (budget == 0 || nodes >= spec.max_nodes || (!root && rng.chance(25))) {
    if (budget > 0 && nodes < spec.max_nodes && rng.chance(20)) {
      std::vector<Space> parts;
      auto k = 1 + rng.below(spec.prefix_len);
      for (std::uint64_t i = 0; i < k; ++i) parts.push_back(grow(rng, spec, budget, nodes));
      return Space::isolated(std::move(parts));
    }
    return Space::leaf();
  }
  std::vector<Space> prefix, cycle;
  auto p = rng.below(spec.prefix_len + 1);
  for (std::uint64_t i = 0; i < p; ++i) prefix.push_back(grow(rng, spec, budget - 1 - int(rng.below(budget)), nodes));
  auto c = 1 + rng.below(spec.cycle_slots);
  for (std::uint64_t i = 0; i < c; ++i) {
    int child = i == 0 ? budget - 1 : int(rng.below(budget));
    cycle.push_back(grow(rng, spec, child, nodes));
  }
  return Space::limit(std::move(prefix), std::move(cycle));
}

}  // namespace

void CorpusSpec::validate() const {
  if (max_rank < 0 || max_rank > 4) throw std::invalid_argument("max_rank must lie in 0..4");
  if (cycle_slots < 1 || cycle_slots > 2) throw std::invalid_argument("cycle_slots must lie in 1..2");
  if (prefix_len < 0 || prefix_len > 2) throw std::invalid_argument("prefix_len must lie in 0..2");
  if (values.empty()) throw std::invalid_argument("value set is empty");
  if (max_nodes < 1) throw std::invalid_argument("max_nodes must be positive");
}

Space random_space(CorpusRng& rng, const CorpusSpec& spec, int rank_budget) {
  std::size_t nodes = 0;
  return grow(rng, spec, rank_budget, nodes);
}

PatternFn random_fn(CorpusRng& rng, const Space& space, const std::vector<Rat>& values) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(values[rng.below(values.size())]);
  return PatternFn(space, std::move(out));
}

Mark random_mark(CorpusRng& rng, const Space& space, unsigned percent) {
  Mark m(space);
  for (NodeId i = 0; i < space.size(); ++i) m.set(i, rng.chance(percent));
  return m;
}

ClosedMark random_closed(CorpusRng& rng, const Space& space, unsigned percent) {
  return ClosedMark::validate(closure(random_mark(rng, space, percent)));
}

PatternFn continuous_variant(const PatternFn& f) {
  const Space& s = f.space();
  PatternFn out = f;
  std::vector<char> done(s.size(), 0);
  for (NodeId i = 0; i < s.size(); ++i) {
    if (done[i]) continue;
    for (NodeId t = s.tail_begin(i); t < s.tail_end(i); ++t) {
      out.set(t, f[i]);
      done[t] = 1;
    }
  }
  return out;
}

std::vector<CorpusEntry> pinned_corpus() {
  std::vector<CorpusEntry> out;
  const std::vector<std::pair<std::string, Space>> spaces = {
      {"leaf", Space::leaf()},
      {"T1", homogeneous(1)},
      {"T2", homogeneous(2)},
      {"T3", homogeneous(3)},
      {"T4", homogeneous(4)},
      {"T2+T1", Space::limit({homogeneous(1)}, {homogeneous(1), Space::leaf()})},
      {"clopen(T2,T1)", Space::isolated({homogeneous(2), homogeneous(1)})},
  };
  for (const auto& [name, s] : spaces) {
    out.push_back({"const0@" + name, PatternFn(s)});
    out.push_back({"const1/2@" + name, PatternFn(s, Rat(1, 2))});
    for (int j = 0; j <= rank(s); ++j) {
      out.push_back({"chi_K" + std::to_string(j) + "@" + name, PatternFn::indicator(height_at_least(s, j).mark())});
    }
  }
  for (int n = 1; n <= 4; ++n) out.push_back({"chi_E@T" + std::to_string(n), PatternFn::indicator(build_E(n))});
  return out;
}

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec) {
  spec.validate();
  std::vector<CorpusEntry> out = pinned_corpus();
  CorpusRng rng(spec.seed);
  for (std::size_t k = 0; k < spec.count; ++k) {
    int budget = int(rng.below(spec.max_rank + 1));
    Space s = random_space(rng, spec, budget);
    PatternFn f = random_fn(rng, s, spec.values);
    std::string name = "random" + std::to_string(k);
    switch (rng.below(4)) {
      case 0:
        name += "/continuous";
        f = continuous_variant(f);
        break;
      case 1: {
        name += "/indicator";
        Mark m = random_mark(rng, s, 50);
        f = PatternFn::indicator(rng.chance(50) ? closure(m) : m);
        break;
      }
      default:
        break;
    }
    out.push_back({std::move(name), std::move(f)});
  }
  return out;
}

}  // namespace baire
