#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "baire/rational.hpp"
#include "baire/space.hpp"

namespace baire::detail {

// Max/min of a node table over the `within`-points of each subtree.
struct SubtreeRange {
  std::vector<char> any;
  std::vector<Rat> max, min;
};

inline SubtreeRange subtree_range(const Space& s, const std::vector<Rat>& values, const Mark& within) {
  SubtreeRange r{std::vector<char>(s.size(), 0), std::vector<Rat>(s.size()), std::vector<Rat>(s.size())};
  for (NodeId i = static_cast<NodeId>(s.size()); i-- > 0;) {
    bool any = false;
    Rat hi, lo;
    auto take = [&](const Rat& a, const Rat& b) {
      if (!any) {
        hi = a;
        lo = b;
        any = true;
      } else {
        hi = std::max(hi, a);
        lo = std::min(lo, b);
      }
    };
    if (within[i]) take(values[i], values[i]);
    for (NodeId c : s.node(i).prefix) {
      if (r.any[c]) take(r.max[c], r.min[c]);
    }
    for (NodeId c : s.node(i).cycle) {
      if (r.any[c]) take(r.max[c], r.min[c]);
    }
    r.any[i] = any;
    r.max[i] = hi;
    r.min[i] = lo;
  }
  return r;
}

// (max, min) over the within-points of the tail of `id`.
inline std::optional<std::pair<Rat, Rat>> tail_range(const Space& s, const SubtreeRange& r, NodeId id) {
  std::optional<std::pair<Rat, Rat>> out;
  for (NodeId c : s.node(id).cycle) {
    if (!r.any[c]) continue;
    if (!out) {
      out = std::make_pair(r.max[c], r.min[c]);
    } else {
      out->first = std::max(out->first, r.max[c]);
      out->second = std::min(out->second, r.min[c]);
    }
  }
  return out;
}

}  // namespace baire::detail
