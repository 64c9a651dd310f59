#pragma once

#include <cstdint>
#include <vector>

#include "baire/space.hpp"

namespace baire {

/// One vertex of a finite unrolling. `tail` lists the children that stand in
/// for the infinite tail of the pattern node, each tagged with its repetition.
struct ExpandedVertex {
  NodeId pattern = 0;
  std::vector<std::uint32_t> children;  // all children, prefix first
  struct TailChild {
    std::uint32_t vertex;
    unsigned copy;
  };
  std::vector<TailChild> tail;
  std::uint32_t end = 0;  // one past the last descendant (preorder)
};

/// Finite rooted graph obtained by replacing every infinite tail by
/// `copies` full repetitions of the cycle.
struct Expansion {
  unsigned copies = 0;
  std::vector<ExpandedVertex> vertices;
};

/// Throws std::invalid_argument when copies < 2.
Expansion expand(const Space& space, unsigned copies);

}  // namespace baire
