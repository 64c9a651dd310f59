#include "baire/expansion.hpp"

#include <stdexcept>

namespace baire {
namespace {

std::uint32_t unroll(const Space& s, NodeId id, unsigned copies, std::vector<ExpandedVertex>& out) {
  const auto me = static_cast<std::uint32_t>(out.size());
  out.push_back(ExpandedVertex{id, {}, {}, 0});
  for (NodeId p : s.node(id).prefix) {
    auto v = unroll(s, p, copies, out);
    out[me].children.push_back(v);
  }
  for (unsigned k = 0; k < copies; ++k) {
    for (NodeId c : s.node(id).cycle) {
      auto v = unroll(s, c, copies, out);
      out[me].children.push_back(v);
      out[me].tail.push_back({v, k});
    }
  }
  out[me].end = static_cast<std::uint32_t>(out.size());
  return me;
}

}  // namespace

Expansion expand(const Space& space, unsigned copies) {
  if (copies < 2) throw std::invalid_argument("expansion needs at least two copies");
  Expansion e;
  e.copies = copies;
  unroll(space, Space::root(), copies, e.vertices);
  return e;
}

}  // namespace baire
