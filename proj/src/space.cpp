#include "baire/space.hpp"

#include <algorithm>
#include <stdexcept>

#include "baire/errors.hpp"

namespace baire {

std::string to_string(const NodeAddress& address) {
  std::string out = "/";
  for (std::size_t i = 0; i < address.size(); ++i) {
    if (i) out += "/";
    out += address[i].branch == Branch::Prefix ? "p" : "c";
    out += std::to_string(address[i].index);
  }
  return out;
}

Space::Space() : Space(leaf()) {}

Space Space::leaf() {
  static const auto single = std::make_shared<const std::vector<PatternNode>>(std::vector<PatternNode>{
      PatternNode{{}, {}, std::nullopt, Branch::Prefix, 0, 1, 0}});
  return Space(single);
}

Space Space::limit(std::vector<Space> prefix, std::vector<Space> cycle) {
  if (cycle.empty()) throw std::invalid_argument("limit node needs a nonempty cycle");
  return assemble(std::move(prefix), std::move(cycle));
}

Space Space::isolated(std::vector<Space> prefix) {
  if (prefix.empty()) return leaf();
  return assemble(std::move(prefix), {});
}

Space Space::assemble(std::vector<Space> prefix, std::vector<Space> cycle) {
  std::vector<PatternNode> nodes(1);
  auto append = [&](const Space& child, Branch branch, std::uint32_t position) {
    const NodeId offset = static_cast<NodeId>(nodes.size());
    for (NodeId i = 0; i < child.size(); ++i) {
      PatternNode n = child.node(i);
      for (auto& c : n.prefix) c += offset;
      for (auto& c : n.cycle) c += offset;
      n.end += offset;
      n.depth += 1;
      if (n.parent) {
        n.parent = *n.parent + offset;
      } else {
        n.parent = 0;
        n.branch = branch;
        n.position = position;
      }
      nodes.push_back(std::move(n));
    }
    return offset;
  };
  std::vector<NodeId> prefix_ids, cycle_ids;
  for (std::uint32_t i = 0; i < prefix.size(); ++i) prefix_ids.push_back(append(prefix[i], Branch::Prefix, i));
  for (std::uint32_t i = 0; i < cycle.size(); ++i) cycle_ids.push_back(append(cycle[i], Branch::Cycle, i));
  nodes[0].prefix = std::move(prefix_ids);
  nodes[0].cycle = std::move(cycle_ids);
  nodes[0].end = static_cast<NodeId>(nodes.size());
  return Space(std::make_shared<const std::vector<PatternNode>>(std::move(nodes)));
}

NodeId Space::tail_begin(NodeId id) const {
  const auto& n = node(id);
  return n.cycle.empty() ? n.end : n.cycle.front();
}

Space Space::subtree(NodeId id) const {
  if (id == root()) return *this;
  return assemble(prefix_children(id), cycle_children(id));
}

std::vector<Space> Space::prefix_children(NodeId id) const {
  std::vector<Space> out;
  for (NodeId c : node(id).prefix) out.push_back(subtree(c));
  return out;
}

std::vector<Space> Space::cycle_children(NodeId id) const {
  std::vector<Space> out;
  for (NodeId c : node(id).cycle) out.push_back(subtree(c));
  return out;
}

NodeAddress Space::address(NodeId id) const {
  NodeAddress out;
  while (node(id).parent) {
    out.push_back({node(id).branch, node(id).position});
    id = *node(id).parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

NodeId Space::resolve(const NodeAddress& address) const {
  NodeId at = root();
  for (const auto& sel : address) {
    const auto& kids = sel.branch == Branch::Prefix ? node(at).prefix : node(at).cycle;
    if (sel.index >= kids.size()) throw InvalidAddress("address " + to_string(address) + " leaves the tree");
    at = kids[sel.index];
  }
  return at;
}

bool Space::same_shape(const Space& other) const {
  if (nodes_ == other.nodes_) return true;
  if (size() != other.size()) return false;
  for (NodeId i = 0; i < size(); ++i) {
    if (node(i).prefix != other.node(i).prefix || node(i).cycle != other.node(i).cycle) return false;
  }
  return true;
}

// ---- marks ------------------------------------------------------------------

void require_same_space(const Space& a, const Space& b, const char* what) {
  if (!a.same_shape(b)) throw ShapeMismatch(std::string(what) + ": decorations live on different spaces");
}

Mark::Mark(Space space, bool value) : space_(std::move(space)), bits_(space_.size(), value ? 1 : 0) {}

Mark::Mark(Space space, std::vector<char> bits) : space_(std::move(space)), bits_(std::move(bits)) {
  if (bits_.size() != space_.size()) throw ShapeMismatch("mark size does not match its space");
  for (auto& b : bits_) b = b ? 1 : 0;
}

bool Mark::empty() const { return std::none_of(bits_.begin(), bits_.end(), [](char b) { return b != 0; }); }

std::size_t Mark::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), char{1}));
}

bool Mark::subset_of(const Mark& other) const {
  require_same_space(space_, other.space_, "subset_of");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

Mark Mark::operator|(const Mark& o) const {
  require_same_space(space_, o.space_, "union");
  Mark out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] | o.bits_[i];
  return out;
}

Mark Mark::operator&(const Mark& o) const {
  require_same_space(space_, o.space_, "intersection");
  Mark out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] & o.bits_[i];
  return out;
}

Mark Mark::operator-(const Mark& o) const {
  require_same_space(space_, o.space_, "difference");
  Mark out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] & !o.bits_[i];
  return out;
}

Mark Mark::operator~() const {
  Mark out = *this;
  for (auto& b : out.bits_) b = !b;
  return out;
}

ClosedMark ClosedMark::validate(Mark mark) {
  if (!is_closed(mark)) throw NotClosed("mark is not closed: an unmarked limit point has marked points in its tail");
  return ClosedMark(std::move(mark));
}

std::optional<ClosedMark> ClosedMark::try_make(Mark mark) {
  if (!is_closed(mark)) return std::nullopt;
  return ClosedMark(std::move(mark));
}

ClosedMark ClosedMark::full(const Space& space) { return ClosedMark(Mark(space, true)); }
ClosedMark ClosedMark::none(const Space& space) { return ClosedMark(Mark(space, false)); }

// ---- topology ---------------------------------------------------------------

namespace {

// For each node: does its subtree contain a point of `m`?
std::vector<char> subtree_any(const Mark& m) {
  const Space& s = m.space();
  std::vector<char> any(s.size(), 0);
  for (NodeId i = static_cast<NodeId>(s.size()); i-- > 0;) {
    char v = m[i] ? 1 : 0;
    for (NodeId c : s.node(i).prefix) v |= any[c];
    for (NodeId c : s.node(i).cycle) v |= any[c];
    any[i] = v;
  }
  return any;
}

// Does the tail of `id` meet the set whose subtree summary is `any`?
bool tail_meets(const Space& s, const std::vector<char>& any, NodeId id) {
  for (NodeId c : s.node(id).cycle) {
    if (any[c]) return true;
  }
  return false;
}

}  // namespace

std::vector<int> cb_heights_in(const Mark& subset) {
  const Space& s = subset.space();
  std::vector<int> height(s.size(), -1);
  std::vector<int> sub_max(s.size(), -1);  // max height over the subtree
  for (NodeId i = static_cast<NodeId>(s.size()); i-- > 0;) {
    int tail_max = -1;
    for (NodeId c : s.node(i).cycle) tail_max = std::max(tail_max, sub_max[c]);
    if (subset[i]) height[i] = tail_max < 0 ? 0 : tail_max + 1;
    int m = std::max(height[i], tail_max);
    for (NodeId c : s.node(i).prefix) m = std::max(m, sub_max[c]);
    sub_max[i] = m;
  }
  return height;
}

std::vector<int> cb_heights(const Space& space) { return cb_heights_in(Mark(space, true)); }

int rank(const Space& space) {
  auto h = cb_heights(space);
  return *std::max_element(h.begin(), h.end());
}

ClosedMark height_at_least(const Space& space, int level) {
  auto h = cb_heights(space);
  Mark m(space);
  for (NodeId i = 0; i < space.size(); ++i) m.set(i, h[i] >= level);
  return ClosedMark::validate(std::move(m));
}

Mark derived_in(const Mark& subset) {
  const Space& s = subset.space();
  auto any = subtree_any(subset);
  Mark out(s);
  for (NodeId i = 0; i < s.size(); ++i) out.set(i, subset[i] && tail_meets(s, any, i));
  return out;
}

ClosedMark derived_set(const Space& space) { return ClosedMark::validate(derived_in(Mark(space, true))); }

bool is_closed(const Mark& mark) { return is_closed_in(mark, Mark(mark.space(), true)); }

bool is_closed_in(const Mark& mark, const Mark& ambient) {
  require_same_space(mark.space(), ambient.space(), "is_closed_in");
  const Space& s = mark.space();
  auto any = subtree_any(mark);
  for (NodeId i = 0; i < s.size(); ++i) {
    if (mark[i] && !ambient[i]) throw PreconditionFailed("closedness test: mark leaves its ambient set");
    if (ambient[i] && !mark[i] && tail_meets(s, any, i)) return false;
  }
  return true;
}

bool is_open_in(const Mark& mark, const Mark& ambient) { return is_closed_in(ambient - mark, ambient); }

Mark closure(const Mark& mark) {
  const Space& s = mark.space();
  auto any = subtree_any(mark);
  Mark out = mark;
  for (NodeId i = 0; i < s.size(); ++i) {
    if (tail_meets(s, any, i)) out.set(i, true);
  }
  return out;
}

Mark closure_in(const Mark& mark, const Mark& ambient) { return closure(mark) & ambient; }

bool is_relatively_nowhere_dense(const ClosedMark& inner, const ClosedMark& outer) {
  if (!inner.mark().subset_of(outer.mark())) {
    throw PreconditionFailed("nowhere-density test: inner set is not contained in outer set");
  }
  // inner has empty interior in outer iff every inner point is a limit of outer \ inner.
  const Space& s = inner.space();
  auto any = subtree_any(outer.mark() - inner.mark());
  for (NodeId i = 0; i < s.size(); ++i) {
    if (inner[i] && !tail_meets(s, any, i)) return false;
  }
  return true;
}

namespace {

struct Component {
  NodeId old;
  std::vector<Component> prefix;
  std::vector<Component> cycle;
};

std::vector<Component> restrict_node(const Space& s, const Mark& m, NodeId id) {
  std::vector<Component> out;
  const auto& n = s.node(id);
  if (m[id]) {
    Component c{id, {}, {}};
    for (NodeId p : n.prefix) {
      for (auto& part : restrict_node(s, m, p)) c.prefix.push_back(std::move(part));
    }
    for (NodeId q : n.cycle) {
      for (auto& part : restrict_node(s, m, q)) c.cycle.push_back(std::move(part));
    }
    out.push_back(std::move(c));
    return out;
  }
  // Closedness keeps marks out of the tail of an unmarked node.
  for (NodeId p : n.prefix) {
    for (auto& part : restrict_node(s, m, p)) out.push_back(std::move(part));
  }
  return out;
}

Space build(const Component& c, std::vector<NodeId>& to_old) {
  to_old.push_back(c.old);
  std::vector<Space> prefix, cycle;
  for (const auto& p : c.prefix) prefix.push_back(build(p, to_old));
  for (const auto& q : c.cycle) cycle.push_back(build(q, to_old));
  return cycle.empty() ? Space::isolated(std::move(prefix)) : Space::limit(std::move(prefix), std::move(cycle));
}

}  // namespace

std::optional<Restriction> restrict(const Space& space, const ClosedMark& subset) {
  require_same_space(space, subset.space(), "restrict");
  auto parts = restrict_node(space, subset.mark(), Space::root());
  if (parts.empty()) return std::nullopt;
  // Several clopen components: hang the others off the first root as extra
  // prefix parts. That does not change the topology.
  Component top = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) top.prefix.push_back(std::move(parts[i]));
  Restriction r;
  r.space = build(top, r.to_old);
  return r;
}

}  // namespace baire
