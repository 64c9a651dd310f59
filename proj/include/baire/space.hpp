#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace baire {

using NodeId = std::uint32_t;

enum class Branch : std::uint8_t { Prefix, Cycle };

/// One step of a path through a pattern tree. A cycle selector names a slot;
/// it stands for that slot in every repetition of the cycle at once.
struct Selector {
  Branch branch;
  std::uint32_t index;
  friend bool operator==(const Selector&, const Selector&) = default;
};

using NodeAddress = std::vector<Selector>;

std::string to_string(const NodeAddress& address);

struct PatternNode {
  std::vector<NodeId> prefix;
  std::vector<NodeId> cycle;
  std::optional<NodeId> parent;
  Branch branch = Branch::Prefix;  // how the parent reaches this node
  std::uint32_t position = 0;      // index within the parent's prefix or cycle
  NodeId end = 0;                  // one past the last descendant (preorder)
  std::uint32_t depth = 0;
};

/// Finite presentation of a countable compact scattered space.
///
/// Every pattern node is a point. A node with a nonempty cycle is the limit
/// of its child sequence: the prefix subtrees followed by the cycle subtrees
/// repeated forever. A node with an empty cycle is isolated; its prefix
/// subtrees (if any) are clopen pieces hanging next to it. Nodes are stored in
/// preorder with prefix children before cycle children, so every subtree and
/// every tail (the union of the cycle subtrees) is a contiguous id range.
class Space {
 public:
  static Space leaf();
  /// Throws std::invalid_argument when cycle is empty.
  static Space limit(std::vector<Space> prefix, std::vector<Space> cycle);
  /// An isolated point with finitely many clopen parts beside it.
  static Space isolated(std::vector<Space> prefix);

  Space();  // a single leaf

  std::size_t size() const { return nodes_->size(); }
  static constexpr NodeId root() { return 0; }
  const PatternNode& node(NodeId id) const { return (*nodes_)[id]; }

  bool has_tail(NodeId id) const { return !node(id).cycle.empty(); }
  /// First id of the tail of `id`; equals node(id).end when there is no tail.
  NodeId tail_begin(NodeId id) const;
  NodeId tail_end(NodeId id) const { return node(id).end; }

  Space subtree(NodeId id) const;
  std::vector<Space> prefix_children(NodeId id) const;
  std::vector<Space> cycle_children(NodeId id) const;

  NodeAddress address(NodeId id) const;
  /// Throws InvalidAddress when a selector is out of range.
  NodeId resolve(const NodeAddress& address) const;

  /// Pointer identity or structural equality.
  bool same_shape(const Space& other) const;
  friend bool operator==(const Space& a, const Space& b) { return a.same_shape(b); }

 private:
  explicit Space(std::shared_ptr<const std::vector<PatternNode>> nodes) : nodes_(std::move(nodes)) {}
  static Space assemble(std::vector<Space> prefix, std::vector<Space> cycle);

  std::shared_ptr<const std::vector<PatternNode>> nodes_;
};

/// A subset decoration: one flag per pattern node, uniform across cycle
/// repetitions. Represents the set of concrete points whose node is marked.
class Mark {
 public:
  explicit Mark(Space space, bool value = false);
  Mark(Space space, std::vector<char> bits);

  const Space& space() const { return space_; }
  bool operator[](NodeId id) const { return bits_[id] != 0; }
  void set(NodeId id, bool value) { bits_[id] = value ? 1 : 0; }
  const std::vector<char>& bits() const { return bits_; }

  bool empty() const;
  std::size_t count() const;
  bool subset_of(const Mark& other) const;

  Mark operator|(const Mark& o) const;
  Mark operator&(const Mark& o) const;
  Mark operator-(const Mark& o) const;
  Mark operator~() const;

  friend bool operator==(const Mark& a, const Mark& b) {
    return a.space_.same_shape(b.space_) && a.bits_ == b.bits_;
  }

 private:
  Space space_;
  std::vector<char> bits_;
};

/// A mark known to present a closed subset. Only the checked factories build one.
class ClosedMark {
 public:
  /// Throws NotClosed when the mark fails validation.
  static ClosedMark validate(Mark mark);
  static std::optional<ClosedMark> try_make(Mark mark);
  static ClosedMark full(const Space& space);
  static ClosedMark none(const Space& space);

  const Mark& mark() const { return mark_; }
  const Space& space() const { return mark_.space(); }
  bool operator[](NodeId id) const { return mark_[id]; }
  bool empty() const { return mark_.empty(); }

  friend bool operator==(const ClosedMark& a, const ClosedMark& b) { return a.mark_ == b.mark_; }

 private:
  explicit ClosedMark(Mark mark) : mark_(std::move(mark)) {}
  Mark mark_;
};

void require_same_space(const Space& a, const Space& b, const char* what);

// ---- topology queries -------------------------------------------------------

/// Cantor-Bendixson heights of every node (largest j with the point in K^(j)).
std::vector<int> cb_heights(const Space& space);
/// Heights of the points of `subset` computed inside that subspace; -1 off it.
std::vector<int> cb_heights_in(const Mark& subset);
/// Largest j with K^(j) nonempty.
int rank(const Space& space);

/// Cluster points of the whole space.
ClosedMark derived_set(const Space& space);
/// Points of `subset` that are limits of other points of `subset`.
Mark derived_in(const Mark& subset);

/// Closedness in the whole space.
bool is_closed(const Mark& mark);
/// Closedness relative to the subspace `ambient` (requires mark within ambient).
bool is_closed_in(const Mark& mark, const Mark& ambient);
bool is_open_in(const Mark& mark, const Mark& ambient);
Mark closure(const Mark& mark);
/// Closure taken inside `ambient` (i.e. closure(mark) intersected with ambient).
Mark closure_in(const Mark& mark, const Mark& ambient);

/// Does `inner` have empty interior inside the subspace `outer`?
/// Throws PreconditionFailed if inner is not contained in outer.
bool is_relatively_nowhere_dense(const ClosedMark& inner, const ClosedMark& outer);

struct Restriction {
  Space space;
  std::vector<NodeId> to_old;  // new node id -> node id in the original space
};

/// Presents a closed subspace as a pattern tree of its own. Returns nullopt
/// for the empty subspace.
std::optional<Restriction> restrict(const Space& space, const ClosedMark& subset);

/// Marks nodes whose height is at least `level`.
ClosedMark height_at_least(const Space& space, int level);

}  // namespace baire
