#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "baire/rational.hpp"
#include "baire/space.hpp"

namespace baire {

/// Exact-rational function on a pattern space, one value per pattern node
/// (uniform across cycle repetitions). Finitely valued by construction.
class PatternFn {
 public:
  explicit PatternFn(Space space, Rat constant = Rat(0));
  PatternFn(Space space, std::vector<Rat> values);

  static PatternFn indicator(const Mark& mark);

  const Space& space() const { return space_; }
  const Rat& operator[](NodeId id) const { return values_[id]; }
  void set(NodeId id, Rat value) { values_[id] = value; }
  const std::vector<Rat>& values() const { return values_; }

  /// Throws InvalidAddress for addresses that leave the tree.
  Rat eval(const NodeAddress& address) const { return values_[space_.resolve(address)]; }

  Rat sup_norm() const;
  /// Sorted distinct values.
  std::vector<Rat> distinct_values() const;
  bool is_zero() const;

  friend bool operator==(const PatternFn& a, const PatternFn& b) {
    return a.space_.same_shape(b.space_) && a.values_ == b.values_;
  }

 private:
  Space space_;
  std::vector<Rat> values_;
};

PatternFn add(const PatternFn& f, const PatternFn& g);
PatternFn sub(const PatternFn& f, const PatternFn& g);
PatternFn mul(const PatternFn& f, const PatternFn& g);
PatternFn scale(const Rat& c, const PatternFn& f);
PatternFn vmax(const PatternFn& f, const PatternFn& g);
PatternFn vmin(const PatternFn& f, const PatternFn& g);
PatternFn vabs(const PatternFn& f);
/// f on `mark`, zero elsewhere.
PatternFn cut(const PatternFn& f, const Mark& mark);

inline PatternFn operator+(const PatternFn& f, const PatternFn& g) { return add(f, g); }
inline PatternFn operator-(const PatternFn& f, const PatternFn& g) { return sub(f, g); }
inline PatternFn operator*(const PatternFn& f, const PatternFn& g) { return mul(f, g); }
inline PatternFn operator*(const Rat& c, const PatternFn& f) { return scale(c, f); }

/// (max, min) of f over the marked set; nullopt when the set is empty.
std::optional<std::pair<Rat, Rat>> sup_inf(const PatternFn& f, const Mark& within);
/// max |f| over the marked set (0 on the empty set).
Rat sup_norm_on(const PatternFn& f, const Mark& within);
/// f == 0 at every marked node.
bool vanishes_on(const PatternFn& f, const Mark& where);
/// f == g at every marked node.
bool agree_on(const PatternFn& f, const PatternFn& g, const Mark& where);

// Semicontinuity relative to the subspace `within`. These take any subset;
// the ClosedMark overloads below are the public entry points and reject the
// empty subspace.
bool is_usc_on(const PatternFn& f, const Mark& within);
bool is_lsc_on(const PatternFn& f, const Mark& within);
bool is_continuous_on(const PatternFn& f, const Mark& within);

bool is_usc(const PatternFn& f, const ClosedMark& within);
bool is_lsc(const PatternFn& f, const ClosedMark& within);
bool is_continuous(const PatternFn& f, const ClosedMark& within);

/// Every within-node y with f(y) != f(x) for some within-node x in y's tail;
/// i.e. the points where f restricted to `within` is discontinuous.
Mark discontinuity_set(const PatternFn& f, const Mark& within);

}  // namespace baire
