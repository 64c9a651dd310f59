#pragma once

#include "baire/function.hpp"
#include "baire/space.hpp"

namespace fixtures {

inline baire::Space T1() { return baire::Space::limit({}, {baire::Space::leaf()}); }
inline baire::Space T2() { return baire::Space::limit({}, {T1()}); }

// Node ids of T2 in preorder: root, level-1 point, leaf.
constexpr baire::NodeId kRoot = 0, kMid = 1, kLeaf = 2;

inline baire::Mark mark_of(const baire::Space& s, std::initializer_list<baire::NodeId> ids) {
  baire::Mark m(s);
  for (auto id : ids) m.set(id, true);
  return m;
}

inline baire::PatternFn fn_of(const baire::Space& s, std::initializer_list<baire::Rat> values) {
  return baire::PatternFn(s, std::vector<baire::Rat>(values));
}

}  // namespace fixtures
