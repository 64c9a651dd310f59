#include "baire/function.hpp"

#include <algorithm>

#include "baire/detail/subtree_range.hpp"
#include "baire/errors.hpp"

namespace baire {

PatternFn::PatternFn(Space space, Rat constant) : space_(std::move(space)), values_(space_.size(), constant) {}

PatternFn::PatternFn(Space space, std::vector<Rat> values) : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) throw ShapeMismatch("function size does not match its space");
}

PatternFn PatternFn::indicator(const Mark& mark) {
  PatternFn f(mark.space());
  for (NodeId i = 0; i < f.space().size(); ++i) f.values_[i] = mark[i] ? Rat(1) : Rat(0);
  return f;
}

Rat PatternFn::sup_norm() const {
  Rat m(0);
  for (const auto& v : values_) m = std::max(m, abs(v));
  return m;
}

std::vector<Rat> PatternFn::distinct_values() const {
  std::vector<Rat> out = values_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool PatternFn::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rat& v) { return v.is_zero(); });
}

namespace {

template <class Op>
PatternFn pointwise(const PatternFn& f, const PatternFn& g, Op op, const char* what) {
  require_same_space(f.space(), g.space(), what);
  std::vector<Rat> out(f.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(f.values()[i], g.values()[i]);
  return PatternFn(f.space(), std::move(out));
}

using detail::SubtreeRange;
using detail::tail_range;

SubtreeRange subtree_range(const PatternFn& f, const Mark& within) {
  return detail::subtree_range(f.space(), f.values(), within);
}

void require_nonempty(const ClosedMark& within) {
  if (within.empty()) throw EmptySubspaceError("semicontinuity check on the empty subspace");
}

}  // namespace

PatternFn add(const PatternFn& f, const PatternFn& g) {
  return pointwise(f, g, [](const Rat& a, const Rat& b) { return a + b; }, "add");
}
PatternFn sub(const PatternFn& f, const PatternFn& g) {
  return pointwise(f, g, [](const Rat& a, const Rat& b) { return a - b; }, "sub");
}
PatternFn mul(const PatternFn& f, const PatternFn& g) {
  return pointwise(f, g, [](const Rat& a, const Rat& b) { return a * b; }, "mul");
}
PatternFn vmax(const PatternFn& f, const PatternFn& g) {
  return pointwise(f, g, [](const Rat& a, const Rat& b) { return std::max(a, b); }, "vmax");
}
PatternFn vmin(const PatternFn& f, const PatternFn& g) {
  return pointwise(f, g, [](const Rat& a, const Rat& b) { return std::min(a, b); }, "vmin");
}

PatternFn scale(const Rat& c, const PatternFn& f) {
  std::vector<Rat> out(f.values());
  for (auto& v : out) v *= c;
  return PatternFn(f.space(), std::move(out));
}

PatternFn vabs(const PatternFn& f) {
  std::vector<Rat> out(f.values());
  for (auto& v : out) v = abs(v);
  return PatternFn(f.space(), std::move(out));
}

PatternFn cut(const PatternFn& f, const Mark& mark) {
  require_same_space(f.space(), mark.space(), "cut");
  std::vector<Rat> out(f.values());
  for (NodeId i = 0; i < out.size(); ++i) {
    if (!mark[i]) out[i] = Rat(0);
  }
  return PatternFn(f.space(), std::move(out));
}

std::optional<std::pair<Rat, Rat>> sup_inf(const PatternFn& f, const Mark& within) {
  require_same_space(f.space(), within.space(), "sup_inf");
  std::optional<std::pair<Rat, Rat>> out;
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (!within[i]) continue;
    if (!out) {
      out = std::make_pair(f[i], f[i]);
    } else {
      out->first = std::max(out->first, f[i]);
      out->second = std::min(out->second, f[i]);
    }
  }
  return out;
}

Rat sup_norm_on(const PatternFn& f, const Mark& within) {
  auto r = sup_inf(f, within);
  if (!r) return Rat(0);
  return std::max(abs(r->first), abs(r->second));
}

bool vanishes_on(const PatternFn& f, const Mark& where) {
  require_same_space(f.space(), where.space(), "vanishes_on");
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (where[i] && !f[i].is_zero()) return false;
  }
  return true;
}

bool agree_on(const PatternFn& f, const PatternFn& g, const Mark& where) {
  require_same_space(f.space(), g.space(), "agree_on");
  require_same_space(f.space(), where.space(), "agree_on");
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (where[i] && f[i] != g[i]) return false;
  }
  return true;
}

bool is_usc_on(const PatternFn& f, const Mark& within) {
  require_same_space(f.space(), within.space(), "is_usc");
  auto r = subtree_range(f, within);
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (!within[i]) continue;
    auto t = tail_range(f.space(), r, i);
    if (t && t->first > f[i]) return false;
  }
  return true;
}

bool is_lsc_on(const PatternFn& f, const Mark& within) {
  require_same_space(f.space(), within.space(), "is_lsc");
  auto r = subtree_range(f, within);
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (!within[i]) continue;
    auto t = tail_range(f.space(), r, i);
    if (t && t->second < f[i]) return false;
  }
  return true;
}

bool is_continuous_on(const PatternFn& f, const Mark& within) {
  return discontinuity_set(f, within).empty();
}

Mark discontinuity_set(const PatternFn& f, const Mark& within) {
  require_same_space(f.space(), within.space(), "discontinuity_set");
  auto r = subtree_range(f, within);
  Mark out(f.space());
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (!within[i]) continue;
    auto t = tail_range(f.space(), r, i);
    out.set(i, t && (t->first != f[i] || t->second != f[i]));
  }
  return out;
}

bool is_usc(const PatternFn& f, const ClosedMark& within) {
  require_nonempty(within);
  return is_usc_on(f, within.mark());
}

bool is_lsc(const PatternFn& f, const ClosedMark& within) {
  require_nonempty(within);
  return is_lsc_on(f, within.mark());
}

bool is_continuous(const PatternFn& f, const ClosedMark& within) {
  require_nonempty(within);
  return is_continuous_on(f, within.mark());
}

}  // namespace baire
