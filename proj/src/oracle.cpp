#include "baire/oracle.hpp"

#include <algorithm>

#include "baire/errors.hpp"

namespace baire::oracle {
namespace {

struct Agg {
  bool any = false;
  Rat hi, lo;
  void take(const Rat& a, const Rat& b) {
    if (!any) {
      hi = a;
      lo = b;
      any = true;
    } else {
      hi = std::max(hi, a);
      lo = std::min(lo, b);
    }
  }
  void take(const Agg& o) {
    if (o.any) take(o.hi, o.lo);
  }
};

// Max/min of g over member vertices of each subtree.
std::vector<Agg> subtree_aggs(const Expansion& e, const std::vector<Rat>& g, const Members& member) {
  std::vector<Agg> out(e.vertices.size());
  for (std::size_t v = e.vertices.size(); v-- > 0;) {
    Agg a;
    if (member[v]) a.take(g[v], g[v]);
    for (auto c : e.vertices[v].children) a.take(out[c]);
    out[v] = a;
  }
  return out;
}

// Aggregate over N_k(v) intersected with the member set.
Agg neighbourhood(const Expansion& e, const std::vector<Agg>& sub, const std::vector<Rat>& g, const Members& member,
                  std::size_t v, unsigned k) {
  Agg a;
  if (member[v]) a.take(g[v], g[v]);
  for (const auto& t : e.vertices[v].tail) {
    if (t.copy >= k) a.take(sub[t.vertex]);
  }
  return a;
}

// Aggregate over N_k(v) \ {v}, intersected with the member set.
Agg punctured(const Expansion& e, const std::vector<Agg>& sub, std::size_t v, unsigned k) {
  Agg a;
  for (const auto& t : e.vertices[v].tail) {
    if (t.copy >= k) a.take(sub[t.vertex]);
  }
  return a;
}

}  // namespace

Members lift(const Expansion& e, const Mark& mark) {
  Members out(e.vertices.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = mark[e.vertices[v].pattern] ? 1 : 0;
  return out;
}

std::vector<Rat> lift(const Expansion& e, const PatternFn& f) {
  std::vector<Rat> out(e.vertices.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = f[e.vertices[v].pattern];
  return out;
}

Members cluster_points(const Expansion& e, const Members& member) {
  std::vector<Rat> zero(e.vertices.size(), Rat(0));
  auto sub = subtree_aggs(e, zero, member);
  Members out(e.vertices.size(), 0);
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (e.vertices[v].tail.empty()) continue;
    bool every = true;
    for (unsigned k = 0; k < e.copies && every; ++k) every = punctured(e, sub, v, k).any;
    out[v] = every ? 1 : 0;
  }
  return out;
}

std::vector<int> heights(const Expansion& e, const Members& member) {
  std::vector<int> h(e.vertices.size(), -1);
  Members current = member;
  for (int level = 0;; ++level) {
    bool any = false;
    for (std::size_t v = 0; v < current.size(); ++v) {
      if (current[v]) {
        h[v] = level;
        any = true;
      }
    }
    if (!any) break;
    auto next = cluster_points(e, current);
    for (std::size_t v = 0; v < next.size(); ++v) next[v] = next[v] && current[v];
    current = std::move(next);
  }
  return h;
}

bool is_closed(const Expansion& e, const Members& member) {
  auto cl = cluster_points(e, member);
  for (std::size_t v = 0; v < cl.size(); ++v) {
    if (cl[v] && !member[v]) return false;
  }
  return true;
}

Envelopes envelopes(const Expansion& e, const std::vector<Rat>& f, const Members& member) {
  const std::size_t n = e.vertices.size();
  Envelopes out{std::vector<Rat>(n), std::vector<Rat>(n), std::vector<Rat>(n), std::vector<Rat>(n),
                std::vector<Rat>(n)};
  auto sub = subtree_aggs(e, f, member);
  for (std::size_t v = 0; v < n; ++v) {
    if (!member[v]) continue;
    std::optional<Rat> upper, lower, uosc, oosc;
    for (unsigned k = 0; k < e.copies; ++k) {
      Agg a = neighbourhood(e, sub, f, member, v, k);
      Rat dev = std::max(a.hi - f[v], f[v] - a.lo);
      Rat spread = a.hi - a.lo;
      upper = upper ? std::min(*upper, a.hi) : a.hi;
      lower = lower ? std::max(*lower, a.lo) : a.lo;
      uosc = uosc ? std::min(*uosc, dev) : dev;
      oosc = oosc ? std::min(*oosc, spread) : spread;
    }
    out.upper[v] = *upper;
    out.lower[v] = *lower;
    out.uosc[v] = *uosc;
    out.oosc[v] = *oosc;
  }
  auto usub = subtree_aggs(e, out.uosc, member);
  for (std::size_t v = 0; v < n; ++v) {
    if (!member[v]) continue;
    std::optional<Rat> osc;
    for (unsigned k = 0; k < e.copies; ++k) {
      Agg a = neighbourhood(e, usub, out.uosc, member, v, k);
      osc = osc ? std::min(*osc, a.hi) : a.hi;
    }
    out.osc[v] = *osc;
  }
  return out;
}

bool is_usc(const Expansion& e, const std::vector<Rat>& f, const Members& member) {
  auto env = envelopes(e, f, member);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (member[v] && env.upper[v] != f[v]) return false;
  }
  return true;
}

bool is_lsc(const Expansion& e, const std::vector<Rat>& f, const Members& member) {
  auto env = envelopes(e, f, member);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (member[v] && env.lower[v] != f[v]) return false;
  }
  return true;
}

bool is_continuous(const Expansion& e, const std::vector<Rat>& f, const Members& member) {
  auto env = envelopes(e, f, member);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (member[v] && !env.uosc[v].is_zero()) return false;
  }
  return true;
}

std::vector<Members> derivation(const Expansion& e, const std::vector<Rat>& f, const Members& member, const Rat& eps,
                                bool upper_flavor) {
  std::vector<Members> trail{member};
  const std::size_t cap = e.vertices.size() + 2;
  while (std::any_of(trail.back().begin(), trail.back().end(), [](char c) { return c != 0; })) {
    if (trail.size() > cap) throw SoundnessFault("oracle derivation does not terminate");
    const Members& current = trail.back();
    auto env = envelopes(e, f, current);
    const auto& measure = upper_flavor ? env.oosc : env.osc;
    Members next(current.size(), 0);
    for (std::size_t v = 0; v < next.size(); ++v) next[v] = current[v] && measure[v] >= eps;
    trail.push_back(std::move(next));
  }
  return trail;
}

int index(const Expansion& e, const std::vector<Rat>& f, const Members& member, const Rat& eps) {
  return static_cast<int>(derivation(e, f, member, eps, false).size()) - 2;
}

}  // namespace baire::oracle
