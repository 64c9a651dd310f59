#include "baire/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "baire/decompose.hpp"
#include "baire/errors.hpp"
#include "baire/expansion.hpp"
#include "baire/oracle.hpp"
#include "baire/oscillation.hpp"
#include "baire/witness.hpp"

namespace baire {
namespace {

std::vector<Rat> merged(std::initializer_list<std::vector<Rat>> parts) {
  std::vector<Rat> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rat> scaled(const std::vector<Rat>& v, const Rat& c) {
  std::vector<Rat> out;
  for (const Rat& x : v) out.push_back(x * c);
  return out;
}

Mark level(const DerivationTrail& t, std::size_t j) {
  return j < t.sets.size() ? t.sets[j] : Mark(t.sets.front().space());
}

// Runs `body` per entry, turning engine exceptions into violations.
template <class Body>
void for_each_entry(const Corpus& corpus, SuiteResult& r, Body body) {
  for (const auto& e : corpus) {
    try {
      if (body(e)) ++r.checked;
    } catch (const std::exception& ex) {
      r.violations.push_back(e.name + ": " + ex.what());
    }
  }
}

void expect(SuiteResult& r, bool ok, const std::string& what) {
  if (!ok) r.violations.push_back(what);
}

}  // namespace

SuiteResult suite_witness(const Corpus&, std::uint64_t) {
  SuiteResult r{"witness", 0, {}};
  const std::vector<Rat> grid{Rat(1, 10), Rat(1, 2), Rat(1)};
  for (int n = 1; n <= 6; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    WitnessReport w = verify_witness(n, grid);
    for (const auto& v : w.violations) r.violations.push_back(tag + v);
    for (const auto& [eps, i] : w.indices) expect(r, i == n, tag + "index at " + eps.str());
    for (bool m : w.trail_matches) expect(r, m, tag + "trail differs from the derived-set chain");
    expect(r, w.upper <= Rat(n + 1), tag + "certified bound " + w.upper.str() + " above n + 1");
    expect(r, w.lower >= Rat(n, 4), tag + "lower bound below n/4");
    expect(r, w.E == build_E(n), tag + "E differs between builders");
    ++r.checked;
  }
  return r;
}

SuiteResult suite_pipeline(const Corpus& corpus, std::uint64_t) {
  SuiteResult r{"pipeline", 0, {}};
  const Rat tol(1, 100);
  for_each_entry(corpus, r, [&](const CorpusEntry& e) {
    const PatternFn& f = e.f;
    if (rank(f.space()) > 3 || f.sup_norm() > Rat(1)) return false;
    GnWitness w = GnWitness::of(f);
    SDApprox a = sd_decompose(w, tol);
    CheckResult res = check_certificate(f - a.approximation, *a.certificate);
    expect(r, res.ok() && *res.bound == a.residual_bound, e.name + ": residual certificate does not revalidate");
    expect(r, a.residual_bound <= tol, e.name + ": residual bound above tolerance");
    CheckResult norm = check_certificate(f, *a.norm_certificate);
    Rat target = lambda_n(w.n) * f.sup_norm() + tol;
    expect(r, norm.ok() && *norm.bound <= target,
           e.name + ": norm bound " + (norm.ok() ? norm.bound->str() : "rejected") + " above " + target.str());
    expect(r, a.simple.evaluate() == a.approximation, e.name + ": simple part does not evaluate to the approximation");
    expect(r, a.simple.pairwise_disjoint(), e.name + ": simple part terms overlap");
    return true;
  });
  return r;
}

SuiteResult suite_staircase(const Corpus& corpus, std::uint64_t seed) {
  SuiteResult r{"staircase", 0, {}};
  CorpusRng rng(seed ^ 0x5157a1cull);
  for_each_entry(corpus, r, [&](const CorpusEntry& e) {
    const Space& s = e.f.space();
    Mark U = ~random_closed(rng, s, 15).mark();
    PatternFn f = cut(continuous_variant(e.f), U);
    if (f.sup_norm() > Rat(1)) f = scale(Rat(1) / f.sup_norm(), f);
    for (int n : {1, 2, 4, 8}) {
      const std::string tag = e.name + " n=" + std::to_string(n) + ": ";
      StaircaseResult st = staircase(f, U, n);
      expect(r, is_lsc(st.residual, ClosedMark::full(s)), tag + "residual is not lsc");
      CheckResult c = check_certificate(st.residual, *st.residual_certificate);
      expect(r, c.ok() && *c.bound == st.certified_bound, tag + "residual certificate does not revalidate");
      expect(r, st.certified_bound <= Rat(1, n), tag + "residual bound above 1/n");
      expect(r, st.simple.evaluate() == st.approximation, tag + "level sets do not evaluate to the staircase");
      expect(r, st.approximation + st.residual == f, tag + "staircase plus residual differs from f");
    }
    return true;
  });
  return r;
}

SuiteResult suite_algebra(const Corpus& corpus, std::uint64_t seed) {
  SuiteResult r{"algebra", 0, {}};
  CorpusRng rng(seed ^ 0xa16eb4aull);
  const CorpusSpec spec;
  std::size_t containment_pairs = 0;
  for_each_entry(corpus, r, [&](const CorpusEntry& e) {
    const PatternFn& f = e.f;
    const Space& s = f.space();
    PatternFn g = random_fn(rng, s, spec.values);
    if (rng.chance(30)) g = continuous_variant(g);
    const std::string tag = e.name + ": ";
    const auto Df = critical_set(f), Dg = critical_set(g);

    PatternFn sum = f + g;
    for (const Rat& eps : merged({critical_set(sum), scaled(Df, Rat(2)), scaled(Dg, Rat(2))})) {
      expect(r, index(sum, eps) <= index(f, eps / Rat(2)) + index(g, eps / Rat(2)), tag + "sum rule at " + eps.str());
    }
    const Rat F = f.sup_norm(), G = g.sup_norm();
    if (F.sign() > 0 && G.sign() > 0) {
      PatternFn prod = f * g;
      for (const Rat& eps : merged({critical_set(prod), scaled(Df, Rat(2) * G), scaled(Dg, Rat(2) * F)})) {
        expect(r, index(prod, eps) <= index(f, eps / (Rat(2) * G)) + index(g, eps / (Rat(2) * F)),
               tag + "product rule at " + eps.str());
      }
    }
    for (const PatternFn& h : {vmax(f, g), vmin(f, g)}) {
      for (const Rat& eps : merged({critical_set(h), Df, Dg})) {
        expect(r, index(h, eps) <= index(f, eps) + index(g, eps), tag + "lattice rule at " + eps.str());
      }
    }

    if (containment_pairs < 20 && rank(s) >= 1) {
      ++containment_pairs;
      for (const Rat& eps : critical_set(sum)) {
        DerivationTrail ts = derivation(sum, eps);
        DerivationTrail tf = derivation(f, eps / Rat(2));
        DerivationTrail tg = derivation(g, eps / Rat(2));
        const int max_n = static_cast<int>(ts.sets.size());
        for (int n = 1; n <= max_n; ++n) {
          Mark cover(s);
          for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<int> theta;
            int zeros = 0;
            for (int b = 0; b < n; ++b) {
              theta.push_back((bits >> b) & 1u);
              zeros += theta.back() == 0;
            }
            Mark L = ltheta_set(f, g, eps, theta).mark();
            cover = cover | L;
            Mark bound = level(tf, zeros) & level(tg, n - zeros);
            expect(r, L.subset_of(bound), tag + "L(theta) escapes os_j(f) & os_k(g) at " + eps.str());
          }
          expect(r, level(ts, n).subset_of(cover), tag + "os_n(f+g) not covered at " + eps.str());
        }
      }
    }
    return true;
  });
  expect(r, containment_pairs >= 20, "fewer than 20 pairs for the containment checks");
  return r;
}

SuiteResult suite_sandwich(const Corpus& corpus, std::uint64_t) {
  SuiteResult r{"sandwich", 0, {}};
  for_each_entry(corpus, r, [&](const CorpusEntry& e) {
    const PatternFn& f = e.f;
    const Space& s = f.space();
    OscReport rep = envelopes(f, ClosedMark::full(s));
    for (NodeId i = 0; i < s.size(); ++i) {
      expect(r, rep.oosc[i] <= Rat(2) * rep.osc[i] && rep.osc[i] <= rep.oosc[i],
             e.name + ": oscillation sandwich fails at " + to_string(s.address(i)));
      expect(r, rep.lower[i] <= f[i] && f[i] <= rep.upper[i], e.name + ": envelopes do not bracket f");
    }
    expect(r, is_usc_on(rep.upper, Mark(s, true)) && is_lsc_on(rep.lower, Mark(s, true)),
           e.name + ": envelopes not semicontinuous");
    expect(r, rep.oosc == rep.upper - rep.lower, e.name + ": upper oscillation differs from Uf - Lf");
    const auto D = critical_set(f);
    for (const Rat& eps : merged({D, scaled(D, Rat(1, 2))})) {
      DerivationTrail os = derivation(f, eps, Flavor::Osc);
      DerivationTrail k1 = derivation(f, eps, Flavor::UpperOsc);
      DerivationTrail k2 = derivation(f, Rat(2) * eps, Flavor::UpperOsc);
      std::size_t len = std::max({os.sets.size(), k1.sets.size(), k2.sets.size()});
      for (std::size_t j = 0; j < len; ++j) {
        expect(r, level(k2, j).subset_of(level(os, j)) && level(os, j).subset_of(level(k1, j)),
               e.name + ": nesting fails at eps " + eps.str() + ", j = " + std::to_string(j));
      }
    }
    return true;
  });
  return r;
}

SuiteResult suite_simple_dcs(const Corpus& corpus, std::uint64_t seed) {
  SuiteResult r{"simple-dcs", 0, {}};
  CorpusRng rng(seed ^ 0xdc5ull);
  for_each_entry(corpus, r, [&](const CorpusEntry& e) {
    const PatternFn& f = e.f;
    const Space& s = f.space();
    const Mark full(s, true);
    for (const PatternFn& g : {f, PatternFn::indicator(random_mark(rng, s, 50))}) {
      SimpleDCS d = to_simple_dcs(g);
      PatternFn back = d.evaluate();
      for (NodeId i = 0; i < s.size(); ++i) {
        expect(r, back.eval(s.address(i)) == g.eval(s.address(i)),
               e.name + ": re-evaluation differs at " + to_string(s.address(i)));
      }
      expect(r, d.pairwise_disjoint(), e.name + ": terms overlap");
      for (const auto& t : d.terms) {
        expect(r, t.set.valid_in(full) && !t.set.set().empty(), e.name + ": term is not a valid difference of closed sets");
      }
      std::size_t values = g.distinct_values().size();
      expect(r, d.terms.size() <= values * static_cast<std::size_t>(rank(s) + 1), e.name + ": too many terms");
    }
    return true;
  });
  return r;
}

SuiteResult suite_prop15(const Corpus&, std::uint64_t) {
  SuiteResult r{"prop15", 0, {}};
  Prop15Report p = prop15_demo(6);
  for (const auto& row : p.rows) {
    const std::string tag = "n=" + std::to_string(row.n) + ": ";
    expect(r, row.product == Rat(1), tag + "eps * i = " + row.product.str());
    expect(r, row.index == row.n, tag + "index " + std::to_string(row.index));
    expect(r, row.premise && row.norm_bound <= Rat(2), tag + "norm premise " + row.norm_bound.str());
    PatternFn chi = PatternFn::indicator(build_E(row.n));
    expect(r, index(scale(row.eps, chi), row.eps) == index(chi, Rat(1)), tag + "scale invariance");
    ++r.checked;
  }
  expect(r, p.rows.size() == 6 && p.conclusion, "conclusion flag not set");
  return r;
}

SuiteResult suite_oracle(const Corpus& corpus, std::uint64_t seed) {
  SuiteResult r{"oracle", 0, {}};
  CorpusRng rng(seed ^ 0x0dac1eull);
  for_each_entry(corpus, r, [&](const CorpusEntry& e) {
    const PatternFn& f = e.f;
    const Space& s = f.space();
    const Mark full(s, true);
    const Mark sub = random_mark(rng, s, 60);
    for (unsigned copies : {2u, 3u}) {
      const std::string tag = e.name + " copies=" + std::to_string(copies) + ": ";
      Expansion ex = expand(s, copies);
      auto fv = oracle::lift(ex, f);
      auto same_fn = [&](const std::vector<Rat>& per_vertex, const PatternFn& sym, const char* what) {
        auto c = oracle::collapse(ex, s.size(), per_vertex, Rat(0));
        expect(r, c && *c == sym.values(), tag + what + " disagrees");
      };
      auto same_mark = [&](const oracle::Members& per_vertex, const Mark& sym, const std::string& what) {
        auto c = oracle::collapse(ex, s.size(), per_vertex, char(0));
        expect(r, c && *c == sym.bits(), tag + what + " disagrees");
      };

      auto h = oracle::collapse(ex, s.size(), oracle::heights(ex, oracle::lift(ex, full)), -1);
      expect(r, h && *h == cb_heights(s), tag + "heights disagree");
      expect(r, oracle::is_closed(ex, oracle::lift(ex, sub)) == is_closed(sub), tag + "closedness disagrees");

      for (const Mark& dom : {full, closure(sub), sub}) {
        if (dom.empty()) continue;
        auto mem = oracle::lift(ex, dom);
        OscReport sym = envelopes_on(f, dom);
        oracle::Envelopes orc = oracle::envelopes(ex, fv, mem);
        same_fn(orc.upper, sym.upper, "upper envelope");
        same_fn(orc.lower, sym.lower, "lower envelope");
        same_fn(orc.uosc, sym.uosc, "lower oscillation");
        same_fn(orc.osc, sym.osc, "oscillation");
        same_fn(orc.oosc, sym.oosc, "upper oscillation");
        expect(r, oracle::is_usc(ex, fv, mem) == is_usc_on(f, dom), tag + "usc disagrees");
        expect(r, oracle::is_lsc(ex, fv, mem) == is_lsc_on(f, dom), tag + "lsc disagrees");
        expect(r, oracle::is_continuous(ex, fv, mem) == is_continuous_on(f, dom), tag + "continuity disagrees");
      }

      auto mem = oracle::lift(ex, full);
      for (const Rat& eps : critical_set(f)) {
        for (Flavor fl : {Flavor::Osc, Flavor::UpperOsc}) {
          DerivationTrail sym = derivation(f, eps, fl);
          auto orc = oracle::derivation(ex, fv, mem, eps, fl == Flavor::UpperOsc);
          expect(r, orc.size() == sym.sets.size(), tag + "trail length at " + eps.str());
          for (std::size_t j = 0; j < std::min(orc.size(), sym.sets.size()); ++j) {
            same_mark(orc[j], sym.sets[j], "trail set " + std::to_string(j) + " at " + eps.str());
          }
        }
        expect(r, oracle::index(ex, fv, mem, eps) == index(f, eps), tag + "index at " + eps.str());
      }
    }
    return true;
  });
  return r;
}

SuiteResult suite_index_norm(const Corpus& corpus, std::uint64_t) {
  SuiteResult r{"index-norm", 0, {}};
  for_each_entry(corpus, r, [&](const CorpusEntry& e) {
    DNormBounds b = bounds(e.f);
    expect(r, b.lower <= b.upper, e.name + ": lower bound above upper bound");
    expect(r, b.upper >= e.f.sup_norm(), e.name + ": upper bound below the sup norm");
    for (const auto& [eps, i] : full_index(e.f).per_eps) {
      expect(r, eps * Rat(i) <= Rat(4) * b.upper, e.name + ": eps * i above 4 ||f||_D at " + eps.str());
    }
    return true;
  });
  return r;
}

SuiteResult suite_identities(const Corpus& corpus, std::uint64_t seed) {
  SuiteResult r{"identities", 0, {}};
  CorpusRng rng(seed ^ 0x1de7ull);
  for_each_entry(corpus, r, [&](const CorpusEntry& e) {
    const PatternFn& f = e.f;
    const Space& s = f.space();
    IndexReport idx = full_index(f);
    expect(r, idx.beta == idx.index + 1, e.name + ": beta differs from i + 1");
    expect(r, idx.index <= rank(s), e.name + ": index above the rank");
    for (const Rat& lam : {Rat(-2), Rat(-1), Rat(1, 3), Rat(5)}) {
      PatternFn g = scale(lam, f);
      expect(r, full_index(g).index == idx.index, e.name + ": i(lambda f) differs at lambda " + lam.str());
      for (const auto& [eps, i] : idx.per_eps) {
        expect(r, index(g, abs(lam) * eps) == i, e.name + ": scaled index differs at " + eps.str());
      }
    }
    PatternFn a = vabs(f);
    for (const Rat& eps : merged({critical_set(a), idx.critical})) {
      expect(r, index(a, eps) <= index(f, eps), e.name + ": i(|f|) above i(f) at " + eps.str());
    }
    // Two-part closed cover K = W1 u W2.
    Mark w1 = closure(random_mark(rng, s, 40));
    Mark w2 = closure((~w1) | random_mark(rng, s, 30));
    OscReport whole = envelopes_on(f, Mark(s, true));
    OscReport p1 = envelopes_on(f, w1), p2 = envelopes_on(f, w2);
    for (NodeId i = 0; i < s.size(); ++i) {
      Rat combined = std::max(w1[i] ? p1.osc[i] : Rat(0), w2[i] ? p2.osc[i] : Rat(0));
      expect(r, combined == whole.osc[i], e.name + ": closed-cover identity fails at " + to_string(s.address(i)));
    }
    return true;
  });
  return r;
}

SuiteResult suite_topology(const Corpus& corpus, std::uint64_t seed) {
  SuiteResult r{"topology", 0, {}};
  CorpusRng rng(seed ^ 0x70b0ull);
  for_each_entry(corpus, r, [&](const CorpusEntry& e) {
    const Space& s = e.f.space();
    const int k = rank(s);
    ClosedMark d = derived_set(s);
    expect(r, is_closed(d.mark()), e.name + ": derived set not closed");
    if (k >= 1) {
      auto res = restrict(s, d);
      expect(r, res && rank(res->space) == k - 1, e.name + ": restriction to the derived set has the wrong rank");
    }
    Mark current(s, true);
    for (int j = 0; j <= k; ++j) {
      expect(r, !current.empty(), e.name + ": derived set empty too early");
      current = derived_in(current);
    }
    expect(r, current.empty(), e.name + ": derived set nonempty after rank + 1 steps");

    ClosedMark outer = random_closed(rng, s, 50);
    ClosedMark inner = ClosedMark::validate(closure_in(random_mark(rng, s, 40) & outer.mark(), outer.mark()));
    auto ro = restrict(s, outer);
    auto ri = restrict(s, inner);
    if (ro && ri) {
      std::vector<NodeId> from_old(s.size(), ~NodeId{0});
      for (NodeId n = 0; n < ro->to_old.size(); ++n) from_old[ro->to_old[n]] = n;
      Mark inner_in_outer(ro->space);
      for (NodeId n = 0; n < s.size(); ++n) {
        if (inner[n]) inner_in_outer.set(from_old[n], true);
      }
      auto twice = restrict(ro->space, ClosedMark::validate(inner_in_outer));
      bool same = twice && twice->space == ri->space;
      for (NodeId n = 0; same && n < twice->to_old.size(); ++n) {
        same = ro->to_old[twice->to_old[n]] == ri->to_old[n];
      }
      expect(r, same, e.name + ": nested restriction does not compose");
    }
    return true;
  });
  return r;
}

SuiteResult suite_semicontinuous(const Corpus& corpus, std::uint64_t) {
  SuiteResult r{"semicontinuous", 0, {}};
  for_each_entry(corpus, r, [&](const CorpusEntry& e) {
    const Space& s = e.f.space();
    const Mark full(s, true);
    OscReport rep = envelopes_on(e.f, full);
    for (const PatternFn& g : {rep.upper, rep.lower}) {
      for (const Rat& eta : {Rat(1, 2), Rat(2)}) {
        SDApprox a = usc_sd_approx(g, eta);
        CheckResult c = check_certificate(g - a.approximation, *a.certificate);
        expect(r, c.ok() && *c.bound == a.residual_bound, e.name + ": approximation certificate does not revalidate");
        if (a.path == "semicontinuous") {
          expect(r, a.residual_bound <= Rat(6) * *a.chosen_eps * Rat(a.chosen_index + 1),
                 e.name + ": residual above 6 eps (n + 1)");
        } else {
          expect(r, a.residual_bound <= eta, e.name + ": fallback residual above eta");
        }
      }
    }
    Rat top(0);
    for (NodeId i = 0; i < s.size(); ++i) top = std::max(top, rep.osc[i]);
    if (top.sign() > 0) {
      PatternFn phi = interpose(e.f, top, ClosedMark::full(s));
      expect(r, is_continuous_on(phi, full), e.name + ": interposition is not continuous");
      for (NodeId i = 0; i < s.size(); ++i) expect(r, abs(e.f[i] - phi[i]) <= top, e.name + ": interposition too far");
    }
    return true;
  });
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"witness",  "pipeline",   "staircase",  "algebra",
                                              "sandwich", "simple-dcs", "prop15",     "oracle",
                                              "index-norm", "identities", "topology", "semicontinuous"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Corpus& corpus, std::uint64_t seed) {
  static const std::map<std::string, std::function<SuiteResult(const Corpus&, std::uint64_t)>> table{
      {"witness", suite_witness},       {"pipeline", suite_pipeline},     {"staircase", suite_staircase},
      {"algebra", suite_algebra},       {"sandwich", suite_sandwich},     {"simple-dcs", suite_simple_dcs},
      {"prop15", suite_prop15},         {"oracle", suite_oracle},         {"index-norm", suite_index_norm},
      {"identities", suite_identities}, {"topology", suite_topology},     {"semicontinuous", suite_semicontinuous}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
  return it->second(corpus, seed);
}

}  // namespace baire
