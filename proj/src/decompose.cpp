#include "baire/decompose.hpp"

#include <algorithm>

#include "baire/errors.hpp"
#include "baire/oscillation.hpp"

namespace baire {
namespace {

Rat pow2(int k) { return Rat(std::int64_t{1} << k); }

// step * floor(f / step) on U, zero elsewhere.
PatternFn quantize(const PatternFn& f, const Mark& U, const Rat& step) {
  PatternFn out(f.space());
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (U[i]) out.set(i, step * Rat(floor(f[i] / step)));
  }
  return out;
}

struct Stairs {
  PatternFn approximation;
  PatternFn residual;
  Rat bound;
};

// Quantizes f (continuous on U, open in dom, zero off U) with the given step.
// The residual is nonnegative, below the step, and lsc on dom.
Stairs stairs(const PatternFn& f, const Mark& dom, const Mark& U, const Rat& step) {
  Stairs s{quantize(f, U, step), PatternFn(f.space()), Rat(0)};
  s.residual = cut(f - s.approximation, dom);
  CheckResult r = check_certificate_on(s.residual, dom, *make_nonneg_lsc());
  if (!r.ok()) throw SoundnessFault("staircase residual is not nonnegative lsc: " + r.rejection->condition);
  s.bound = *r.bound;
  return s;
}

Rat checked_bound(const PatternFn& f, const Mark& dom, const CertPtr& c, const char* what) {
  CheckResult r = check_certificate_on(f, dom, *c);
  if (!r.ok()) {
    throw SoundnessFault(std::string(what) + " rejected at " + r.rejection->node_path + ": " + r.rejection->condition);
  }
  return *r.bound;
}

struct CoreOut {
  PatternFn simple;
  CertPtr residual_cert;
  Rat residual_bound;
  CertPtr norm_cert;
  Rat norm_bound;
};

// f lives on the subspace dom, is supported on U (open in dom) and has
// i(f|U) <= n. Returns a simple approximation within tol_res and a norm
// certificate within lambda_n ||f|| + tol_norm, both relative to dom.
CoreOut sd_core(const PatternFn& f, const Mark& dom, const Mark& U, int n, const Rat& tol_norm, const Rat& tol_res,
                int depth, std::vector<TraceStep>& trace) {
  const Space& space = f.space();
  const Rat sup = sup_norm_on(f, dom);
  CoreOut out{PatternFn(space), nullptr, Rat(0), nullptr, Rat(0)};

  if (n == 0) {
    if (!is_continuous_on(f, U)) throw SoundnessFault("index-0 piece is not continuous on its support");
    out.norm_cert = make_continuous_on_open(U);
    if (sup.is_zero()) {
      out.residual_cert = make_sum({});
    } else {
      Stairs s = stairs(f, dom, U, sup / Rat(ceil(sup / tol_res)));
      out.simple = s.approximation;
      out.residual_cert = make_nonneg_lsc();
    }
  } else {
    const Rat lam = lambda_n(n);
    const Rat delta = tol_norm / Rat(2);
    std::vector<cert::SumTerm> norm_terms;
    std::vector<cert::SumTerm> residual_terms;
    PatternFn g = f;
    Mark support = U;
    for (int j = 1; !vanishes_on(g, dom); ++j) {
      if (j > 62) throw SoundnessFault("decomposition loop failed to terminate");
      if (full_index_on(g, support).index > n) throw SoundnessFault("loop remainder left the class G_n");
      const Rat eps = delta / (lam * pow2(j));
      OscReport rep = envelopes_on(g, support);
      Mark W(space);
      for (NodeId i = 0; i < space.size(); ++i) W.set(i, support[i] && rep.osc[i] >= eps);
      Mark V = support - W;

      std::vector<cert::SumTerm> h_terms;
      PatternFn h(space);
      if (!W.empty()) {
        if (full_index_on(g, W).index > n - 1) throw SoundnessFault("index did not drop on the oscillation set");
        PatternFn gW = cut(g, W);
        CoreOut rec = sd_core(gW, W, W, n - 1, tol_norm / pow2(j + 2), tol_res / pow2(j + 2), depth + 1, trace);
        DiffClosed region = DiffClosed::of(W, dom);
        Rat factor = is_open_in(W, dom) ? Rat(1) : Rat(2);
        h_terms.push_back({gW, make_extension(region, factor, rec.norm_cert)});
        residual_terms.push_back({cut(gW - rec.simple, W), make_extension(region, factor, rec.residual_cert)});
        out.simple = out.simple + cut(rec.simple, W);
        h = h + gW;
      }
      PatternFn phi = interpose_on(g, eps, V);
      if (!V.empty()) {
        h_terms.push_back({phi, make_continuous_on_open(V)});
        Rat phi_sup = sup_norm_on(phi, V);
        if (!phi_sup.is_zero()) {
          Rat budget = tol_res / pow2(j + 1);
          Stairs s = stairs(phi, dom, V, phi_sup / Rat(ceil(phi_sup / budget)));
          residual_terms.push_back({s.residual, make_nonneg_lsc()});
          out.simple = out.simple + s.approximation;
        }
        h = h + phi;
      }
      CertPtr h_cert = make_sum(std::move(h_terms));
      Rat h_bound = checked_bound(h, dom, h_cert, "loop step certificate");
      norm_terms.push_back({h, h_cert});

      g = cut(g - phi, V);
      support = V;
      trace.push_back(TraceStep{depth, j, eps, W.count(), h_bound, sup_norm_on(g, dom)});

      if (vanishes_on(g, dom)) break;
      CertPtr tail_cert = simple_dcs_certificate(to_simple_dcs_on(g, dom), dom);
      if (checked_bound(g, dom, tail_cert, "tail certificate") <= delta / pow2(j)) {
        norm_terms.push_back({g, tail_cert});
        out.simple = out.simple + g;
        break;
      }
    }
    out.norm_cert = make_sum(std::move(norm_terms));
    out.residual_cert = make_sum(std::move(residual_terms));
  }

  out.norm_bound = checked_bound(f, dom, out.norm_cert, "norm certificate");
  out.residual_bound = checked_bound(f - out.simple, dom, out.residual_cert, "residual certificate");
  if (out.norm_bound > lambda_n(n) * sup + tol_norm) throw SoundnessFault("norm bound exceeds lambda_n ||f|| + tol");
  if (out.residual_bound > tol_res) throw SoundnessFault("residual bound exceeds its budget");
  return out;
}

}  // namespace

PatternFn interpose_on(const PatternFn& f, const Rat& eps, const Mark& within) {
  require_same_space(f.space(), within.space(), "interpose");
  const Space& s = f.space();
  OscReport rep = envelopes_on(f, within);
  for (NodeId i = 0; i < s.size(); ++i) {
    if (within[i] && rep.osc[i] > eps) {
      throw PreconditionFailed("oscillation " + rep.osc[i].str() + " exceeds eps " + eps.str(),
                               to_string(s.address(i)));
    }
  }
  PatternFn phi(s);
  // Preorder: a point's tail is visited after it, so the first write wins.
  std::vector<char> assigned(s.size(), 0);
  for (NodeId i = 0; i < s.size(); ++i) {
    if (!within[i] || assigned[i]) continue;
    phi.set(i, f[i]);
    assigned[i] = 1;
    for (NodeId t = s.tail_begin(i); t < s.tail_end(i); ++t) {
      if (within[t] && !assigned[t]) {
        phi.set(t, f[i]);
        assigned[t] = 1;
      }
    }
  }
  const Rat bound = sup_norm_on(f, within);
  for (NodeId i = 0; i < s.size(); ++i) {
    if (!within[i]) continue;
    if (abs(f[i] - phi[i]) > eps || abs(phi[i]) > bound) throw SoundnessFault("interposition contract violated");
  }
  if (!is_continuous_on(phi, within)) throw SoundnessFault("interposition is not continuous");
  return phi;
}

PatternFn interpose(const PatternFn& f, const Rat& eps, const ClosedMark& within) {
  if (within.empty()) throw EmptySubspaceError("interpose on the empty subspace");
  return interpose_on(f, eps, within.mark());
}

StaircaseResult staircase(const PatternFn& f, const Mark& U, int n) {
  require_same_space(f.space(), U.space(), "staircase");
  if (n < 1) throw std::invalid_argument("staircase needs n >= 1");
  const Mark full(f.space(), true);
  if (f.sup_norm() > Rat(1)) throw PreconditionFailed("staircase needs ||f||_inf <= 1");
  if (!is_open_in(U, full)) throw PreconditionFailed("staircase support is not open");
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (!U[i] && !f[i].is_zero()) throw PreconditionFailed("f does not vanish off U", to_string(f.space().address(i)));
  }
  if (!is_continuous_on(f, U)) throw PreconditionFailed("f is not continuous on U");

  Stairs s = stairs(f, full, U, Rat(1, n));
  return StaircaseResult{to_simple_dcs(s.approximation), s.approximation, s.residual, make_nonneg_lsc(),
                         Rat(1, n), s.bound};
}

void GnWitness::validate() const {
  require_same_space(f.space(), support.space(), "GnWitness");
  if (n < 0) throw PreconditionFailed("negative witness level");
  if (!is_open_in(support, Mark(f.space(), true))) throw PreconditionFailed("witness support is not open");
  for (NodeId i = 0; i < f.space().size(); ++i) {
    if (!support[i] && !f[i].is_zero()) {
      throw PreconditionFailed("f does not vanish off the support", to_string(f.space().address(i)));
    }
  }
  if (full_index_on(f, support).index > n) throw PreconditionFailed("i(f|support) exceeds the witness level");
}

GnWitness GnWitness::of(const PatternFn& f) { return GnWitness{f, Mark(f.space(), true), full_index(f).index}; }

SDApprox sd_decompose(const GnWitness& w, const Rat& tol) {
  if (tol.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
  w.validate();
  const Mark full(w.f.space(), true);
  SDApprox out;
  out.path = "pipeline";
  CoreOut core = sd_core(w.f, full, w.support, w.n, tol, tol, 0, out.trace);
  out.approximation = core.simple;
  out.simple = to_simple_dcs(core.simple);
  if (!(out.simple.evaluate() == core.simple)) throw SoundnessFault("simple part does not re-evaluate");
  out.certificate = core.residual_cert;
  out.residual_bound = core.residual_bound;
  out.nominal_residual = tol;
  out.norm_certificate = core.norm_cert;
  out.norm_bound = core.norm_bound;
  out.chosen_index = w.n;
  return out;
}

SDApprox usc_sd_approx(const PatternFn& f, const Rat& eta) {
  if (eta.sign() <= 0) throw std::invalid_argument("eta must be positive");
  const Space& s = f.space();
  const Mark full(s, true);
  const bool usc = is_usc_on(f, full);
  if (!usc && !is_lsc_on(f, full)) throw PreconditionFailed("f is neither upper nor lower semicontinuous");

  IndexReport idx = full_index(f);
  std::optional<std::pair<Rat, int>> best;
  for (const auto& [eps, i] : idx.per_eps) {
    if (eps >= eta || eps * Rat(i) >= eta) continue;
    Rat cost = Rat(6) * eps * Rat(i + 1);
    if (!best || cost < Rat(6) * best->first * Rat(best->second + 1)) best = {eps, i};
  }
  // Continuous f has i(f, eps) = 0 for every eps, critical or not.
  if (!best && idx.index == 0) best = {eta / Rat(2), 0};
  if (!best) {
    SDApprox out = sd_decompose(GnWitness::of(f), eta);
    out.path = "pipeline";
    return out;
  }

  const auto [eps, n] = *best;
  DerivationTrail trail = derivation(f, eps);
  SDApprox out;
  out.path = "semicontinuous";
  out.chosen_eps = eps;
  out.chosen_index = n;
  PatternFn g(s);
  std::vector<cert::SumTerm> terms;
  for (std::size_t j = 0; j + 1 < trail.sets.size(); ++j) {
    Mark W = trail.sets[j] - trail.sets[j + 1];
    if (W.empty()) continue;
    PatternFn phi = interpose_on(f, eps, W);
    g = g + phi;
    PatternFn p = cut(f - phi, W);
    auto [hi, lo] = *sup_inf(p, W);
    CertPtr inner;
    if (usc) {
      PatternFn lam(s, std::max(Rat(0), hi));
      inner = make_lsc_split(lam, lam - p);
    } else {
      PatternFn lam(s, std::max(Rat(0), -lo));
      inner = make_lsc_split(p + lam, lam);
    }
    terms.push_back({p, make_extension(DiffClosed::of(W), Rat(2), inner)});
  }
  out.approximation = g;
  out.simple = to_simple_dcs(g);
  out.certificate = make_sum(std::move(terms));
  out.residual_bound = checked_bound(f - g, full, out.certificate, "semicontinuous residual certificate");
  out.nominal_residual = Rat(6) * eps * Rat(n + 1);
  if (out.residual_bound > out.nominal_residual) throw SoundnessFault("residual exceeds 6 eps (n + 1)");
  return out;
}

SdVerdict sd_test(const PatternFn& f, const Rat& tol) {
  SdVerdict v;
  IndexReport idx = full_index(f);
  v.index = idx.index;
  v.rank = rank(f.space());
  v.quasinorm = idx.quasinorm;
  v.small_eps_slope = idx.per_eps.empty() ? 0 : idx.per_eps.front().second;
  v.limit_condition = true;
  v.approximation = sd_decompose(GnWitness::of(f), tol);
  v.strong = v.index <= v.rank;
  return v;
}

}  // namespace baire
