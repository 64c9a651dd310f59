#include "baire/dnorm.hpp"

#include <algorithm>

#include "baire/errors.hpp"
#include "baire/oscillation.hpp"

namespace baire {

DiffClosed DiffClosed::of(const Mark& set, const Mark& ambient) {
  require_same_space(set.space(), ambient.space(), "DiffClosed::of");
  if (!set.subset_of(ambient)) throw PreconditionFailed("set is not inside its ambient subspace");
  Mark outer = closure_in(set, ambient);
  Mark minus = outer - set;
  if (!is_closed_in(minus, ambient)) throw NotClosed("set is not a difference of closed sets");
  return DiffClosed{std::move(outer), std::move(minus)};
}

bool DiffClosed::valid_in(const Mark& ambient) const {
  if (!outer.space().same_shape(ambient.space()) || !minus.space().same_shape(ambient.space())) return false;
  return outer.subset_of(ambient) && minus.subset_of(outer) && is_closed_in(outer, ambient) &&
         is_closed_in(minus, ambient);
}

PatternFn SimpleDCS::evaluate() const {
  PatternFn out(space);
  for (const auto& t : terms) out = out + t.coeff * PatternFn::indicator(t.set.set());
  return out;
}

bool SimpleDCS::pairwise_disjoint() const {
  Mark seen(space);
  for (const auto& t : terms) {
    Mark s = t.set.set();
    if (!(s & seen).empty()) return false;
    seen = seen | s;
  }
  return true;
}

CertPtr make_nonneg_lsc() { return std::make_shared<DNormCertificate>(DNormCertificate{cert::NonnegLsc{}}); }

CertPtr make_lsc_split(PatternFn u, PatternFn v) {
  return std::make_shared<DNormCertificate>(DNormCertificate{cert::LscSplit{std::move(u), std::move(v)}});
}

CertPtr make_sum(std::vector<cert::SumTerm> terms) {
  return std::make_shared<DNormCertificate>(DNormCertificate{cert::Sum{std::move(terms)}});
}

CertPtr make_extension(DiffClosed region, Rat factor, CertPtr inner) {
  return std::make_shared<DNormCertificate>(
      DNormCertificate{cert::Extension{std::move(region), factor, std::move(inner)}});
}

CertPtr make_localization(std::vector<cert::LocalPart> parts) {
  return std::make_shared<DNormCertificate>(DNormCertificate{cert::Localization{std::move(parts)}});
}

CertPtr make_continuous_on_open(Mark support) {
  return std::make_shared<DNormCertificate>(DNormCertificate{cert::ContinuousOnOpen{std::move(support)}});
}

namespace {

struct Reject {
  Rejection why;
};

class Checker {
 public:
  Rat check(const PatternFn& f, const Mark& dom, const DNormCertificate& c, const std::string& path) {
    Rat bound = std::visit([&](const auto& node) { return visit(f, dom, node, path); }, c.node);
    if (bound < sup_norm_on(f, dom)) {
      throw SoundnessFault(path + ": accepted bound " + bound.str() + " below the sup norm");
    }
    return bound;
  }

 private:
  [[noreturn]] static void fail(const std::string& path, std::string condition) {
    throw Reject{Rejection{path, std::move(condition)}};
  }

  static void need(bool ok, const std::string& path, const char* condition) {
    if (!ok) fail(path, condition);
  }

  static void same_space(const Space& a, const Space& b, const std::string& path) {
    need(a.same_shape(b), path, "decoration lives on a different space");
  }

  Rat visit(const PatternFn& f, const Mark& dom, const cert::NonnegLsc&, const std::string& path) {
    auto r = sup_inf(f, dom);
    need(!r || r->second.sign() >= 0, path + "/NonnegLsc", "f is negative somewhere");
    need(is_lsc_on(f, dom), path + "/NonnegLsc", "f is not lower semicontinuous");
    return sup_norm_on(f, dom);
  }

  Rat visit(const PatternFn& f, const Mark& dom, const cert::LscSplit& n, const std::string& path) {
    const std::string p = path + "/LscSplit";
    same_space(n.u.space(), f.space(), p);
    same_space(n.v.space(), f.space(), p);
    auto ru = sup_inf(n.u, dom);
    auto rv = sup_inf(n.v, dom);
    need(!ru || ru->second.sign() >= 0, p, "u is negative somewhere");
    need(!rv || rv->second.sign() >= 0, p, "v is negative somewhere");
    need(is_lsc_on(n.u, dom), p, "u is not lower semicontinuous");
    need(is_lsc_on(n.v, dom), p, "v is not lower semicontinuous");
    need(agree_on(n.u - n.v, f, dom), p, "u - v differs from f");
    return sup_norm_on(n.u + n.v, dom);
  }

  Rat visit(const PatternFn& f, const Mark& dom, const cert::Sum& n, const std::string& path) {
    const std::string p = path + "/Sum";
    PatternFn total(f.space());
    Rat bound(0);
    for (std::size_t k = 0; k < n.terms.size(); ++k) {
      const auto& t = n.terms[k];
      const std::string pk = p + "[" + std::to_string(k) + "]";
      same_space(t.part.space(), f.space(), pk);
      need(t.cert != nullptr, pk, "missing certificate");
      total = total + t.part;
      bound += check(t.part, dom, *t.cert, pk);
    }
    need(agree_on(total, f, dom), p, "parts do not sum to f");
    return bound;
  }

  Rat visit(const PatternFn& f, const Mark& dom, const cert::Extension& n, const std::string& path) {
    const std::string p = path + "/Extension";
    same_space(n.region.outer.space(), f.space(), p);
    same_space(n.region.minus.space(), f.space(), p);
    need(n.region.outer.subset_of(dom), p, "outer set leaves the domain");
    need(n.region.minus.subset_of(n.region.outer), p, "minus set is not inside the outer set");
    need(is_closed_in(n.region.outer, dom), p, "outer set is not closed");
    need(is_closed_in(n.region.minus, dom), p, "minus set is not closed");
    Mark w = n.region.set();
    need(vanishes_on(f, dom - w), p, "f does not vanish off the region");
    need(n.factor == Rat(2) || (n.factor == Rat(1) && is_open_in(w, dom)), p,
         "factor must be 2, or 1 for an open region");
    need(n.inner != nullptr, p, "missing certificate");
    return n.factor * check(f, w, *n.inner, p);
  }

  Rat visit(const PatternFn& f, const Mark& dom, const cert::Localization& n, const std::string& path) {
    const std::string p = path + "/Localization";
    Mark covered(f.space());
    std::vector<Mark> closures;
    Rat bound(0);
    for (std::size_t k = 0; k < n.parts.size(); ++k) {
      const auto& part = n.parts[k];
      const std::string pk = p + "[" + std::to_string(k) + "]";
      same_space(part.support.space(), f.space(), pk);
      need(part.support.subset_of(dom), pk, "support leaves the domain");
      need(is_open_in(part.support, dom), pk, "support is not open");
      Mark cl = closure_in(part.support, dom);
      for (const auto& other : closures) need((cl & other).empty(), pk, "support closures touch");
      closures.push_back(cl);
      covered = covered | part.support;
      need(part.cert != nullptr, pk, "missing certificate");
      bound = std::max(bound, check(f, part.support, *part.cert, pk));
    }
    need(vanishes_on(f, dom - covered), p, "f does not vanish off the supports");
    return bound;
  }

  Rat visit(const PatternFn& f, const Mark& dom, const cert::ContinuousOnOpen& n, const std::string& path) {
    const std::string p = path + "/ContinuousOnOpen";
    same_space(n.support.space(), f.space(), p);
    need(n.support.subset_of(dom), p, "support leaves the domain");
    need(is_open_in(n.support, dom), p, "support is not open");
    need(vanishes_on(f, dom - n.support), p, "f does not vanish off the support");
    need(is_continuous_on(f, n.support), p, "f is not continuous on the support");
    return sup_norm_on(f, dom);
  }
};

}  // namespace

CheckResult check_certificate_on(const PatternFn& f, const Mark& domain, const DNormCertificate& c) {
  require_same_space(f.space(), domain.space(), "check_certificate");
  try {
    return CheckResult{Checker{}.check(f, domain, c, "root"), std::nullopt};
  } catch (const Reject& r) {
    return CheckResult{std::nullopt, r.why};
  }
}

CheckResult check_certificate(const PatternFn& f, const DNormCertificate& c) {
  return check_certificate_on(f, Mark(f.space(), true), c);
}

SimpleDCS to_simple_dcs_on(const PatternFn& f, const Mark& domain) {
  require_same_space(f.space(), domain.space(), "to_simple_dcs");
  const Space& s = f.space();
  SimpleDCS out{s, {}};
  Mark current = domain;
  // Each K_{j+1} is closed in K_j and lies in its derived set, so the chain
  // is finite. The level sets of f on K_j \ K_{j+1} are relatively clopen
  // there, hence differences of closed sets of the domain.
  while (!current.empty()) {
    Mark next = discontinuity_set(f, current);
    if (next == current) throw SoundnessFault("discontinuity set failed to shrink");
    Mark layer = current - next;
    std::vector<Rat> levels;
    for (NodeId i = 0; i < s.size(); ++i) {
      if (layer[i] && !f[i].is_zero()) levels.push_back(f[i]);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (const Rat& c : levels) {
      Mark w(s);
      for (NodeId i = 0; i < s.size(); ++i) w.set(i, layer[i] && f[i] == c);
      out.terms.push_back(SimpleTerm{c, DiffClosed::of(w, domain)});
    }
    current = std::move(next);
  }
  return out;
}

SimpleDCS to_simple_dcs(const PatternFn& f) { return to_simple_dcs_on(f, Mark(f.space(), true)); }

CertPtr simple_dcs_certificate(const SimpleDCS& s, const Mark& ambient) {
  std::vector<cert::SumTerm> terms;
  for (const auto& t : s.terms) {
    Mark w = t.set.set();
    Rat factor = is_open_in(w, ambient) ? Rat(1) : Rat(2);
    terms.push_back(cert::SumTerm{t.coeff * PatternFn::indicator(w),
                                  make_extension(t.set, factor, make_continuous_on_open(w))});
  }
  return make_sum(std::move(terms));
}

DNormBounds bounds(const PatternFn& f, const std::vector<CertPtr>& extra) {
  const Space& s = f.space();
  const Mark full(s, true);
  const Rat sup = f.sup_norm();
  IndexReport idx = full_index(f);

  DNormBounds out;
  out.lower = sup;
  for (const auto& [eps, i] : idx.per_eps) out.lower = std::max(out.lower, eps * Rat(i) / Rat(4));

  std::vector<std::pair<std::string, CertPtr>> candidates;
  candidates.emplace_back("simple-dcs", simple_dcs_certificate(to_simple_dcs(f), full));
  auto [hi, lo] = *sup_inf(f, full);
  if (is_lsc_on(f, full)) {
    if (lo.sign() >= 0) candidates.emplace_back("nonneg-lsc", make_nonneg_lsc());
    PatternFn c(s, std::max(Rat(0), -lo));
    candidates.emplace_back("lsc-split", make_lsc_split(f + c, c));
  }
  if (is_usc_on(f, full)) {
    PatternFn lambda(s, std::max(Rat(0), hi));
    candidates.emplace_back("usc-split", make_lsc_split(lambda, lambda - f));
  }
  if (is_continuous_on(f, full)) candidates.emplace_back("continuous", make_continuous_on_open(full));
  for (const auto& c : extra) candidates.emplace_back("supplied", c);

  for (const auto& [source, cert] : candidates) {
    CheckResult r = check_certificate(f, *cert);
    if (!r.ok()) continue;
    if (!out.certificate || *r.bound < out.upper) {
      out.upper = *r.bound;
      out.certificate = cert;
      out.certificate_source = source;
    }
  }
  if (!out.certificate) throw SoundnessFault("no candidate certificate validated");
  if (out.upper < out.lower) throw SoundnessFault("certified upper bound below the proven lower bound");

  out.annotations.index_lower_sharp = idx.quasinorm;
  out.annotations.optimal_upper = Rat(2 * idx.index + 1) * sup;
  out.annotations.note = "uncertified sharper bounds: sup eps*i(f,eps) <= ||f||_D <= (2 i(f) + 1) ||f||_inf";
  return out;
}

}  // namespace baire
