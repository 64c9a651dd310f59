#include "baire/serialize.hpp"

#include <cstdio>
#include <functional>

#include "baire/errors.hpp"

namespace baire {
namespace {

std::string child_path(const std::string& path, const char* key) { return path + "." + key; }
std::string child_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, std::string("missing \"") + key + "\"");
  return *it;
}

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw ParseError(path, "unexpected key \"" + it.key() + "\"");
  }
}

// Parses a decorated tree. `decoration` names the per-node key ("" for bare
// spaces); decorations are collected in preorder, matching node ids.
Space parse_tree(const json& j, const std::string& path, const char* decoration, std::vector<std::pair<const json*, std::string>>& out) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  const bool decorated = decoration[0] != '\0';
  if (decorated) out.emplace_back(&member(j, decoration, path), child_path(path, decoration));
  const bool has_children = j.contains("prefix") || j.contains("cycle");
  if (auto it = j.find("leaf"); it != j.end()) {
    if (!it->is_boolean() || !it->get<bool>()) throw ParseError(child_path(path, "leaf"), "must be true");
    if (has_children) throw ParseError(path, "a leaf has no prefix or cycle");
  }
  if (decorated) {
    only_keys(j, {"leaf", "prefix", "cycle", decoration}, path);
  } else {
    only_keys(j, {"leaf", "prefix", "cycle"}, path);
  }
  if (!has_children) {
    if (!j.contains("leaf")) throw ParseError(path, "expected \"leaf\" or \"prefix\" and \"cycle\"");
    return Space::leaf();
  }
  std::vector<Space> prefix, cycle;
  for (const char* key : {"prefix", "cycle"}) {
    auto it = j.find(key);
    if (it == j.end()) continue;
    const std::string p = child_path(path, key);
    if (!it->is_array()) throw ParseError(p, "expected an array");
    auto& dest = key[0] == 'p' ? prefix : cycle;
    for (std::size_t i = 0; i < it->size(); ++i) dest.push_back(parse_tree((*it)[i], child_path(p, i), decoration, out));
  }
  if (cycle.empty()) return Space::isolated(std::move(prefix));
  return Space::limit(std::move(prefix), std::move(cycle));
}

json write_tree(const Space& s, NodeId id, const std::function<void(json&, NodeId)>& decorate) {
  json out = json::object();
  decorate(out, id);
  const auto& node = s.node(id);
  if (node.prefix.empty() && node.cycle.empty()) {
    out["leaf"] = true;
    return out;
  }
  out["prefix"] = json::array();
  out["cycle"] = json::array();
  for (NodeId c : node.prefix) out["prefix"].push_back(write_tree(s, c, decorate));
  for (NodeId c : node.cycle) out["cycle"].push_back(write_tree(s, c, decorate));
  return out;
}

bool bool_from_json(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ParseError(path, "expected a boolean");
  return j.get<bool>();
}

std::string rel(const std::string& path, const char* key) { return child_path(path, key); }

json mark_list(const std::vector<Mark>& marks) {
  json out = json::array();
  for (const auto& m : marks) out.push_back(flat(m));
  return out;
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a rational string \"p\" or \"p/q\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(path, e.what());
  }
}

json to_json(const Space& s) {
  return write_tree(s, Space::root(), [](json&, NodeId) {});
}

Space space_from_json(const json& j) {
  std::vector<std::pair<const json*, std::string>> unused;
  return parse_tree(j, "$", "", unused);
}

json to_json(const Mark& m) {
  return write_tree(m.space(), Space::root(), [&](json& o, NodeId id) { o["mark"] = m[id]; });
}

Mark mark_from_json(const json& j) {
  std::vector<std::pair<const json*, std::string>> decos;
  Space s = parse_tree(j, "$", "mark", decos);
  Mark m(s);
  for (NodeId i = 0; i < decos.size(); ++i) m.set(i, bool_from_json(*decos[i].first, decos[i].second));
  return m;
}

Mark mark_from_json(const json& j, const Space& space) {
  Mark m = mark_from_json(j);
  if (!m.space().same_shape(space)) throw ParseError("$", "mark does not match the space");
  return Mark(space, m.bits());
}

json to_json(const PatternFn& f) {
  return write_tree(f.space(), Space::root(), [&](json& o, NodeId id) { o["value"] = f[id].str(); });
}

PatternFn fn_from_json(const json& j) {
  std::vector<std::pair<const json*, std::string>> decos;
  Space s = parse_tree(j, "$", "value", decos);
  std::vector<Rat> values;
  for (const auto& [node, path] : decos) values.push_back(rat_from_json(*node, path));
  return PatternFn(s, std::move(values));
}

json flat(const PatternFn& f) {
  json out = json::array();
  for (const Rat& v : f.values()) out.push_back(v.str());
  return out;
}

json flat(const Mark& m) {
  std::string bits;
  for (char b : m.bits()) bits.push_back(b ? '1' : '0');
  return bits;
}

PatternFn flat_fn(const json& j, const Space& space, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of rationals");
  if (j.size() != space.size()) throw ParseError(path, "expected " + std::to_string(space.size()) + " values");
  std::vector<Rat> values;
  for (std::size_t i = 0; i < j.size(); ++i) values.push_back(rat_from_json(j[i], child_path(path, i)));
  return PatternFn(space, std::move(values));
}

Mark flat_mark(const json& j, const Space& space, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string of 0/1 flags");
  const auto& bits = j.get_ref<const std::string&>();
  if (bits.size() != space.size()) throw ParseError(path, "expected " + std::to_string(space.size()) + " flags");
  std::vector<char> out;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError(path, "flags must be 0 or 1");
    out.push_back(c == '1');
  }
  return Mark(space, std::move(out));
}

json to_json(const DiffClosed& d) { return {{"outer", flat(d.outer)}, {"minus", flat(d.minus)}}; }

json to_json(const DNormCertificate& c) {
  return std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, cert::NonnegLsc>) {
          return {{"kind", "nonneg-lsc"}};
        } else if constexpr (std::is_same_v<T, cert::LscSplit>) {
          return {{"kind", "lsc-split"}, {"u", flat(n.u)}, {"v", flat(n.v)}};
        } else if constexpr (std::is_same_v<T, cert::Sum>) {
          json terms = json::array();
          for (const auto& t : n.terms) terms.push_back({{"part", flat(t.part)}, {"cert", to_json(*t.cert)}});
          return {{"kind", "sum"}, {"terms", terms}};
        } else if constexpr (std::is_same_v<T, cert::Extension>) {
          return {{"kind", "extension"},
                  {"region", to_json(n.region)},
                  {"factor", n.factor.str()},
                  {"inner", to_json(*n.inner)}};
        } else if constexpr (std::is_same_v<T, cert::Localization>) {
          json parts = json::array();
          for (const auto& p : n.parts) parts.push_back({{"support", flat(p.support)}, {"cert", to_json(*p.cert)}});
          return {{"kind", "localization"}, {"parts", parts}};
        } else {
          return {{"kind", "continuous-on-open"}, {"support", flat(n.support)}};
        }
      },
      c.node);
}

namespace {

CertPtr parse_cert(const json& j, const Space& s, const std::string& path) {
  const json& kind_j = member(j, "kind", path);
  if (!kind_j.is_string()) throw ParseError(rel(path, "kind"), "expected a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "nonneg-lsc") {
    only_keys(j, {"kind"}, path);
    return make_nonneg_lsc();
  }
  if (kind == "lsc-split") {
    only_keys(j, {"kind", "u", "v"}, path);
    return make_lsc_split(flat_fn(member(j, "u", path), s, rel(path, "u")),
                          flat_fn(member(j, "v", path), s, rel(path, "v")));
  }
  if (kind == "sum") {
    only_keys(j, {"kind", "terms"}, path);
    const json& terms = member(j, "terms", path);
    const std::string tp = rel(path, "terms");
    if (!terms.is_array()) throw ParseError(tp, "expected an array");
    std::vector<cert::SumTerm> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string p = child_path(tp, i);
      only_keys(terms[i], {"part", "cert"}, p);
      out.push_back({flat_fn(member(terms[i], "part", p), s, rel(p, "part")),
                     parse_cert(member(terms[i], "cert", p), s, rel(p, "cert"))});
    }
    return make_sum(std::move(out));
  }
  if (kind == "extension") {
    only_keys(j, {"kind", "region", "factor", "inner"}, path);
    const json& region = member(j, "region", path);
    const std::string rp = rel(path, "region");
    only_keys(region, {"outer", "minus"}, rp);
    DiffClosed d{flat_mark(member(region, "outer", rp), s, rel(rp, "outer")),
                 flat_mark(member(region, "minus", rp), s, rel(rp, "minus"))};
    return make_extension(std::move(d), rat_from_json(member(j, "factor", path), rel(path, "factor")),
                          parse_cert(member(j, "inner", path), s, rel(path, "inner")));
  }
  if (kind == "localization") {
    only_keys(j, {"kind", "parts"}, path);
    const json& parts = member(j, "parts", path);
    const std::string pp = rel(path, "parts");
    if (!parts.is_array()) throw ParseError(pp, "expected an array");
    std::vector<cert::LocalPart> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::string p = child_path(pp, i);
      only_keys(parts[i], {"support", "cert"}, p);
      out.push_back({flat_mark(member(parts[i], "support", p), s, rel(p, "support")),
                     parse_cert(member(parts[i], "cert", p), s, rel(p, "cert"))});
    }
    return make_localization(std::move(out));
  }
  if (kind == "continuous-on-open") {
    only_keys(j, {"kind", "support"}, path);
    return make_continuous_on_open(flat_mark(member(j, "support", path), s, rel(path, "support")));
  }
  throw ParseError(rel(path, "kind"), "unknown certificate kind \"" + kind + "\"");
}

}  // namespace

CertPtr cert_from_json(const json& j, const Space& space) { return parse_cert(j, space, "$"); }

json to_json(const SimpleDCS& s) {
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back({{"coeff", t.coeff.str()}, {"set", to_json(t.set)}});
  return {{"terms", terms}, {"pairwise_disjoint", s.pairwise_disjoint()}};
}

json to_json(const OscReport& r) {
  return {{"domain", flat(r.domain)}, {"upper", flat(r.upper)}, {"lower", flat(r.lower)},
          {"uosc", flat(r.uosc)},     {"osc", flat(r.osc)},     {"oosc", flat(r.oosc)}};
}

json to_json(const DerivationTrail& t) {
  return {{"eps", t.eps.str()},
          {"flavor", t.flavor == Flavor::Osc ? "osc" : "upper-osc"},
          {"sets", mark_list(t.sets)},
          {"terminal", t.terminal},
          {"index", t.index()}};
}

json to_json(const IndexReport& r) {
  json critical = json::array();
  for (const Rat& d : r.critical) critical.push_back(d.str());
  json per = json::array();
  for (const auto& [eps, i] : r.per_eps) per.push_back({{"eps", eps.str()}, {"index", i}});
  return {{"critical", critical}, {"per_eps", per},   {"index", r.index},
          {"beta", r.beta},       {"quasinorm", r.quasinorm.str()}};
}

json to_json(const DNormBounds& b) {
  return {{"lower", b.lower.str()},
          {"upper", b.upper.str()},
          {"certificate_source", b.certificate_source},
          {"certificate", to_json(*b.certificate)},
          {"annotations",
           {{"index_lower_sharp", b.annotations.index_lower_sharp.str()},
            {"optimal_upper", b.annotations.optimal_upper.str()},
            {"note", b.annotations.note},
            {"certified", false}}}};
}

json to_json(const CheckResult& r) {
  if (r.ok()) return {{"valid", true}, {"bound", r.bound->str()}};
  return {{"valid", false}, {"node", r.rejection->node_path}, {"condition", r.rejection->condition}};
}

json to_json(const StaircaseResult& s) {
  return {{"simple", to_json(s.simple)},
          {"approximation", flat(s.approximation)},
          {"residual", flat(s.residual)},
          {"residual_certificate", to_json(*s.residual_certificate)},
          {"nominal_bound", s.nominal_bound.str()},
          {"certified_bound", s.certified_bound.str()}};
}

json to_json(const SDApprox& a) {
  json trace = json::array();
  for (const auto& t : a.trace) {
    trace.push_back({{"depth", t.depth},
                     {"step", t.step},
                     {"eps", t.eps.str()},
                     {"w_size", t.w_size},
                     {"h_bound", t.h_bound.str()},
                     {"g_sup", t.g_sup.str()}});
  }
  json out = {{"path", a.path},
              {"simple", to_json(a.simple)},
              {"approximation", flat(a.approximation)},
              {"residual_bound", a.residual_bound.str()},
              {"nominal_residual", a.nominal_residual.str()},
              {"certificate", to_json(*a.certificate)},
              {"chosen_index", a.chosen_index},
              {"trace", trace}};
  if (a.norm_bound) out["norm_bound"] = a.norm_bound->str();
  if (a.norm_certificate) out["norm_certificate"] = to_json(*a.norm_certificate);
  if (a.chosen_eps) out["chosen_eps"] = a.chosen_eps->str();
  return out;
}

json to_json(const SdVerdict& v) {
  return {{"verdict", v.strong ? "SD" : "undetermined"},
          {"index", v.index},
          {"rank", v.rank},
          {"quasinorm", v.quasinorm.str()},
          {"small_eps_slope", v.small_eps_slope},
          {"limit_condition", v.limit_condition},
          {"approximation", to_json(v.approximation)}};
}

json to_json(const WitnessReport& w) {
  json chain = json::array();
  for (const auto& k : w.chain.sets) chain.push_back(flat(k.mark()));
  json indices = json::array();
  for (const auto& [eps, i] : w.indices) indices.push_back({{"eps", eps.str()}, {"index", i}});
  return {{"rank", w.n},
          {"space", to_json(w.chain.space)},
          {"chain", chain},
          {"E", flat(w.E)},
          {"nowhere_dense", w.nowhere_dense},
          {"indices", indices},
          {"trail_matches", w.trail_matches},
          {"upper", w.upper.str()},
          {"lower", w.lower.str()},
          {"certificate", to_json(*w.certificate)},
          {"violations", w.violations}};
}

json to_json(const Prop15Report& p) {
  json rows = json::array();
  for (const auto& r : p.rows) {
    rows.push_back({{"n", r.n},
                    {"eps", r.eps.str()},
                    {"index", r.index},
                    {"product", r.product.str()},
                    {"norm_bound", r.norm_bound.str()},
                    {"premise", r.premise}});
  }
  return {{"rows", rows}, {"conclusion", p.conclusion}, {"analytic", true}, {"note", p.note}};
}

std::string digest(const json& j) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace baire
