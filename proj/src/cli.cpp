#include "baire/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "baire/errors.hpp"
#include "baire/expansion.hpp"
#include "baire/oracle.hpp"
#include "baire/suites.hpp"

namespace baire {
namespace {

struct UsageError : Error {
  using Error::Error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("$", path + ": " + e.what());
  }
}

Rat parse_rat_flag(const std::string& text, const char* flag) {
  try {
    return Rat::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

struct Report {
  json command = json::array();
  json inputs = json::array();
  json results;
  std::vector<std::string> violations;
};

int emit(const Report& rep, const std::string& summary, std::ostream& out, std::ostream& err) {
  json doc = {{"command", rep.command},
              {"inputs_digest", digest(rep.inputs)},
              {"results", rep.results},
              {"violations", rep.violations}};
  out << doc.dump(2) << "\n";
  err << summary << (rep.violations.empty() ? "" : " (" + std::to_string(rep.violations.size()) + " violations)")
      << "\n";
  return rep.violations.empty() ? 0 : 1;
}

PatternFn load_fn(const std::string& path, Report& rep) {
  json j = read_json(path);
  rep.inputs.push_back(j);
  return fn_from_json(j);
}

json analyze(const PatternFn& f) {
  const Space& s = f.space();
  const Mark full(s, true);
  json heights = json::array();
  for (int h : cb_heights(s)) heights.push_back(h);
  DNormBounds b = bounds(f);
  return {{"nodes", s.size()},
          {"rank", rank(s)},
          {"heights", heights},
          {"sup_norm", f.sup_norm().str()},
          {"usc", is_usc_on(f, full)},
          {"lsc", is_lsc_on(f, full)},
          {"continuous", is_continuous_on(f, full)},
          {"envelopes", to_json(envelopes(f, ClosedMark::full(s)))},
          {"index", to_json(full_index(f))},
          {"bounds", to_json(b)}};
}

// Symbolic and oracle payloads for the verbs the oracle can replay.
std::pair<json, json> replay(const std::vector<std::string>& target, unsigned copies, Report& rep) {
  if (target.empty()) throw UsageError("oracle: missing target command after --");
  const std::string& verb = target[0];
  std::optional<Rat> eps;
  std::string file;
  bool upper = false;
  for (std::size_t i = 1; i < target.size(); ++i) {
    if (target[i] == "--eps" && i + 1 < target.size()) {
      eps = parse_rat_flag(target[++i], "--eps");
    } else if (target[i] == "--upper") {
      upper = true;
    } else if (file.empty() && target[i].rfind("--", 0) != 0) {
      file = target[i];
    } else {
      throw UsageError("oracle: unsupported argument " + target[i]);
    }
  }
  if (file.empty()) throw UsageError("oracle: target needs a function file");
  PatternFn f = load_fn(file, rep);
  const Space& s = f.space();
  Expansion ex = expand(s, copies);
  auto fv = oracle::lift(ex, f);
  auto mem = oracle::lift(ex, Mark(s, true));
  auto fn_table = [&](const std::vector<Rat>& per_vertex) -> json {
    auto c = oracle::collapse(ex, s.size(), per_vertex, Rat(0));
    if (!c) return "copies disagree";
    return flat(PatternFn(s, *c));
  };

  if (verb == "envelope") {
    OscReport sym = envelopes(f, ClosedMark::full(s));
    oracle::Envelopes o = oracle::envelopes(ex, fv, mem);
    json sj = to_json(sym);
    sj.erase("domain");
    return {sj, {{"upper", fn_table(o.upper)},
                 {"lower", fn_table(o.lower)},
                 {"uosc", fn_table(o.uosc)},
                 {"osc", fn_table(o.osc)},
                 {"oosc", fn_table(o.oosc)}}};
  }
  if (verb == "index") {
    std::vector<Rat> grid = eps ? std::vector<Rat>{*eps} : critical_set(f);
    json sym = json::array(), orc = json::array();
    for (const Rat& e : grid) {
      DerivationTrail t = derivation(f, e, upper ? Flavor::UpperOsc : Flavor::Osc);
      json sets = json::array();
      for (const auto& m : t.sets) sets.push_back(flat(m));
      sym.push_back({{"eps", e.str()}, {"index", t.index()}, {"sets", sets}});
      auto trail = oracle::derivation(ex, fv, mem, e, upper);
      json osets = json::array();
      for (const auto& m : trail) {
        auto c = oracle::collapse(ex, s.size(), m, char(0));
        osets.push_back(c ? flat(Mark(s, *c)) : json("copies disagree"));
      }
      orc.push_back({{"eps", e.str()}, {"index", static_cast<int>(trail.size()) - 2}, {"sets", osets}});
    }
    return {sym, orc};
  }
  if (verb == "analyze") {
    const Mark full(s, true);
    auto h = oracle::collapse(ex, s.size(), oracle::heights(ex, mem), -1);
    json sym = {{"heights", cb_heights(s)},
                {"usc", is_usc_on(f, full)},
                {"lsc", is_lsc_on(f, full)},
                {"continuous", is_continuous_on(f, full)}};
    json orc = {{"heights", h ? json(*h) : json("copies disagree")},
                {"usc", oracle::is_usc(ex, fv, mem)},
                {"lsc", oracle::is_lsc(ex, fv, mem)},
                {"continuous", oracle::is_continuous(ex, fv, mem)}};
    return {sym, orc};
  }
  throw UsageError("oracle: cannot replay \"" + verb + "\" (supported: envelope, index, analyze)");
}

}  // namespace

CorpusSpec corpus_spec_from_json(const json& j) {
  CorpusSpec spec;
  if (!j.is_object()) throw ParseError("$", "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string path = "$." + it.key();
    const json& v = it.value();
    auto integer = [&]() {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw ParseError(path, "expected a nonnegative integer");
      return v.get<std::int64_t>();
    };
    if (it.key() == "seed") {
      if (!v.is_number_unsigned() && !v.is_number_integer()) throw ParseError(path, "expected an integer");
      spec.seed = v.get<std::uint64_t>();
    } else if (it.key() == "count") {
      spec.count = static_cast<std::size_t>(integer());
    } else if (it.key() == "max_rank") {
      spec.max_rank = static_cast<int>(integer());
    } else if (it.key() == "cycle_slots") {
      spec.cycle_slots = static_cast<int>(integer());
    } else if (it.key() == "prefix_len") {
      spec.prefix_len = static_cast<int>(integer());
    } else if (it.key() == "max_nodes") {
      spec.max_nodes = static_cast<std::size_t>(integer());
    } else if (it.key() == "values") {
      if (!v.is_array()) throw ParseError(path, "expected an array");
      spec.values.clear();
      for (std::size_t i = 0; i < v.size(); ++i) {
        spec.values.push_back(rat_from_json(v[i], path + "[" + std::to_string(i) + "]"));
      }
    } else {
      throw ParseError(path, "unknown corpus field");
    }
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError("$", e.what());
  }
  return spec;
}

json to_json(const CorpusSpec& spec) {
  json values = json::array();
  for (const Rat& v : spec.values) values.push_back(v.str());
  return {{"seed", spec.seed},         {"count", spec.count},         {"max_rank", spec.max_rank},
          {"values", values},          {"cycle_slots", spec.cycle_slots}, {"prefix_len", spec.prefix_len},
          {"max_nodes", spec.max_nodes}};
}

CorpusSpec load_corpus_spec(const std::string& source) {
  if (source == "default") return CorpusSpec{};
  return corpus_spec_from_json(read_json(source));
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Report rep;
  for (const auto& a : args) rep.command.push_back(a);

  // Everything after "--" belongs to the oracle's target command.
  std::vector<std::string> head = args, target;
  if (auto sep = std::find(head.begin(), head.end(), "--"); sep != head.end()) {
    target.assign(sep + 1, head.end());
    head.erase(sep, head.end());
  }

  CLI::App app{"Oscillation indices, envelopes and D-norm certificates for pattern-tree functions", "baire"};
  app.require_subcommand(1);
  std::string fn_file, cert_file, mark_file, corpus_source = "default", eps_text, method = "pipeline", suite;
  std::vector<std::string> eps_list;
  int rank_n = 0, max_rank = 0, level = -1;
  unsigned copies = 2;
  bool upper = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "topology, semicontinuity, envelopes, index and norm bounds");
  analyze_cmd->add_option("function", fn_file, "function JSON")->required();

  auto* index_cmd = app.add_subcommand("index", "i(f, eps) with its trail, or the full index report");
  index_cmd->add_option("function", fn_file, "function JSON")->required();
  index_cmd->add_option("--eps", eps_text, "threshold p/q");
  index_cmd->add_flag("--upper", upper, "threshold the upper oscillation (K_j sets)");

  auto* env_cmd = app.add_subcommand("envelope", "envelopes and oscillations");
  env_cmd->add_option("function", fn_file, "function JSON")->required();
  env_cmd->add_option("--within", mark_file, "closed subspace as a mark JSON");

  auto* dec_cmd = app.add_subcommand("decompose", "simple approximation with a residual certificate");
  dec_cmd->add_option("function", fn_file, "function JSON")->required();
  dec_cmd->add_option("--eps", eps_text, "tolerance p/q")->required();
  dec_cmd->add_option("--method", method, "pipeline, semicontinuous or test")
      ->check(CLI::IsMember({"pipeline", "semicontinuous", "test"}));
  dec_cmd->add_option("--support", mark_file, "open support as a mark JSON");
  dec_cmd->add_option("--level", level, "index bound n for the support");

  auto* cert_cmd = app.add_subcommand("check-cert", "validate a certificate against a function");
  cert_cmd->add_option("function", fn_file, "function JSON")->required();
  cert_cmd->add_option("certificate", cert_file, "certificate JSON")->required();

  auto* sdcs_cmd = app.add_subcommand("simple-dcs", "level-set decomposition into differences of closed sets");
  sdcs_cmd->add_option("function", fn_file, "function JSON")->required();

  auto* wit_cmd = app.add_subcommand("witness", "index-n indicator on T_n");
  wit_cmd->add_option("--rank", rank_n, "n >= 1")->required()->check(CLI::Range(1, 12));
  wit_cmd->add_option("--eps", eps_list, "grid values in (0, 1]");

  auto* p15_cmd = app.add_subcommand("demo-prop15", "per-rank pieces of the DBSC minus SD example");
  p15_cmd->add_option("--max-rank", max_rank, "N >= 1")->required()->check(CLI::Range(1, 12));

  auto* check_cmd = app.add_subcommand("check", "run a property suite over a corpus");
  check_cmd->add_option("suite", suite, "suite name or all")->required();
  check_cmd->add_option("--corpus", corpus_source, "spec JSON or default");

  auto* corpus_cmd = app.add_subcommand("corpus", "list corpus entries with digests");
  corpus_cmd->add_option("--corpus", corpus_source, "spec JSON or default");

  auto* oracle_cmd = app.add_subcommand("oracle", "replay a command on the finite unrolling: oracle --copies C -- CMD");
  oracle_cmd->add_option("--copies", copies, "cycle repetitions")->check(CLI::Range(2, 6));

  try {
    std::vector<std::string> rev(head.rbegin(), head.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::optional<Rat> eps;
    if (!eps_text.empty()) eps = parse_rat_flag(eps_text, "--eps");
    if (eps && eps->sign() <= 0) throw UsageError("--eps must be positive");
    if (!target.empty() && !oracle_cmd->parsed()) throw UsageError("unexpected arguments after --");

    if (analyze_cmd->parsed()) {
      PatternFn f = load_fn(fn_file, rep);
      rep.results = analyze(f);
      return emit(rep, "analyze: rank " + std::to_string(rank(f.space())), out, err);
    }
    if (index_cmd->parsed()) {
      PatternFn f = load_fn(fn_file, rep);
      if (eps) {
        DerivationTrail t = derivation(f, *eps, upper ? Flavor::UpperOsc : Flavor::Osc);
        rep.results = to_json(t);
        return emit(rep, "i(f, " + eps->str() + ") = " + std::to_string(t.index()), out, err);
      }
      IndexReport r = full_index(f);
      rep.results = to_json(r);
      return emit(rep, "i(f) = " + std::to_string(r.index) + ", quasinorm " + r.quasinorm.str(), out, err);
    }
    if (env_cmd->parsed()) {
      PatternFn f = load_fn(fn_file, rep);
      ClosedMark within = ClosedMark::full(f.space());
      if (!mark_file.empty()) {
        json mj = read_json(mark_file);
        rep.inputs.push_back(mj);
        within = ClosedMark::validate(mark_from_json(mj, f.space()));
      }
      rep.results = to_json(envelopes(f, within));
      return emit(rep, "envelopes computed", out, err);
    }
    if (dec_cmd->parsed()) {
      PatternFn f = load_fn(fn_file, rep);
      if (method == "test") {
        SdVerdict v = sd_test(f, *eps);
        rep.results = to_json(v);
        return emit(rep, std::string("verdict ") + (v.strong ? "SD" : "undetermined"), out, err);
      }
      SDApprox a = [&] {
        if (method == "semicontinuous") return usc_sd_approx(f, *eps);
        GnWitness w = GnWitness::of(f);
        if (!mark_file.empty()) {
          json mj = read_json(mark_file);
          rep.inputs.push_back(mj);
          w.support = mark_from_json(mj, f.space());
        }
        if (level >= 0) w.n = level;
        return sd_decompose(w, *eps);
      }();
      CheckResult again = check_certificate(f - a.approximation, *a.certificate);
      if (!again.ok() || *again.bound != a.residual_bound) rep.violations.push_back("residual certificate did not revalidate");
      rep.results = to_json(a);
      return emit(rep, a.path + ": residual bound " + a.residual_bound.str(), out, err);
    }
    if (cert_cmd->parsed()) {
      PatternFn f = load_fn(fn_file, rep);
      json cj = read_json(cert_file);
      rep.inputs.push_back(cj);
      CheckResult r = check_certificate(f, *cert_from_json(cj, f.space()));
      rep.results = to_json(r);
      if (!r.ok()) rep.violations.push_back(r.rejection->node_path + ": " + r.rejection->condition);
      return emit(rep, r.ok() ? "certificate valid, bound " + r.bound->str() : "certificate rejected", out, err);
    }
    if (sdcs_cmd->parsed()) {
      PatternFn f = load_fn(fn_file, rep);
      SimpleDCS d = to_simple_dcs(f);
      CertPtr c = simple_dcs_certificate(d, Mark(f.space(), true));
      CheckResult r = check_certificate(f, *c);
      if (!(d.evaluate() == f)) rep.violations.push_back("decomposition does not re-evaluate to f");
      rep.results = {{"decomposition", to_json(d)}, {"certificate", to_json(*c)}, {"check", to_json(r)}};
      return emit(rep, std::to_string(d.terms.size()) + " terms", out, err);
    }
    if (wit_cmd->parsed()) {
      std::vector<Rat> grid;
      for (const auto& t : eps_list) grid.push_back(parse_rat_flag(t, "--eps"));
      if (grid.empty()) grid = {Rat(1, 10), Rat(1, 2), Rat(1)};
      for (const Rat& g : grid) {
        if (g.sign() <= 0 || g > Rat(1)) throw UsageError("--eps values must lie in (0, 1]");
      }
      WitnessReport w = verify_witness(rank_n, grid);
      rep.results = to_json(w);
      rep.violations = w.violations;
      return emit(rep, "witness rank " + std::to_string(rank_n) + ": bound " + w.upper.str(), out, err);
    }
    if (p15_cmd->parsed()) {
      Prop15Report p = prop15_demo(max_rank);
      rep.results = to_json(p);
      if (!p.conclusion) rep.violations.push_back("conclusion flag not set");
      return emit(rep, std::string("conclusion ") + (p.conclusion ? "set" : "not set"), out, err);
    }
    if (check_cmd->parsed()) {
      CorpusSpec spec = load_corpus_spec(corpus_source);
      rep.inputs.push_back(to_json(spec));
      Corpus corpus = generate_corpus(spec);
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw UsageError("unknown suite \"" + suite + "\"");
      }
      rep.results = json::array();
      for (const auto& name : names) {
        auto start = std::chrono::steady_clock::now();
        SuiteResult r = run_suite(name, corpus, spec.seed);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rep.results.push_back(
            {{"suite", r.name}, {"checked", r.checked}, {"violations", r.violations.size()}, {"seconds", secs}});
        for (const auto& v : r.violations) rep.violations.push_back(name + ": " + v);
      }
      return emit(rep, "check " + suite + " over " + std::to_string(corpus.size()) + " entries", out, err);
    }
    if (corpus_cmd->parsed()) {
      CorpusSpec spec = load_corpus_spec(corpus_source);
      rep.inputs.push_back(to_json(spec));
      json entries = json::array();
      json all = json::array();
      for (const auto& e : generate_corpus(spec)) {
        json fj = to_json(e.f);
        entries.push_back({{"name", e.name}, {"rank", rank(e.f.space())}, {"digest", digest(fj)}});
        all.push_back(fj);
      }
      rep.results = {{"spec", to_json(spec)}, {"entries", entries}, {"digest", digest(all)}};
      return emit(rep, std::to_string(entries.size()) + " entries", out, err);
    }
    if (oracle_cmd->parsed()) {
      auto [sym, orc] = replay(target, copies, rep);
      bool agree = sym == orc;
      rep.results = {{"copies", copies}, {"target", target}, {"symbolic", sym}, {"oracle", orc}, {"agree", agree}};
      if (!agree) rep.violations.push_back("oracle disagrees with the symbolic engine");
      return emit(rep, agree ? "oracle agrees" : "oracle disagrees", out, err);
    }
    throw UsageError("no command");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "input error at " << e.what() << "\n";
    return 2;
  } catch (const NotClosed& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionFailed& e) {
    rep.violations.push_back(std::string("precondition failed: ") + e.what() +
                             (e.witness.empty() ? "" : " at " + e.witness));
    return emit(rep, "precondition failed", out, err);
  } catch (const SoundnessFault& e) {
    err << "soundness fault: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace baire
