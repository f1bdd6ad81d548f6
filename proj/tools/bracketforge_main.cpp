// Command-line front end: per-diagram invariant and skeleton dumps, family
// generators, and the claim audit over corpus files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bracketforge/audit.hpp"
#include "bracketforge/bracket.hpp"
#include "bracketforge/corpus.hpp"
#include "bracketforge/families.hpp"
#include "bracketforge/skeleton.hpp"

using namespace bracketforge;

namespace {

std::vector<int> int_list(const std::string& s) {
  auto v = detail::parse_int_list(s);
  if (v.empty()) throw CLI::ValidationError("expected a comma-separated list");
  return v;
}

std::vector<CorpusEntry> load_all(const std::vector<std::string>& paths) {
  std::vector<CorpusEntry> all;
  for (const auto& p : paths) {
    auto es = load_corpus(p);
    all.insert(all.end(), es.begin(), es.end());
  }
  return all;
}

// A companion is either a corpus file (first entry, or --pick by name) or the
// name of an entry in the default corpus.
CorpusEntry resolve_companion(const std::string& spec,
                              const std::string& corpus_path,
                              const std::string& pick) {
  if (std::filesystem::exists(spec)) {
    auto es = load_corpus(spec);
    if (es.empty()) throw std::runtime_error(spec + " holds no diagrams");
    if (pick.empty()) return es.front();
    for (auto& e : es)
      if (e.name == pick) return e;
    throw std::runtime_error("no diagram named " + pick + " in " + spec);
  }
  for (auto& e : load_corpus(corpus_path))
    if (e.name == spec) return e;
  throw std::runtime_error("no diagram named " + spec + " in " + corpus_path);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

ordered_json invariants_json(const CorpusEntry& e, const Budget& budget) {
  const Diagram& d = e.diagram;
  ordered_json j;
  j["name"] = e.name;
  j["c"] = d.crossing_count();
  j["components"] = d.component_count();
  j["o"] = d.o_length();
  j["u"] = d.u_length();
  j["bridge"] = d.bridge_number();
  if (d.is_knot() && d.crossing_count() > 0)
    j["writhe"] = d.writhe();
  j["alternating"] = d.is_alternating();
  j["reduced"] = d.is_reduced();
  j["ii_reduced"] = d.is_ii_reduced();
  j["totally_reduced"] = d.is_totally_reduced();
  if (d.crossing_count() > 0) {
    j["s_a"] = resolve_loops(d, 0);
    j["s_b"] = resolve_loops(d, ~0ull);
    Adequacy q = adequacy(d);
    j["plus_adequate"] = q.plus;
    j["minus_adequate"] = q.minus;
    if (d.crossing_count() <= budget.bracket_limit) {
      Laurent br = bracket(d);
      j["bracket"] = br.to_string();
      ExtremeSummary es = extreme_summary(d, br);
      j["a_extreme"] = es.a_extreme.str();
      j["b_extreme"] = es.b_extreme.str();
      if (d.is_knot()) {
        Laurent v = normalize_to_jones(br, d.writhe());
        j["jones"] = v.to_string();
        j["span"] = jones_span_t(v);
        BigInt det = jones_eval_minus1(v);
        if (det < 0) det = -det;
        j["det"] = det.str();
      }
    } else {
      j["bracket"] = nullptr;
    }
  }
  return j;
}

ordered_json skeleton_json(const CorpusEntry& e) {
  const Diagram& d = e.diagram;
  ordered_json j;
  j["name"] = e.name;
  j["o"] = d.o_length();
  Skeleton sk = build_skeleton(d);
  j["skeleton_vertices"] = sk.vertex_count();
  j["skeleton_edges"] = sk.edge_count();
  ordered_json prof = ordered_json::object();
  for (auto [valency, n] : sk.valency_profile())
    prof[std::to_string(valency)] = n;
  j["valency_profile"] = prof;
  j["g_a"] = split(sk, SplitMode::A).count;
  j["g_b"] = split(sk, SplitMode::B).count;
  if (!d.is_alternating() && d.crossing_count() > 0)
    j["extreme_states_bound"] = extreme_states_bound(d);
  else
    j["extreme_states_bound"] = nullptr;
  SpanBounds sb = span_bound(d);
  j["span_bounds"] = ordered_json::object();
  j["span_bounds"]["applicable"] = sb.applicable;
  if (!sb.applicable) j["span_bounds"]["note"] = sb.note;
  j["span_bounds"]["rules"] = ordered_json::array();
  for (const auto& r : sb.rules)
    j["span_bounds"]["rules"].push_back({{"rule", r.rule}, {"bound", r.bound}});
  if (sb.applicable) {
    j["span_bounds"]["best"] = sb.best;
    j["span_bounds"]["best_rule"] = sb.best_rule;
  }
  auto [la, lb] = lando_graphs(d);
  j["lando_a"] = la.chords.size();
  j["lando_b"] = lb.chords.size();
  j["f_a"] = independence_alternating_sum(la.graph);
  j["f_b"] = independence_alternating_sum(lb.graph);
  auto [pa, pb] = predicted_extremes(d);
  j["predicted_a"] = pa;
  j["predicted_b"] = pb;
  Certificate cert = nontriviality_certificate(d);
  j["certificate"] = {{"certified", cert.certified}, {"reason", cert.reason}};
  return j;
}

void write_dot(const std::string& dir, const CorpusEntry& e) {
  std::filesystem::create_directories(dir);
  auto put = [&](const std::string& suffix, const std::string& text) {
    std::ofstream out(dir + "/" + e.name + "." + suffix + ".dot");
    out << text;
  };
  put("skeleton", to_dot(build_skeleton(e.diagram), e.name));
  auto [la, lb] = lando_graphs(e.diagram);
  put("lando_a", to_dot(la, e.name + "_LA"));
  put("lando_b", to_dot(lb, e.name + "_LB"));
}

std::string provenance_header(const std::string& kind) {
  return "generated " + kind + " diagram";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman bracket state sums, spans, and claim audits for knot "
               "diagrams"};
  app.require_subcommand(1);

  std::vector<std::string> corpus_paths;
  std::string out_path;

  // ---- invariants ----
  auto* inv = app.add_subcommand(
      "invariants", "per-diagram polynomial and counting invariants as JSON");
  std::string inv_positional;
  int inv_limit = 0;
  Budget inv_budget;
  inv->add_option("corpus-file", inv_positional, "corpus file")->required(false);
  inv->add_option("--corpus", corpus_paths, "corpus file(s)");
  inv->add_option("--limit", inv_limit,
                  "skip diagrams with more crossings than this");
  inv->add_option("--bracket-limit", inv_budget.bracket_limit,
                  "crossing ceiling for polynomial evaluation");
  inv->add_option("-o,--out", out_path, "write here instead of stdout");

  // ---- skeleton ----
  auto* ske = app.add_subcommand(
      "skeleton", "sign-alternating skeleton, Lando graphs, span bounds");
  std::string ske_positional, dot_dir;
  int ske_limit = 0;
  ske->add_option("corpus-file", ske_positional, "corpus file")->required(false);
  ske->add_option("--corpus", corpus_paths, "corpus file(s)");
  ske->add_option("--limit", ske_limit,
                  "skip diagrams with more crossings than this");
  ske->add_option("--dot", dot_dir, "also write DOT files to this directory");
  ske->add_option("-o,--out", out_path, "write here instead of stdout");

  // ---- generate ----
  auto* gen = app.add_subcommand("generate",
                                 "build a family diagram in corpus format");
  gen->require_subcommand(1);
  std::string gen_name, companion_spec, companion_pick;
  std::string gen_corpus = "data/knots_through_9.pd";
  std::string coeffs_str, groups_str;
  int twists = 0, cable_n = 2, cable_m = 1;

  auto* gp = gen->add_subcommand("pretzel", "pretzel diagram from twist counts");
  gp->add_option("-c,--coeffs", coeffs_str, "signed twist counts, e.g. -2,3,7")
      ->required();
  gp->add_option("--name", gen_name, "entry name in the output");
  gp->add_option("-o,--out", out_path, "write here instead of stdout");

  auto* gr = gen->add_subcommand("rational", "two-bridge diagram from groups");
  gr->add_option("-a,--groups", groups_str, "twist group sizes, e.g. 2,2")
      ->required();
  gr->add_option("--name", gen_name, "entry name in the output");
  gr->add_option("-o,--out", out_path, "write here instead of stdout");

  auto* gw = gen->add_subcommand("whitehead", "doubled companion with a clasp");
  gw->add_option("--companion", companion_spec, "corpus name or corpus file")
      ->required();
  gw->add_option("--twists", twists, "signed twist count in the doubled band");
  gw->add_option("--pick", companion_pick, "entry name inside a companion file");
  gw->add_option("--corpus", gen_corpus, "corpus used to resolve names");
  gw->add_option("--name", gen_name, "entry name in the output");
  gw->add_option("-o,--out", out_path, "write here instead of stdout");

  auto* gc = gen->add_subcommand("cable", "n-strand cable with m shift blocks");
  gc->add_option("--companion", companion_spec, "corpus name or corpus file")
      ->required();
  gc->add_option("-n", cable_n, "strand count")->check(CLI::PositiveNumber);
  gc->add_option("-m", cable_m, "shift block count")
      ->check(CLI::NonNegativeNumber);
  gc->add_option("--pick", companion_pick, "entry name inside a companion file");
  gc->add_option("--corpus", gen_corpus, "corpus used to resolve names");
  gc->add_option("--name", gen_name, "entry name in the output");
  gc->add_option("-o,--out", out_path, "write here instead of stdout");

  // ---- audit / report ----
  AuditOptions audit_opts;
  std::string format = "text";
  bool no_timestamp = false;

  auto add_audit_flags = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", corpus_paths, "corpus file(s)")->required();
    cmd->add_option("--limit", audit_opts.limit,
                    "skip diagrams with more crossings than this");
    cmd->add_option("--claims", audit_opts.claims,
                    "only run these claim ids (comma or repeat)")
        ->delimiter(',');
    cmd->add_option("--jobs", audit_opts.jobs, "worker threads");
    cmd->add_option("--cache", audit_opts.cache_path,
                    "JSONL invariant cache file");
    cmd->add_option("--oracle-limit", audit_opts.budget.oracle_limit,
                    "crossing ceiling for full state enumeration");
    cmd->add_option("--bracket-limit", audit_opts.budget.bracket_limit,
                    "crossing ceiling for polynomial evaluation");
    cmd->add_option("--format", format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_flag("--no-timestamp", no_timestamp,
                  "suppress the generated-at stamp");
    cmd->add_option("-o,--out", out_path, "write here instead of stdout");
  };

  auto* aud = app.add_subcommand(
      "audit", "check every structural claim over a corpus; exit 1 on failure");
  add_audit_flags(aud);
  auto* rep = app.add_subcommand(
      "report", "emit the full audit report in the chosen format");
  add_audit_flags(rep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed() || ske->parsed()) {
      bool want_inv = inv->parsed();
      const std::string& positional = want_inv ? inv_positional : ske_positional;
      int limit = want_inv ? inv_limit : ske_limit;
      if (!positional.empty()) corpus_paths.push_back(positional);
      if (corpus_paths.empty())
        throw std::runtime_error("no corpus file given");
      ordered_json arr = ordered_json::array();
      for (const auto& e : load_all(corpus_paths)) {
        if (limit > 0 && e.diagram.crossing_count() > limit) continue;
        arr.push_back(want_inv ? invariants_json(e, inv_budget)
                               : skeleton_json(e));
        if (!want_inv && !dot_dir.empty()) {
          CorpusEntry copy = e;
          write_dot(dot_dir, copy);
        }
      }
      emit(out_path, arr.dump(2) + "\n");
      return 0;
    }

    if (gen->parsed()) {
      CorpusEntry e;
      if (gp->parsed()) {
        auto coeffs = int_list(coeffs_str);
        e.diagram = pretzel_link(coeffs);
        e.attrs["family"] = "pretzel";
        e.attrs["coeffs"] = coeffs_str;
        e.name = gen_name.empty() ? "pretzel" : gen_name;
      } else if (gr->parsed()) {
        auto groups = int_list(groups_str);
        e.diagram = rational(groups);
        e.attrs["family"] = "rational";
        e.attrs["groups"] = groups_str;
        e.name = gen_name.empty() ? "rational" : gen_name;
      } else if (gw->parsed()) {
        CorpusEntry comp =
            resolve_companion(companion_spec, gen_corpus, companion_pick);
        e.diagram = whitehead_double(comp.diagram, twists);
        WhiteheadPrediction p = whitehead_prediction(comp.diagram, twists);
        e.attrs["family"] = "whitehead";
        e.attrs["companion"] = comp.name;
        e.attrs["twists"] = std::to_string(twists);
        e.attrs["pred_c"] = std::to_string(p.crossings);
        if (p.o_known) e.attrs["pred_o"] = std::to_string(p.o_length);
        if (p.states_known) {
          e.attrs["pred_sa"] = std::to_string(p.s_a);
          e.attrs["pred_sb"] = std::to_string(p.s_b);
        }
        if (p.span_known) e.attrs["pred_span"] = std::to_string(p.span);
        e.name = gen_name.empty() ? "wd_" + comp.name : gen_name;
      } else {
        CorpusEntry comp =
            resolve_companion(companion_spec, gen_corpus, companion_pick);
        e.diagram = cable(comp.diagram, cable_n, cable_m);
        CablePrediction p = cable_prediction(comp.diagram, cable_n, cable_m);
        e.attrs["family"] = "cable";
        e.attrs["companion"] = comp.name;
        e.attrs["n"] = std::to_string(cable_n);
        e.attrs["m"] = std::to_string(cable_m);
        e.attrs["pred_c"] = std::to_string(p.crossings);
        if (p.laws_known) {
          e.attrs["pred_sa"] = std::to_string(p.s_a);
          e.attrs["pred_sb"] = std::to_string(p.s_b);
          e.attrs["pred_span"] = std::to_string(p.span);
        }
        e.name = gen_name.empty()
                     ? "cable_" + comp.name + "_" + std::to_string(cable_n) +
                           "_" + std::to_string(cable_m)
                     : gen_name;
      }
      emit(out_path, emit_corpus({e}, provenance_header(e.attrs["family"])));
      return 0;
    }

    // audit or report
    auto records = audit(load_all(corpus_paths), audit_opts);
    std::string text =
        report(records, parse_report_format(format), !no_timestamp);
    emit(out_path, text);
    if (aud->parsed()) return any_failure(records) ? 1 : 0;
    return 0;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
