// Materializes the data/ corpus files. Every diagram is rebuilt from family
// parameters and pushed through a gauntlet of independent cross-checks before
// it is written: PD round-trip, component count, crossing count against the
// table name, alternation flag, determinant against both the knot tables and
// (for two-bridge entries) the continued-fraction numerator, and pairwise
// Jones distinctness up to mirror image. Any miss aborts the run.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bracketforge/bracket.hpp"
#include "bracketforge/corpus.hpp"
#include "bracketforge/diagram.hpp"
#include "bracketforge/families.hpp"

using namespace bracketforge;

namespace {

struct Row {
  std::string name;
  std::string family;  // rational | pretzel | braid
  std::vector<int> params;
  int strands = 0;  // braid only
  int det = 0;      // knot-table determinant
  bool alternating = true;
};

// Two-bridge entries carry their twist-region groups; the continued fraction
// a_k + 1/(a_{k-1} + ... + 1/a_1) has the determinant as its numerator.
const std::vector<Row> kTable = {
    {"3_1", "rational", {3}, 0, 3},
    {"4_1", "rational", {2, 2}, 0, 5},
    {"5_1", "rational", {5}, 0, 5},
    {"5_2", "rational", {3, 2}, 0, 7},
    {"6_1", "rational", {4, 2}, 0, 9},
    {"6_2", "rational", {3, 1, 2}, 0, 11},
    {"6_3", "rational", {2, 1, 1, 2}, 0, 13},
    {"7_1", "rational", {7}, 0, 7},
    {"7_2", "rational", {5, 2}, 0, 11},
    {"7_3", "rational", {4, 3}, 0, 13},
    {"7_4", "rational", {3, 1, 3}, 0, 15},
    {"7_5", "rational", {3, 2, 2}, 0, 17},
    {"7_6", "rational", {2, 2, 1, 2}, 0, 19},
    {"7_7", "rational", {2, 1, 1, 1, 2}, 0, 21},
    {"8_1", "rational", {6, 2}, 0, 13},
    {"8_2", "rational", {5, 1, 2}, 0, 17},
    {"8_3", "rational", {4, 4}, 0, 17},
    {"8_4", "rational", {4, 1, 3}, 0, 19},
    {"8_5", "pretzel", {3, 3, 2}, 0, 21},
    {"8_6", "rational", {3, 3, 2}, 0, 23},
    {"8_7", "rational", {4, 1, 1, 2}, 0, 23},
    {"8_8", "rational", {2, 3, 1, 2}, 0, 25},
    {"8_9", "rational", {3, 1, 1, 3}, 0, 25},
    {"8_11", "rational", {3, 2, 1, 2}, 0, 27},
    {"8_12", "rational", {2, 2, 2, 2}, 0, 29},
    {"8_13", "rational", {3, 1, 1, 1, 2}, 0, 29},
    {"8_14", "rational", {2, 2, 1, 1, 2}, 0, 31},
    {"8_18", "braid", {1, -2, 1, -2, 1, -2, 1, -2}, 3, 45},
    {"8_19", "pretzel", {3, 3, -2}, 0, 3, false},
    {"8_20", "pretzel", {3, -3, 2}, 0, 9, false},
    {"9_1", "rational", {9}, 0, 9},
    {"9_2", "rational", {7, 2}, 0, 15},
    {"9_3", "rational", {6, 3}, 0, 19},
    {"9_4", "rational", {5, 4}, 0, 21},
    {"9_5", "rational", {5, 1, 3}, 0, 23},
    {"9_6", "rational", {5, 2, 2}, 0, 27},
    {"9_7", "rational", {3, 4, 2}, 0, 29},
    {"9_8", "rational", {2, 4, 1, 2}, 0, 31},
    {"9_9", "rational", {4, 2, 3}, 0, 31},
    {"9_10", "rational", {3, 3, 3}, 0, 33},
    {"9_11", "rational", {4, 1, 2, 2}, 0, 33},
    {"9_12", "rational", {4, 2, 1, 2}, 0, 35},
    {"9_13", "rational", {3, 2, 1, 3}, 0, 37},
    {"9_14", "rational", {4, 1, 1, 1, 2}, 0, 37},
    {"9_15", "rational", {2, 3, 2, 2}, 0, 39},
    {"9_17", "rational", {2, 1, 3, 1, 2}, 0, 39},
    {"9_18", "rational", {3, 2, 2, 2}, 0, 41},
    {"9_19", "rational", {2, 3, 1, 1, 2}, 0, 41},
    {"9_20", "rational", {3, 1, 2, 1, 2}, 0, 41},
    {"9_21", "rational", {3, 1, 1, 2, 2}, 0, 43},
    {"9_23", "rational", {2, 2, 1, 2, 2}, 0, 45},
    {"9_26", "rational", {3, 1, 1, 1, 1, 2}, 0, 47},
    {"9_27", "rational", {2, 1, 2, 1, 1, 2}, 0, 49},
    {"9_31", "rational", {2, 1, 1, 1, 1, 1, 2}, 0, 55},
    {"9_35", "pretzel", {3, 3, 3}, 0, 27},
    {"9_46", "pretzel", {3, 3, -3}, 0, 9, false},
};

[[noreturn]] void die(const std::string& name, const std::string& what) {
  std::cerr << "corpus gauntlet failed on " << name << ": " << what << "\n";
  std::exit(1);
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

long long fraction_numerator(const std::vector<int>& groups) {
  long long p = groups[0], q = 1;
  for (std::size_t i = 1; i < groups.size(); ++i) {
    std::swap(p, q);
    p += groups[i] * q;
  }
  return p;
}

Diagram build(const Row& row) {
  if (row.family == "rational") return rational(row.params);
  if (row.family == "pretzel") return pretzel_link(row.params);
  return braid_closure(row.params, row.strands);
}

int named_crossings(const std::string& name) {
  return std::stoi(name.substr(0, name.find('_')));
}

BigInt determinant(const Diagram& d) {
  BigInt det = jones_eval_minus1(jones(d));
  if (det < 0) det = -det;
  return det;
}

std::vector<CorpusEntry> build_main_corpus() {
  std::vector<CorpusEntry> out;
  std::set<std::string> seen_jones;
  for (const Row& row : kTable) {
    CorpusEntry e;
    e.name = row.name;
    e.diagram = build(row);
    const Diagram& d = e.diagram;

    if (!(parse_pd(d.to_pd_text()) == d)) die(row.name, "PD round trip");
    if (!d.is_knot()) die(row.name, "not a knot");
    if (d.crossing_count() != named_crossings(row.name))
      die(row.name, "crossing count " + std::to_string(d.crossing_count()));
    if (d.is_alternating() != row.alternating) die(row.name, "alternation flag");
    if (!d.is_reduced()) die(row.name, "not reduced");

    BigInt det = determinant(d);
    if (det != row.det)
      die(row.name, "determinant " + det.str() + " != " +
                        std::to_string(row.det));
    if (row.family == "rational" &&
        fraction_numerator(row.params) != row.det)
      die(row.name, "continued fraction numerator mismatch");

    // no two corpus knots may share a Jones polynomial, even up to mirror
    std::string v = jones(d).to_string();
    std::string vm = jones(d.mirrored()).to_string();
    if (seen_jones.count(v) || seen_jones.count(vm))
      die(row.name, "Jones polynomial collision");
    seen_jones.insert(v);

    e.attrs["family"] = row.family;
    if (row.family == "rational") e.attrs["groups"] = join_ints(row.params);
    if (row.family == "pretzel") e.attrs["coeffs"] = join_ints(row.params);
    if (row.family == "braid") {
      e.attrs["word"] = join_ints(row.params);
      e.attrs["strands"] = std::to_string(row.strands);
    }
    e.attrs["det"] = std::to_string(row.det);
    e.attrs["alternating"] = d.is_alternating() ? "1" : "0";
    out.push_back(std::move(e));
  }
  return out;
}

// Switching crossings in an alternating diagram keeps the shadow (so the
// diagram stays a reduced knot diagram) while pushing o away from zero.
// Scanning pairs and triples in order keeps the output deterministic.
std::vector<CorpusEntry> build_special(const std::vector<CorpusEntry>& main) {
  std::vector<CorpusEntry> out;
  int want3 = 6, want5 = 4;

  for (const auto& base : main) {
    if (want3 == 0) break;
    const Diagram& d = base.diagram;
    if (!d.is_alternating() || d.crossing_count() < 6) continue;
    int c = d.crossing_count();
    bool taken = false;
    for (int i = 0; i < c && !taken && want3 > 0; ++i)
      for (int j = i + 1; j < c && want3 > 0; ++j) {
        Diagram s = d.with_switched_crossing(i).with_switched_crossing(j);
        if (s.o_length() != 3 || !s.is_totally_reduced()) continue;
        CorpusEntry e;
        e.name = "o3_" + base.name + "_" + std::to_string(i) + "_" +
                 std::to_string(j);
        e.diagram = s;
        e.attrs["family"] = "switched";
        e.attrs["base"] = base.name;
        e.attrs["switched"] = std::to_string(i) + "," + std::to_string(j);
        out.push_back(std::move(e));
        --want3;
        taken = true;  // one per base diagram keeps the sample spread out
        break;
      }
  }

  // few bases admit an o = 5 triple at all, so allow a couple from each
  for (const auto& base : main) {
    if (want5 == 0) break;
    const Diagram& d = base.diagram;
    if (!d.is_alternating() || d.crossing_count() < 8) continue;
    int c = d.crossing_count();
    int taken = 0;
    for (int i = 0; i < c && taken < 2 && want5 > 0; ++i)
      for (int j = i + 1; j < c && taken < 2 && want5 > 0; ++j)
        for (int k = j + 1; k < c && taken < 2 && want5 > 0; ++k) {
          Diagram s = d.with_switched_crossing(i)
                          .with_switched_crossing(j)
                          .with_switched_crossing(k);
          if (s.o_length() != 5 || !s.is_totally_reduced()) continue;
          CorpusEntry e;
          e.name = "o5_" + base.name + "_" + std::to_string(i) + "_" +
                   std::to_string(j) + "_" + std::to_string(k);
          e.diagram = s;
          e.attrs["family"] = "switched";
          e.attrs["base"] = base.name;
          e.attrs["switched"] = std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k);
          out.push_back(std::move(e));
          --want5;
          ++taken;
        }
  }

  for (const auto& e : out) {
    if (!e.diagram.is_knot()) die(e.name, "switch changed component count");
    if (!(parse_pd(e.diagram.to_pd_text()) == e.diagram))
      die(e.name, "PD round trip");
  }
  if (want3 != 0 || want5 != 0) die("special", "search came up short");
  return out;
}

std::vector<CorpusEntry> build_reidemeister() {
  struct Pair {
    std::string label, move;
    std::vector<int> w1;
    int s1;
    std::vector<int> w2;
    int s2;
  };
  // R1 stabilizations change the writhe, so only the normalized polynomial is
  // preserved; R2 and R3 leave the raw bracket alone.
  const std::vector<Pair> pairs = {
      {"r1a", "R1", {1, 1, 1}, 2, {1, 1, 1, 2}, 3},
      {"r1b", "R1", {1, -2, 1, -2}, 3, {1, -2, 1, -2, 3}, 4},
      {"r1c", "R1", {1, 1, 1, 1, 1}, 2, {1, 1, 1, 1, 1, -2}, 3},
      {"r2a", "R2", {1, 1, 1}, 2, {1, 1, 1, -1, 1}, 2},
      {"r2b", "R2", {1, -2, 1, -2}, 3, {1, -2, -2, 2, 1, -2}, 3},
      {"r3a", "R3", {1, 2, 1, 1}, 3, {2, 1, 2, 1}, 3},
  };
  std::vector<CorpusEntry> out;
  for (const auto& p : pairs) {
    Diagram d1 = braid_closure(p.w1, p.s1);
    Diagram d2 = braid_closure(p.w2, p.s2);
    if (p.move == "R1") {
      if (!(jones(d1) == jones(d2))) die(p.label, "Jones changed under R1");
    } else {
      if (!(bracket(d1) == bracket(d2)))
        die(p.label, "bracket changed under " + p.move);
    }
    for (int side = 0; side < 2; ++side) {
      CorpusEntry e;
      e.name = p.label + (side == 0 ? "_base" : "_moved");
      e.diagram = side == 0 ? d1 : d2;
      e.attrs["family"] = "braid";
      e.attrs["word"] = join_ints(side == 0 ? p.w1 : p.w2);
      e.attrs["strands"] = std::to_string(side == 0 ? p.s1 : p.s2);
      e.attrs["pair"] = p.label;
      e.attrs["move"] = p.move;
      out.push_back(std::move(e));
    }
  }

  // one deliberately cancellable word: its closure is II-reducible
  Diagram red = braid_closure({1, 1, 2, -2, 1}, 3);
  if (red.is_ii_reduced()) die("r2_red", "expected a cancellable pair");
  CorpusEntry e;
  e.name = "r2_reducible";
  e.diagram = red;
  e.attrs["family"] = "braid";
  e.attrs["word"] = "1,1,2,-2,1";
  e.attrs["strands"] = "3";
  out.push_back(std::move(e));
  return out;
}

void write_file(const std::string& path, const std::vector<CorpusEntry>& es,
                const std::string& header) {
  std::ofstream out(path);
  if (!out) die(path, "cannot open for writing");
  out << emit_corpus(es, header);
  std::cout << path << ": " << es.size() << " diagrams\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);

  auto main_corpus = build_main_corpus();
  write_file(dir + "/knots_through_9.pd", main_corpus,
             "prime knot diagrams through nine crossings\n"
             "two-bridge entries list their twist groups; pretzel and braid\n"
             "entries their defining parameters; det is the knot determinant");

  write_file(dir + "/special.pd", build_special(main_corpus),
             "totally reduced nonalternating diagrams with odd o-length,\n"
             "obtained by switching crossings in alternating corpus entries");

  write_file(dir + "/reidemeister_pairs.pd", build_reidemeister(),
             "braid-closure pairs related by a single Reidemeister move;\n"
             "pair= groups the two diagrams, move= names the move");
  return 0;
}
