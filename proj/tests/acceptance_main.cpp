// Acceptance gate: ten checks over the bundled corpus and generated family
// diagrams, each with a hard runtime budget. Prints one verdict line per
// criterion and exits nonzero if any of them fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "bracketforge/bracket.hpp"
#include "bracketforge/corpus.hpp"
#include "bracketforge/diagram.hpp"
#include "bracketforge/families.hpp"
#include "bracketforge/graph.hpp"
#include "bracketforge/skeleton.hpp"

using namespace bracketforge;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int checks = 0;
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// every diagram any criterion touches, for the structural sweep at the end
std::vector<std::pair<std::string, Diagram>> g_touched;

const Diagram& touch(const std::string& name, const Diagram& d) {
  g_touched.emplace_back(name, d);
  return g_touched.back().second;
}

std::vector<CorpusEntry> g_corpus;       // knots_through_9 + special + pairs
std::vector<CorpusEntry> g_main_corpus;  // knots_through_9 only

bool run(int number, const std::string& label, double limit_s,
         void (*body)(Criterion&)) {
  Criterion c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& ex) {
    c.ok = false;
    c.detail = std::string("exception: ") + ex.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= limit_s) {
    c.ok = false;
    c.detail = "runtime budget exceeded";
  }
  std::printf("[%s] criterion %2d: %s — %d checks, %.2fs (limit %.0fs)%s%s\n",
              c.ok ? "PASS" : "FAIL", number, label.c_str(), c.checks, secs,
              limit_s, c.ok ? "" : " — ", c.detail.c_str());
  return c.ok;
}

// ---- criterion bodies -------------------------------------------------------

void crit_kauffman_murasugi(Criterion& c) {
  int seen = 0;
  for (const auto& e : g_main_corpus) {
    const Diagram& d = touch(e.name, e.diagram);
    if (!d.is_alternating() || !d.is_reduced() || !d.is_knot()) continue;
    ++seen;
    Laurent br = bracket(d);
    Laurent v = normalize_to_jones(br, d.writhe());
    c.expect(jones_span_t(v) == d.crossing_count(), e.name + ": span != c");
    ExtremeSummary es = extreme_summary(d, br);
    c.expect(es.a_extreme == 1 || es.a_extreme == -1,
             e.name + ": top coefficient not a unit");
    c.expect(es.b_extreme == 1 || es.b_extreme == -1,
             e.name + ": bottom coefficient not a unit");
  }
  c.expect(seen >= 50, "too few reduced alternating corpus diagrams");
}

void crit_oracle_agreement(Criterion& c) {
  for (const auto& e : g_corpus) {
    const Diagram& d = touch(e.name, e.diagram);
    if (d.crossing_count() > 12) continue;
    c.expect(bracket_skein(d) == bracket_oracle(d),
             e.name + ": skein evaluation disagrees with state enumeration");
  }
}

std::vector<std::pair<std::string, Diagram>> generated_family_instances() {
  std::vector<std::pair<std::string, Diagram>> out;

  // pretzel grid: lengths 3 and 5, entries of size 2..4 of either sign
  for (int n : {3, 5}) {
    std::vector<int> digit(n, 0);
    const int kChoices = 6;  // -4 -3 -2 2 3 4
    auto value = [](int digit) {
      static const int v[] = {-4, -3, -2, 2, 3, 4};
      return v[digit];
    };
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= kChoices;
    for (long long code = 0; code < total; ++code) {
      long long rest = code;
      std::vector<int> coeffs(n);
      int sum = 0;
      for (int i = 0; i < n; ++i) {
        coeffs[i] = value(rest % kChoices);
        rest /= kChoices;
        sum += std::abs(coeffs[i]);
      }
      if (sum > 14 || !pretzel_is_knot(coeffs)) continue;
      std::string name = "P(";
      for (int i = 0; i < n; ++i)
        name += (i ? "," : "") + std::to_string(coeffs[i]);
      name += ")";
      out.emplace_back(name, pretzel_link(coeffs));
    }
  }

  Diagram trefoil = pretzel_link({1, 1, 1});
  out.emplace_back("wd_trefoil", whitehead_double(trefoil, 0));
  out.emplace_back("cable_trefoil_2_1", cable(trefoil, 2, 1));
  return out;
}

void crit_lando_prediction(Criterion& c) {
  for (const auto& e : g_corpus) {
    if (e.diagram.crossing_count() > 12) continue;
    const Diagram& d = touch(e.name, e.diagram);
    auto [pa, pb] = predicted_extremes(d);
    ExtremeSummary es = extreme_summary(d);
    c.expect(es.a_extreme == pa && es.b_extreme == pb,
             e.name + ": Lando prediction missed an extreme coefficient");
  }
  for (const auto& [name, d] : generated_family_instances()) {
    if (d.crossing_count() > 14) continue;
    touch(name, d);
    auto [pa, pb] = predicted_extremes(d);
    ExtremeSummary es = extreme_summary(d);
    c.expect(es.a_extreme == pa && es.b_extreme == pb,
             name + ": Lando prediction missed an extreme coefficient");
  }
}

void crit_whitehead(Criterion& c) {
  Diagram trefoil = pretzel_link({1, 1, 1});
  const Diagram& d = touch("wd_trefoil", whitehead_double(trefoil, 0));
  WhiteheadPrediction p = whitehead_prediction(trefoil, 0);

  c.expect(d.crossing_count() == 14 && p.crossings == 14, "c' != 14");
  c.expect(d.o_length() == 7 && p.o_length == 7, "o' != 7");
  c.expect(resolve_loops(d, 0) == p.s_a && p.s_a == 5, "|S_A'| law");
  c.expect(resolve_loops(d, ~0ull) == p.s_b && p.s_b == 5, "|S_B'| law");

  Laurent br = bracket(d);
  Laurent v = normalize_to_jones(br, d.writhe());
  c.expect(jones_span_t(v) == 11 && p.span == 11, "span != 3c + 2 = 11");

  ExtremeSummary es = extreme_summary(d, br);
  c.expect(es.a_extreme != 0 && es.b_extreme != 0, "an extreme vanished");
  auto [la, lb] = lando_graphs(d);
  bool a_empty = la.chords.empty(), b_empty = lb.chords.empty();
  c.expect(a_empty != b_empty, "expected exactly one empty Lando side");
  c.expect(is_bipartite(a_empty ? lb.graph : la.graph),
           "nonempty Lando side is not bipartite");
}

void crit_cable(Criterion& c) {
  Diagram trefoil = pretzel_link({1, 1, 1});
  const Diagram& d = touch("cable_trefoil_2_1", cable(trefoil, 2, 1));
  CablePrediction p = cable_prediction(trefoil, 2, 1);

  c.expect(d.crossing_count() == 13 && p.crossings == 13, "c' != 13");
  c.expect(p.laws_known, "state-count laws did not apply");
  c.expect(resolve_loops(d, 0) == p.s_a && p.s_a == 6, "|S_A'| law");
  c.expect(resolve_loops(d, ~0ull) == p.s_b && p.s_b == 3, "|S_B'| law");

  Laurent v = jones(d);
  c.expect(jones_span_t(v) == 10 && p.span == 10,
           "span != (n^2+n)c/2 + (n-1) = 10");
}

void crit_pretzel_suite(Criterion& c) {
  int instances = 0, spans = 0, signs = 0;
  for (const auto& [name, d] : generated_family_instances()) {
    if (name.rfind("P(", 0) != 0) continue;
    ++instances;
    touch(name, d);

    // recover the coefficients from the instance name
    std::vector<int> coeffs;
    std::string inner = name.substr(2, name.size() - 3);
    for (std::size_t pos = 0; pos < inner.size();) {
      std::size_t comma = inner.find(',', pos);
      if (comma == std::string::npos) comma = inner.size();
      coeffs.push_back(std::stoi(inner.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    PretzelPrediction p = pretzel_prediction(coeffs);

    c.expect(d.is_knot(), name + ": not a knot");
    c.expect(d.o_length() == p.o_length, name + ": o-length prediction");

    Laurent br = bracket(d);
    ExtremeSummary es = extreme_summary(d, br);
    if (p.span_known) {
      ++spans;
      Laurent v = normalize_to_jones(br, d.writhe());
      c.expect(jones_span_t(v) == p.span, name + ": span formula");
    }
    if (p.a_sign_known) {
      ++signs;
      c.expect(es.a_extreme == p.a_sign, name + ": top coefficient sign");
    }
    if (p.b_sign_known) {
      ++signs;
      c.expect(es.b_extreme == p.b_sign, name + ": bottom coefficient sign");
    }

    Certificate cert = nontriviality_certificate(d);
    c.expect(cert.certified, name + ": certificate failed to fire");
    Laurent v = normalize_to_jones(br, d.writhe());
    c.expect(!(v == Laurent::constant(Var::TQuarter, 1)),
             name + ": trivial Jones polynomial");
  }
  c.expect(instances >= 100, "grid enumeration came up short");
  c.expect(spans >= 10, "span formula coverage too thin");
  c.expect(signs >= 50, "sign corollary coverage too thin");
}

void crit_span_bound_audit(Criterion& c) {
  std::vector<std::pair<std::string, Diagram>> pool;
  for (const auto& e : g_corpus) pool.emplace_back(e.name, e.diagram);
  auto gen = generated_family_instances();
  pool.insert(pool.end(), gen.begin(), gen.end());

  int odd_o = 0, audited = 0;
  for (const auto& [name, d] : pool) {
    if (d.crossing_count() > 14 || d.is_alternating()) continue;
    if (!d.is_totally_reduced() || !d.is_knot()) continue;
    touch(name, d);
    ++audited;

    int span = jones_span_t(jones(d));
    int states = extreme_states_bound(d);
    c.expect(span <= states, name + ": span exceeds the extreme-states bound");
    SpanBounds sb = span_bound(d);
    c.expect(sb.applicable, name + ": bound rules unexpectedly inapplicable");
    for (const auto& r : sb.rules)
      c.expect(span <= r.bound, name + ": span exceeds rule " + r.rule);

    if (d.o_length() >= 5 && d.o_length() % 2 == 1) {
      ++odd_o;
      Skeleton sk = build_skeleton(d);
      int deficiency = split(sk, SplitMode::A).count +
                       split(sk, SplitMode::B).count - sk.vertex_count();
      c.expect(deficiency <= -6, name + ": odd-o deficiency above -6");
    }
  }
  c.expect(audited >= 20, "too few totally reduced nonalternating diagrams");
  c.expect(odd_o >= 4, "too few odd-o instances");
}

void crit_independence_sums(Criterion& c) {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 200; ++trial) {
    int v = 1 + static_cast<int>(rng() % 12);
    SimpleGraph g(v);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double p = 0.1 + 0.8 * coin(rng);
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j)
        if (coin(rng) < p) g.add_edge(i, j);

    long long fast = independence_alternating_sum(g);
    c.expect(fast == independence_alternating_sum_bruteforce(g),
             "recursion disagrees with enumeration");

    // multiplicativity over a disjoint union with a smaller random graph
    int w = 1 + static_cast<int>(rng() % 6);
    SimpleGraph h(w);
    for (int i = 0; i < w; ++i)
      for (int j = i + 1; j < w; ++j)
        if (coin(rng) < p) h.add_edge(i, j);
    c.expect(independence_alternating_sum(disjoint_union(g, h)) ==
                 fast * independence_alternating_sum(h),
             "disjoint union is not multiplicative");
  }

  // complete multipartite graphs: f = 1 - (number of parts), nonzero
  std::vector<int> parts;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      if (parts.size() < 2) return;
      SimpleGraph g = complete_multipartite(parts);
      long long f = independence_alternating_sum(g);
      c.expect(f == 1 - static_cast<long long>(parts.size()) && f != 0,
               "complete multipartite value");
      return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
      parts.push_back(next);
      self(self, remaining - next, next);
      parts.pop_back();
    }
  };
  for (int total = 2; total <= 12; ++total) recurse(recurse, total, total);
}

void crit_structural_invariants(Criterion& c) {
  for (const auto& [name, d] : g_touched) {
    if (d.crossing_count() == 0) continue;
    c.expect(d.o_length() == d.u_length(), name + ": o != u");
    c.expect(d.bridge_number() == d.crossing_count() - d.o_length(),
             name + ": b != c - o");

    Skeleton sk = build_skeleton(d);
    c.expect(sk.edge_count() == 2 * d.o_length(),
             name + ": skeleton edge count");
    for (const auto& rot : sk.rotations)
      for (std::size_t i = 0; i < rot.size(); ++i)
        c.expect(sk.edges[rot[i].first].sign !=
                     sk.edges[rot[(i + 1) % rot.size()].first].sign,
                 name + ": skeleton signs fail to alternate");

    std::vector<int> balance(d.face_count(), 0);
    for (int dart = 0; dart < 4 * d.crossing_count(); ++dart) {
      EdgeSign s = d.edge_sign(d.edge_at(dart));
      if (s == EdgeSign::Neutral) continue;
      balance[d.face_of_dart(dart)] += s == EdgeSign::Positive ? 1 : -1;
    }
    for (int b : balance)
      c.expect(b == 0, name + ": face sign imbalance");
  }
  c.expect(g_touched.size() >= 400, "too few touched diagrams recorded");
}

void crit_reidemeister(Criterion& c) {
  std::map<std::string, std::vector<const CorpusEntry*>> pairs;
  for (const auto& e : g_corpus)
    if (e.has_attr("pair")) pairs[e.attr("pair")].push_back(&e);

  int r1 = 0, r23 = 0;
  for (const auto& [label, group] : pairs) {
    c.expect(group.size() == 2, label + ": not a pair");
    if (group.size() != 2) continue;
    const Diagram& d1 = touch(group[0]->name, group[0]->diagram);
    const Diagram& d2 = touch(group[1]->name, group[1]->diagram);
    std::string move = group[0]->attr("move");
    if (move == "R1") {
      ++r1;
      c.expect(jones(d1) == jones(d2), label + ": Jones changed under R1");
    } else {
      ++r23;
      c.expect(bracket(d1) == bracket(d2),
               label + ": bracket changed under " + move);
    }
  }
  c.expect(r1 == 3, "expected three R1 pairs");
  c.expect(r23 == 3, "expected three R2/R3 pairs");
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  g_main_corpus = load_corpus(dir + "/knots_through_9.pd");
  g_corpus = g_main_corpus;
  for (const char* f : {"/special.pd", "/reidemeister_pairs.pd"}) {
    auto es = load_corpus(dir + f);
    g_corpus.insert(g_corpus.end(), es.begin(), es.end());
  }

  bool ok = true;
  ok &= run(1, "span and unit extremes on reduced alternating diagrams", 120,
            crit_kauffman_murasugi);
  ok &= run(2, "skein bracket equals full state enumeration", 120,
            crit_oracle_agreement);
  ok &= run(3, "independence sums predict extreme coefficients", 300,
            crit_lando_prediction);
  ok &= run(4, "untwisted double of the trefoil", 60, crit_whitehead);
  ok &= run(5, "two-cable of the trefoil", 60, crit_cable);
  ok &= run(6, "pretzel grid: o-length, span, signs, certificates", 600,
            crit_pretzel_suite);
  ok &= run(7, "span bounds on totally reduced nonalternating diagrams", 120,
            crit_span_bound_audit);
  ok &= run(8, "independence sum recursion and multipartite values", 60,
            crit_independence_sums);
  ok &= run(9, "structural invariants on every touched diagram", 120,
            crit_structural_invariants);
  ok &= run(10, "bracket/Jones invariance across move pairs", 60,
            crit_reidemeister);

  std::printf("%s\n", ok ? "acceptance: all criteria hold"
                         : "acceptance: FAILURES present");
  return ok ? 0 : 1;
}
