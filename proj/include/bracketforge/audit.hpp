#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bracketforge/bracket.hpp"
#include "bracketforge/corpus.hpp"
#include "bracketforge/diagram.hpp"
#include "bracketforge/families.hpp"
#include "bracketforge/skeleton.hpp"
#include "json.hpp"

namespace bracketforge {

using ordered_json = nlohmann::ordered_json;

// --- Verdicts and records -----------------------------------------------------

enum class Verdict { Pass, Fail, Inapplicable, SkippedBudget };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
    case Verdict::SkippedBudget: return "skipped-budget";
  }
  return "?";
}

struct ClaimResult {
  std::string claim_id;
  Verdict verdict = Verdict::Inapplicable;
  std::string predicted;
  std::string observed;
};

// Crossing ceilings for the expensive evaluators. The oracle walks all 2^c
// states; the skein evaluator is comfortable somewhat past that.
struct Budget {
  int oracle_limit = 12;
  int bracket_limit = 16;
};

struct AuditRecord {
  std::string name;
  std::string provenance;
  int crossings = 0;
  std::vector<std::pair<std::string, std::string>> invariants;
  std::vector<ClaimResult> claims;

  bool any_fail() const {
    for (const auto& c : claims)
      if (c.verdict == Verdict::Fail) return true;
    return false;
  }
};

inline bool any_failure(const std::vector<AuditRecord>& records) {
  for (const auto& r : records)
    if (r.any_fail()) return true;
  return false;
}

// --- Lazy per-diagram analysis --------------------------------------------------

// Computes each quantity at most once; claims share the results. Budget gates
// are checked by callers before touching polynomial-valued accessors.
class DiagramAnalysis {
 public:
  DiagramAnalysis(const CorpusEntry& entry, Budget budget)
      : entry_(entry), budget_(budget) {}

  const CorpusEntry& entry() const { return entry_; }
  const Diagram& d() const { return entry_.diagram; }
  const Budget& budget() const { return budget_; }

  bool bracket_ok() const {
    return d().crossing_count() <= budget_.bracket_limit;
  }
  bool oracle_ok() const { return d().crossing_count() <= budget_.oracle_limit; }

  const Laurent& bracket_poly() {
    if (!bracket_) bracket_ = bracket(d());
    return *bracket_;
  }
  const Laurent& oracle_poly() {
    if (!oracle_) oracle_ = bracket_oracle(d());
    return *oracle_;
  }
  const Laurent& jones_poly() {
    if (!jones_) jones_ = normalize_to_jones(bracket_poly(), d().writhe());
    return *jones_;
  }
  const ExtremeSummary& extremes() {
    if (!extremes_) extremes_ = extreme_summary(d(), bracket_poly());
    return *extremes_;
  }
  const Skeleton& skeleton() {
    if (!skeleton_) skeleton_ = build_skeleton(d());
    return *skeleton_;
  }
  int ga_count() {
    if (!ga_) ga_ = split(skeleton(), SplitMode::A).count;
    return *ga_;
  }
  int gb_count() {
    if (!gb_) gb_ = split(skeleton(), SplitMode::B).count;
    return *gb_;
  }
  const LandoGraph& lando_a() {
    ensure_lando();
    return *lando_a_;
  }
  const LandoGraph& lando_b() {
    ensure_lando();
    return *lando_b_;
  }
  long long f_a() { return independence_alternating_sum(lando_a().graph); }
  long long f_b() { return independence_alternating_sum(lando_b().graph); }
  std::pair<long long, long long> predicted() {
    if (!predicted_) predicted_ = predicted_extremes(d());
    return *predicted_;
  }
  const Certificate& certificate() {
    if (!certificate_) certificate_ = nontriviality_certificate(d());
    return *certificate_;
  }
  const Adequacy& adeq() {
    if (!adeq_) adeq_ = adequacy(d());
    return *adeq_;
  }
  const Adequacy& adeq_oracle() {
    if (!adeq_oracle_)
      adeq_oracle_ = adequacy_oracle(d(), budget_.oracle_limit);
    return *adeq_oracle_;
  }
  const SpanBounds& bounds() {
    if (!bounds_) bounds_ = span_bound(d());
    return *bounds_;
  }
  int states_bound() {
    if (!states_bound_) states_bound_ = extreme_states_bound(d());
    return *states_bound_;
  }
  int span_t() { return jones_span_t(jones_poly()); }

 private:
  void ensure_lando() {
    if (!lando_a_) {
      auto [a, b] = lando_graphs(d());
      lando_a_ = std::move(a);
      lando_b_ = std::move(b);
    }
  }

  const CorpusEntry& entry_;
  Budget budget_;
  std::optional<Laurent> bracket_, oracle_, jones_;
  std::optional<ExtremeSummary> extremes_;
  std::optional<Skeleton> skeleton_;
  std::optional<int> ga_, gb_;
  std::optional<LandoGraph> lando_a_, lando_b_;
  std::optional<std::pair<long long, long long>> predicted_;
  std::optional<Certificate> certificate_;
  std::optional<Adequacy> adeq_, adeq_oracle_;
  std::optional<SpanBounds> bounds_;
  std::optional<int> states_bound_;
};

// --- Claim registry -------------------------------------------------------------

struct Claim {
  std::string id;
  std::string statement;
  std::function<ClaimResult(DiagramAnalysis&)> run;
};

namespace detail {

inline ClaimResult verdict_only(const std::string& id, Verdict v) {
  ClaimResult r;
  r.claim_id = id;
  r.verdict = v;
  return r;
}

inline ClaimResult checked(const std::string& id, bool ok,
                           std::string predicted, std::string observed) {
  ClaimResult r;
  r.claim_id = id;
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  r.predicted = std::move(predicted);
  r.observed = std::move(observed);
  return r;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline bool is_family(const CorpusEntry& e, const char* fam) {
  return e.attr("family") == fam;
}

}  // namespace detail

inline const std::vector<Claim>& claim_registry() {
  using detail::checked;
  using detail::verdict_only;
  static const std::vector<Claim> registry = [] {
    std::vector<Claim> cs;

    cs.push_back({"structure-edge-balance",
                  "positive and negative edge counts agree and overpasses "
                  "number c - o",
                  [](DiagramAnalysis& a) -> ClaimResult {
                    const auto& d = a.d();
                    if (d.crossing_count() == 0)
                      return verdict_only("structure-edge-balance",
                                          Verdict::Inapplicable);
                    bool ok = d.o_length() == d.u_length() &&
                              d.bridge_number() ==
                                  d.crossing_count() - d.o_length();
                    return checked(
                        "structure-edge-balance", ok, "o=u, b=c-o",
                        "o=" + std::to_string(d.o_length()) +
                            " u=" + std::to_string(d.u_length()) +
                            " b=" + std::to_string(d.bridge_number()));
                  }});

    cs.push_back({"structure-euler",
                  "face count is c + 2 (sphere Euler characteristic)",
                  [](DiagramAnalysis& a) -> ClaimResult {
                    const auto& d = a.d();
                    if (d.crossing_count() == 0)
                      return verdict_only("structure-euler",
                                          Verdict::Inapplicable);
                    return checked("structure-euler",
                                   d.face_count() == d.crossing_count() + 2,
                                   std::to_string(d.crossing_count() + 2),
                                   std::to_string(d.face_count()));
                  }});

    cs.push_back(
        {"structure-face-balance",
         "every face boundary carries equally many positive and negative edges",
         [](DiagramAnalysis& a) -> ClaimResult {
           const auto& d = a.d();
           if (d.crossing_count() == 0)
             return verdict_only("structure-face-balance",
                                 Verdict::Inapplicable);
           std::vector<int> balance(d.face_count(), 0);
           for (int dart = 0; dart < 4 * d.crossing_count(); ++dart) {
             EdgeSign s = d.edge_sign(d.edge_at(dart));
             if (s == EdgeSign::Neutral) continue;
             balance[d.face_of_dart(dart)] += s == EdgeSign::Positive ? 1 : -1;
           }
           int bad = 0;
           for (int b : balance)
             if (b != 0) ++bad;
           return checked("structure-face-balance", bad == 0,
                          "0 imbalanced faces",
                          std::to_string(bad) + " imbalanced faces");
         }});

    cs.push_back({"structure-gauss-oo",
                  "o-length recomputed from the Gauss code agrees",
                  [](DiagramAnalysis& a) -> ClaimResult {
                    const auto& d = a.d();
                    if (d.crossing_count() == 0 || !d.is_knot())
                      return verdict_only("structure-gauss-oo",
                                          Verdict::Inapplicable);
                    int g = o_from_gauss(d.to_gauss());
                    return checked("structure-gauss-oo", g == d.o_length(),
                                   std::to_string(d.o_length()),
                                   std::to_string(g));
                  }});

    cs.push_back({"structure-o-not-one",
                  "no totally reduced diagram has o-length one",
                  [](DiagramAnalysis& a) -> ClaimResult {
                    const auto& d = a.d();
                    if (d.crossing_count() == 0 || !d.is_totally_reduced())
                      return verdict_only("structure-o-not-one",
                                          Verdict::Inapplicable);
                    return checked("structure-o-not-one", d.o_length() != 1,
                                   "o != 1", "o=" + std::to_string(d.o_length()));
                  }});

    cs.push_back({"skeleton-edge-count",
                  "the nonalternating skeleton has exactly 2 o(D) edges",
                  [](DiagramAnalysis& a) -> ClaimResult {
                    const auto& d = a.d();
                    if (d.crossing_count() == 0)
                      return verdict_only("skeleton-edge-count",
                                          Verdict::Inapplicable);
                    int e = a.skeleton().edge_count();
                    return checked("skeleton-edge-count",
                                   e == 2 * d.o_length(),
                                   std::to_string(2 * d.o_length()),
                                   std::to_string(e));
                  }});

    cs.push_back(
        {"skeleton-sign-alternation",
         "edge signs alternate around every skeleton vertex",
         [](DiagramAnalysis& a) -> ClaimResult {
           const auto& d = a.d();
           if (d.crossing_count() == 0 || d.o_length() == 0)
             return verdict_only("skeleton-sign-alternation",
                                 Verdict::Inapplicable);
           const Skeleton& sk = a.skeleton();
           int bad = 0;
           for (const auto& rot : sk.rotations) {
             for (std::size_t i = 0; i < rot.size(); ++i) {
               EdgeSign s1 = sk.edges[rot[i].first].sign;
               EdgeSign s2 = sk.edges[rot[(i + 1) % rot.size()].first].sign;
               if (s1 == s2) ++bad;
             }
           }
           return checked("skeleton-sign-alternation", bad == 0,
                          "0 same-sign adjacencies",
                          std::to_string(bad) + " same-sign adjacencies");
         }});

    cs.push_back({"skein-vs-oracle",
                  "skein-evaluated bracket equals the full state enumeration",
                  [](DiagramAnalysis& a) -> ClaimResult {
                    if (a.d().crossing_count() == 0)
                      return verdict_only("skein-vs-oracle",
                                          Verdict::Inapplicable);
                    if (!a.oracle_ok())
                      return verdict_only("skein-vs-oracle",
                                          Verdict::SkippedBudget);
                    bool ok = a.bracket_poly() == a.oracle_poly();
                    return checked("skein-vs-oracle", ok,
                                   a.oracle_poly().to_string(),
                                   a.bracket_poly().to_string());
                  }});

    cs.push_back(
        {"kauffman-murasugi",
         "reduced alternating: span(V) = c and extreme coefficients are unit",
         [](DiagramAnalysis& a) -> ClaimResult {
           const auto& d = a.d();
           if (d.crossing_count() == 0 || !d.is_knot() || !d.is_reduced() ||
               !d.is_alternating())
             return verdict_only("kauffman-murasugi", Verdict::Inapplicable);
           if (!a.bracket_ok())
             return verdict_only("kauffman-murasugi", Verdict::SkippedBudget);
           const auto& es = a.extremes();
           bool units = (es.a_extreme == 1 || es.a_extreme == -1) &&
                        (es.b_extreme == 1 || es.b_extreme == -1);
           bool ok = a.span_t() == d.crossing_count() && units;
           return checked(
               "kauffman-murasugi", ok,
               "span=" + std::to_string(d.crossing_count()) + " extremes unit",
               "span=" + std::to_string(a.span_t()) + " a=" +
                   es.a_extreme.str() + " b=" + es.b_extreme.str());
         }});

    cs.push_back({"jones-det-odd",
                  "|V(-1)| is odd for knots",
                  [](DiagramAnalysis& a) -> ClaimResult {
                    const auto& d = a.d();
                    if (d.crossing_count() == 0 || !d.is_knot())
                      return verdict_only("jones-det-odd",
                                          Verdict::Inapplicable);
                    if (!a.bracket_ok())
                      return verdict_only("jones-det-odd",
                                          Verdict::SkippedBudget);
                    BigInt det = jones_eval_minus1(a.jones_poly());
                    if (det < 0) det = -det;
                    return checked("jones-det-odd", det % 2 == 1,
                                   "odd determinant", det.str());
                  }});

    cs.push_back({"adequacy-vs-oracle",
                  "corner-based adequacy flags match degree-based flags",
                  [](DiagramAnalysis& a) -> ClaimResult {
                    if (a.d().crossing_count() == 0)
                      return verdict_only("adequacy-vs-oracle",
                                          Verdict::Inapplicable);
                    if (!a.oracle_ok())
                      return verdict_only("adequacy-vs-oracle",
                                          Verdict::SkippedBudget);
                    bool ok = a.adeq().plus == a.adeq_oracle().plus &&
                              a.adeq().minus == a.adeq_oracle().minus;
                    auto fmt = [](const Adequacy& q) {
                      return std::string(q.plus ? "+" : ".") +
                             (q.minus ? "-" : ".");
                    };
                    return checked("adequacy-vs-oracle", ok,
                                   fmt(a.adeq_oracle()), fmt(a.adeq()));
                  }});

    cs.push_back(
        {"lando-adequate-empty",
         "a side is adequate exactly when its Lando graph has no vertex",
         [](DiagramAnalysis& a) -> ClaimResult {
           if (a.d().crossing_count() == 0)
             return verdict_only("lando-adequate-empty", Verdict::Inapplicable);
           bool ok = a.adeq().plus == a.lando_a().chords.empty() &&
                     a.adeq().minus == a.lando_b().chords.empty();
           return checked(
               "lando-adequate-empty", ok, "flags match graph emptiness",
               "plus=" + std::to_string(a.adeq().plus) + " |L_A|=" +
                   std::to_string(a.lando_a().chords.size()) + " minus=" +
                   std::to_string(a.adeq().minus) + " |L_B|=" +
                   std::to_string(a.lando_b().chords.size()));
         }});

    cs.push_back(
        {"lando-vs-oracle",
         "signed independence sums predict both extreme bracket coefficients",
         [](DiagramAnalysis& a) -> ClaimResult {
           if (a.d().crossing_count() == 0)
             return verdict_only("lando-vs-oracle", Verdict::Inapplicable);
           if (!a.bracket_ok())
             return verdict_only("lando-vs-oracle", Verdict::SkippedBudget);
           auto [pa, pb] = a.predicted();
           const auto& es = a.extremes();
           bool ok = es.a_extreme == pa && es.b_extreme == pb;
           return checked("lando-vs-oracle", ok,
                          "a=" + std::to_string(pa) +
                              " b=" + std::to_string(pb),
                          "a=" + es.a_extreme.str() + " b=" +
                              es.b_extreme.str());
         }});

    cs.push_back(
        {"span-vs-extreme-states-bound",
         "span(V) never exceeds the extreme-states bound",
         [](DiagramAnalysis& a) -> ClaimResult {
           const auto& d = a.d();
           if (d.crossing_count() == 0 || !d.is_knot() || d.is_alternating() ||
               !d.is_totally_reduced())
             return verdict_only("span-vs-extreme-states-bound",
                                 Verdict::Inapplicable);
           if (!a.bracket_ok())
             return verdict_only("span-vs-extreme-states-bound",
                                 Verdict::SkippedBudget);
           return checked("span-vs-extreme-states-bound",
                          a.span_t() <= a.states_bound(),
                          "span <= " + std::to_string(a.states_bound()),
                          "span=" + std::to_string(a.span_t()));
         }});

    cs.push_back(
        {"span-bound-rules",
         "span(V) respects every applicable case bound",
         [](DiagramAnalysis& a) -> ClaimResult {
           const auto& d = a.d();
           if (d.crossing_count() == 0 || !d.is_knot() ||
               !a.bounds().applicable)
             return verdict_only("span-bound-rules", Verdict::Inapplicable);
           if (!a.bracket_ok())
             return verdict_only("span-bound-rules", Verdict::SkippedBudget);
           std::string broken;
           for (const auto& r : a.bounds().rules)
             if (a.span_t() > r.bound) broken += r.rule + " ";
           return checked("span-bound-rules", broken.empty(),
                          "span <= " + std::to_string(a.bounds().best) + " (" +
                              a.bounds().best_rule + ")",
                          broken.empty()
                              ? "span=" + std::to_string(a.span_t())
                              : "span=" + std::to_string(a.span_t()) +
                                    " breaks " + broken);
         }});

    cs.push_back({"span-bound-o3",
                  "o-length three forces span(V) <= c - 2",
                  [](DiagramAnalysis& a) -> ClaimResult {
                    const auto& d = a.d();
                    if (d.crossing_count() == 0 || !d.is_knot() ||
                        d.o_length() != 3 || !d.is_totally_reduced())
                      return verdict_only("span-bound-o3",
                                          Verdict::Inapplicable);
                    if (!a.bracket_ok())
                      return verdict_only("span-bound-o3",
                                          Verdict::SkippedBudget);
                    int cap = d.crossing_count() - 2;
                    return checked("span-bound-o3", a.span_t() <= cap,
                                   "span <= " + std::to_string(cap),
                                   "span=" + std::to_string(a.span_t()));
                  }});

    cs.push_back(
        {"odd-o-deficiency",
         "odd o-length of five or more forces |G_A|+|G_B|-v <= -6",
         [](DiagramAnalysis& a) -> ClaimResult {
           const auto& d = a.d();
           if (d.crossing_count() == 0 || !d.is_totally_reduced() ||
               d.o_length() < 5 || d.o_length() % 2 == 0)
             return verdict_only("odd-o-deficiency", Verdict::Inapplicable);
           int v = a.skeleton().vertex_count();
           int def = a.ga_count() + a.gb_count() - v;
           return checked("odd-o-deficiency", def <= -6, "<= -6",
                          std::to_string(def));
         }});

    cs.push_back(
        {"nontriviality-certificate",
         "a certified diagram really has nontrivial Jones polynomial",
         [](DiagramAnalysis& a) -> ClaimResult {
           const auto& d = a.d();
           if (d.crossing_count() == 0 || !d.is_knot() ||
               !a.certificate().certified)
             return verdict_only("nontriviality-certificate",
                                 Verdict::Inapplicable);
           if (!a.bracket_ok())
             return verdict_only("nontriviality-certificate",
                                 Verdict::SkippedBudget);
           bool ok = !(a.jones_poly() == Laurent::constant(Var::TQuarter, 1));
           return checked("nontriviality-certificate", ok,
                          "V != 1 (" + a.certificate().reason + ")",
                          ok ? "V != 1" : "V = 1");
         }});

    // --- family claims; generated entries carry their parameters as attrs ---

    cs.push_back(
        {"pretzel-o-length",
         "pretzel o-length equals the cyclic sign-change count",
         [](DiagramAnalysis& a) -> ClaimResult {
           if (!detail::is_family(a.entry(), "pretzel"))
             return verdict_only("pretzel-o-length", Verdict::Inapplicable);
           auto coeffs = detail::parse_int_list(a.entry().attr("coeffs"));
           PretzelPrediction p = pretzel_prediction(coeffs);
           return checked("pretzel-o-length", a.d().o_length() == p.o_length,
                          std::to_string(p.o_length),
                          std::to_string(a.d().o_length()));
         }});

    cs.push_back(
        {"pretzel-span",
         "pretzel span formula where both Lando sides are chord-free",
         [](DiagramAnalysis& a) -> ClaimResult {
           if (!detail::is_family(a.entry(), "pretzel"))
             return verdict_only("pretzel-span", Verdict::Inapplicable);
           auto coeffs = detail::parse_int_list(a.entry().attr("coeffs"));
           PretzelPrediction p = pretzel_prediction(coeffs);
           if (!p.span_known)
             return verdict_only("pretzel-span", Verdict::Inapplicable);
           if (!a.bracket_ok())
             return verdict_only("pretzel-span", Verdict::SkippedBudget);
           return checked("pretzel-span", a.span_t() == p.span,
                          std::to_string(p.span), std::to_string(a.span_t()));
         }});

    cs.push_back(
        {"pretzel-extreme-sign",
         "pretzel extreme coefficients are unit with the predicted signs",
         [](DiagramAnalysis& a) -> ClaimResult {
           if (!detail::is_family(a.entry(), "pretzel"))
             return verdict_only("pretzel-extreme-sign", Verdict::Inapplicable);
           auto coeffs = detail::parse_int_list(a.entry().attr("coeffs"));
           PretzelPrediction p = pretzel_prediction(coeffs);
           if (!p.a_sign_known && !p.b_sign_known)
             return verdict_only("pretzel-extreme-sign", Verdict::Inapplicable);
           if (!a.bracket_ok())
             return verdict_only("pretzel-extreme-sign",
                                 Verdict::SkippedBudget);
           const auto& es = a.extremes();
           bool ok = true;
           std::string want, got;
           if (p.a_sign_known) {
             ok = ok && es.a_extreme == p.a_sign;
             want += "a=" + std::to_string(p.a_sign) + " ";
             got += "a=" + es.a_extreme.str() + " ";
           }
           if (p.b_sign_known) {
             ok = ok && es.b_extreme == p.b_sign;
             want += "b=" + std::to_string(p.b_sign);
             got += "b=" + es.b_extreme.str();
           }
           return checked("pretzel-extreme-sign", ok, want, got);
         }});

    cs.push_back({"pretzel-certificate",
                  "the nontriviality certificate fires on every pretzel knot",
                  [](DiagramAnalysis& a) -> ClaimResult {
                    if (!detail::is_family(a.entry(), "pretzel"))
                      return verdict_only("pretzel-certificate",
                                          Verdict::Inapplicable);
                    return checked("pretzel-certificate",
                                   a.certificate().certified, "certified",
                                   a.certificate().certified
                                       ? a.certificate().reason
                                       : "unknown");
                  }});

    auto attr_count_claim = [](const char* id, const char* fam,
                               const char* attr_key,
                               std::function<int(DiagramAnalysis&)> measure) {
      return [id = std::string(id), fam = std::string(fam),
              attr_key = std::string(attr_key),
              measure](DiagramAnalysis& a) -> ClaimResult {
        if (a.entry().attr("family") != fam || !a.entry().has_attr(attr_key))
          return detail::verdict_only(id, Verdict::Inapplicable);
        int want = a.entry().attr_int(attr_key);
        int got = measure(a);
        return detail::checked(id, want == got, std::to_string(want),
                               std::to_string(got));
      };
    };

    cs.push_back({"whitehead-counts",
                  "doubled diagram has 4c + 2 + 2|t| crossings",
                  attr_count_claim("whitehead-counts", "whitehead", "pred_c",
                                   [](DiagramAnalysis& a) {
                                     return a.d().crossing_count();
                                   })});
    cs.push_back({"whitehead-o",
                  "untwisted double has o-length 2c + 2o + 1",
                  attr_count_claim("whitehead-o", "whitehead", "pred_o",
                                   [](DiagramAnalysis& a) {
                                     return a.d().o_length();
                                   })});
    cs.push_back(
        {"whitehead-state-counts",
         "untwisted double state circles: |S_A'| = 2|S_A|-1, |S_B'| = 2|S_B|+1",
         [](DiagramAnalysis& a) -> ClaimResult {
           const CorpusEntry& e = a.entry();
           if (!detail::is_family(e, "whitehead") || !e.has_attr("pred_sa") ||
               !e.has_attr("pred_sb"))
             return verdict_only("whitehead-state-counts",
                                 Verdict::Inapplicable);
           int sa = resolve_loops(a.d(), 0);
           int sb = resolve_loops(a.d(), ~0ull);
           bool ok = sa == e.attr_int("pred_sa") && sb == e.attr_int("pred_sb");
           return checked("whitehead-state-counts", ok,
                          "sa=" + e.attr("pred_sa") + " sb=" + e.attr("pred_sb"),
                          "sa=" + std::to_string(sa) +
                              " sb=" + std::to_string(sb));
         }});
    cs.push_back(
        {"whitehead-span",
         "untwisted double of an alternating companion has span 3c + 2",
         [](DiagramAnalysis& a) -> ClaimResult {
           const CorpusEntry& e = a.entry();
           if (!detail::is_family(e, "whitehead") || !e.has_attr("pred_span"))
             return verdict_only("whitehead-span", Verdict::Inapplicable);
           if (!a.bracket_ok())
             return verdict_only("whitehead-span", Verdict::SkippedBudget);
           return checked("whitehead-span",
                          a.span_t() == e.attr_int("pred_span"),
                          e.attr("pred_span"), std::to_string(a.span_t()));
         }});
    cs.push_back(
        {"whitehead-lando",
         "untwisted double: extremes nonzero, one Lando side empty, the other "
         "bipartite",
         [](DiagramAnalysis& a) -> ClaimResult {
           const CorpusEntry& e = a.entry();
           if (!detail::is_family(e, "whitehead") || e.attr("twists") != "0")
             return verdict_only("whitehead-lando", Verdict::Inapplicable);
           if (!a.bracket_ok())
             return verdict_only("whitehead-lando", Verdict::SkippedBudget);
           const auto& es = a.extremes();
           bool a_empty = a.lando_a().chords.empty();
           bool b_empty = a.lando_b().chords.empty();
           bool one_empty = a_empty != b_empty;
           bool other_bip = is_bipartite(a_empty ? a.lando_b().graph
                                                 : a.lando_a().graph);
           bool ok = es.a_extreme != 0 && es.b_extreme != 0 && one_empty &&
                     other_bip;
           return checked(
               "whitehead-lando", ok,
               "extremes nonzero; one side empty, other bipartite",
               "a=" + es.a_extreme.str() + " b=" + es.b_extreme.str() +
                   " |L_A|=" + std::to_string(a.lando_a().chords.size()) +
                   " |L_B|=" + std::to_string(a.lando_b().chords.size()) +
                   (one_empty ? (other_bip ? "" : " nonbipartite") : " "));
         }});

    cs.push_back({"cable-counts",
                  "cabled diagram has n^2 c + m(n-1) crossings",
                  attr_count_claim("cable-counts", "cable", "pred_c",
                                   [](DiagramAnalysis& a) {
                                     return a.d().crossing_count();
                                   })});
    cs.push_back(
        {"cable-state-counts",
         "one-shift cable of an alternating companion: |S_A'| = n|S_A|, "
         "|S_B'| = n(|S_B|-1)+1",
         [](DiagramAnalysis& a) -> ClaimResult {
           const CorpusEntry& e = a.entry();
           if (!detail::is_family(e, "cable") || !e.has_attr("pred_sa") ||
               !e.has_attr("pred_sb"))
             return verdict_only("cable-state-counts", Verdict::Inapplicable);
           int sa = resolve_loops(a.d(), 0);
           int sb = resolve_loops(a.d(), ~0ull);
           bool ok = sa == e.attr_int("pred_sa") && sb == e.attr_int("pred_sb");
           return checked("cable-state-counts", ok,
                          "sa=" + e.attr("pred_sa") + " sb=" + e.attr("pred_sb"),
                          "sa=" + std::to_string(sa) +
                              " sb=" + std::to_string(sb));
         }});
    cs.push_back(
        {"cable-span",
         "one-shift cable of an alternating companion has span (n^2+n)c/2 + "
         "(n-1)",
         [](DiagramAnalysis& a) -> ClaimResult {
           const CorpusEntry& e = a.entry();
           if (!detail::is_family(e, "cable") || !e.has_attr("pred_span"))
             return verdict_only("cable-span", Verdict::Inapplicable);
           if (!a.bracket_ok())
             return verdict_only("cable-span", Verdict::SkippedBudget);
           return checked("cable-span", a.span_t() == e.attr_int("pred_span"),
                          e.attr("pred_span"), std::to_string(a.span_t()));
         }});

    return cs;
  }();
  return registry;
}

// --- Result cache ----------------------------------------------------------------

// JSON-lines file mapping canonical diagram keys to their serialized
// invariants; a hit is returned verbatim, so repeat runs are bit-identical.
class ResultCache {
 public:
  using Invariants = std::vector<std::pair<std::string, std::string>>;

  ResultCache() = default;
  explicit ResultCache(std::string path) : path_(std::move(path)) { load(); }

  const std::string& path() const { return path_; }
  std::size_t size() const { return store_.size(); }

  void load() {
    store_.clear();
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ordered_json j = ordered_json::parse(line);
      Invariants inv;
      for (auto& [k, v] : j.at("invariants").items())
        inv.emplace_back(k, v.get<std::string>());
      store_[j.at("key").get<std::string>()] = std::move(inv);
    }
  }

  const Invariants* find(const std::string& key) const {
    auto it = store_.find(key);
    return it == store_.end() ? nullptr : &it->second;
  }

  void put(const std::string& key, Invariants inv) {
    store_[key] = std::move(inv);
  }

  void flush() const {
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::trunc);
    for (const auto& [key, inv] : store_) {
      ordered_json j;
      j["key"] = key;
      ordered_json vals = ordered_json::object();
      for (const auto& [k, v] : inv) vals[k] = v;
      j["invariants"] = vals;
      out << j.dump() << "\n";
    }
  }

 private:
  std::string path_;
  std::map<std::string, Invariants> store_;
};

// --- Invariant extraction ----------------------------------------------------------

inline ResultCache::Invariants collect_invariants(DiagramAnalysis& a) {
  ResultCache::Invariants inv;
  const Diagram& d = a.d();
  auto add = [&](const char* k, std::string v) { inv.emplace_back(k, std::move(v)); };
  auto flag = [](bool b) { return b ? "1" : "0"; };

  add("crossings", std::to_string(d.crossing_count()));
  add("components", std::to_string(d.component_count()));
  add("knot", flag(d.is_knot()));
  add("o", std::to_string(d.o_length()));
  add("u", std::to_string(d.u_length()));
  add("bridges", std::to_string(d.bridge_number()));
  add("faces", std::to_string(d.face_count()));
  add("alternating", flag(d.is_alternating()));
  add("reduced", flag(d.is_reduced()));
  add("ii_reduced", flag(d.is_ii_reduced()));
  add("totally_reduced", flag(d.is_totally_reduced()));
  if (d.is_knot() && d.crossing_count() > 0)
    add("writhe", std::to_string(d.writhe()));

  if (d.crossing_count() > 0) {
    add("s_a", std::to_string(resolve_loops(d, 0)));
    add("s_b", std::to_string(resolve_loops(d, ~0ull)));
    const Skeleton& sk = a.skeleton();
    add("skeleton_vertices", std::to_string(sk.vertex_count()));
    add("skeleton_edges", std::to_string(sk.edge_count()));
    if (!d.is_alternating()) {
      add("g_a", std::to_string(a.ga_count()));
      add("g_b", std::to_string(a.gb_count()));
      add("extreme_states_bound", std::to_string(a.states_bound()));
    }
    add("lando_a", std::to_string(a.lando_a().chords.size()));
    add("lando_b", std::to_string(a.lando_b().chords.size()));
    add("f_a", std::to_string(a.f_a()));
    add("f_b", std::to_string(a.f_b()));
    auto [pa, pb] = a.predicted();
    add("predicted_a", std::to_string(pa));
    add("predicted_b", std::to_string(pb));
    add("plus_adequate", flag(a.adeq().plus));
    add("minus_adequate", flag(a.adeq().minus));
    const auto& bounds = a.bounds();
    if (bounds.applicable) {
      add("span_bound_best", std::to_string(bounds.best));
      add("span_bound_rule", bounds.best_rule);
    }
    if (d.is_knot()) {
      const auto& cert = a.certificate();
      add("certificate", cert.certified ? cert.reason : "unknown");
    }
  }

  if (d.crossing_count() > 0 && a.bracket_ok()) {
    add("bracket", a.bracket_poly().to_string());
    const auto& es = a.extremes();
    add("a_extreme", es.a_extreme.str());
    add("b_extreme", es.b_extreme.str());
    if (d.is_knot()) {
      add("jones", a.jones_poly().to_string());
      add("span_t", std::to_string(a.span_t()));
      BigInt det = jones_eval_minus1(a.jones_poly());
      if (det < 0) det = -det;
      add("det", det.str());
    }
  }
  return inv;
}

// --- Audit driver -------------------------------------------------------------------

struct AuditOptions {
  std::vector<std::string> claims;  // empty = every registered claim
  Budget budget;
  std::string cache_path;  // empty = no persistence
  int jobs = 1;
  int limit = 0;  // skip diagrams with more crossings (0 = no limit)
};

namespace detail {

inline bool claim_selected(const AuditOptions& opts, const std::string& id) {
  if (opts.claims.empty()) return true;
  return std::find(opts.claims.begin(), opts.claims.end(), id) !=
         opts.claims.end();
}

// Relational claims: Reidemeister pairs share an attr `pair=<label>` and a
// `move=R1|R2|R3`. R1 changes writhe, so only the normalized Jones polynomial
// survives; R2 and R3 leave the raw bracket unchanged.
inline void run_pair_claims(const std::vector<const CorpusEntry*>& entries,
                            const AuditOptions& opts,
                            std::vector<AuditRecord>& records) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i]->has_attr("pair"))
      groups[entries[i]->attr("pair")].push_back(i);

  for (const auto& [label, idx] : groups) {
    std::string move = entries[idx.front()]->attr("move");
    std::string id = "reidemeister-" + std::string(move == "R1"   ? "r1"
                                                   : move == "R2" ? "r2"
                                                                  : "r3");
    if (!claim_selected(opts, id)) continue;
    ClaimResult r;
    r.claim_id = id;
    if (idx.size() != 2) {
      r.verdict = Verdict::Fail;
      r.predicted = "a pair";
      r.observed = std::to_string(idx.size()) + " diagrams tagged pair=" + label;
      for (std::size_t i : idx) records[i].claims.push_back(r);
      continue;
    }
    const Diagram& d1 = entries[idx[0]]->diagram;
    const Diagram& d2 = entries[idx[1]]->diagram;
    int cmax = std::max(d1.crossing_count(), d2.crossing_count());
    if (cmax > opts.budget.bracket_limit) {
      r.verdict = Verdict::SkippedBudget;
    } else if (move == "R1") {
      Laurent j1 = jones(d1), j2 = jones(d2);
      r = checked(id, j1 == j2, j1.to_string(), j2.to_string());
    } else {
      Laurent b1 = bracket(d1), b2 = bracket(d2);
      r = checked(id, b1 == b2, b1.to_string(), b2.to_string());
    }
    for (std::size_t i : idx) records[i].claims.push_back(r);
  }
}

}  // namespace detail

inline std::vector<AuditRecord> audit(const std::vector<CorpusEntry>& corpus,
                                      const AuditOptions& opts = {}) {
  std::vector<const CorpusEntry*> entries;
  for (const auto& e : corpus)
    if (opts.limit == 0 || e.diagram.crossing_count() <= opts.limit)
      entries.push_back(&e);

  ResultCache cache(opts.cache_path);
  std::mutex cache_mutex;
  std::vector<AuditRecord> records(entries.size());

  auto work = [&](std::size_t i) {
    const CorpusEntry& e = *entries[i];
    AuditRecord rec;
    rec.name = e.name;
    rec.provenance = e.attr("family", e.attr("provenance", "corpus"));
    rec.crossings = e.diagram.crossing_count();
    DiagramAnalysis analysis(e, opts.budget);

    std::string key = e.diagram.canonical_key();
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      if (const auto* hit = cache.find(key)) rec.invariants = *hit;
    }
    if (rec.invariants.empty()) {
      rec.invariants = collect_invariants(analysis);
      std::lock_guard<std::mutex> lock(cache_mutex);
      cache.put(key, rec.invariants);
    }

    for (const auto& claim : claim_registry()) {
      if (!detail::claim_selected(opts, claim.id)) continue;
      rec.claims.push_back(claim.run(analysis));
    }
    records[i] = std::move(rec);
  };

  if (opts.jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < opts.jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < entries.size();
             i = next.fetch_add(1))
          work(i);
      });
    for (auto& th : pool) th.join();
  }

  detail::run_pair_claims(entries, opts, records);
  if (!opts.cache_path.empty()) cache.flush();

  std::sort(records.begin(), records.end(),
            [](const AuditRecord& a, const AuditRecord& b) {
              return a.name < b.name;
            });
  for (auto& r : records)
    std::stable_sort(r.claims.begin(), r.claims.end(),
                     [](const ClaimResult& a, const ClaimResult& b) {
                       return a.claim_id < b.claim_id;
                     });
  return records;
}

// --- Reports -----------------------------------------------------------------------

enum class ReportFormat { Json, Csv, Text };

inline ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "text") return ReportFormat::Text;
  throw std::invalid_argument("unknown report format: " + s);
}

namespace detail {

inline std::string timestamp_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

struct Tally {
  int pass = 0, fail = 0, inapplicable = 0, skipped = 0;
  void count(Verdict v) {
    switch (v) {
      case Verdict::Pass: ++pass; break;
      case Verdict::Fail: ++fail; break;
      case Verdict::Inapplicable: ++inapplicable; break;
      case Verdict::SkippedBudget: ++skipped; break;
    }
  }
};

}  // namespace detail

// CSV header is fixed; see README for the JSON schema.
inline constexpr const char* kCsvHeader =
    "name,crossings,provenance,claim,verdict,predicted,observed";

inline std::string report(const std::vector<AuditRecord>& records,
                          ReportFormat format, bool with_timestamp = true) {
  detail::Tally tally;
  for (const auto& r : records)
    for (const auto& c : r.claims) tally.count(c.verdict);

  if (format == ReportFormat::Json) {
    ordered_json root;
    if (with_timestamp) root["generated_at"] = detail::timestamp_now();
    root["summary"] = {{"diagrams", records.size()},
                       {"pass", tally.pass},
                       {"fail", tally.fail},
                       {"inapplicable", tally.inapplicable},
                       {"skipped_budget", tally.skipped}};
    root["diagrams"] = ordered_json::array();
    for (const auto& r : records) {
      ordered_json jr;
      jr["name"] = r.name;
      jr["provenance"] = r.provenance;
      jr["crossings"] = r.crossings;
      ordered_json inv = ordered_json::object();
      for (const auto& [k, v] : r.invariants) inv[k] = v;
      jr["invariants"] = inv;
      jr["claims"] = ordered_json::array();
      for (const auto& c : r.claims) {
        ordered_json jc;
        jc["id"] = c.claim_id;
        jc["verdict"] = to_string(c.verdict);
        if (c.verdict == Verdict::Pass || c.verdict == Verdict::Fail) {
          jc["predicted"] = c.predicted;
          jc["observed"] = c.observed;
        }
        jr["claims"].push_back(jc);
      }
      root["diagrams"].push_back(jr);
    }
    return root.dump(2) + "\n";
  }

  if (format == ReportFormat::Csv) {
    auto esc = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return out + "\"";
    };
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : records)
      for (const auto& c : r.claims)
        out += esc(r.name) + "," + std::to_string(r.crossings) + "," +
               esc(r.provenance) + "," + c.claim_id + "," +
               to_string(c.verdict) + "," + esc(c.predicted) + "," +
               esc(c.observed) + "\n";
    return out;
  }

  std::ostringstream out;
  if (with_timestamp) out << "generated at " << detail::timestamp_now() << "\n";
  out << records.size() << " diagrams; " << tally.pass << " pass, "
      << tally.fail << " fail, " << tally.inapplicable << " inapplicable, "
      << tally.skipped << " skipped by budget\n";
  for (const auto& r : records) {
    if (!r.any_fail()) continue;
    out << "FAIL " << r.name << " (" << r.crossings << " crossings, "
        << r.provenance << ")\n";
    for (const auto& c : r.claims)
      if (c.verdict == Verdict::Fail)
        out << "  " << c.claim_id << ": predicted " << c.predicted
            << ", observed " << c.observed << "\n";
  }
  if (tally.fail == 0) out << "all claims hold\n";
  return out.str();
}

}  // namespace bracketforge
