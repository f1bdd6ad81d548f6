#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <set>

#include "bracketforge/audit.hpp"
#include "bracketforge/families.hpp"

using namespace bracketforge;

namespace {

std::vector<CorpusEntry> small_corpus() {
  std::string text =
      "#: family=rational groups=3\n"
      "3_1 : X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n"
      "4_1 : X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)\n"
      "#: family=pretzel coeffs=-2,3,7\n"
      "p237 : " + pretzel_link({-2, 3, 7}).to_pd_text() + "\n";
  return parse_corpus(text);
}

const ClaimResult& find_claim(const AuditRecord& rec, const std::string& id) {
  for (const auto& c : rec.claims)
    if (c.claim_id == id) return c;
  FAIL("claim " + id + " missing from record " + rec.name);
  static ClaimResult dummy;
  return dummy;
}

const AuditRecord& find_record(const std::vector<AuditRecord>& recs,
                               const std::string& name) {
  for (const auto& r : recs)
    if (r.name == name) return r;
  FAIL("record " + name + " missing");
  static AuditRecord dummy;
  return dummy;
}

}  // namespace

TEST_CASE("claim registry ids are unique and stable") {
  std::set<std::string> ids;
  for (const auto& c : claim_registry()) {
    CHECK(!c.id.empty());
    CHECK(!c.statement.empty());
    CHECK(ids.insert(c.id).second);
  }
  CHECK(ids.count("skein-vs-oracle") == 1);
  CHECK(ids.count("kauffman-murasugi") == 1);
  CHECK(ids.count("lando-vs-oracle") == 1);
  CHECK(ids.count("pretzel-span") == 1);
}

TEST_CASE("audit runs every registered claim on every diagram") {
  auto recs = audit(small_corpus());
  REQUIRE(recs.size() == 3);

  // sorted by name, claims sorted by id
  CHECK(recs[0].name == "3_1");
  CHECK(recs[1].name == "4_1");
  CHECK(recs[2].name == "p237");
  for (const auto& r : recs) {
    CHECK(r.claims.size() == claim_registry().size());
    for (std::size_t i = 1; i < r.claims.size(); ++i)
      CHECK(r.claims[i - 1].claim_id < r.claims[i].claim_id);
  }

  const auto& tref = find_record(recs, "3_1");
  CHECK(tref.crossings == 3);
  CHECK(tref.provenance == "rational");
  CHECK(find_claim(tref, "structure-edge-balance").verdict == Verdict::Pass);
  CHECK(find_claim(tref, "structure-euler").verdict == Verdict::Pass);
  CHECK(find_claim(tref, "skein-vs-oracle").verdict == Verdict::Pass);
  CHECK(find_claim(tref, "kauffman-murasugi").verdict == Verdict::Pass);
  CHECK(find_claim(tref, "jones-det-odd").verdict == Verdict::Pass);
  CHECK(find_claim(tref, "lando-vs-oracle").verdict == Verdict::Pass);
  // alternating, so the nonalternating span machinery stays quiet
  CHECK(find_claim(tref, "span-vs-extreme-states-bound").verdict ==
        Verdict::Inapplicable);
  CHECK(find_claim(tref, "pretzel-span").verdict == Verdict::Inapplicable);

  const auto& p = find_record(recs, "p237");
  CHECK(p.provenance == "pretzel");
  CHECK(find_claim(p, "pretzel-o-length").verdict == Verdict::Pass);
  CHECK(find_claim(p, "pretzel-certificate").verdict == Verdict::Pass);
  CHECK(find_claim(p, "span-vs-extreme-states-bound").verdict == Verdict::Pass);
  CHECK(find_claim(p, "span-bound-rules").verdict == Verdict::Pass);
  // same-sign adjacency (7 next to 3) keeps the closed span form out of reach
  CHECK(find_claim(p, "pretzel-span").verdict == Verdict::Inapplicable);
  CHECK(!any_failure(recs));

  // invariants carry the headline numbers
  auto get = [&](const AuditRecord& r, const std::string& k) -> std::string {
    for (const auto& [key, val] : r.invariants)
      if (key == k) return val;
    return "";
  };
  CHECK(get(tref, "crossings") == "3");
  CHECK(get(tref, "span_t") == "3");
  CHECK(get(tref, "det") == "3");
  CHECK(get(p, "det") == "1");
  CHECK(get(p, "span_t") == "8");
  CHECK(get(p, "o") == "2");
}

TEST_CASE("budget exhaustion reports skipped-budget, not fail") {
  AuditOptions opts;
  opts.budget.oracle_limit = 3;
  opts.budget.bracket_limit = 3;
  auto recs = audit(small_corpus(), opts);

  const auto& tref = find_record(recs, "3_1");
  CHECK(find_claim(tref, "skein-vs-oracle").verdict == Verdict::Pass);

  const auto& fig8 = find_record(recs, "4_1");
  CHECK(find_claim(fig8, "skein-vs-oracle").verdict == Verdict::SkippedBudget);
  CHECK(find_claim(fig8, "kauffman-murasugi").verdict ==
        Verdict::SkippedBudget);
  // structural checks never need the polynomial
  CHECK(find_claim(fig8, "structure-euler").verdict == Verdict::Pass);
  CHECK(!any_failure(recs));
}

TEST_CASE("claim filter and crossing limit narrow the run") {
  AuditOptions opts;
  opts.claims = {"structure-euler", "skein-vs-oracle"};
  opts.limit = 4;
  auto recs = audit(small_corpus(), opts);
  REQUIRE(recs.size() == 2);  // p237 has 12 crossings
  for (const auto& r : recs) {
    REQUIRE(r.claims.size() == 2);
    CHECK(r.claims[0].claim_id == "skein-vs-oracle");
    CHECK(r.claims[1].claim_id == "structure-euler");
  }
}

TEST_CASE("false family attributes are caught and reported") {
  std::string text =
      "#: family=whitehead companion=3_1 twists=0 pred_c=99\n"
      "wd : " + whitehead_double(pretzel_link({1, 1, 1})).to_pd_text() + "\n";
  auto recs = audit(parse_corpus(text));
  const auto& rec = recs.at(0);
  const auto& c = find_claim(rec, "whitehead-counts");
  CHECK(c.verdict == Verdict::Fail);
  CHECK(c.predicted == "99");
  CHECK(c.observed == "14");
  CHECK(any_failure(recs));
  CHECK(report(recs, ReportFormat::Text, false).find("FAIL wd") !=
        std::string::npos);
}

TEST_CASE("reidemeister pair claims compare the two diagrams") {
  std::string text =
      "#: pair=a move=R1\n"
      "r1_base : " + braid_closure({1, 1, 1}, 2).to_pd_text() + "\n" +
      "#: pair=a move=R1\n"
      "r1_moved : " + braid_closure({1, 1, 1, 2}, 3).to_pd_text() + "\n" +
      "#: pair=b move=R2\n"
      "r2_base : " + braid_closure({1, 1, 1}, 2).to_pd_text() + "\n" +
      "#: pair=b move=R2\n"
      "r2_moved : " + braid_closure({1, 1, 1, -1, 1}, 2).to_pd_text() + "\n" +
      "#: pair=c move=R3\n"
      "r3_base : " + braid_closure({1, 2, 1, 1}, 3).to_pd_text() + "\n" +
      "#: pair=c move=R3\n"
      "r3_moved : " + braid_closure({2, 1, 2, 1}, 3).to_pd_text() + "\n";
  auto recs = audit(parse_corpus(text));
  CHECK(find_claim(find_record(recs, "r1_base"), "reidemeister-r1").verdict ==
        Verdict::Pass);
  CHECK(find_claim(find_record(recs, "r1_moved"), "reidemeister-r1").verdict ==
        Verdict::Pass);
  CHECK(find_claim(find_record(recs, "r2_base"), "reidemeister-r2").verdict ==
        Verdict::Pass);
  CHECK(find_claim(find_record(recs, "r3_moved"), "reidemeister-r3").verdict ==
        Verdict::Pass);
  CHECK(!any_failure(recs));

  // an R2 pair whose brackets disagree must fail
  std::string bad =
      "#: pair=x move=R2\n"
      "base : " + braid_closure({1, 1, 1}, 2).to_pd_text() + "\n" +
      "#: pair=x move=R2\n"
      "other : " + braid_closure({1, 1, 1, 1, 1}, 2).to_pd_text() + "\n";
  auto bad_recs = audit(parse_corpus(bad));
  CHECK(find_claim(find_record(bad_recs, "base"), "reidemeister-r2").verdict ==
        Verdict::Fail);
  CHECK(any_failure(bad_recs));
}

TEST_CASE("reports are deterministic and parallel runs match serial") {
  auto corpus = small_corpus();
  AuditOptions serial;
  AuditOptions parallel;
  parallel.jobs = 3;

  auto r1 = audit(corpus, serial);
  auto r2 = audit(corpus, serial);
  auto r3 = audit(corpus, parallel);
  for (auto fmt : {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Text}) {
    CHECK(report(r1, fmt, false) == report(r2, fmt, false));
    CHECK(report(r1, fmt, false) == report(r3, fmt, false));
  }

  std::string csv = report(r1, ReportFormat::Csv);
  CHECK(csv.rfind(kCsvHeader, 0) == 0);
  CHECK(csv.find("3_1,3,rational,kauffman-murasugi,pass") != std::string::npos);

  auto json = ordered_json::parse(report(r1, ReportFormat::Json, false));
  CHECK(!json.contains("generated_at"));
  CHECK(json["summary"]["fail"] == 0);
  CHECK(json["diagrams"].size() == 3);
  CHECK(json["diagrams"][0]["name"] == "3_1");
  CHECK(json["diagrams"][0]["invariants"]["jones"] ==
        jones(corpus[0].diagram).to_string());

  auto stamped = ordered_json::parse(report(r1, ReportFormat::Json, true));
  CHECK(stamped.contains("generated_at"));
}

TEST_CASE("result cache hits return stored invariants verbatim") {
  std::string path = "audit_cache_test.jsonl";
  std::remove(path.c_str());
  auto corpus = small_corpus();

  AuditOptions opts;
  opts.cache_path = path;
  auto first = audit(corpus, opts);
  auto second = audit(corpus, opts);
  CHECK(report(first, ReportFormat::Json, false) ==
        report(second, ReportFormat::Json, false));

  // every line is a {key, invariants} object keyed by the canonical form
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    auto j = ordered_json::parse(line);
    CHECK(j.contains("key"));
    CHECK(j.contains("invariants"));
    ++lines;
  }
  CHECK(lines == 3);

  // a poisoned cache entry is trusted verbatim, proving hits short-circuit
  ResultCache cache(path);
  std::string key = corpus[0].diagram.canonical_key();
  REQUIRE(cache.find(key) != nullptr);
  cache.put(key, {{"crossings", "999"}});
  cache.flush();
  auto third = audit(corpus, opts);
  bool poisoned = false;
  for (const auto& [k, v] : find_record(third, "3_1").invariants)
    if (k == "crossings" && v == "999") poisoned = true;
  CHECK(poisoned);
  std::remove(path.c_str());
}
