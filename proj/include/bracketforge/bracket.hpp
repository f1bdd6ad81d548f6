#pragma once

#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "bracketforge/diagram.hpp"
#include "bracketforge/laurent.hpp"

namespace bracketforge {

// A state assigns one smoothing to every crossing: mask bit ci set means the
// B-smoothing. In slot terms the A-smoothing joins slots (0,1) and (2,3),
// opening the channel between the corners swept counterclockwise from the
// over strand; the B-smoothing joins (1,2) and (3,0).

inline constexpr int kOracleLimit = 24;

inline Laurent loop_factor() {  // -A^2 - A^-2
  Laurent d(Var::A);
  d.add_term(2, -1);
  d.add_term(-2, -1);
  return d;
}

namespace detail {

class Dsu {
public:
  explicit Dsu(int n) : parent_(n) { reset(); }
  void reset() {
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
  std::vector<int> parent_;
};

inline int resolve_with(Dsu& dsu, const Diagram& d, std::uint64_t mask) {
  dsu.reset();
  const int c = d.crossing_count();
  for (int e = 1; e <= d.edge_count(); ++e) {
    auto [a, b] = d.ends_of(e);
    dsu.unite(a, b);
  }
  for (int ci = 0; ci < c; ++ci) {
    int s = 4 * ci;
    if (mask >> ci & 1) {
      dsu.unite(s + 1, s + 2);
      dsu.unite(s + 3, s);
    } else {
      dsu.unite(s, s + 1);
      dsu.unite(s + 2, s + 3);
    }
  }
  int loops = 0;
  for (int dart = 0; dart < 4 * c; ++dart)
    if (dsu.find(dart) == dart) ++loops;
  return loops;
}

}  // namespace detail

// Number of simple closed curves after smoothing every crossing per mask.
inline int resolve_loops(const Diagram& d, std::uint64_t mask) {
  if (d.is_unknot()) return 1;
  detail::Dsu dsu(4 * d.crossing_count());
  return detail::resolve_with(dsu, d, mask);
}

// Full-state-sum bracket: sum over all 2^c states of
// A^(a(S)-b(S)) * (-A^2-A^-2)^(|S|-1).
inline Laurent bracket_oracle(const Diagram& d, int limit = kOracleLimit,
                              int jobs = 1) {
  if (d.is_unknot()) return Laurent::constant(Var::A, 1);
  const int c = d.crossing_count();
  if (c > limit)
    throw std::domain_error("bracket_oracle: " + std::to_string(c) +
                            " crossings exceeds limit " + std::to_string(limit));
  std::vector<Laurent> delta_pow{Laurent::constant(Var::A, 1)};
  for (int i = 0; i < c + 1; ++i)
    delta_pow.push_back(delta_pow.back() * loop_factor());

  auto sum_range = [&](std::uint64_t lo, std::uint64_t hi) {
    Laurent acc(Var::A);
    detail::Dsu dsu(4 * c);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      int loops = detail::resolve_with(dsu, d, mask);
      int b = __builtin_popcountll(mask);
      Laurent term = delta_pow[loops - 1];
      term.mono_mul(1, c - 2 * b);
      acc += term;
    }
    return acc;
  };

  const std::uint64_t total = 1ull << c;
  if (jobs <= 1 || total < 1024) return sum_range(0, total);

  int workers = std::min<std::uint64_t>(jobs, 64);
  std::vector<std::future<Laurent>> parts;
  std::uint64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    parts.push_back(std::async(std::launch::async, sum_range, lo, hi));
  }
  Laurent acc(Var::A);
  for (auto& p : parts) acc += p.get();
  return acc;
}

namespace detail {

// Recursive smoothing over a partially resolved diagram. Live arcs are kept
// as a mate[] pairing on the darts of the remaining crossings; smoothing
// splices arcs and counts the loops it closes. Results are memoized on the
// (remaining-set, arc-pairing) state, so isomorphic sub-resolutions are
// shared no matter how the recursion reached them.
class SkeinEval {
public:
  explicit SkeinEval(const Diagram& d) : d_(d), c_(d.crossing_count()) {
    delta_ = loop_factor();
  }

  Laurent run() {
    std::vector<int> mate(4 * c_, -1);
    for (int e = 1; e <= d_.edge_count(); ++e) {
      auto [a, b] = d_.ends_of(e);
      mate[a] = b;
      mate[b] = a;
    }
    original_mate_ = mate;
    std::uint64_t mask = c_ >= 64 ? ~0ull : (1ull << c_) - 1;
    return rec(mask, mate);
  }

private:
  // Splice the arcs at ports p and q; returns 1 if that closes a loop.
  static int splice(std::vector<int>& mate, int p, int q) {
    int a = mate[p], b = mate[q];
    mate[p] = mate[q] = -1;
    if (a == q) return 1;
    mate[a] = b;
    mate[b] = a;
    return 0;
  }

  int immediate_closures(const std::vector<int>& mate, int ci) const {
    int s = 4 * ci, n = 0;
    if (mate[s] == s + 1) ++n;
    if (mate[s + 2] == s + 3) ++n;
    if (mate[s + 1] == s + 2) ++n;
    if (mate[s + 3] == s) ++n;
    return n;
  }

  int pick_crossing(std::uint64_t mask, const std::vector<int>& mate) const {
    int best = -1, best_score = -1;
    for (int ci = 0; ci < c_; ++ci) {
      if (!(mask >> ci & 1)) continue;
      int frontier = 0;
      for (int k = 0; k < 4; ++k)
        if (mate[4 * ci + k] != original_mate_[4 * ci + k]) ++frontier;
      int score = 100 * immediate_closures(mate, ci) + frontier;
      if (score > best_score) {
        best_score = score;
        best = ci;
      }
    }
    return best;
  }

  std::string key_of(std::uint64_t mask, const std::vector<int>& mate) const {
    std::string k;
    k.reserve(8 + 4 * c_);
    for (int i = 0; i < 8; ++i) k.push_back(char(mask >> (8 * i) & 0xff));
    for (int ci = 0; ci < c_; ++ci) {
      if (!(mask >> ci & 1)) continue;
      for (int j = 0; j < 4; ++j) k.push_back(char(mate[4 * ci + j] + 1));
    }
    return k;
  }

  Laurent rec(std::uint64_t mask, std::vector<int>& mate) {
    if (mask == 0) return Laurent::constant(Var::A, 1);  // 0-crossing input
    std::string key = key_of(mask, mate);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int ci = pick_crossing(mask, mate);
    const int s = 4 * ci;
    const std::uint64_t rest = mask & ~(1ull << ci);
    Laurent total(Var::A);
    for (int choice = 0; choice < 2; ++choice) {
      std::vector<int> m = mate;
      int closed = 0;
      if (choice == 0) {
        closed += splice(m, s, s + 1);
        closed += splice(m, s + 2, s + 3);
      } else {
        closed += splice(m, s + 1, s + 2);
        closed += splice(m, s + 3, s);
      }
      Laurent branch;
      if (rest == 0) {
        // Final crossing: every arc has closed; the last loop is the free one.
        branch = Laurent::constant(Var::A, 1);
        for (int i = 1; i < closed; ++i) branch *= delta_;
      } else {
        branch = rec(rest, m);
        for (int i = 0; i < closed; ++i) branch *= delta_;
      }
      branch.mono_mul(1, choice == 0 ? 1 : -1);
      total += branch;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  const Diagram& d_;
  int c_;
  Laurent delta_;
  std::vector<int> original_mate_;
  std::unordered_map<std::string, Laurent> memo_;
};

}  // namespace detail

inline Laurent bracket_skein(const Diagram& d) {
  if (d.is_unknot()) return Laurent::constant(Var::A, 1);
  return detail::SkeinEval(d).run();
}

inline Laurent bracket(const Diagram& d) { return bracket_skein(d); }

// V_K(t) for knots, exponents stored in quarter units (all = 0 mod 4).
inline Laurent jones(const Diagram& d) {
  if (!d.is_knot())
    throw std::domain_error("jones: diagram is not a knot");
  Laurent v = normalize_to_jones(bracket(d), d.is_unknot() ? 0 : d.writhe());
  require_integral_t(v);
  return v;
}

// --- Extreme state summary --------------------------------------------------

struct ExtremeSummary {
  int s_a_circles = 0;  // |S_A|
  int s_b_circles = 0;  // |S_B|
  int max_bound = 0;    // c + 2|S_A| - 2 >= max deg <D>
  int min_bound = 0;    // -(c + 2|S_B| - 2) <= min deg <D>
  BigInt a_extreme;     // coefficient of A^max_bound (may be 0)
  BigInt b_extreme;     // coefficient of A^min_bound
  int actual_max = 0;
  int actual_min = 0;
};

inline ExtremeSummary extreme_summary(const Diagram& d, const Laurent& br) {
  ExtremeSummary s;
  const int c = d.crossing_count();
  s.s_a_circles = resolve_loops(d, 0);
  s.s_b_circles = d.is_unknot() ? 1 : resolve_loops(d, ~0ull);
  s.max_bound = c + 2 * s.s_a_circles - 2;
  s.min_bound = -(c + 2 * s.s_b_circles - 2);
  s.a_extreme = br.coeff(s.max_bound);
  s.b_extreme = br.coeff(s.min_bound);
  s.actual_max = br.max_deg();
  s.actual_min = br.min_deg();
  if (s.actual_max > s.max_bound || s.actual_min < s.min_bound)
    throw std::logic_error("bracket degree escapes its state bounds");
  return s;
}

inline ExtremeSummary extreme_summary(const Diagram& d) {
  return extreme_summary(d, bracket(d));
}

// --- Adequacy ---------------------------------------------------------------

// Plus-adequate: in the all-A state no crossing has both of its smoothing
// arcs on one circle; minus-adequate likewise in the all-B state.
struct Adequacy {
  bool plus = false;
  bool minus = false;
  bool adequate() const { return plus && minus; }
  bool semi_adequate() const { return plus || minus; }
};

inline Adequacy adequacy(const Diagram& d) {
  Adequacy out;
  if (d.is_unknot()) {
    out.plus = out.minus = true;
    return out;
  }
  const int c = d.crossing_count();
  detail::Dsu dsu(4 * c);

  detail::resolve_with(dsu, d, 0);
  out.plus = true;
  for (int ci = 0; ci < c && out.plus; ++ci)
    if (dsu.find(4 * ci) == dsu.find(4 * ci + 2)) out.plus = false;

  detail::resolve_with(dsu, d, ~0ull);
  out.minus = true;
  for (int ci = 0; ci < c && out.minus; ++ci)
    if (dsu.find(4 * ci + 1) == dsu.find(4 * ci + 3)) out.minus = false;

  return out;
}

// Brute-force adequacy straight from the definition: S_A (resp. S_B) must
// strictly dominate every other state's top (resp. bottom) degree.
inline Adequacy adequacy_oracle(const Diagram& d, int limit = 12) {
  Adequacy out;
  if (d.is_unknot()) {
    out.plus = out.minus = true;
    return out;
  }
  const int c = d.crossing_count();
  if (c > limit)
    throw std::domain_error("adequacy_oracle: crossing count over limit");
  detail::Dsu dsu(4 * c);
  const int max_a = c + 2 * detail::resolve_with(dsu, d, 0) - 2;
  const int min_b = -(c + 2 * detail::resolve_with(dsu, d, ~0ull) - 2);
  out.plus = true;
  out.minus = true;
  const std::uint64_t all = (1ull << c) - 1;
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    int loops = detail::resolve_with(dsu, d, mask);
    int b = __builtin_popcountll(mask);
    int top = c - 2 * b + 2 * loops - 2;
    int bot = c - 2 * b - (2 * loops - 2);
    if (mask != 0 && top >= max_a) out.plus = false;
    if (mask != all && bot <= min_b) out.minus = false;
    if (!out.plus && !out.minus) break;
  }
  return out;
}

}  // namespace bracketforge
