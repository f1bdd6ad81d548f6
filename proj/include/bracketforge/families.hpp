#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bracketforge/bracket.hpp"
#include "bracketforge/diagram.hpp"

namespace bracketforge {

namespace detail {

// Incremental strand plumbing: tokens are either darts (ids below 4c) or
// fresh virtual anchors; conn() declares two tokens to sit on one strand
// segment. Every final class must contain exactly two darts, which become a
// diagram edge.
class Wiring {
 public:
  explicit Wiring(int crossings) : crossings_(crossings) {
    parent_.resize(4 * crossings);
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int crossings() const { return crossings_; }

  int fresh() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }

  void conn(int a, int b) { parent_[find(a)] = find(b); }

  Diagram build() {
    std::vector<std::vector<int>> darts_of(parent_.size());
    for (int t = 0; t < static_cast<int>(parent_.size()); ++t) {
      int r = find(t);
      if (t < 4 * crossings_) darts_of[r].push_back(t);
    }
    std::vector<std::pair<int, int>> pairs;
    for (int r = 0; r < static_cast<int>(parent_.size()); ++r) {
      if (find(r) != r) continue;
      const auto& ds = darts_of[r];
      if (ds.empty())
        throw std::runtime_error("wiring closed a strand with no crossing");
      if (ds.size() != 2)
        throw std::logic_error("wiring produced a strand with " +
                               std::to_string(ds.size()) + " loose ends");
      pairs.emplace_back(ds[0], ds[1]);
    }
    return Diagram::from_pairing(crossings_, pairs);
  }

 private:
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  int crossings_ = 0;
  std::vector<int> parent_;
};

enum Side : int { kWest = 0, kSouth = 1, kEast = 2, kNorth = 3 };

}  // namespace detail

// --- Pretzel diagrams ---------------------------------------------------------

// A vertical twist region per coefficient, regions joined left to right and
// closed around the top and bottom.
inline bool pretzel_is_knot(const std::vector<int>& coeffs) {
  if (coeffs.empty()) return false;
  int evens = 0;
  for (int c : coeffs)
    if (c % 2 == 0) ++evens;
  // A single twist region closes to one strand regardless of parity.
  if (coeffs.size() == 1) return true;
  if (evens == 1) return true;
  return evens == 0 && coeffs.size() % 2 == 1;
}

// Builds the diagram for any nonzero coefficients, links included.
inline Diagram pretzel_link(const std::vector<int>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("pretzel: no coefficients");
  for (int c : coeffs)
    if (c == 0) throw std::invalid_argument("pretzel: zero coefficient");

  int total = 0;
  for (int c : coeffs) total += std::abs(c);
  detail::Wiring w(total);

  const int n = static_cast<int>(coeffs.size());
  std::vector<int> tl(n), tr(n), bl(n), br(n);
  int ci = 0;
  for (int i = 0; i < n; ++i) {
    tl[i] = w.fresh();
    tr[i] = w.fresh();
    int l = tl[i], r = tr[i];
    for (int k = 0; k < std::abs(coeffs[i]); ++k, ++ci) {
      if (coeffs[i] > 0) {
        // top-left, bottom-left, bottom-right, top-right
        w.conn(4 * ci + 0, l);
        w.conn(4 * ci + 3, r);
        l = 4 * ci + 1;
        r = 4 * ci + 2;
      } else {
        // top-right, top-left, bottom-left, bottom-right
        w.conn(4 * ci + 1, l);
        w.conn(4 * ci + 0, r);
        l = 4 * ci + 2;
        r = 4 * ci + 3;
      }
    }
    bl[i] = l;
    br[i] = r;
  }
  for (int i = 0; i + 1 < n; ++i) {
    w.conn(tr[i], tl[i + 1]);
    w.conn(br[i], bl[i + 1]);
  }
  w.conn(tl[0], tr[n - 1]);
  w.conn(bl[0], br[n - 1]);
  return w.build();
}

inline Diagram pretzel(const std::vector<int>& coeffs) {
  if (!coeffs.empty() && !pretzel_is_knot(coeffs))
    throw std::domain_error("pretzel: parameters describe a link, not a knot");
  Diagram d = pretzel_link(coeffs);
  if (!d.is_knot()) throw std::logic_error("pretzel: knot test disagrees");
  return d;
}

struct PretzelPrediction {
  int crossings = 0;  // sum of |c_i|
  int o_length = 0;   // cyclic sign changes in the coefficients
  bool span_known = false;
  int span = 0;  // t units
  bool a_sign_known = false;
  int a_sign = 0;
  bool b_sign_known = false;
  int b_sign = 0;
};

// The closed forms below hinge on a chord-free Lando graph for the side in
// question. A pair of cyclically adjacent twist regions of one sign drops a
// chord pair onto a single state circle of that side, which can zero out the
// extreme coefficient entirely (P(3,3,-2) realizes the (3,4)-torus knot with
// span 5, not 7, and its B-side extreme vanishes). Predictions are therefore
// only emitted when the relevant side has no same-sign adjacency: the A side
// watches negative neighbours, the B side positive ones, and the span needs
// both. Alternating coefficient lists (o = 0) are safe on both sides.
inline PretzelPrediction pretzel_prediction(const std::vector<int>& coeffs) {
  PretzelPrediction out;
  const int n = static_cast<int>(coeffs.size());
  for (int c : coeffs) out.crossings += std::abs(c);
  bool neg_pair = false, pos_pair = false;
  for (int i = 0; i < n; ++i) {
    int a = coeffs[i], b = coeffs[(i + 1) % n];
    if ((a > 0) != (b > 0)) ++out.o_length;
    if (n > 1 && a > 0 && b > 0) pos_pair = true;
    if (n > 1 && a < 0 && b < 0) neg_pair = true;
  }
  bool empty_a = out.o_length == 0 || !neg_pair;
  bool empty_b = out.o_length == 0 || !pos_pair;

  bool all_big = std::all_of(coeffs.begin(), coeffs.end(),
                             [](int c) { return std::abs(c) >= 2; });
  if (all_big && empty_a && empty_b) {
    out.span_known = true;
    out.span = out.o_length == 0 ? out.crossings : out.crossings - 1;
  }

  auto parity_sign = [](long long e) { return ((e % 2) + 2) % 2 ? -1 : 1; };
  int positives = static_cast<int>(
      std::count_if(coeffs.begin(), coeffs.end(), [](int c) { return c > 0; }));
  int negatives = n - positives;
  if (empty_a && std::none_of(coeffs.begin(), coeffs.end(),
                              [](int c) { return c == -1; })) {
    long long e = positives - 1;
    for (int c : coeffs)
      if (c < 0) e += -(c + 1);
    out.a_sign_known = true;
    out.a_sign = parity_sign(e);
  }
  if (empty_b && std::none_of(coeffs.begin(), coeffs.end(),
                              [](int c) { return c == 1; })) {
    long long e = negatives - 1;
    for (int c : coeffs)
      if (c > 0) e += c - 1;
    out.b_sign_known = true;
    out.b_sign = parity_sign(e);
  }
  return out;
}

// --- Two-bridge diagrams ------------------------------------------------------

// Twist groups applied alternately on the right and along the bottom of a
// growing tangle, then closed. Positive group counts give alternating
// diagrams.
inline Diagram rational(const std::vector<int>& groups) {
  if (groups.empty()) throw std::invalid_argument("rational: no twist groups");
  for (int g : groups)
    if (g < 1) throw std::invalid_argument("rational: group counts must be >= 1");

  // The closure ties the two north ends together and the two south ends
  // together, so a trailing bottom group would curl into kinks. Rewrite
  // even-length inputs to an equivalent odd-length continued fraction
  // (same tangle, same crossing total) so the last group sits on the right.
  std::vector<int> seq = groups;
  if (seq.size() % 2 == 0) {
    if (seq.front() == 1) {
      seq.erase(seq.begin());
      seq.front() += 1;
    } else {
      seq.front() -= 1;
      seq.insert(seq.begin(), 1);
    }
  }

  int total = std::accumulate(seq.begin(), seq.end(), 0);
  detail::Wiring w(total);
  int nw = w.fresh(), ne = w.fresh(), sw = w.fresh(), se = w.fresh();
  // the 0-tangle: two horizontal strands
  w.conn(nw, ne);
  w.conn(sw, se);

  int ci = 0;
  for (std::size_t gi = 0; gi < seq.size(); ++gi) {
    bool right = gi % 2 == 0;
    for (int k = 0; k < seq[gi]; ++k, ++ci) {
      if (right) {
        // appended on the right; slots run nw, sw, se, ne
        w.conn(4 * ci + 0, ne);
        w.conn(4 * ci + 1, se);
        se = 4 * ci + 2;
        ne = 4 * ci + 3;
      } else {
        // appended along the bottom; slots run nw, sw, se, ne
        w.conn(4 * ci + 0, sw);
        w.conn(4 * ci + 3, se);
        sw = 4 * ci + 1;
        se = 4 * ci + 2;
      }
    }
  }
  w.conn(nw, ne);
  w.conn(sw, se);

  Diagram d = w.build();
  if (!d.is_knot())
    throw std::domain_error("rational: parameters give a two-component link");
  return d;
}

// --- Braid closures -----------------------------------------------------------

// Letters +/-i for the i-th elementary crossing, read top to bottom; the
// closure joins each bottom position back to its top.
inline Diagram braid_closure(const std::vector<int>& word, int strands) {
  if (strands < 2) throw std::invalid_argument("braid: need at least 2 strands");
  if (word.empty()) throw std::invalid_argument("braid: empty word");
  for (int letter : word)
    if (letter == 0 || std::abs(letter) >= strands)
      throw std::invalid_argument("braid: letter out of range");

  detail::Wiring w(static_cast<int>(word.size()));
  std::vector<int> top(strands), strand(strands);
  for (int j = 0; j < strands; ++j) top[j] = strand[j] = w.fresh();

  for (std::size_t k = 0; k < word.size(); ++k) {
    int i = std::abs(word[k]) - 1;  // crosses strands i, i+1 (0-indexed)
    int q = static_cast<int>(4 * k);
    if (word[k] > 0) {
      // ne, nw, sw, se: the strand entering from the upper left passes over
      w.conn(q + 0, strand[i + 1]);
      w.conn(q + 1, strand[i]);
      strand[i] = q + 2;
      strand[i + 1] = q + 3;
    } else {
      // nw, sw, se, ne
      w.conn(q + 0, strand[i]);
      w.conn(q + 3, strand[i + 1]);
      strand[i] = q + 1;
      strand[i + 1] = q + 2;
    }
  }
  for (int j = 0; j < strands; ++j) w.conn(strand[j], top[j]);
  return w.build();
}

// --- Parallel copies, clasps, cables -------------------------------------------

namespace detail {

// The n-strand ribbon replacement of each crossing: an n-by-n block whose
// row strands copy the under strand and column strands the over strand.
// ports[dart] lists the block's boundary darts counterclockwise on the side
// where the companion dart leaves its crossing.
struct BlockFrame {
  int n = 0;
  int companion_crossings = 0;
  Wiring wiring;
  std::vector<std::vector<int>> ports;

  BlockFrame(const Diagram& d, int copies, int extra_crossings)
      : n(copies),
        companion_crossings(d.crossing_count()),
        wiring(copies * copies * d.crossing_count() + extra_crossings) {
    const int c = companion_crossings;
    auto sub = [&](int ci, int i, int j, int slot) {
      // rows and columns are 1-indexed; slot order is west, south, east, north
      return 4 * (ci * n * n + (i - 1) * n + (j - 1)) + slot;
    };
    for (int ci = 0; ci < c; ++ci) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j < n; ++j)
          wiring.conn(sub(ci, i, j, kEast), sub(ci, i, j + 1, kWest));
      for (int i = 2; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          wiring.conn(sub(ci, i, j, kNorth), sub(ci, i - 1, j, kSouth));
    }
    ports.assign(4 * c, {});
    for (int ci = 0; ci < c; ++ci) {
      for (int i = 1; i <= n; ++i)
        ports[4 * ci + 0].push_back(sub(ci, i, 1, kWest));
      for (int j = 1; j <= n; ++j)
        ports[4 * ci + 1].push_back(sub(ci, n, j, kSouth));
      for (int i = n; i >= 1; --i)
        ports[4 * ci + 2].push_back(sub(ci, i, n, kEast));
      for (int j = n; j >= 1; --j)
        ports[4 * ci + 3].push_back(sub(ci, 1, j, kNorth));
    }
  }

  int extra_base_crossing() const { return companion_crossings * n * n; }

  // Ribbon edges reverse the counterclockwise order end to end.
  void join(const std::vector<int>& a, const std::vector<int>& b) {
    for (int i = 0; i < n; ++i) wiring.conn(a[i], b[n - 1 - i]);
  }
};

inline std::vector<int> neutral_edges(const Diagram& d) {
  std::vector<int> out;
  for (int e = 1; e <= d.edge_count(); ++e)
    if (d.edge_sign(e) == EdgeSign::Neutral) out.push_back(e);
  return out;
}

}  // namespace detail

inline Diagram parallel(const Diagram& d, int n) {
  if (d.is_unknot() || d.crossing_count() == 0)
    throw std::invalid_argument("parallel: companion needs a crossing");
  if (n < 1) throw std::invalid_argument("parallel: need n >= 1");
  detail::BlockFrame frame(d, n, 0);
  for (int e = 1; e <= d.edge_count(); ++e) {
    auto [p, q] = d.ends_of(e);
    frame.join(frame.ports[p], frame.ports[q]);
  }
  return frame.wiring.build();
}

// Doubled companion with a clasp in place of the first neutral edge and an
// optional twist region at the second.
inline Diagram whitehead_double(const Diagram& companion, int twists = 0,
                                int clasp_sign = +1) {
  if (companion.is_unknot() || companion.crossing_count() == 0)
    throw std::invalid_argument("whitehead: companion needs a crossing");
  if (clasp_sign != 1 && clasp_sign != -1)
    throw std::invalid_argument("whitehead: clasp sign must be +1 or -1");
  std::vector<int> neutral = detail::neutral_edges(companion);
  if (neutral.empty())
    throw std::domain_error(
        "whitehead: companion has no neutral edge for the clasp");
  if (twists != 0 && neutral.size() < 2)
    throw std::domain_error("whitehead: no second neutral edge for the twists");

  detail::BlockFrame frame(companion, 2, 2 + 2 * std::abs(twists));
  const int clasp_edge = neutral[0];
  const int twist_edge = twists != 0 ? neutral[1] : -1;

  for (int e = 1; e <= companion.edge_count(); ++e) {
    if (e == clasp_edge || e == twist_edge) continue;
    auto [p, q] = companion.ends_of(e);
    frame.join(frame.ports[p], frame.ports[q]);
  }

  // Clasp: two crossings on interlocking hooks; the hook strand passes over
  // one arm and under the other. Sides returned west, south, east, north.
  auto hook_sides = [&](int q, bool hook_over) {
    if (hook_over)
      return std::array<int, 4>{4 * q + 0, 4 * q + 1, 4 * q + 2, 4 * q + 3};
    return std::array<int, 4>{4 * q + 3, 4 * q + 0, 4 * q + 1, 4 * q + 2};
  };
  using detail::kEast;
  using detail::kNorth;
  using detail::kSouth;
  using detail::kWest;
  int k_top = frame.extra_base_crossing();
  int k_bot = k_top + 1;
  auto top = hook_sides(k_top, clasp_sign < 0);
  auto bot = hook_sides(k_bot, clasp_sign > 0);
  frame.wiring.conn(top[kSouth], bot[kNorth]);  // the hook between the crossings
  frame.wiring.conn(top[kWest], bot[kWest]);    // the arm bend
  {
    auto [p, q] = companion.ends_of(clasp_edge);
    const auto& a = frame.ports[p];
    const auto& b = frame.ports[q];
    frame.wiring.conn(a[0], bot[kSouth]);
    frame.wiring.conn(a[1], top[kNorth]);
    frame.wiring.conn(top[kEast], b[0]);
    frame.wiring.conn(bot[kEast], b[1]);
  }

  if (twists != 0) {
    int m = 2 * std::abs(twists);
    int base = k_bot + 1;
    bool pos = twists > 0;
    // Constant-sign two-strand twist stack; slot orders as in braid letters.
    auto tops = [&](int q) {
      return pos ? std::pair<int, int>{4 * q + 1, 4 * q + 0}  // nw, ne
                 : std::pair<int, int>{4 * q + 0, 4 * q + 3};
    };
    auto bottoms = [&](int q) {
      return pos ? std::pair<int, int>{4 * q + 2, 4 * q + 3}  // sw, se
                 : std::pair<int, int>{4 * q + 1, 4 * q + 2};
    };
    for (int k = 0; k + 1 < m; ++k) {
      auto [sw, se] = bottoms(base + k);
      auto [nw, ne] = tops(base + k + 1);
      frame.wiring.conn(sw, nw);
      frame.wiring.conn(se, ne);
    }
    auto [p, q] = companion.ends_of(twist_edge);
    const auto& a = frame.ports[p];
    const auto& b = frame.ports[q];
    auto [first_nw, first_ne] = tops(base);
    auto [last_sw, last_se] = bottoms(base + m - 1);
    frame.wiring.conn(a[0], first_nw);
    frame.wiring.conn(a[1], first_ne);
    frame.wiring.conn(last_sw, b[1]);
    frame.wiring.conn(last_se, b[0]);
  }

  return frame.wiring.build();
}

struct WhiteheadPrediction {
  int crossings = 0;  // 4c + 2 + 2|t|
  bool o_known = false;
  int o_length = 0;  // 2c + 2o + 1, untwisted only
  bool states_known = false;
  int s_a = 0, s_b = 0;  // 2|S_A| - 1 and 2|S_B| + 1, untwisted default clasp
  bool span_known = false;
  int span = 0;  // 3c + 2 in t units, untwisted double of alternating companion
};

inline WhiteheadPrediction whitehead_prediction(const Diagram& companion,
                                                int twists = 0) {
  WhiteheadPrediction out;
  const int c = companion.crossing_count();
  out.crossings = 4 * c + 2 + 2 * std::abs(twists);
  if (twists == 0) {
    out.o_known = true;
    out.o_length = 2 * c + 2 * companion.o_length() + 1;
    out.states_known = true;
    out.s_a = 2 * resolve_loops(companion, 0) - 1;
    out.s_b = 2 * resolve_loops(companion, (1ull << c) - 1) + 1;
    if (companion.is_alternating() && c >= 1) {
      out.span_known = true;
      out.span = 3 * c + 2;
    }
  }
  return out;
}

// The n-strand satellite with m one-step shift blocks inserted at the first
// neutral edge. gcd(n, m) = 1 keeps knot companions producing knots.
inline Diagram cable(const Diagram& companion, int n, int m,
                     bool traveler_over = true) {
  if (companion.is_unknot() || companion.crossing_count() == 0)
    throw std::invalid_argument("cable: companion needs a crossing");
  if (n < 2) throw std::invalid_argument("cable: need n >= 2");
  if (m < 1) throw std::invalid_argument("cable: need m >= 1");
  if (std::gcd(n, m) != 1)
    throw std::invalid_argument("cable: n and m must be coprime");
  std::vector<int> neutral = detail::neutral_edges(companion);
  if (neutral.empty())
    throw std::domain_error("cable: companion has no neutral edge to cut");

  using detail::kEast;
  using detail::kNorth;
  using detail::kSouth;
  using detail::kWest;
  detail::BlockFrame frame(companion, n, m * (n - 1));
  const int cut = neutral[0];
  for (int e = 1; e <= companion.edge_count(); ++e) {
    if (e == cut) continue;
    auto [p, q] = companion.ends_of(e);
    frame.join(frame.ports[p], frame.ports[q]);
  }

  // One shift block: a traveler strand dives from the top position across the
  // remaining n-1 strands, which each move up one slot.
  auto shift_block = [&](int base) {
    std::vector<int> west(n), east(n);
    auto side = [&](int k, int s) {
      // crossing k handles the strand in slot k+2; slot order w, s, e, n
      int q = base + k;
      if (traveler_over) return 4 * q + s;
      static const int rot[4] = {3, 0, 1, 2};
      return 4 * q + rot[s];
    };
    west[0] = side(0, kNorth);  // traveler entry
    for (int k = 0; k < n - 1; ++k) west[k + 1] = side(k, kWest);
    east[0] = side(n - 2, kSouth);  // traveler exit, bottom of the east side
    for (int k = n - 2; k >= 0; --k) east[n - 1 - k] = side(k, kEast);
    for (int k = 0; k + 1 < n - 1; ++k)
      frame.wiring.conn(side(k, kSouth), side(k + 1, kNorth));
    return std::make_pair(west, east);
  };

  auto [p, q] = companion.ends_of(cut);
  std::vector<int> chain_end = frame.ports[p];
  int base = frame.extra_base_crossing();
  for (int b = 0; b < m; ++b) {
    auto [west, east] = shift_block(base + b * (n - 1));
    frame.join(chain_end, west);
    chain_end = east;
  }
  frame.join(chain_end, frame.ports[q]);

  return frame.wiring.build();
}

struct CablePrediction {
  int crossings = 0;  // n^2 c + m (n - 1)
  bool laws_known = false;
  int s_a = 0, s_b = 0;  // n|S_A| and n(|S_B| - 1) + 1
  int span = 0;          // (n^2 + n) c / 2 + (n - 1), t units
};

inline CablePrediction cable_prediction(const Diagram& companion, int n, int m) {
  CablePrediction out;
  const int c = companion.crossing_count();
  out.crossings = n * n * c + m * (n - 1);
  if (m == 1 && companion.is_alternating()) {
    out.laws_known = true;
    out.s_a = n * resolve_loops(companion, 0);
    out.s_b = n * (resolve_loops(companion, (1ull << c) - 1) - 1) + 1;
    out.span = (n * n + n) * c / 2 + (n - 1);
  }
  return out;
}

}  // namespace bracketforge
