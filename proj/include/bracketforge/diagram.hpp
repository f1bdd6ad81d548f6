#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bracketforge {

// PD conventions used throughout:
//
//   X(a,b,c,d) lists the four incident edges counterclockwise starting at the
//   incoming under-strand edge, so slots 0,2 carry the under-strand and slots
//   1,3 carry the over-strand. Edge labels are dense 1..2c, each appearing on
//   exactly two slots. A dart is one slot of one crossing: dart = 4*ci + slot.
//
//   Faces are the orbits of sigma(alpha(dart)), where alpha swaps the two
//   darts of an edge and sigma steps one slot counterclockwise. Walking an
//   orbit turns through the corner between slots j and j+1 at each crossing
//   it passes; that corner is recorded as (crossing, j).
//
// A 0-crossing Diagram is the unknot constant; it cannot be written in PD
// text and parse rejects empty input.

enum class EdgeSign { Positive, Negative, Neutral };

struct Face {
  std::vector<int> darts;                    // boundary darts in orbit order
  std::vector<std::pair<int, int>> corners;  // (crossing, corner j) per step
};

struct GaussEntry {
  int crossing = 0;  // 1-based label in first-visit order
  bool over = false;
};
using GaussCode = std::vector<GaussEntry>;

class Diagram {
public:
  static Diagram unknot() { return Diagram(); }

  static Diagram from_tuples(std::vector<std::array<int, 4>> tuples) {
    Diagram d;
    d.tuples_ = std::move(tuples);
    d.build();
    return d;
  }

  // Build from an explicit pairing of darts. Edge ids are assigned densely in
  // order of each pair's smaller dart, which keeps builders deterministic.
  static Diagram from_pairing(int crossings,
                              std::vector<std::pair<int, int>> pairs) {
    if (static_cast<int>(pairs.size()) != 2 * crossings)
      throw std::invalid_argument("from_pairing: need exactly 2c dart pairs");
    for (auto& [a, b] : pairs)
      if (a > b) std::swap(a, b);
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::array<int, 4>> tuples(crossings, {0, 0, 0, 0});
    int id = 0;
    for (const auto& [a, b] : pairs) {
      ++id;
      tuples[a / 4][a % 4] = id;
      tuples[b / 4][b % 4] = id;
    }
    return from_tuples(std::move(tuples));
  }

  bool is_unknot() const { return tuples_.empty(); }
  int crossing_count() const { return static_cast<int>(tuples_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  const std::vector<std::array<int, 4>>& tuples() const { return tuples_; }

  int edge_at(int dart) const { return tuples_[dart / 4][dart % 4]; }

  // The two darts carrying edge id e (1-based).
  std::pair<int, int> ends_of(int e) const { return edge_ends_.at(e); }

  int mate(int dart) const {
    auto [a, b] = ends_of(edge_at(dart));
    return dart == a ? b : a;
  }

  EdgeSign edge_sign(int e) const {
    auto [a, b] = ends_of(e);
    bool over_a = a % 2 == 1, over_b = b % 2 == 1;
    if (over_a && over_b) return EdgeSign::Positive;
    if (!over_a && !over_b) return EdgeSign::Negative;
    return EdgeSign::Neutral;
  }

  int o_length() const { return o_length_; }
  int u_length() const { return u_length_; }
  bool is_alternating() const { return o_length_ == 0; }

  int component_count() const { return components_; }
  bool is_knot() const { return is_unknot() || components_ == 1; }

  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int face_at_corner(int crossing, int corner) const {
    return corner_face_[4 * crossing + corner];
  }
  int face_of_dart(int dart) const { return dart_face_[dart]; }

  // Nugatory test: a crossing with the same face on two opposite corners.
  bool is_reduced() const {
    if (is_unknot()) return true;
    for (int ci = 0; ci < crossing_count(); ++ci)
      if (face_at_corner(ci, 0) == face_at_corner(ci, 2) ||
          face_at_corner(ci, 1) == face_at_corner(ci, 3))
        return false;
    return true;
  }

  // A bigon whose boundary edges are signed is a removable two-crossing
  // overpass; a clasp or twist bigon has neutral boundary edges.
  bool is_ii_reduced() const {
    for (const auto& f : faces_) {
      if (f.darts.size() != 2) continue;
      for (int dart : f.darts)
        if (edge_sign(edge_at(dart)) != EdgeSign::Neutral) return false;
    }
    return true;
  }

  bool is_totally_reduced() const { return is_reduced() && is_ii_reduced(); }

  // b(D) = c(D) - o(D); 0 for the unknot constant.
  int bridge_number() const { return crossing_count() - o_length_; }

  // Strand traversal for knots, entries in visit order, crossings numbered
  // 1.. in first-visit order.
  GaussCode to_gauss() const {
    require_knot("to_gauss");
    GaussCode g;
    if (is_unknot()) return g;
    std::vector<int> label(crossing_count(), 0);
    int next_label = 0;
    int start = 0;  // enter crossing 0 at slot 0
    int dart = start;
    do {
      int ci = dart / 4, slot = dart % 4;
      if (label[ci] == 0) label[ci] = ++next_label;
      g.push_back({label[ci], slot % 2 == 1});
      dart = mate(4 * ci + (slot + 2) % 4);
    } while (dart != start);
    return g;
  }

  // Sum of crossing signs over a strand traversal (knots only). With slots
  // placed counterclockwise, entering under at slot u and over at slot o
  // gives sign +1 exactly when (u,o) is (0,3) or (2,1).
  int writhe() const {
    require_knot("writhe");
    if (is_unknot()) return 0;
    std::vector<int> under_entry(crossing_count(), -1),
        over_entry(crossing_count(), -1);
    int start = 0, dart = start;
    do {
      int ci = dart / 4, slot = dart % 4;
      (slot % 2 == 0 ? under_entry[ci] : over_entry[ci]) = slot;
      dart = mate(4 * ci + (slot + 2) % 4);
    } while (dart != start);
    int w = 0;
    for (int ci = 0; ci < crossing_count(); ++ci) {
      int u = under_entry[ci], o = over_entry[ci];
      w += ((u == 0 && o == 3) || (u == 2 && o == 1)) ? 1 : -1;
    }
    return w;
  }

  // Mirror image: swap the strands at every crossing. Rotating each tuple by
  // one slot exchanges the under pair (0,2) with the over pair (1,3) while
  // keeping the planar rotation intact.
  Diagram mirrored() const {
    if (is_unknot()) return *this;
    std::vector<std::array<int, 4>> t;
    t.reserve(tuples_.size());
    for (const auto& x : tuples_) t.push_back({x[1], x[2], x[3], x[0]});
    return from_tuples(std::move(t));
  }

  Diagram with_switched_crossing(int ci) const {
    auto t = tuples_;
    t.at(ci) = {t[ci][1], t[ci][2], t[ci][3], t[ci][0]};
    return from_tuples(std::move(t));
  }

  std::string to_pd_text() const {
    if (is_unknot())
      throw std::domain_error("the 0-crossing unknot has no PD text");
    std::string s;
    for (std::size_t i = 0; i < tuples_.size(); ++i) {
      if (i) s += " ";
      s += "X(" + std::to_string(tuples_[i][0]) + "," +
           std::to_string(tuples_[i][1]) + "," + std::to_string(tuples_[i][2]) +
           "," + std::to_string(tuples_[i][3]) + ")";
    }
    return s;
  }

  // Stable content key for caching keyed on the tuple list.
  std::string canonical_key() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(tuples_.size());
    for (const auto& t : tuples_)
      for (int v : t) mix(static_cast<std::uint64_t>(v));
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
  }

  bool operator==(const Diagram& o) const { return tuples_ == o.tuples_; }

private:
  Diagram() = default;

  void require_knot(const char* what) const {
    if (!is_knot())
      throw std::domain_error(std::string(what) + ": diagram has " +
                              std::to_string(components_) + " components");
  }

  void build() {
    const int c = crossing_count();
    if (c == 0) throw std::invalid_argument("empty diagram has no crossings");

    // Edge labels must be dense 1..2c, each on exactly two slots.
    std::vector<int> count(2 * c + 1, 0);
    for (const auto& t : tuples_)
      for (int e : t) {
        if (e < 1 || e > 2 * c)
          throw std::runtime_error("edge label " + std::to_string(e) +
                                   " outside 1.." + std::to_string(2 * c));
        ++count[e];
      }
    for (int e = 1; e <= 2 * c; ++e)
      if (count[e] != 2)
        throw std::runtime_error("edge label " + std::to_string(e) +
                                 " appears " + std::to_string(count[e]) +
                                 " times (expected 2)");

    edge_ends_.assign(2 * c + 1, {-1, -1});
    for (int dart = 0; dart < 4 * c; ++dart) {
      auto& ends = edge_ends_[edge_at(dart)];
      (ends.first < 0 ? ends.first : ends.second) = dart;
    }

    // Connected universe.
    std::vector<char> seen(c, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
      int ci = stack.back();
      stack.pop_back();
      for (int slot = 0; slot < 4; ++slot) {
        int nd = mate(4 * ci + slot) / 4;
        if (!seen[nd]) {
          seen[nd] = 1;
          ++visited;
          stack.push_back(nd);
        }
      }
    }
    if (visited != c)
      throw std::runtime_error("disconnected universe: reached " +
                               std::to_string(visited) + " of " +
                               std::to_string(c) + " crossings");

    trace_faces();
    int euler = c - 2 * c + face_count();
    if (euler != 2)
      throw std::runtime_error("Euler check failed: V-E+F = " +
                               std::to_string(euler) + " (PD is not planar)");

    o_length_ = u_length_ = 0;
    for (int e = 1; e <= 2 * c; ++e) {
      EdgeSign s = edge_sign(e);
      if (s == EdgeSign::Positive) ++o_length_;
      if (s == EdgeSign::Negative) ++u_length_;
    }
    if (o_length_ != u_length_)
      throw std::runtime_error("edge sign imbalance: o=" +
                               std::to_string(o_length_) +
                               " u=" + std::to_string(u_length_));

    // Every face boundary carries as many positive as negative edge sides.
    for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
      int pos = 0, neg = 0;
      for (int dart : faces_[fi].darts) {
        EdgeSign s = edge_sign(edge_at(dart));
        if (s == EdgeSign::Positive) ++pos;
        if (s == EdgeSign::Negative) ++neg;
      }
      if (pos != neg)
        throw std::runtime_error("face " + std::to_string(fi) +
                                 " has unbalanced edge signs");
    }

    components_ = count_components();
  }

  void trace_faces() {
    const int n = 4 * crossing_count();
    dart_face_.assign(n, -1);
    corner_face_.assign(n, -1);
    faces_.clear();
    for (int s0 = 0; s0 < n; ++s0) {
      if (dart_face_[s0] >= 0) continue;
      Face f;
      int fi = static_cast<int>(faces_.size());
      int s = s0;
      do {
        dart_face_[s] = fi;
        f.darts.push_back(s);
        int a = mate(s);
        int ci = a / 4, j = a % 4;
        f.corners.emplace_back(ci, j);
        corner_face_[a] = fi;
        s = 4 * ci + (j + 1) % 4;
      } while (s != s0);
      faces_.push_back(std::move(f));
    }
  }

  int count_components() const {
    const int n = 4 * crossing_count();
    std::vector<char> seen(n, 0);
    int orbits = 0;
    for (int s0 = 0; s0 < n; ++s0) {
      if (seen[s0]) continue;
      ++orbits;
      int s = s0;
      do {
        seen[s] = 1;
        s = mate(4 * (s / 4) + (s % 4 + 2) % 4);
      } while (s != s0);
    }
    return orbits / 2;  // each component is traced once per direction
  }

  std::vector<std::array<int, 4>> tuples_;
  std::vector<std::pair<int, int>> edge_ends_;  // indexed by edge id
  std::vector<Face> faces_;
  std::vector<int> dart_face_;
  std::vector<int> corner_face_;
  int o_length_ = 0;
  int u_length_ = 0;
  int components_ = 0;
};

// --- PD text ---------------------------------------------------------------

// Accepts "X(1,4,2,5) X(3,6,4,1) ..." (case-insensitive X, flexible spacing).
inline Diagram parse_pd(const std::string& text) {
  std::vector<std::array<int, 4>> tuples;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != 'X' && text[i] != 'x')
      throw std::invalid_argument("malformed PD token at offset " +
                               std::to_string(i) + ": expected 'X('");
    ++i;
    skip_ws();
    if (i >= text.size() || (text[i] != '(' && text[i] != '['))
      throw std::invalid_argument("malformed PD token: expected '(' after X");
    char close = text[i] == '(' ? ')' : ']';
    ++i;
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start)
        throw std::invalid_argument("malformed PD token: expected edge label");
      t[k] = std::stoi(text.substr(start, i - start));
    }
    skip_ws();
    if (i >= text.size() || text[i] != close)
      throw std::invalid_argument("malformed PD token: expected closing bracket");
    ++i;
    tuples.push_back(t);
    skip_ws();
  }
  if (tuples.empty())
    throw std::invalid_argument("empty diagram: no PD tuples found");
  return Diagram::from_tuples(std::move(tuples));
}

// --- Gauss code text and o-length ------------------------------------------

inline std::string gauss_to_string(const GaussCode& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += " ";
    s += (g[i].over ? "O" : "U") + std::to_string(g[i].crossing);
  }
  return s;
}

inline GaussCode parse_gauss(const std::string& text) {
  GaussCode g;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 'O' && tok[0] != 'U'))
      throw std::invalid_argument("malformed Gauss token '" + tok + "'");
    GaussEntry e;
    e.over = tok[0] == 'O';
    e.crossing = std::stoi(tok.substr(1));
    g.push_back(e);
  }
  if (g.empty()) throw std::invalid_argument("empty Gauss code");
  if (g.size() % 2 != 0)
    throw std::invalid_argument("Gauss code has odd length");
  return g;
}

// o(D) read off a knot's Gauss code: cyclically adjacent Over,Over pairs.
inline int o_from_gauss(const GaussCode& g) {
  if (g.empty()) return 0;
  int o = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i].over && g[(i + 1) % g.size()].over) ++o;
  return o;
}

// Maximal cyclic runs of O symbols: direct overpass count.
inline int overpass_count(const GaussCode& g) {
  if (g.empty()) return 0;
  int runs = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i].over && !g[(i + 1) % g.size()].over) ++runs;
  return runs;
}

// --- Connected sum ----------------------------------------------------------

// Splice d1 and d2 along neutral edges e1, e2, joining each over end to the
// other diagram's under end so every new edge stays neutral and o adds.
inline Diagram connected_sum(const Diagram& d1, int e1, const Diagram& d2,
                             int e2) {
  if (!d1.is_knot() || !d2.is_knot())
    throw std::domain_error("connected_sum: operands must be knots");
  if (d1.is_unknot()) return d2;
  if (d2.is_unknot()) return d1;
  if (d1.edge_sign(e1) != EdgeSign::Neutral ||
      d2.edge_sign(e2) != EdgeSign::Neutral)
    throw std::invalid_argument("connected_sum: splice edges must be Neutral");

  const int c1 = d1.crossing_count();
  std::vector<std::pair<int, int>> pairs;
  auto push_all = [&pairs](const Diagram& d, int skip_edge, int dart_offset) {
    for (int e = 1; e <= d.edge_count(); ++e) {
      if (e == skip_edge) continue;
      auto [a, b] = d.ends_of(e);
      pairs.emplace_back(a + dart_offset, b + dart_offset);
    }
  };
  push_all(d1, e1, 0);
  push_all(d2, e2, 4 * c1);

  auto [a1, b1] = d1.ends_of(e1);
  auto [a2, b2] = d2.ends_of(e2);
  int over1 = (a1 % 2 == 1) ? a1 : b1, under1 = (a1 % 2 == 1) ? b1 : a1;
  int over2 = (a2 % 2 == 1) ? a2 : b2, under2 = (a2 % 2 == 1) ? b2 : a2;
  pairs.emplace_back(over1, under2 + 4 * c1);
  pairs.emplace_back(under1, over2 + 4 * c1);

  return Diagram::from_pairing(c1 + d2.crossing_count(), std::move(pairs));
}

// --- Checkerboard colouring -------------------------------------------------

// Shades the faces whose corners open counterclockwise from the over strand
// (corner indices 1 and 3). Alternating diagrams shade consistently and the
// shaded count matches the all-A state circle count.
struct Checkerboard {
  std::vector<bool> shaded;  // per face index
  int shaded_count = 0;
  int unshaded_count = 0;
};

inline Checkerboard checkerboard(const Diagram& d) {
  if (d.is_unknot())
    throw std::domain_error("checkerboard: 0-crossing unknot has one face");
  if (!d.is_alternating())
    throw std::domain_error("checkerboard: diagram is not alternating");
  const auto& faces = d.faces();
  std::vector<int> mark(faces.size(), -1);  // -1 unset, 1 shaded, 0 not
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    for (const auto& [ci, j] : faces[fi].corners) {
      int want = (j % 2 == 0) ? 1 : 0;
      if (mark[fi] < 0) mark[fi] = want;
      if (mark[fi] != want)
        throw std::domain_error(
            "checkerboard: inconsistent corner types on face " +
            std::to_string(fi));
    }
  }
  Checkerboard cb;
  cb.shaded.resize(faces.size());
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    cb.shaded[fi] = mark[fi] == 1;
    ++(cb.shaded[fi] ? cb.shaded_count : cb.unshaded_count);
  }
  return cb;
}

}  // namespace bracketforge
