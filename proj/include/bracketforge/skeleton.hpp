#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bracketforge/bracket.hpp"
#include "bracketforge/diagram.hpp"
#include "bracketforge/graph.hpp"

namespace bracketforge {

// The skeleton G of a diagram: a vertex in every face whose boundary carries
// signed edges (face balance guarantees both signs appear together), and one
// skeleton edge through every Positive/Negative diagram edge, joining the
// faces on its two sides.

struct SkeletonEdge {
  int diagram_edge = 0;
  EdgeSign sign = EdgeSign::Neutral;
  int dart_a = -1, dart_b = -1;      // the diagram edge's two darts
  int vertex_a = -1, vertex_b = -1;  // skeleton vertices at those darts
};

struct Skeleton {
  std::vector<int> vertex_faces;  // face id hosting each vertex
  std::vector<SkeletonEdge> edges;
  // Per vertex: incident edge ends in face-boundary cyclic order, as
  // (edge index, end) where end 0 is dart_a's side.
  std::vector<std::vector<std::pair<int, int>>> rotations;
  bool simple = true;  // no loops or parallel edges

  int vertex_count() const { return static_cast<int>(vertex_faces.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool empty() const { return edges.empty(); }

  std::map<int, int> valency_profile() const {
    std::map<int, int> p;
    for (const auto& r : rotations) ++p[static_cast<int>(r.size())];
    return p;
  }

  int component_count() const {
    const int v = vertex_count();
    std::vector<int> parent(v);
    for (int i = 0; i < v; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : edges) parent[find(e.vertex_a)] = find(e.vertex_b);
    int comps = 0;
    for (int i = 0; i < v; ++i)
      if (find(i) == i) ++comps;
    return comps;
  }
};

inline Skeleton build_skeleton(const Diagram& d) {
  Skeleton sk;
  if (d.is_unknot()) return sk;

  std::vector<int> vertex_of_face(d.face_count(), -1);
  std::vector<std::vector<int>> signed_darts(d.face_count());
  for (int fi = 0; fi < d.face_count(); ++fi) {
    for (int dart : d.faces()[fi].darts)
      if (d.edge_sign(d.edge_at(dart)) != EdgeSign::Neutral)
        signed_darts[fi].push_back(dart);
    if (!signed_darts[fi].empty()) {
      vertex_of_face[fi] = sk.vertex_count();
      sk.vertex_faces.push_back(fi);
    }
  }

  // Signs must alternate around every vertex; anything else means the face
  // tracing itself is broken.
  for (int fi = 0; fi < d.face_count(); ++fi) {
    const auto& rot = signed_darts[fi];
    const int m = static_cast<int>(rot.size());
    for (int i = 0; i < m; ++i) {
      EdgeSign here = d.edge_sign(d.edge_at(rot[i]));
      EdgeSign next = d.edge_sign(d.edge_at(rot[(i + 1) % m]));
      if (here == next)
        throw std::logic_error("skeleton: signs fail to alternate at face " +
                               std::to_string(fi));
    }
  }

  std::vector<std::pair<int, int>> end_of_dart(4 * d.crossing_count(),
                                               {-1, -1});
  for (int e = 1; e <= d.edge_count(); ++e) {
    EdgeSign s = d.edge_sign(e);
    if (s == EdgeSign::Neutral) continue;
    auto [a, b] = d.ends_of(e);
    SkeletonEdge se;
    se.diagram_edge = e;
    se.sign = s;
    se.dart_a = a;
    se.dart_b = b;
    se.vertex_a = vertex_of_face[d.face_of_dart(a)];
    se.vertex_b = vertex_of_face[d.face_of_dart(b)];
    int idx = sk.edge_count();
    end_of_dart[a] = {idx, 0};
    end_of_dart[b] = {idx, 1};
    sk.edges.push_back(se);
  }

  if (sk.edge_count() != 2 * d.o_length())
    throw std::logic_error("skeleton edge count differs from 2*o(D)");

  sk.rotations.resize(sk.vertex_count());
  for (int vi = 0; vi < sk.vertex_count(); ++vi)
    for (int dart : signed_darts[sk.vertex_faces[vi]])
      sk.rotations[vi].push_back(end_of_dart[dart]);

  std::vector<std::pair<int, int>> seen;
  for (const auto& e : sk.edges) {
    if (e.vertex_a == e.vertex_b) sk.simple = false;
    seen.push_back(std::minmax(e.vertex_a, e.vertex_b));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    sk.simple = false;
  return sk;
}

// --- Vertex splitting --------------------------------------------------------

enum class SplitMode { A, B };

struct CurveCollection {
  int count = 0;
  std::vector<std::vector<int>> components;  // cyclic edge-index sequences
};

// Replace each 2m-valent vertex by m two-valent joints, pairing every
// positive edge end with the following (mode A) or preceding (mode B)
// negative end in the rotation; the edges then close up into curves.
inline CurveCollection split(const Skeleton& sk, SplitMode mode) {
  CurveCollection out;
  const int ends = 2 * sk.edge_count();
  if (ends == 0) return out;
  auto end_id = [](const std::pair<int, int>& e) {
    return 2 * e.first + e.second;
  };
  std::vector<int> match(ends, -1);
  for (const auto& rot : sk.rotations) {
    const int m = static_cast<int>(rot.size());
    for (int i = 0; i < m; ++i) {
      if (sk.edges[rot[i].first].sign != EdgeSign::Positive) continue;
      int j = (mode == SplitMode::A) ? (i + 1) % m : (i + m - 1) % m;
      match[end_id(rot[i])] = end_id(rot[j]);
      match[end_id(rot[j])] = end_id(rot[i]);
    }
  }
  for (int e = 0; e < ends; ++e)
    if (match[e] < 0) throw std::logic_error("split: unmatched skeleton end");

  std::vector<char> visited(ends, 0);
  for (int start = 0; start < ends; ++start) {
    if (visited[start]) continue;
    std::vector<int> curve;
    int cur = start;
    do {
      visited[cur] = visited[cur ^ 1] = 1;
      curve.push_back(cur / 2);
      cur = match[cur ^ 1];  // far end of this edge, then through the joint
    } while (cur != start);
    out.components.push_back(std::move(curve));
  }
  out.count = static_cast<int>(out.components.size());
  return out;
}

// --- Span bounds -------------------------------------------------------------

// n + (|G_A| + |G_B| - v(G)) / 2 with n the crossing count, in t units.
inline int extreme_states_bound(const Diagram& d) {
  Skeleton sk = build_skeleton(d);
  if (sk.empty())
    throw std::domain_error(
        "extreme_states_bound: alternating diagram (span bound is c(D))");
  int ga = split(sk, SplitMode::A).count;
  int gb = split(sk, SplitMode::B).count;
  int excess = ga + gb - sk.vertex_count();
  if ((excess % 2 + 2) % 2 != 0)
    throw std::logic_error("extreme_states_bound: odd curve excess");
  return d.crossing_count() + excess / 2;
}

struct SpanBoundRule {
  std::string rule;
  int bound = 0;
};

struct SpanBounds {
  bool applicable = false;
  std::string note;
  std::vector<SpanBoundRule> rules;
  int best = 0;
  std::string best_rule;
};

// Case analysis on o(D) and the skeleton's component count; all bounds are on
// span(V) in t units and require a totally reduced nonalternating diagram.
inline SpanBounds span_bound(const Diagram& d) {
  SpanBounds out;
  if (d.is_unknot() || d.is_alternating()) {
    out.note = "alternating or trivial diagram: bounds do not apply";
    return out;
  }
  if (!d.is_totally_reduced()) {
    out.note = "diagram is not totally reduced";
    return out;
  }
  out.applicable = true;
  const int n = d.crossing_count();
  const int o = d.o_length();
  Skeleton sk = build_skeleton(d);
  const int p = sk.component_count();
  if (o == 3) out.rules.push_back({"o3", n - 2});
  if (o % 2 == 0) out.rules.push_back({"o-even", n - 1});
  if (o % 2 == 1 && o >= 5) out.rules.push_back({"o-odd-ge5", n - 3});
  out.rules.push_back(
      {"components", o % 2 == 0 ? n - p : n - p - 1});
  out.best = out.rules.front().bound;
  out.best_rule = out.rules.front().rule;
  for (const auto& r : out.rules)
    if (r.bound < out.best) {
      out.best = r.bound;
      out.best_rule = r.rule;
    }
  return out;
}

// --- Lando graphs ------------------------------------------------------------

// Chord model on state circles: after smoothing every crossing one way, each
// crossing leaves two arcs on the resulting circles; the crossing's chord
// joins those arcs. Chords with both arcs on one circle are vertices; two
// chords on one circle are adjacent when their endpoints interleave.
struct LandoChord {
  int crossing = 0;
  int circle = 0;
  int pos1 = 0, pos2 = 0;  // arc positions along the host circle
};

struct LandoGraph {
  SimpleGraph graph{0};
  std::vector<LandoChord> chords;
  int circles = 0;                // |S_A| or |S_B|
  std::vector<int> circle_sizes;  // arcs per circle
};

inline LandoGraph lando_graph(const Diagram& d, SplitMode side) {
  LandoGraph out;
  if (d.is_unknot()) {
    out.circles = 1;
    return out;
  }
  const int c = d.crossing_count();
  auto partner = [&](int dart) {
    int ci = dart / 4, j = dart % 4;
    int pj = side == SplitMode::A ? (j ^ 1) : (3 - j);
    return 4 * ci + pj;
  };
  auto arc_of = [&](int dart) {
    int ci = dart / 4, j = dart % 4;
    int hi = side == SplitMode::A ? (j >= 2) : (j == 1 || j == 2);
    return 2 * ci + hi;
  };
  std::vector<int> arc_circle(2 * c, -1), arc_pos(2 * c, -1);
  std::vector<char> seen(4 * c, 0);
  for (int start = 0; start < 4 * c; ++start) {
    if (seen[start]) continue;
    int pos = 0, dart = start;
    do {
      int p = partner(dart);
      seen[dart] = seen[p] = 1;
      arc_circle[arc_of(dart)] = static_cast<int>(out.circle_sizes.size());
      arc_pos[arc_of(dart)] = pos++;
      dart = d.mate(p);
    } while (dart != start);
    out.circle_sizes.push_back(pos);
  }
  out.circles = static_cast<int>(out.circle_sizes.size());

  for (int ci = 0; ci < c; ++ci) {
    if (arc_circle[2 * ci] != arc_circle[2 * ci + 1]) continue;
    LandoChord ch;
    ch.crossing = ci;
    ch.circle = arc_circle[2 * ci];
    ch.pos1 = std::min(arc_pos[2 * ci], arc_pos[2 * ci + 1]);
    ch.pos2 = std::max(arc_pos[2 * ci], arc_pos[2 * ci + 1]);
    out.chords.push_back(ch);
  }
  out.graph = SimpleGraph(static_cast<int>(out.chords.size()));
  for (std::size_t i = 0; i < out.chords.size(); ++i)
    for (std::size_t j = i + 1; j < out.chords.size(); ++j) {
      const auto& u = out.chords[i];
      const auto& v = out.chords[j];
      if (u.circle != v.circle) continue;
      bool in1 = u.pos1 < v.pos1 && v.pos1 < u.pos2;
      bool in2 = u.pos1 < v.pos2 && v.pos2 < u.pos2;
      if (in1 != in2) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

inline std::pair<LandoGraph, LandoGraph> lando_graphs(const Diagram& d) {
  return {lando_graph(d, SplitMode::A), lando_graph(d, SplitMode::B)};
}

// --- Extreme coefficient prediction and nontriviality -------------------------

// (-1)^(|S_A|-1) f(L_A) predicts the bracket coefficient at its upper state
// bound, and the B side likewise at the lower bound.
inline std::pair<long long, long long> predicted_extremes(const Diagram& d) {
  auto [la, lb] = lando_graphs(d);
  long long fa = independence_alternating_sum(la.graph);
  long long fb = independence_alternating_sum(lb.graph);
  long long sign_a = (la.circles - 1) % 2 ? -1 : 1;
  long long sign_b = (lb.circles - 1) % 2 ? -1 : 1;
  return {sign_a * fa, sign_b * fb};
}

struct Certificate {
  bool certified = false;
  std::string reason = "no applicable rule";
};

// Conservative: only returns certified=true when a pinned nonzero coefficient
// forces V != 1; it never claims triviality.
inline Certificate nontriviality_certificate(const Diagram& d) {
  Certificate cert;
  if (!d.is_knot()) {
    cert.reason = "not a knot diagram";
    return cert;
  }
  if (d.is_unknot()) {
    cert.reason = "0-crossing unknot";
    return cert;
  }
  if (d.is_alternating() && d.is_reduced()) {
    cert.certified = true;
    cert.reason = "reduced alternating with a crossing";
    return cert;
  }
  auto [la, lb] = lando_graphs(d);
  long long fa = independence_alternating_sum(la.graph);
  long long fb = independence_alternating_sum(lb.graph);
  if (fa != 0 && fb != 0) {
    cert.certified = true;
    cert.reason = "both extreme coefficients nonzero, so the span is positive";
    return cert;
  }
  const int c = d.crossing_count();
  const int w = d.writhe();
  if (fa != 0 && 3 * w - (c + 2 * la.circles - 2) != 0) {
    cert.certified = true;
    cert.reason = "top coefficient nonzero away from t^0";
    return cert;
  }
  if (fb != 0 && 3 * w + (c + 2 * lb.circles - 2) != 0) {
    cert.certified = true;
    cert.reason = "bottom coefficient nonzero away from t^0";
    return cert;
  }
  return cert;
}

// --- DOT emitters -------------------------------------------------------------

inline std::string to_dot(const Skeleton& sk, const std::string& name) {
  std::string s = "graph \"" + name + "\" {\n";
  for (int vi = 0; vi < sk.vertex_count(); ++vi)
    s += "  v" + std::to_string(vi) + " [label=\"face " +
         std::to_string(sk.vertex_faces[vi]) + "\"];\n";
  for (const auto& e : sk.edges)
    s += "  v" + std::to_string(e.vertex_a) + " -- v" +
         std::to_string(e.vertex_b) + " [label=\"" +
         (e.sign == EdgeSign::Positive ? "+" : "-") + std::to_string(e.diagram_edge) +
         "\"];\n";
  s += "}\n";
  return s;
}

inline std::string to_dot(const LandoGraph& lg, const std::string& name) {
  std::string s = "graph \"" + name + "\" {\n";
  for (std::size_t i = 0; i < lg.chords.size(); ++i)
    s += "  c" + std::to_string(i) + " [label=\"x" +
         std::to_string(lg.chords[i].crossing) + "\"];\n";
  for (std::size_t i = 0; i < lg.chords.size(); ++i)
    for (std::size_t j = i + 1; j < lg.chords.size(); ++j)
      if (lg.graph.has_edge(static_cast<int>(i), static_cast<int>(j)))
        s += "  c" + std::to_string(i) + " -- c" + std::to_string(j) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace bracketforge
