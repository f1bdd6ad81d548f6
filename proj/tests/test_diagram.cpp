#include <catch2/catch_amalgamated.hpp>

#include "bracketforge/diagram.hpp"

using namespace bracketforge;

namespace {
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kKink = "X(1,1,2,2)";
}  // namespace

TEST_CASE("trefoil basics") {
  Diagram d = parse_pd(kTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.edge_count() == 6);
  CHECK(d.component_count() == 1);
  CHECK(d.is_knot());
  CHECK(d.face_count() == 5);  // V - E + F = 2
  CHECK(d.o_length() == 0);
  CHECK(d.u_length() == 0);
  CHECK(d.is_alternating());
  CHECK(d.bridge_number() == 3);
  CHECK(d.is_reduced());
  CHECK(d.is_ii_reduced());
  CHECK(d.is_totally_reduced());
  CHECK(d.writhe() == -3);
  for (int e = 1; e <= 6; ++e) CHECK(d.edge_sign(e) == EdgeSign::Neutral);
}

TEST_CASE("trefoil gauss code") {
  Diagram d = parse_pd(kTrefoil);
  GaussCode g = d.to_gauss();
  REQUIRE(g.size() == 6);
  CHECK(gauss_to_string(g) == "U1 O2 U3 O1 U2 O3");
  CHECK(o_from_gauss(g) == 0);
  CHECK(overpass_count(g) == 3);
  CHECK(overpass_count(g) == d.bridge_number());
  GaussCode parsed = parse_gauss("U1 O2 U3 O1 U2 O3");
  CHECK(gauss_to_string(parsed) == gauss_to_string(g));
  CHECK_THROWS_AS(parse_gauss("U1 O2 X3"), std::invalid_argument);
}

TEST_CASE("faces carry darts and corners") {
  Diagram d = parse_pd(kTrefoil);
  int total_darts = 0;
  for (const auto& f : d.faces()) {
    total_darts += static_cast<int>(f.darts.size());
    CHECK(f.darts.size() == f.corners.size());
  }
  CHECK(total_darts == 12);  // every dart in exactly one face
  for (int dart = 0; dart < 12; ++dart) {
    int f = d.face_of_dart(dart);
    REQUIRE(f >= 0);
    REQUIRE(f < d.face_count());
  }
  // Every corner is owned by exactly one face.
  int corner_faces = 0;
  for (int ci = 0; ci < 3; ++ci)
    for (int j = 0; j < 4; ++j) {
      CHECK(d.face_at_corner(ci, j) >= 0);
      ++corner_faces;
    }
  CHECK(corner_faces == 12);
}

TEST_CASE("kink diagram") {
  Diagram d = parse_pd(kKink);
  CHECK(d.crossing_count() == 1);
  CHECK(d.is_knot());
  CHECK(d.face_count() == 3);
  CHECK(d.is_alternating());
  CHECK_FALSE(d.is_reduced());  // nugatory crossing
  CHECK(d.writhe() == 1);
}

TEST_CASE("mirror and crossing switch") {
  Diagram d = parse_pd(kTrefoil);
  Diagram m = d.mirrored();
  CHECK(m.writhe() == 3);
  CHECK(m.is_alternating());
  CHECK(m.crossing_count() == 3);

  Diagram s = d.with_switched_crossing(0);
  CHECK(s.o_length() == 2);
  CHECK(s.u_length() == 2);
  CHECK_FALSE(s.is_alternating());
  CHECK(s.bridge_number() == 1);
}

TEST_CASE("pd parsing accepts brackets and flexible spacing") {
  Diagram d1 = parse_pd("X[1,4,2,5]  x[3,6,4,1]\nX[5,2,6,3]");
  Diagram d2 = parse_pd(kTrefoil);
  CHECK(d1 == d2);
  CHECK(d2.to_pd_text() == std::string(kTrefoil));
}

TEST_CASE("pd parse and build errors") {
  CHECK_THROWS_AS(parse_pd(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), std::invalid_argument);
  // label 3 appears once, label 1 three times
  CHECK_THROWS_AS(parse_pd("X(1,1,2,3) X(2,1,4,4) X(3,5,5,6) X(6,7,7,8)"),
                  std::runtime_error);
  // two disjoint kinks
  CHECK_THROWS_AS(parse_pd("X(1,1,2,2) X(3,3,4,4)"), std::runtime_error);
}

TEST_CASE("unknot") {
  Diagram u = Diagram::unknot();
  CHECK(u.is_unknot());
  CHECK(u.crossing_count() == 0);
  CHECK(u.is_knot());
  CHECK(u.component_count() == 0);
  CHECK(u.bridge_number() == 0);
  CHECK(u.writhe() == 0);
  CHECK(u.to_gauss().empty());
  CHECK(u.is_totally_reduced());
  CHECK_THROWS_AS(u.to_pd_text(), std::domain_error);
}

TEST_CASE("from_pairing reproduces the trefoil combinatorics") {
  // Pairs copied from the parsed trefoil's edge ends.
  Diagram ref = parse_pd(kTrefoil);
  std::vector<std::pair<int, int>> pairs;
  for (int e = 1; e <= ref.edge_count(); ++e) pairs.push_back(ref.ends_of(e));
  Diagram d = Diagram::from_pairing(3, pairs);
  CHECK(d.crossing_count() == 3);
  CHECK(d.face_count() == 5);
  CHECK(d.writhe() == ref.writhe());
  CHECK(gauss_to_string(d.to_gauss()) == gauss_to_string(ref.to_gauss()));
}

TEST_CASE("connected sum of trefoils") {
  Diagram d = parse_pd(kTrefoil);
  Diagram sum = connected_sum(d, 1, d, 1);
  CHECK(sum.crossing_count() == 6);
  CHECK(sum.is_knot());
  CHECK(sum.is_alternating());
  CHECK(sum.writhe() == -6);
  CHECK(sum.face_count() == 8);
}

TEST_CASE("checkerboard shading of alternating diagrams") {
  Diagram d = parse_pd(kTrefoil);
  Checkerboard cb = checkerboard(d);
  CHECK(cb.shaded_count + cb.unshaded_count == d.face_count());
  CHECK(cb.shaded_count == 3);
  CHECK(cb.unshaded_count == 2);

  Diagram s = d.with_switched_crossing(0);
  CHECK_THROWS_AS(checkerboard(s), std::domain_error);
}

TEST_CASE("edge metadata") {
  Diagram d = parse_pd(kTrefoil);
  for (int dart = 0; dart < 12; ++dart) {
    int e = d.edge_at(dart);
    auto [a, b] = d.ends_of(e);
    CHECK((a == dart || b == dart));
    CHECK(d.mate(dart) == (a == dart ? b : a));
  }
  CHECK(d.canonical_key().size() == 16);
  CHECK(d.canonical_key() == parse_pd(kTrefoil).canonical_key());
  CHECK(d.canonical_key() != d.mirrored().canonical_key());
}
