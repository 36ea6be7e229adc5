#include <doctest.h>

#include <algorithm>

#include "raagpres/flag_complex.hpp"
#include "helpers.hpp"

using namespace raagpres;
using namespace raagpres::testing;

TEST_CASE("validate flags an unfilled 3-clique") {
  FlagComplex c({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto rep = validate(c);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].find("unfilled 3-clique") != std::string::npos);
}

TEST_CASE("validate accepts the hexagon") {
  CHECK(validate(hexagon()).ok());
}

TEST_CASE("validate rejects a filled K4") {
  FlagComplex c({"a", "b", "c", "d"},
                {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}},
                {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
  auto rep = validate(c);
  bool has_k4 = false;
  for (const auto& v : rep.violations)
    if (v.find("4-clique") != std::string::npos) has_k4 = true;
  CHECK(has_k4);
}

TEST_CASE("validate reports a triangle with a missing edge") {
  FlagComplex c({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"a", "b", "c"}});
  auto rep = validate(c);
  bool missing = false;
  for (const auto& v : rep.violations)
    if (v.find("missing edge") != std::string::npos) missing = true;
  CHECK(missing);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(hexagon()) == 0);
  CHECK(euler_characteristic_raag(hexagon()) == 1);
  auto rp2s1 = fixture("rp2_sigma1.json").complex;
  CHECK(rp2s1.vertex_count() == 21);
  CHECK(rp2s1.edge_count() == 30);
  CHECK(euler_characteristic(rp2s1) == -9);
  // rank of pi_1 of a connected graph is 1 - chi
  CHECK(1 - euler_characteristic(rp2s1) == 10);
  auto rp2 = fixture("rp2.json").complex;
  CHECK(euler_characteristic(rp2) == 1);
  CHECK(validate(rp2).ok());
}

TEST_CASE("homology of the hexagon is Z") {
  auto h = homology_h1(hexagon());
  CHECK(h.free_rank == 1);
  CHECK(h.torsion.empty());
  CHECK_FALSE(h.one_acyclic);
  CHECK(h.h1_obstructs_simple_connectivity);
}

TEST_CASE("homology of the projective plane is Z/2") {
  auto rp2 = fixture("rp2.json").complex;
  auto h = homology_h1(rp2);
  CHECK(h.free_rank == 0);
  CHECK(h.torsion == std::vector<long long>{2});
  CHECK_FALSE(h.one_acyclic);
}

TEST_CASE("homology of the subdivided 2-simplex is trivial") {
  FlagComplex tri({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"A", "C"}},
                  {{"A", "B", "C"}});
  auto sub = barycentric_subdivide(tri);
  auto h = homology_h1(sub);
  CHECK(h.free_rank == 0);
  CHECK(h.torsion.empty());
  CHECK(h.one_acyclic);
}

TEST_CASE("homology of the sphere and torus fixtures") {
  auto sphere = fixture("sphere.json").complex;
  auto hs = homology_h1(sphere);
  CHECK(hs.free_rank == 0);
  CHECK(hs.one_acyclic);
  auto torus = fixture("torus.json").complex;
  CHECK(validate(torus).ok());
  auto ht = homology_h1(torus);
  CHECK(ht.free_rank == 2);
  CHECK(ht.torsion.empty());
}

TEST_CASE("subdivision preserves euler characteristic and H1") {
  for (const char* name : {"triangle.json", "hexagon.json", "torus.json"}) {
    auto c = fixture(name).complex;
    auto sub = barycentric_subdivide(c);
    CHECK(validate(sub).ok());
    CHECK(euler_characteristic(sub) == euler_characteristic(c));
    CHECK(homology_h1(sub) == homology_h1(c));
  }
}

TEST_CASE("subdivided 2-simplex has the expected cells and sigma_one is the hexagon") {
  FlagComplex tri({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"A", "C"}},
                  {{"A", "B", "C"}});
  auto sub = barycentric_subdivide(tri);
  CHECK(sub.vertex_count() == 7);
  CHECK(sub.edge_count() == 12);
  CHECK(sub.triangle_count() == 6);
  auto s1 = sigma_one(sub);
  CHECK(s1.vertex_count() == 6);
  CHECK(s1.edge_count() == 6);
  CHECK(s1.triangle_count() == 0);
  for (int v = 0; v < s1.vertex_count(); ++v)
    CHECK(s1.neighbours(v).size() == 2);  // a 6-cycle
  CHECK(s1.connected());
}

TEST_CASE("sigma_one of the rp2 fixture has 21 vertices and 30 edges") {
  auto rp2 = fixture("rp2.json").complex;
  auto s1 = sigma_one(rp2);
  CHECK(s1.vertex_count() == 21);
  CHECK(s1.edge_count() == 30);
  CHECK(s1.triangle_count() == 0);
}

TEST_CASE("sigma_one without face barycentres changes nothing") {
  FlagComplex edge({"a", "b", "a|b"}, {{"a", "a|b"}, {"a|b", "b"}}, {},
                   {{"a", Provenance::Original},
                    {"b", Provenance::Original},
                    {"a|b", Provenance::EdgeBarycentre}});
  auto s1 = sigma_one(edge);
  CHECK(s1.vertex_count() == 3);
  CHECK(s1.edge_count() == 2);
}

TEST_CASE("sigma_one requires provenance") {
  CHECK_THROWS_AS(sigma_one(hexagon()), std::invalid_argument);
}

TEST_CASE("subdividing a single edge gives a 3-vertex path") {
  FlagComplex e({"a", "b"}, {{"a", "b"}});
  auto sub = barycentric_subdivide(e);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 2);
}

TEST_CASE("BFS ordering is deterministic and valid") {
  auto c = hexagon();
  auto t = ordering_and_tree(c, "1");
  CHECK(t.order.size() == 6);
  CHECK(c.vertex_name(t.order[0]) == "1");
  for (std::size_t i = 1; i < t.order.size(); ++i) {
    int v = t.order[i];
    REQUIRE(t.parent[v] >= 0);
    CHECK(t.pos[t.parent[v]] < t.pos[v]);
    CHECK(c.has_edge(v, t.parent[v]));
  }
}

TEST_CASE("paper ordering of the hexagon gives the path tree") {
  auto c = hexagon();
  auto t = hexagon_tree(c);
  CHECK(c.vertex_name(t.parent[c.vertex_index("6")]) == "5");
  CHECK(c.vertex_name(t.parent[c.vertex_index("2")]) == "1");
}

TEST_CASE("single vertex has a trivial ordering") {
  FlagComplex c({"x"}, {});
  auto t = ordering_and_tree(c, "x");
  CHECK(t.order.size() == 1);
  CHECK(t.parent[0] == -1);
}

TEST_CASE("supplied ordering violating the predecessor condition is rejected") {
  FlagComplex path({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  CHECK_THROWS_AS(ordering_and_tree(path, {"1", "3", "2"}), std::invalid_argument);
}

TEST_CASE("disconnected complexes are rejected by ordering_and_tree") {
  FlagComplex c({"a", "b"}, {});
  CHECK_THROWS_AS(ordering_and_tree(c, "a"), std::invalid_argument);
}

TEST_CASE("supplied tree must span and be compatible") {
  auto c = hexagon();
  std::vector<std::pair<std::string, std::string>> short_tree{{"1", "2"}};
  CHECK_THROWS_AS(
      ordering_and_tree(c, {"1", "2", "3", "4", "5", "6"}, &short_tree),
      std::invalid_argument);
}

TEST_CASE("cone over the hexagon is a flag disc") {
  auto c = hexagon();
  auto coned = cone_off(c, {"1", "2", "3", "4", "5", "6"});
  CHECK(validate(coned).ok());
  CHECK(euler_characteristic(coned) == 1);
  auto h = homology_h1(coned);
  CHECK(h.one_acyclic);
}

TEST_CASE("cone over a 4-cycle has chi 1 and the advertised cells") {
  FlagComplex c({"1", "2", "3", "4"},
                {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
  auto coned = cone_off(c, {"1", "2", "3", "4"});
  CHECK(coned.vertex_count() == 4 + 1 + 4 + 4);
  CHECK(euler_characteristic(coned) == 1);
  CHECK(validate(coned).ok());
}

TEST_CASE("cone rejects a loop reusing a vertex") {
  auto c = hexagon();
  CHECK_THROWS_AS(cone_off(c, {"1", "2", "3", "2"}), std::invalid_argument);
}

TEST_CASE("cone rejects a non-closed walk") {
  FlagComplex path({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  CHECK_THROWS_AS(cone_off(path, {"1", "2", "3"}), std::invalid_argument);
}
