#ifndef RAAGPRES_TEST_HELPERS_HPP
#define RAAGPRES_TEST_HELPERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "raagpres/flag_complex.hpp"
#include "raagpres/io.hpp"
#include "raagpres/words.hpp"

namespace raagpres::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(RAAGPRES_FIXTURES) + "/" + name;
}

inline ComplexFile fixture(const std::string& name) {
  return parse_complex_file(fixture_path(name));
}

inline FlagComplex hexagon() {
  return FlagComplex({"1", "2", "3", "4", "5", "6"},
                     {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}});
}

inline OrderedTree hexagon_tree(const FlagComplex& c) {
  return ordering_and_tree(c, {"1", "2", "3", "4", "5", "6"});
}

// deterministic xorshift for reproducible fuzz inputs
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b9) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

/// Random connected triangle-free complex with up to max_vertices vertices.
inline FlagComplex random_triangle_free(Rng& rng, int max_vertices) {
  int n = 2 + rng.below(max_vertices - 1);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 1; i < n; ++i) {
    int j = rng.below(i);
    adj[i][j] = adj[j][i] = 1;
    edges.emplace_back(names[i], names[j]);
  }
  int extra = rng.below(n);
  for (int k = 0; k < extra; ++k) {
    int i = rng.below(n), j = rng.below(n);
    if (i == j || adj[i][j]) continue;
    bool triangle = false;
    for (int m = 0; m < n; ++m)
      if (adj[i][m] && adj[j][m]) triangle = true;
    if (triangle) continue;
    adj[i][j] = adj[j][i] = 1;
    edges.emplace_back(names[i], names[j]);
  }
  return FlagComplex(names, edges);
}

inline RaagWord random_subgroup_element(Rng& rng, const FlagComplex& c, int n,
                                        int syllables) {
  RaagWord w;
  for (int i = 0; i < syllables; ++i) {
    int v = rng.below(c.vertex_count());
    int s = rng.below(2) ? 1 : -1;
    w.push_back({v, s});
  }
  long e = exponent_sum(w);
  long r = ((e % n) + n) % n;
  for (long i = 0; i < r; ++i) w.push_back({rng.below(c.vertex_count()), -1});
  // fix up: pad with inverse letters of vertex 0 until divisible
  while (exponent_sum(w) % n != 0) w.push_back({0, -1});
  return w;
}

}  // namespace raagpres::testing

#endif
