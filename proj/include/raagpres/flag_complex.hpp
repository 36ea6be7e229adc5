#ifndef RAAGPRES_FLAG_COMPLEX_HPP
#define RAAGPRES_FLAG_COMPLEX_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace raagpres {

enum class Provenance { Original, EdgeBarycentre, FaceBarycentre };

/// Finite flag complex of dimension <= 2. Vertices are identified by name;
/// indices follow declaration order. Immutable after construction.
class FlagComplex {
 public:
  FlagComplex(std::vector<std::string> vertices,
              std::vector<std::pair<std::string, std::string>> edges,
              std::vector<std::array<std::string, 3>> triangles = {},
              std::map<std::string, Provenance> provenance = {});

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }

  int vertex_index(const std::string& name) const;  // throws on unknown name
  bool has_vertex(const std::string& name) const;
  const std::string& vertex_name(int v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbours(int v) const { return adj_.at(v); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

  bool has_provenance() const { return !provenance_.empty(); }
  std::optional<Provenance> provenance(int v) const;

  bool connected() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> edges_;        // sorted pairs, lexicographic
  std::vector<std::array<int, 3>> triangles_;     // sorted triples
  std::vector<std::vector<int>> adj_;             // sorted neighbour lists
  std::map<int, Provenance> provenance_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Structural and flag checks; violations are data, not failures.
ValidationReport validate(const FlagComplex& c);

int euler_characteristic(const FlagComplex& c);
/// chi of the ambient right-angled Artin group, via chi(G) + chi(c) = 1.
int euler_characteristic_raag(const FlagComplex& c);

struct HomologyH1 {
  long free_rank = 0;
  std::vector<long long> torsion;  // divisibility chain, entries >= 2
  bool one_acyclic = false;        // connected and H1 = 0
  bool h1_obstructs_simple_connectivity = false;
  bool operator==(const HomologyH1&) const = default;
};

/// H1 of the complex over the integers, by Smith normal form of the
/// simplicial boundary matrices.
HomologyH1 homology_h1(const FlagComplex& c);

/// Vertex ordering with a compatible rooted spanning tree: parent(v)
/// precedes v and is joined to it by a tree edge. Indices refer to the
/// complex the tree was built for.
struct OrderedTree {
  std::vector<int> order;   // vertex indices, order[0] is the root
  std::vector<int> parent;  // by vertex index; -1 for the root
  std::vector<int> pos;     // by vertex index; position in `order`

  bool is_tree_edge(int u, int v) const {
    return parent[u] == v || parent[v] == u;
  }
};

/// Deterministic BFS ordering from a seed (declaration order breaks ties);
/// the tree is the BFS tree.
OrderedTree ordering_and_tree(const FlagComplex& c, const std::string& seed);

/// Validates a user-supplied ordering; the tree, when not supplied, joins
/// each vertex to its most recently ordered neighbour.
OrderedTree ordering_and_tree(
    const FlagComplex& c, const std::vector<std::string>& ordering,
    const std::vector<std::pair<std::string, std::string>>* tree = nullptr);

FlagComplex barycentric_subdivide(const FlagComplex& c);

/// Deletes face-barycentre vertices and everything incident to them.
/// Requires provenance.
FlagComplex sigma_one(const FlagComplex& c);

/// Cones off a simple closed edge loop: adds an apex, one barycentre per
/// new cone edge and per new triangle, and the subdivided triangles. The
/// loop edges themselves are not subdivided.
FlagComplex cone_off(const FlagComplex& c, const std::vector<std::string>& loop,
                     const std::string& apex_name = "apex");

}  // namespace raagpres

#endif
