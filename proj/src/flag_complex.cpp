#include "raagpres/flag_complex.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "raagpres/snf.hpp"

namespace raagpres {

namespace {

std::pair<int, int> norm_edge(int a, int b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::array<int, 3> norm_tri(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

FlagComplex::FlagComplex(std::vector<std::string> vertices,
                         std::vector<std::pair<std::string, std::string>> edges,
                         std::vector<std::array<std::string, 3>> triangles,
                         std::map<std::string, Provenance> provenance)
    : names_(std::move(vertices)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate vertex name: " + names_[i]);
  }
  std::set<std::pair<int, int>> eset;
  for (const auto& [a, b] : edges) {
    int u = vertex_index(a), v = vertex_index(b);
    if (u == v) throw std::invalid_argument("degenerate edge at " + a);
    eset.insert(norm_edge(u, v));
  }
  edges_.assign(eset.begin(), eset.end());
  std::set<std::array<int, 3>> tset;
  for (const auto& t : triangles) {
    int a = vertex_index(t[0]), b = vertex_index(t[1]), c = vertex_index(t[2]);
    if (a == b || b == c || a == c)
      throw std::invalid_argument("degenerate triangle at " + t[0]);
    tset.insert(norm_tri(a, b, c));
  }
  triangles_.assign(tset.begin(), tset.end());
  adj_.resize(names_.size());
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& ns : adj_) std::sort(ns.begin(), ns.end());
  for (const auto& [name, p] : provenance) provenance_[vertex_index(name)] = p;
}

int FlagComplex::vertex_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + name);
  return it->second;
}

bool FlagComplex::has_vertex(const std::string& name) const {
  return index_.count(name) > 0;
}

bool FlagComplex::has_edge(int u, int v) const {
  const auto& ns = adj_.at(u);
  return std::binary_search(ns.begin(), ns.end(), v);
}

std::optional<Provenance> FlagComplex::provenance(int v) const {
  auto it = provenance_.find(v);
  if (it == provenance_.end()) return std::nullopt;
  return it->second;
}

bool FlagComplex::connected() const {
  if (names_.empty()) return true;
  std::vector<char> seen(names_.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
  }
  return count == vertex_count();
}

ValidationReport validate(const FlagComplex& c) {
  ValidationReport rep;
  std::set<std::pair<int, int>> edge_set(c.edges().begin(), c.edges().end());
  std::set<std::array<int, 3>> tri_set(c.triangles().begin(), c.triangles().end());

  for (const auto& t : c.triangles()) {
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}}) {
      if (!c.has_edge(a, b)) {
        rep.violations.push_back("triangle {" + c.vertex_name(t[0]) + "," +
                                 c.vertex_name(t[1]) + "," + c.vertex_name(t[2]) +
                                 "} missing edge {" + c.vertex_name(a) + "," +
                                 c.vertex_name(b) + "}");
      }
    }
  }
  // flag condition: every 3-clique is a triangle
  int n = c.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b : c.neighbours(a)) {
      if (b <= a) continue;
      for (int d : c.neighbours(b)) {
        if (d <= b || !c.has_edge(a, d)) continue;
        if (!tri_set.count({a, b, d}))
          rep.violations.push_back("unfilled 3-clique {" + c.vertex_name(a) + "," +
                                   c.vertex_name(b) + "," + c.vertex_name(d) + "}");
      }
    }
  // dimension cap: no 4-clique in the 1-skeleton
  for (int a = 0; a < n; ++a)
    for (int b : c.neighbours(a)) {
      if (b <= a) continue;
      for (int d : c.neighbours(b)) {
        if (d <= b || !c.has_edge(a, d)) continue;
        for (int e : c.neighbours(d)) {
          if (e <= d || !c.has_edge(a, e) || !c.has_edge(b, e)) continue;
          rep.violations.push_back("4-clique present {" + c.vertex_name(a) + "," +
                                   c.vertex_name(b) + "," + c.vertex_name(d) + "," +
                                   c.vertex_name(e) + "}");
        }
      }
    }
  return rep;
}

int euler_characteristic(const FlagComplex& c) {
  return c.vertex_count() - c.edge_count() + c.triangle_count();
}

int euler_characteristic_raag(const FlagComplex& c) {
  return 1 - euler_characteristic(c);
}

HomologyH1 homology_h1(const FlagComplex& c) {
  int nv = c.vertex_count(), ne = c.edge_count(), nt = c.triangle_count();
  // boundary_1 : C_1 -> C_0, rows = edges
  IntMatrix d1(ne, std::vector<BigInt>(std::max(nv, 1), 0));
  for (int e = 0; e < ne; ++e) {
    auto [u, v] = c.edges()[e];
    d1[e][u] -= 1;
    d1[e][v] += 1;
  }
  std::map<std::pair<int, int>, int> edge_idx;
  for (int e = 0; e < ne; ++e) edge_idx[c.edges()[e]] = e;
  // boundary_2 : C_2 -> C_1, rows = triangles
  IntMatrix d2(nt, std::vector<BigInt>(std::max(ne, 1), 0));
  for (int t = 0; t < nt; ++t) {
    auto [a, b, d] = c.triangles()[t];
    d2[t][edge_idx[{b, d}]] += 1;
    d2[t][edge_idx[{a, d}]] -= 1;
    d2[t][edge_idx[{a, b}]] += 1;
  }
  int rank_d1 = ne ? smith_normal_form(d1).rank : 0;
  HomologyH1 h;
  if (nt) {
    auto snf2 = smith_normal_form(d2);
    h.free_rank = (ne - rank_d1) - snf2.rank;
    for (int i = 0; i < snf2.rank; ++i)
      if (snf2.diagonal[i] > 1)
        h.torsion.push_back(static_cast<long long>(snf2.diagonal[i]));
  } else {
    h.free_rank = ne - rank_d1;
  }
  h.one_acyclic = c.connected() && h.free_rank == 0 && h.torsion.empty();
  h.h1_obstructs_simple_connectivity = h.free_rank > 0 || !h.torsion.empty();
  return h;
}

namespace {

OrderedTree finish_tree(const FlagComplex& c, std::vector<int> order,
                        std::vector<int> parent) {
  OrderedTree t;
  t.order = std::move(order);
  t.parent = std::move(parent);
  t.pos.assign(c.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(t.order.size()); ++i) t.pos[t.order[i]] = i;
  return t;
}

}  // namespace

OrderedTree ordering_and_tree(const FlagComplex& c, const std::string& seed) {
  if (!c.connected()) throw std::invalid_argument("complex is not connected");
  int s = c.vertex_index(seed);
  std::vector<int> order, parent(c.vertex_count(), -1);
  std::vector<char> seen(c.vertex_count(), 0);
  std::queue<int> q;
  q.push(s);
  seen[s] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    order.push_back(u);
    for (int v : c.neighbours(u))
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        q.push(v);
      }
  }
  return finish_tree(c, std::move(order), std::move(parent));
}

OrderedTree ordering_and_tree(
    const FlagComplex& c, const std::vector<std::string>& ordering,
    const std::vector<std::pair<std::string, std::string>>* tree) {
  if (!c.connected()) throw std::invalid_argument("complex is not connected");
  if (static_cast<int>(ordering.size()) != c.vertex_count())
    throw std::invalid_argument("ordering must list every vertex exactly once");
  std::vector<int> order, pos(c.vertex_count(), -1);
  for (const auto& name : ordering) {
    int v = c.vertex_index(name);
    if (pos[v] != -1) throw std::invalid_argument("ordering repeats vertex " + name);
    pos[v] = static_cast<int>(order.size());
    order.push_back(v);
  }
  std::vector<int> parent(c.vertex_count(), -1);
  if (tree) {
    for (const auto& [a, b] : *tree) {
      int u = c.vertex_index(a), v = c.vertex_index(b);
      if (!c.has_edge(u, v))
        throw std::invalid_argument("tree edge {" + a + "," + b + "} is not an edge");
      int child = pos[u] > pos[v] ? u : v;
      int par = child == u ? v : u;
      if (parent[child] != -1)
        throw std::invalid_argument("tree gives vertex " + c.vertex_name(child) +
                                    " two parents");
      parent[child] = par;
    }
    for (int i = 1; i < static_cast<int>(order.size()); ++i)
      if (parent[order[i]] == -1)
        throw std::invalid_argument("tree does not span: vertex " +
                                    c.vertex_name(order[i]) + " unreached");
  } else {
    for (int i = 1; i < static_cast<int>(order.size()); ++i) {
      int v = order[i], best = -1;
      for (int u : c.neighbours(v))
        if (pos[u] < i && (best == -1 || pos[u] > pos[best])) best = u;
      if (best == -1)
        throw std::invalid_argument("vertex " + c.vertex_name(v) +
                                    " is not adjacent to any predecessor");
      parent[v] = best;
    }
  }
  // predecessor condition holds for every vertex, tree edges included
  for (int i = 1; i < static_cast<int>(order.size()); ++i) {
    int v = order[i];
    if (pos[parent[v]] >= i)
      throw std::invalid_argument("parent of " + c.vertex_name(v) +
                                  " does not precede it");
  }
  return finish_tree(c, std::move(order), std::move(parent));
}

namespace {

std::string join_name(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "|" + parts[i];
  return out;
}

}  // namespace

FlagComplex barycentric_subdivide(const FlagComplex& c) {
  std::vector<std::string> vertices;
  std::map<std::string, Provenance> prov;
  for (const auto& n : c.vertex_names()) {
    vertices.push_back(n);
    prov[n] = Provenance::Original;
  }
  std::map<std::pair<int, int>, std::string> emid;
  for (const auto& [u, v] : c.edges()) {
    std::string m = join_name({c.vertex_name(u), c.vertex_name(v)});
    emid[{u, v}] = m;
    vertices.push_back(m);
    prov[m] = Provenance::EdgeBarycentre;
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : c.edges()) {
    edges.emplace_back(c.vertex_name(u), emid[{u, v}]);
    edges.emplace_back(c.vertex_name(v), emid[{u, v}]);
  }
  std::vector<std::array<std::string, 3>> triangles;
  for (const auto& t : c.triangles()) {
    std::string b = join_name(
        {c.vertex_name(t[0]), c.vertex_name(t[1]), c.vertex_name(t[2])});
    vertices.push_back(b);
    prov[b] = Provenance::FaceBarycentre;
    auto corner = [&](int i) { return c.vertex_name(t[i]); };
    auto mid = [&](int i, int j) {
      return emid[norm_edge(t[i], t[j])];
    };
    // hexagon around the barycentre
    std::vector<std::string> cycle = {corner(0), mid(0, 1), corner(1),
                                      mid(1, 2), corner(2), mid(0, 2)};
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      edges.emplace_back(b, cycle[i]);
      triangles.push_back({b, cycle[i], cycle[(i + 1) % cycle.size()]});
    }
  }
  return FlagComplex(vertices, edges, triangles, prov);
}

FlagComplex sigma_one(const FlagComplex& c) {
  if (!c.has_provenance())
    throw std::invalid_argument("sigma_one needs provenance data");
  std::vector<std::string> vertices;
  std::map<std::string, Provenance> prov;
  std::vector<char> keep(c.vertex_count(), 0);
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (c.provenance(v) == Provenance::FaceBarycentre) continue;
    keep[v] = 1;
    vertices.push_back(c.vertex_name(v));
    if (auto p = c.provenance(v)) prov[c.vertex_name(v)] = *p;
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : c.edges())
    if (keep[u] && keep[v]) edges.emplace_back(c.vertex_name(u), c.vertex_name(v));
  std::vector<std::array<std::string, 3>> triangles;
  for (const auto& t : c.triangles())
    if (keep[t[0]] && keep[t[1]] && keep[t[2]])
      triangles.push_back({c.vertex_name(t[0]), c.vertex_name(t[1]), c.vertex_name(t[2])});
  return FlagComplex(vertices, edges, triangles, prov);
}

FlagComplex cone_off(const FlagComplex& c, const std::vector<std::string>& loop,
                     const std::string& apex_name) {
  if (loop.size() < 3) throw std::invalid_argument("loop too short");
  std::vector<int> lv;
  std::set<int> seen;
  for (const auto& name : loop) {
    int v = c.vertex_index(name);
    if (!seen.insert(v).second)
      throw std::invalid_argument("loop reuses vertex " + name);
    lv.push_back(v);
  }
  std::size_t L = lv.size();
  for (std::size_t i = 0; i < L; ++i)
    if (!c.has_edge(lv[i], lv[(i + 1) % L]))
      throw std::invalid_argument("loop step {" + loop[i] + "," +
                                  loop[(i + 1) % L] + "} is not an edge");
  if (c.has_vertex(apex_name))
    throw std::invalid_argument("apex name collides: " + apex_name);

  std::vector<std::string> vertices = c.vertex_names();
  std::map<std::string, Provenance> prov;
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (auto p = c.provenance(v)) prov[c.vertex_name(v)] = *p;
    else prov[c.vertex_name(v)] = Provenance::Original;
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : c.edges())
    edges.emplace_back(c.vertex_name(u), c.vertex_name(v));
  std::vector<std::array<std::string, 3>> triangles;
  for (const auto& t : c.triangles())
    triangles.push_back({c.vertex_name(t[0]), c.vertex_name(t[1]), c.vertex_name(t[2])});

  vertices.push_back(apex_name);
  prov[apex_name] = Provenance::Original;
  std::vector<std::string> spoke(L);
  for (std::size_t i = 0; i < L; ++i) {
    spoke[i] = apex_name + "|" + loop[i];
    if (c.has_vertex(spoke[i]))
      throw std::invalid_argument("cone vertex name collides: " + spoke[i]);
    vertices.push_back(spoke[i]);
    prov[spoke[i]] = Provenance::EdgeBarycentre;
    edges.emplace_back(apex_name, spoke[i]);
    edges.emplace_back(spoke[i], loop[i]);
  }
  for (std::size_t i = 0; i < L; ++i) {
    std::size_t j = (i + 1) % L;
    std::string b = apex_name + "|" + loop[i] + "|" + loop[j];
    vertices.push_back(b);
    prov[b] = Provenance::FaceBarycentre;
    std::vector<std::string> cycle = {apex_name, spoke[i], loop[i], loop[j], spoke[j]};
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      edges.emplace_back(b, cycle[k]);
      triangles.push_back({b, cycle[k], cycle[(k + 1) % cycle.size()]});
    }
  }
  return FlagComplex(vertices, edges, triangles, prov);
}

}  // namespace raagpres
