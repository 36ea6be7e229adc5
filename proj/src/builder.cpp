#include "raagpres/builder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace raagpres {

SubgroupWord gamma_word(const BuildContext& ctx, int k) {
  int alpha = ctx.parent[k];
  if (alpha < 0) throw std::invalid_argument("gamma_word: vertex has no parent");
  return sub_concat({theta(ctx, alpha, ctx.root(), ctx.n), {{lambda_symbol(), 1}}});
}

std::vector<SubgroupWord> family_words(const BuildContext& ctx, int k, int beta) {
  int alpha = ctx.parent[k];
  if (alpha < 0) throw std::invalid_argument("family_words: vertex has no parent");
  auto betas = ctx.non_tree_predecessors(k);
  if (std::find(betas.begin(), betas.end(), beta) == betas.end())
    throw std::invalid_argument("family_words: not a non-tree predecessor");
  std::vector<SubgroupWord> ws;
  for (int j = 0; j < ctx.n; ++j) {
    SubgroupWord w = theta(ctx, alpha, beta, j + 1);
    for (const auto& prev : ws) w = sub_concat({w, sub_inverse(prev)});
    ws.push_back(sub_free_reduce(w));
  }
  return ws;
}

Presentation build_gamma_presentation(const BuildContext& ctx) {
  if (ctx.sigma1->triangle_count() > 0)
    throw std::invalid_argument(
        "complex has 2-simplices; use the overlay pipeline instead");
  if (!ctx.sigma1->connected())
    throw std::invalid_argument("complex is not connected");

  Presentation p;
  p.add_generator({lambda_symbol(), GeneratorRole::Lambda,
                   ctx.ambient->vertex_name(ctx.root())});
  for (std::size_t i = 1; i < ctx.order.size(); ++i) {
    int k = ctx.order[i];
    p.add_generator({stable_symbol(ctx.ambient->vertex_name(k)),
                     GeneratorRole::TreeStable, ctx.ambient->vertex_name(k)});
  }
  for (std::size_t i = 1; i < ctx.order.size(); ++i) {
    int k = ctx.order[i];
    const std::string k_name = ctx.ambient->vertex_name(k);
    const SubgroupWord tk{{stable_symbol(k_name), 1}};
    SubgroupWord gk = gamma_word(ctx, k);
    p.add_relator({commutator(tk, gk),
                   {RelationTag::Kind::TreeCommutator, k_name, "", "", -1}});
    for (int beta : ctx.non_tree_predecessors(k)) {
      const std::string b_name = ctx.ambient->vertex_name(beta);
      auto ws = family_words(ctx, k, beta);
      // t_k w_0 t_k^-1 = gamma_k^-1 w_{n-1} gamma_k
      SubgroupWord rhs0 = sub_concat({sub_inverse(gk), ws[ctx.n - 1], gk});
      p.add_relator({sub_concat({tk, ws[0], sub_inverse(tk), sub_inverse(rhs0)}),
                     {RelationTag::Kind::Family, k_name, b_name, "", 0}});
      for (int j = 1; j < ctx.n; ++j)
        p.add_relator(
            {sub_concat({tk, ws[j], sub_inverse(tk), sub_inverse(ws[j - 1])}),
             {RelationTag::Kind::Family, k_name, b_name, "", j}});
    }
  }
  return p;
}

namespace {

std::string cycle_label(const FlagComplex& c, const std::vector<int>& cyc) {
  std::string out;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (i) out += ">";
    out += c.vertex_name(cyc[i]);
  }
  return out;
}

// Directed closed edge paths up to rotation, length 2..max_len. Backtracking
// is allowed; each rotation class is emitted once, anchored at its least
// starting vertex.
std::vector<std::vector<int>> directed_cycles(const FlagComplex& c, int max_len) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto canonical = [](const std::vector<int>& cyc) {
    std::vector<int> best = cyc;
    std::vector<int> rot = cyc;
    for (std::size_t i = 1; i < cyc.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    return best;
  };
  std::function<void(int, int)> walk = [&](int start, int v) {
    if (static_cast<int>(path.size()) >= 2 && v == start) {
      auto canon = canonical(path);
      if (seen.insert(canon).second) out.push_back(canon);
    }
    if (static_cast<int>(path.size()) == max_len) return;
    for (int u : c.neighbours(v)) {
      if (u < start) continue;  // anchor cycles at their least vertex
      path.push_back(u);
      walk(start, u);
      path.pop_back();
    }
  };
  for (int s = 0; s < c.vertex_count(); ++s) {
    path = {s};
    walk(s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DicksLearyResult dicks_leary(const FlagComplex& c, int n, int max_cycle_len) {
  if (max_cycle_len < 2)
    throw std::invalid_argument("max_cycle_len must be at least 2");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  DicksLearyResult res;
  for (const auto& [u, v] : c.edges()) {
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      std::string sym = "e_" + c.vertex_name(a) + ">" + c.vertex_name(b);
      res.presentation.add_generator(
          {sym, GeneratorRole::DirectedEdge,
           c.vertex_name(a) + ">" + c.vertex_name(b)});
      res.edge_of_symbol[sym] = {a, b};
    }
  }
  for (const auto& cyc : directed_cycles(c, max_cycle_len)) {
    for (int m = 1; m <= n; ++m) {
      SubgroupWord w;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        std::string sym = "e_" + c.vertex_name(a) + ">" + c.vertex_name(b);
        for (int r = 0; r < m; ++r) w.push_back({sym, 1});
      }
      res.presentation.add_relator(
          {w, {RelationTag::Kind::DicksLeary, cycle_label(c, cyc), "", "", m}});
    }
  }
  return res;
}

RaagWord dicks_leary_expand(const DicksLearyResult& dl, const SubgroupWord& w) {
  RaagWord out;
  for (const auto& l : w) {
    auto it = dl.edge_of_symbol.find(l.symbol);
    if (it == dl.edge_of_symbol.end())
      throw std::invalid_argument("unknown directed edge symbol: " + l.symbol);
    RaagWord piece{{it->second.first, 1}, {it->second.second, -1}};
    if (l.sign < 0) piece = inverse(piece);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

}  // namespace raagpres
