#include "raagpres/simplifier.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace raagpres {

namespace {

std::pair<int, int> pos_edge(const BuildContext& ctx, int u, int v) {
  // (top, bottom) by build position
  return ctx.pos[u] > ctx.pos[v] ? std::make_pair(u, v) : std::make_pair(v, u);
}

std::string edge_label(const BuildContext& ctx, std::pair<int, int> e) {
  return "{" + ctx.ambient->vertex_name(e.first) + "," +
         ctx.ambient->vertex_name(e.second) + "}";
}

// Link of the barycentre inside sigma1, walked into cyclic order.
std::vector<int> boundary_cycle(const FlagComplex& ambient, const BuildContext& ctx,
                                int b) {
  std::vector<int> link;
  for (int v : ambient.neighbours(b))
    if (ctx.in_sigma1(v)) link.push_back(v);
  if (link.size() < 3)
    throw std::invalid_argument("barycentre link too small for an overlay");
  std::set<int> in_link(link.begin(), link.end());
  std::vector<int> cycle{link.front()};
  std::set<int> used{link.front()};
  while (cycle.size() < link.size()) {
    int cur = cycle.back();
    int next = -1;
    for (int v : ambient.neighbours(cur))
      if (in_link.count(v) && !used.count(v)) {
        next = v;
        break;
      }
    if (next == -1) throw std::invalid_argument("barycentre link is not a cycle");
    cycle.push_back(next);
    used.insert(next);
  }
  if (!ambient.has_edge(cycle.back(), cycle.front()))
    throw std::invalid_argument("barycentre link is not a cycle");
  return cycle;
}

SubgroupWord vertical_word(const BuildContext& ctx, int rho) {
  if (rho == ctx.root()) return {{lambda_symbol(), 1}};
  return sub_concat({theta(ctx, rho, ctx.root(), ctx.n), {{lambda_symbol(), 1}}});
}

std::string vertical_symbol(const BuildContext& ctx, int rho) {
  if (rho == ctx.root()) return lambda_symbol();
  return "gam_" + ctx.ambient->vertex_name(rho);
}

SubgroupWord base_generator_word(const std::string& symbol, const Overlay& ov,
                                 const BuildContext& ctx) {
  if (symbol.rfind("gam_", 0) == 0)
    return vertical_word(ctx, ctx.ambient->vertex_index(symbol.substr(4)));
  if (symbol == lambda_symbol()) return {{symbol, 1}};
  (void)ov;
  return {{symbol, 1}};
}

// Path from `frm` to `to` through the kept boundary edges, spelled in base
// generators so each step expands to a_next a_current^-1.
SubgroupWord kept_path_word(const Overlay& ov, const BuildContext& ctx, int frm,
                            int to) {
  std::map<int, std::vector<int>> adj;
  std::set<std::pair<int, int>> nontree;
  for (auto [t, b] : ov.kept_tree_edges) {
    adj[t].push_back(b);
    adj[b].push_back(t);
  }
  for (auto [t, b] : ov.kept_nontree_edges) {
    adj[t].push_back(b);
    adj[b].push_back(t);
    nontree.insert({t, b});
  }
  std::map<int, int> prev;
  prev[frm] = frm;
  std::queue<int> q;
  q.push(frm);
  while (!q.empty() && !prev.count(to)) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (!prev.count(y)) {
        prev[y] = x;
        q.push(y);
      }
  }
  if (!prev.count(to))
    throw std::logic_error("kept boundary edges do not connect the cycle");
  std::vector<int> path{to};
  while (path.back() != frm) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  SubgroupWord w;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    int c = path[i], d = path[i + 1];
    if (ctx.parent[d] == c) {
      w.push_back({stable_symbol(ctx.ambient->vertex_name(d)), 1});
    } else if (ctx.parent[c] == d) {
      w.push_back({stable_symbol(ctx.ambient->vertex_name(c)), -1});
    } else {
      auto e = pos_edge(ctx, c, d);
      std::string sym = theta_symbol(ctx.ambient->vertex_name(e.first),
                                     ctx.ambient->vertex_name(e.second));
      w.push_back({sym, d == e.first ? 1 : -1});
    }
  }
  return w;
}

int vertical_anchor(const Overlay& ov, const BuildContext& ctx, int rho) {
  std::size_t L = ov.cycle.size();
  std::size_t at = std::find(ov.cycle.begin(), ov.cycle.end(), rho) - ov.cycle.begin();
  int nb_prev = ov.cycle[(at + L - 1) % L];
  int nb_next = ov.cycle[(at + 1) % L];
  auto is_kept_nontree = [&](int u) {
    auto e = pos_edge(ctx, u, rho);
    return std::find(ov.kept_nontree_edges.begin(), ov.kept_nontree_edges.end(), e) !=
           ov.kept_nontree_edges.end();
  };
  for (int u : {nb_prev, nb_next})
    if (is_kept_nontree(u)) return u;
  for (int u : {nb_prev, nb_next})
    if (pos_edge(ctx, u, rho) == ov.dropped) return u;
  // both boundary edges at rho are tree edges: stop one step short of rho
  SubgroupWord path = kept_path_word(ov, ctx, ov.attach, rho);
  if (path.empty()) return rho;  // attach == rho
  // second-to-last vertex of the walk: recompute by trimming one step
  // (walk the path again and keep the penultimate vertex)
  for (int u : {nb_prev, nb_next}) (void)u;
  // penultimate = neighbour of rho on the kept path; both candidates are
  // cycle neighbours, pick the one the kept path uses
  for (int u : {nb_prev, nb_next}) {
    auto e = pos_edge(ctx, u, rho);
    bool kept_tree = std::find(ov.kept_tree_edges.begin(), ov.kept_tree_edges.end(),
                               e) != ov.kept_tree_edges.end();
    if (kept_tree) return u;
  }
  return rho;
}

}  // namespace

const Overlay* SimplifyState::find(const std::string& face) const {
  for (const auto& ov : overlays)
    if (ov.face == face) return &ov;
  return nullptr;
}

std::vector<std::string> overlay_faces(const FlagComplex& ambient) {
  std::vector<std::string> out;
  for (int v = 0; v < ambient.vertex_count(); ++v)
    if (ambient.provenance(v) == Provenance::FaceBarycentre)
      out.push_back(ambient.vertex_name(v));
  return out;
}

SubgroupWord tau_action(const std::string& base_symbol, const Overlay& ov,
                        const BuildContext& ctx) {
  int anchor;
  if (base_symbol == lambda_symbol() || base_symbol.rfind("gam_", 0) == 0) {
    int rho = base_symbol == lambda_symbol()
                  ? ctx.root()
                  : ctx.ambient->vertex_index(base_symbol.substr(4));
    anchor = vertical_anchor(ov, ctx, rho);
  } else if (base_symbol.rfind("th_", 0) == 0) {
    bool found = false;
    anchor = -1;
    for (auto [t, b] : ov.kept_nontree_edges) {
      if (theta_symbol(ctx.ambient->vertex_name(t), ctx.ambient->vertex_name(b)) ==
          base_symbol) {
        anchor = t;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown overlay theta: " + base_symbol);
  } else {
    anchor = ctx.ambient->vertex_index(base_symbol.substr(1));  // t<name>
  }
  SubgroupWord v = kept_path_word(ov, ctx, ov.attach, anchor);
  SubgroupWord g = base_generator_word(base_symbol, ov, ctx);
  return sub_free_reduce(sub_concat({v, g, sub_inverse(v)}));
}

Presentation add_simplex_overlay(const Presentation& p, const std::string& face,
                                 BuildContext& ctx, SimplifyState& state) {
  if (state.find(face))
    throw std::invalid_argument("simplex already overlaid: " + face);
  const FlagComplex& amb = *ctx.ambient;
  int b = amb.vertex_index(face);
  if (amb.provenance(b) != Provenance::FaceBarycentre)
    throw std::invalid_argument(face + " is not a face barycentre");

  Overlay ov;
  ov.face = face;
  ov.barycentre = b;
  ov.cycle = boundary_cycle(amb, ctx, b);

  std::vector<std::pair<int, int>> nontree;
  std::size_t L = ov.cycle.size();
  for (std::size_t i = 0; i < L; ++i) {
    int u = ov.cycle[i], v = ov.cycle[(i + 1) % L];
    auto e = pos_edge(ctx, u, v);
    if (ctx.parent[e.first] == e.second)
      ov.kept_tree_edges.push_back(e);
    else
      nontree.push_back(e);
  }
  if (nontree.empty())
    throw std::logic_error("boundary cycle lies inside the tree");
  std::sort(nontree.begin(), nontree.end(),
            [&](auto a, auto c) { return ctx.pos[a.first] < ctx.pos[c.first]; });
  ov.dropped = nontree.back();
  ov.kept_nontree_edges.assign(nontree.begin(), nontree.end() - 1);

  ov.attach = ctx.parent[ov.dropped.first];
  if (std::find(ov.cycle.begin(), ov.cycle.end(), ov.attach) == ov.cycle.end()) {
    // strand vertex off the boundary: fall back to the lowest boundary vertex
    ov.attach = *std::min_element(ov.cycle.begin(), ov.cycle.end(),
                                  [&](int a, int c) { return ctx.pos[a] < ctx.pos[c]; });
  }
  ov.tau = tau_symbol(face);

  Presentation q = p;
  for (auto [t, bo] : ov.kept_nontree_edges) {
    std::string sym =
        theta_symbol(amb.vertex_name(t), amb.vertex_name(bo));
    if (!q.has_generator(sym)) {
      SubgroupWord def = theta(ctx, t, bo, 1);
      q = tietze_define(q, sym, def);
      ctx.tietze[sym] = def;
    }
  }

  // base generators: boundary stable letters by descending position, then
  // the theta loops, then the vertical
  std::vector<std::pair<int, int>> tree_sorted = ov.kept_tree_edges;
  std::sort(tree_sorted.begin(), tree_sorted.end(),
            [&](auto a, auto c) { return ctx.pos[a.first] > ctx.pos[c.first]; });
  for (auto [t, bo] : tree_sorted) {
    (void)bo;
    ov.base_generators.push_back(stable_symbol(amb.vertex_name(t)));
  }
  for (auto [t, bo] : ov.kept_nontree_edges)
    ov.base_generators.push_back(
        theta_symbol(amb.vertex_name(t), amb.vertex_name(bo)));
  int rho = *std::min_element(ov.cycle.begin(), ov.cycle.end(),
                              [&](int a, int c) { return ctx.pos[a] < ctx.pos[c]; });
  ov.base_generators.push_back(vertical_symbol(ctx, rho));

  ctx.taus[ov.tau] = {b, ov.attach};
  q.add_generator({ov.tau, GeneratorRole::SimplexStable, face});

  const SubgroupWord tau{{ov.tau, 1}};
  for (const auto& sym : ov.base_generators) {
    SubgroupWord g = base_generator_word(sym, ov, ctx);
    SubgroupWord act = tau_action(sym, ov, ctx);
    Relator r;
    r.word = sub_free_reduce(
        sub_concat({tau, g, sub_inverse(tau), sub_inverse(act)}));
    r.tag = {RelationTag::Kind::TauAction, face, sym, "", -1};
    if (!trivial_in_group(expand(r.word, ctx), amb))
      throw std::logic_error("overlay action relator is not trivial: " +
                             r.tag.to_string());
    q.add_relator(std::move(r));
  }

  state.overlays.push_back(std::move(ov));
  return q;
}

std::vector<std::pair<std::string, std::string>> remaining_families(
    const Presentation& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& r : p.relators()) {
    if (r.tag.kind != RelationTag::Kind::Family) continue;
    std::pair<std::string, std::string> e{r.tag.a, r.tag.b};
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

namespace {

std::set<std::pair<int, int>> present_family_edges(const Presentation& p,
                                                   const BuildContext& ctx) {
  std::set<std::pair<int, int>> out;
  for (const auto& r : p.relators())
    if (r.tag.kind == RelationTag::Kind::Family)
      out.insert({ctx.ambient->vertex_index(r.tag.a),
                  ctx.ambient->vertex_index(r.tag.b)});
  return out;
}

std::vector<std::pair<int, int>> boundary_nontree_edges(const Overlay& ov,
                                                        const BuildContext& ctx) {
  std::vector<std::pair<int, int>> out = ov.kept_nontree_edges;
  out.push_back(ov.dropped);
  (void)ctx;
  return out;
}

}  // namespace

std::vector<EliminationCandidate> eligible_eliminations(const Presentation& p,
                                                        const BuildContext& ctx,
                                                        const SimplifyState& state) {
  auto present = present_family_edges(p, ctx);
  std::vector<EliminationCandidate> out;
  for (const auto& ov : state.overlays) {
    if (state.used_faces.count(ov.face)) continue;
    auto nontree = boundary_nontree_edges(ov, ctx);
    for (const auto& e : nontree) {
      if (!present.count(e) || state.kept_families.count(e)) continue;
      if (std::find(ov.cycle.begin(), ov.cycle.end(), ctx.parent[e.first]) ==
          ov.cycle.end())
        continue;  // strand vertex must lie on the boundary
      bool ok = true;
      std::vector<std::pair<int, int>> helpers;
      for (const auto& f : nontree) {
        if (f == e) continue;
        helpers.push_back(f);
        if (!state.eliminated.count(f) && !state.kept_families.count(f)) ok = false;
      }
      if (ok) out.push_back({ov.face, e, helpers});
    }
  }
  return out;
}

Presentation eliminate_family(const Presentation& p, const std::string& face,
                              std::pair<int, int> edge, const BuildContext& ctx,
                              SimplifyState& state) {
  auto cands = eligible_eliminations(p, ctx, state);
  const EliminationCandidate* hit = nullptr;
  for (const auto& cand : cands)
    if (cand.face == face && cand.edge == edge) hit = &cand;
  if (!hit)
    throw std::invalid_argument("elimination not eligible: " + face + " " +
                                edge_label(ctx, edge));
  const Overlay& ov = *state.find(face);
  int m = edge.first, beta = edge.second;
  int alpha = ctx.parent[m];
  SubgroupWord w0 = family_words(ctx, m, beta)[0];
  SubgroupWord carrier{{stable_symbol(ctx.ambient->vertex_name(m)), -1},
                       {ov.tau, 1}};
  if (ov.attach != alpha)
    carrier = sub_concat({carrier, theta(ctx, ov.attach, alpha, 1)});
  Relator r;
  r.word = sub_free_reduce(commutator(carrier, w0));
  r.tag = {RelationTag::Kind::Elimination, face,
           ctx.ambient->vertex_name(edge.first),
           ctx.ambient->vertex_name(edge.second), -1};
  if (!trivial_in_group(expand(r.word, ctx), *ctx.ambient))
    throw std::logic_error("elimination relator is not trivial: " +
                           r.tag.to_string());

  Presentation q = p;
  const std::string top_name = ctx.ambient->vertex_name(edge.first);
  const std::string bot_name = ctx.ambient->vertex_name(edge.second);
  q.remove_relators([&](const Relator& rel) {
    return rel.tag.kind == RelationTag::Kind::Family && rel.tag.a == top_name &&
           rel.tag.b == bot_name;
  });
  q.add_relator(std::move(r));
  state.eliminated.insert(edge);
  state.used_faces.insert(face);
  return q;
}

std::pair<Presentation, std::vector<EliminationStep>> simplify(
    Presentation p, const BuildContext& ctx, SimplifyState& state,
    const SimplifyOptions& opts) {
  std::vector<EliminationStep> log;
  for (const auto& [a, b] : opts.keep_edges)
    state.kept_families.insert(
        pos_edge(ctx, ctx.ambient->vertex_index(a), ctx.ambient->vertex_index(b)));

  auto record = [&](const std::string& face, std::pair<int, int> e) {
    EliminationStep step;
    step.step = static_cast<int>(log.size()) + 1;
    step.face = face;
    step.removed_edge = {ctx.ambient->vertex_name(e.first),
                         ctx.ambient->vertex_name(e.second)};
    const Overlay& ov = *state.find(face);
    for (const auto& f : boundary_nontree_edges(ov, ctx))
      if (f != e && state.kept_families.count(f))
        step.kept_edge = {ctx.ambient->vertex_name(f.first),
                          ctx.ambient->vertex_name(f.second)};
    for (const auto& r : p.relators())
      if (r.tag.kind == RelationTag::Kind::Elimination && r.tag.a == face)
        step.added_relator = word_to_string(r.word);
    log.push_back(step);
  };

  if (!opts.face_order.empty()) {
    for (const auto& face : opts.face_order) {
      auto cands = eligible_eliminations(p, ctx, state);
      const EliminationCandidate* best = nullptr;
      for (const auto& cand : cands)
        if (cand.face == face &&
            (!best || ctx.pos[cand.edge.first] > ctx.pos[best->edge.first]))
          best = &cand;
      if (!best)
        throw std::invalid_argument("override face has no eligible family: " + face);
      auto edge = best->edge;
      p = eliminate_family(p, face, edge, ctx, state);
      record(face, edge);
    }
    return {std::move(p), std::move(log)};
  }

  for (;;) {
    bool progress = false;
    for (const auto& ov : state.overlays) {
      auto cands = eligible_eliminations(p, ctx, state);
      const EliminationCandidate* best = nullptr;
      for (const auto& cand : cands)
        if (cand.face == ov.face &&
            (!best || ctx.pos[cand.edge.first] > ctx.pos[best->edge.first]))
          best = &cand;
      if (!best) continue;
      auto edge = best->edge;
      p = eliminate_family(p, ov.face, edge, ctx, state);
      record(ov.face, edge);
      progress = true;
    }
    if (progress) continue;
    // stuck: pin the lowest-topped blocker of the first blocked face
    auto present = present_family_edges(p, ctx);
    bool pinned = false;
    for (const auto& ov : state.overlays) {
      if (state.used_faces.count(ov.face)) continue;
      std::vector<std::pair<int, int>> blockers;
      for (const auto& f : boundary_nontree_edges(ov, ctx))
        if (present.count(f) && !state.kept_families.count(f)) blockers.push_back(f);
      if (blockers.size() >= 2) {
        auto pick = *std::min_element(
            blockers.begin(), blockers.end(),
            [&](auto a, auto b) { return ctx.pos[a.first] < ctx.pos[b.first]; });
        state.kept_families.insert(pick);
        pinned = true;
        break;
      }
    }
    if (!pinned) break;
  }
  return {std::move(p), std::move(log)};
}

PipelineRun overlay_simplify_pipeline(const FlagComplex& input, int n,
                                      const SimplifyOptions& opts,
                                      const OrderingSpec* ordering) {
  PipelineRun run;
  bool has_face_prov = false;
  for (int v = 0; v < input.vertex_count() && !has_face_prov; ++v)
    if (input.provenance(v) == Provenance::FaceBarycentre) has_face_prov = true;
  if (has_face_prov) {
    run.ambient = std::make_shared<FlagComplex>(input);
  } else if (input.triangle_count() > 0) {
    run.ambient = std::make_shared<FlagComplex>(barycentric_subdivide(input));
  } else {
    throw std::invalid_argument("no 2-simplices to overlay");
  }
  run.sigma1 = std::make_shared<FlagComplex>(sigma_one(*run.ambient));

  OrderedTree tree;
  if (ordering) {
    std::vector<std::string> names;
    for (const auto& name : ordering->ordering)
      if (run.sigma1->has_vertex(name)) names.push_back(name);
    std::vector<std::pair<std::string, std::string>> tree_edges;
    for (const auto& [a, b] : ordering->tree)
      if (run.sigma1->has_vertex(a) && run.sigma1->has_vertex(b))
        tree_edges.emplace_back(a, b);
    tree = ordering_and_tree(*run.sigma1, names,
                             tree_edges.empty() ? nullptr : &tree_edges);
  } else {
    tree = ordering_and_tree(*run.sigma1, run.sigma1->vertex_name(0));
  }
  run.ctx = make_build_context(*run.sigma1, *run.ambient, tree, n);
  run.presentation = build_gamma_presentation(run.ctx);
  for (const auto& face : overlay_faces(*run.ambient))
    run.presentation =
        add_simplex_overlay(run.presentation, face, run.ctx, run.state);
  auto [q, log] = simplify(std::move(run.presentation), run.ctx, run.state, opts);
  run.presentation = std::move(q);
  run.log = std::move(log);
  return run;
}

PipelineRun cone_off_pipeline(const FlagComplex& c,
                              const std::vector<std::string>& loop, int n) {
  // the loop must pick up at least one family in the input's default build
  auto base_tree = ordering_and_tree(c, c.vertex_name(0));
  bool has_nontree = false;
  for (std::size_t i = 0; i < loop.size() && !has_nontree; ++i) {
    int u = c.vertex_index(loop[i]);
    int v = c.vertex_index(loop[(i + 1) % loop.size()]);
    if (!base_tree.is_tree_edge(u, v)) has_nontree = true;
  }
  if (!has_nontree)
    throw std::invalid_argument("loop lies entirely inside the tree");

  FlagComplex coned = cone_off(c, loop);
  FlagComplex s1 = sigma_one(coned);

  // apex-rooted ordering: apex, spoke barycentres, loop vertices, then BFS
  OrderingSpec spec;
  spec.ordering.push_back("apex");
  for (const auto& v : loop) spec.ordering.push_back("apex|" + v);
  for (const auto& v : loop) spec.ordering.push_back(v);
  for (const auto& v : loop) {
    spec.tree.emplace_back("apex", "apex|" + v);
    spec.tree.emplace_back("apex|" + v, v);
  }
  std::set<std::string> placed(spec.ordering.begin(), spec.ordering.end());
  std::queue<int> q;
  for (const auto& name : spec.ordering) q.push(s1.vertex_index(name));
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : s1.neighbours(u)) {
      const std::string& name = s1.vertex_name(v);
      if (placed.count(name)) continue;
      placed.insert(name);
      spec.ordering.push_back(name);
      spec.tree.emplace_back(s1.vertex_name(u), name);
      q.push(v);
    }
  }
  return overlay_simplify_pipeline(coned, n, {}, &spec);
}

}  // namespace raagpres
