#include "raagpres/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace raagpres {

RaagWord inverse(const RaagWord& w) {
  RaagWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->vertex, -it->sign});
  return out;
}

RaagWord concat(const RaagWord& a, const RaagWord& b) {
  RaagWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

long exponent_sum(const RaagWord& w) {
  long s = 0;
  for (const auto& l : w) s += l.sign;
  return s;
}

std::vector<long> HeightedWord::heights() const {
  std::vector<long> hs{start_height};
  long h = start_height;
  for (const auto& l : word) hs.push_back(h += l.sign);
  return hs;
}

namespace {

// Cancel x ... x^-1 pairs whenever every letter in between commutes with x.
RaagWord shuffle_reduce(const RaagWord& w, const FlagComplex& c) {
  std::vector<RaagLetter> v(w.begin(), w.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (v[j].vertex == v[i].vertex) {
          if (v[j].sign == -v[i].sign) {
            v.erase(v.begin() + j);
            v.erase(v.begin() + i);
            changed = true;
          }
          break;  // same generator blocks further travel either way
        }
        if (!c.has_edge(v[i].vertex, v[j].vertex)) break;
      }
    }
  }
  return v;
}

}  // namespace

RaagWord normal_form(const RaagWord& w, const FlagComplex& c) {
  RaagWord r = shuffle_reduce(w, c);
  // lexicographically least linear extension of the dependence order
  std::size_t n = r.size();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r[i].vertex == r[j].vertex || !c.has_edge(r[i].vertex, r[j].vertex)) {
        succ[i].push_back(static_cast<int>(j));
        ++indeg[j];
      }
  std::vector<int> avail;
  for (std::size_t i = 0; i < n; ++i)
    if (!indeg[i]) avail.push_back(static_cast<int>(i));
  RaagWord out;
  out.reserve(n);
  while (!avail.empty()) {
    auto best = std::min_element(avail.begin(), avail.end(), [&](int a, int b) {
      if (r[a].vertex != r[b].vertex) return r[a].vertex < r[b].vertex;
      return a < b;
    });
    int i = *best;
    avail.erase(best);
    out.push_back(r[i]);
    for (int j : succ[i])
      if (--indeg[j] == 0) avail.push_back(j);
  }
  return out;
}

bool trivial_in_group(const RaagWord& w, const FlagComplex& c) {
  return shuffle_reduce(w, c).empty();
}

bool equal_in_group(const RaagWord& a, const RaagWord& b, const FlagComplex& c) {
  return trivial_in_group(concat(a, inverse(b)), c);
}

std::string raag_word_to_string(const RaagWord& w, const FlagComplex& c) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    std::size_t j = i;
    while (j + 1 < w.size() && w[j + 1] == w[i]) ++j;
    int e = w[i].sign * static_cast<int>(j - i + 1);
    os << c.vertex_name(w[i].vertex);
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

SubgroupWord sub_inverse(const SubgroupWord& w) {
  SubgroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->symbol, -it->sign});
  return out;
}

SubgroupWord sub_concat(std::initializer_list<SubgroupWord> parts) {
  SubgroupWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

SubgroupWord sub_free_reduce(const SubgroupWord& w) {
  SubgroupWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().symbol == l.symbol && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

SubgroupWord sub_pow(const SubgroupWord& w, int e) {
  SubgroupWord out;
  SubgroupWord base = e >= 0 ? w : sub_inverse(w);
  for (int i = 0; i < std::abs(e); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

SubgroupWord commutator(const SubgroupWord& a, const SubgroupWord& b) {
  return sub_concat({a, b, sub_inverse(a), sub_inverse(b)});
}

std::string word_to_string(const SubgroupWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    std::size_t j = i;
    while (j + 1 < w.size() && w[j + 1] == w[i]) ++j;
    int e = w[i].sign * static_cast<int>(j - i + 1);
    os << w[i].symbol;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

SubgroupWord word_from_string(const std::string& s) {
  SubgroupWord out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    std::string sym = tok;
    int e = 1;
    if (auto p = tok.rfind('^'); p != std::string::npos) {
      sym = tok.substr(0, p);
      e = std::stoi(tok.substr(p + 1));
    }
    for (int i = 0; i < std::abs(e); ++i) out.push_back({sym, e < 0 ? -1 : 1});
  }
  return out;
}

std::string lambda_symbol() { return "lam"; }
std::string stable_symbol(const std::string& vertex_name) { return "t" + vertex_name; }
std::string tau_symbol(const std::string& barycentre_name) {
  return "tau_" + barycentre_name;
}
std::string theta_symbol(const std::string& top, const std::string& bottom) {
  return "th_" + top + "_" + bottom;
}

std::vector<int> BuildContext::predecessor_neighbours(int v) const {
  std::vector<int> out;
  int me = pos[v];
  for (int u : sigma1->neighbours(sigma1->vertex_index(ambient->vertex_name(v)))) {
    int ua = ambient->vertex_index(sigma1->vertex_name(u));
    if (pos[ua] < me) out.push_back(ua);
  }
  std::sort(out.begin(), out.end(), [&](int a, int b) { return pos[a] < pos[b]; });
  return out;
}

std::vector<int> BuildContext::non_tree_predecessors(int v) const {
  std::vector<int> out;
  for (int u : predecessor_neighbours(v))
    if (u != parent[v]) out.push_back(u);
  return out;
}

BuildContext make_build_context(const FlagComplex& sigma1,
                                const FlagComplex& ambient,
                                const OrderedTree& tree, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!sigma1.connected()) throw std::invalid_argument("complex is not connected");
  BuildContext ctx;
  ctx.sigma1 = &sigma1;
  ctx.ambient = &ambient;
  ctx.n = n;
  ctx.parent.assign(ambient.vertex_count(), -1);
  ctx.pos.assign(ambient.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(tree.order.size()); ++i) {
    int s1v = tree.order[i];
    int av = ambient.vertex_index(sigma1.vertex_name(s1v));
    ctx.order.push_back(av);
    ctx.pos[av] = i;
    int p = tree.parent[s1v];
    if (p >= 0) ctx.parent[av] = ambient.vertex_index(sigma1.vertex_name(p));
  }
  return ctx;
}

BuildContext make_build_context(const FlagComplex& sigma1,
                                const OrderedTree& tree, int n) {
  return make_build_context(sigma1, sigma1, tree, n);
}

SubgroupWord theta(const BuildContext& ctx, int v, int v_prime, int i) {
  if (ctx.pos[v] < 0 || ctx.pos[v_prime] < 0)
    throw std::invalid_argument("theta endpoints must be tree vertices");
  auto chain = [&](int x) {
    std::vector<int> c{x};
    while (ctx.parent[c.back()] != -1) c.push_back(ctx.parent[c.back()]);
    return c;
  };
  std::vector<int> cu = chain(v), cv = chain(v_prime);
  std::vector<char> in_cv(ctx.ambient->vertex_count(), 0);
  for (int x : cv) in_cv[x] = 1;
  int meet = -1;
  std::size_t up_len = 0;
  for (std::size_t k = 0; k < cu.size(); ++k)
    if (in_cv[cu[k]]) {
      meet = cu[k];
      up_len = k;
      break;
    }
  SubgroupWord out;
  auto syllable = [&](int vertex, int exp) {
    const std::string sym = stable_symbol(ctx.ambient->vertex_name(vertex));
    for (int r = 0; r < std::abs(exp); ++r) out.push_back({sym, exp < 0 ? -1 : 1});
  };
  for (std::size_t k = 0; k < up_len; ++k) syllable(cu[k], i);  // child -> parent
  std::vector<int> down;
  for (std::size_t k = 0; k < cv.size() && cv[k] != meet; ++k) down.push_back(cv[k]);
  for (auto it = down.rbegin(); it != down.rend(); ++it) syllable(*it, -i);
  return out;
}

RaagWord expand(const SubgroupWord& w, const BuildContext& ctx) {
  RaagWord out;
  for (const auto& l : w) {
    RaagWord piece;
    if (l.symbol == lambda_symbol()) {
      piece.assign(static_cast<std::size_t>(ctx.n), {ctx.root(), 1});
    } else if (auto it = ctx.taus.find(l.symbol); it != ctx.taus.end()) {
      piece = {{it->second.barycentre, 1}, {it->second.attach, -1}};
    } else if (auto jt = ctx.tietze.find(l.symbol); jt != ctx.tietze.end()) {
      piece = expand(jt->second, ctx);
    } else if (l.symbol.size() > 1 && l.symbol[0] == 't' &&
               ctx.ambient->has_vertex(l.symbol.substr(1))) {
      int v = ctx.ambient->vertex_index(l.symbol.substr(1));
      if (ctx.parent[v] < 0)
        throw std::invalid_argument("stable letter of root or non-tree vertex: " +
                                    l.symbol);
      piece = {{v, 1}, {ctx.parent[v], -1}};
    } else {
      throw std::invalid_argument("undeclared symbol: " + l.symbol);
    }
    if (l.sign < 0) piece = inverse(piece);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

SubgroupWord rewrite_to_subgroup_alphabet(const RaagWord& w, const BuildContext& ctx) {
  if (exponent_sum(w) % ctx.n != 0)
    throw std::invalid_argument("exponent sum not divisible by n");
  int root = ctx.root();
  SubgroupWord out;
  const SubgroupWord lam{{lambda_symbol(), 1}};
  long p = 0;  // transversal state in [0, n)
  for (const auto& l : w) {
    if (ctx.pos[l.vertex] < 0)
      throw std::invalid_argument("letter outside the build complex: " +
                                  ctx.ambient->vertex_name(l.vertex));
    if (l.sign > 0) {
      // a_root^p (a_k a_root^-1) a_root^-p = theta^p(k,root)^-1 theta^{p+1}(k,root)
      if (l.vertex != root) {
        auto low = theta(ctx, l.vertex, root, static_cast<int>(p));
        auto high = theta(ctx, l.vertex, root, static_cast<int>(p) + 1);
        out = sub_concat({out, sub_inverse(low), high});
      }
      if (p + 1 == ctx.n) {
        out = sub_concat({out, lam});
        p = 0;
      } else {
        ++p;
      }
    } else {
      long q = p - 1;
      bool wrap = q < 0;
      if (wrap) q = ctx.n - 1;
      SubgroupWord piece;
      if (l.vertex != root) {
        auto low = theta(ctx, l.vertex, root, static_cast<int>(q));
        auto high = theta(ctx, l.vertex, root, static_cast<int>(q) + 1);
        piece = sub_inverse(sub_concat({sub_inverse(low), high}));
      }
      if (wrap) piece = sub_concat({sub_inverse(lam), piece});
      out = sub_concat({out, piece});
      p = q;
    }
  }
  return sub_free_reduce(out);
}

}  // namespace raagpres
