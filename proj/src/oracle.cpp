#include "raagpres/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace raagpres {

Presentation reidemeister_schreier(const FlagComplex& c, int n) {
  if (!c.connected()) throw std::invalid_argument("complex is not connected");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Presentation p;
  auto symbol = [&](int level, int vertex) {
    return "x" + std::to_string(level) + "_" + c.vertex_name(vertex);
  };
  // generator x_{p,k} = a_root^p a_k a_root^-(p+1); the transversal letters
  // x_{p,root} with p < n-1 are trivial and dropped
  for (int pl = 0; pl < n; ++pl)
    for (int v = 0; v < c.vertex_count(); ++v) {
      if (v == 0 && pl < n - 1) continue;
      p.add_generator({symbol(pl, v), GeneratorRole::Schreier,
                       c.vertex_name(v) + "@" + std::to_string(pl)});
    }
  for (const auto& [u, v] : c.edges()) {
    for (int pl = 0; pl < n; ++pl) {
      SubgroupWord w;
      int state = pl;
      auto scan = [&](int vertex, int sign) {
        if (sign > 0) {
          if (!(vertex == 0 && state < n - 1)) w.push_back({symbol(state, vertex), 1});
          state = (state + 1) % n;
        } else {
          state = (state + n - 1) % n;
          if (!(vertex == 0 && state < n - 1)) w.push_back({symbol(state, vertex), -1});
        }
      };
      scan(u, 1);
      scan(v, 1);
      scan(u, -1);
      scan(v, -1);
      p.add_relator({sub_free_reduce(w),
                     {RelationTag::Kind::Schreier,
                      "{" + c.vertex_name(u) + "," + c.vertex_name(v) + "}", "", "",
                      pl}});
    }
  }
  return p;
}

namespace {

// HLT coset enumeration over the table with one column per signed generator.
class CosetTable {
 public:
  CosetTable(int ngens, long limit) : ngens_(ngens), limit_(limit) { add_coset(); }

  bool overflow() const { return overflow_; }
  long size() const { return static_cast<long>(table_.size()); }
  bool dead(long x) const { return rep(x) != x; }

  long live_count() const {
    long k = 0;
    for (long i = 0; i < size(); ++i)
      if (!dead(i)) ++k;
    return k;
  }

  void scan_and_fill(long alpha, const RaagWord& w) {
    if (overflow_ || w.empty()) return;
    long f = rep(alpha), b = rep(alpha);
    std::size_t i = 0, j = w.size();  // unscanned segment is [i, j)
    for (;;) {
      while (i < j) {
        long nxt = entry(f, fwd_col(w[i]));
        if (nxt < 0) break;
        f = rep(nxt);
        ++i;
      }
      if (i == j) {
        coincide(f, b);
        return;
      }
      while (j > i) {
        long nxt = entry(b, bwd_col(w[j - 1]));
        if (nxt < 0) break;
        b = rep(nxt);
        --j;
      }
      if (j == i) {
        coincide(f, b);
        return;
      }
      if (j == i + 1) {
        set_entry(f, fwd_col(w[i]), b);
        return;
      }
      long fresh = add_coset();
      if (overflow_) return;
      set_entry(f, fwd_col(w[i]), fresh);
      f = rep(fresh);
      ++i;
    }
  }

  void fill_all_columns(long alpha) {
    for (int cidx = 0; cidx < 2 * ngens_ && !overflow_; ++cidx) {
      long a = rep(alpha);
      if (table_[a][cidx] >= 0) continue;
      long fresh = add_coset();
      if (overflow_) return;
      set_entry(a, cidx, fresh);
    }
  }

  void process_coincidences() {
    while (!queue_.empty() && !overflow_) {
      auto [a, b] = queue_.back();
      queue_.pop_back();
      long ra = rep(a), rb = rep(b);
      if (ra == rb) continue;
      if (ra > rb) std::swap(ra, rb);
      parent_[rb] = ra;
      for (int cidx = 0; cidx < 2 * ngens_; ++cidx) {
        long x = table_[rb][cidx];
        if (x >= 0) set_entry(ra, cidx, x);
      }
    }
  }

 private:
  int fwd_col(const RaagLetter& l) const { return 2 * l.vertex + (l.sign < 0); }
  int bwd_col(const RaagLetter& l) const { return 2 * l.vertex + (l.sign > 0); }

  long entry(long coset, int cidx) const { return table_[rep(coset)][cidx]; }

  long add_coset() {
    if (size() >= limit_) {
      overflow_ = true;
      return 0;
    }
    table_.emplace_back(2 * ngens_, -1);
    parent_.push_back(static_cast<long>(parent_.size()));
    return size() - 1;
  }

  long rep(long x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void coincide(long a, long b) {
    if (rep(a) != rep(b)) {
      queue_.push_back({a, b});
      process_coincidences();
    }
  }

  void set_entry(long coset, int cidx, long target) {
    coset = rep(coset);
    target = rep(target);
    long cur = table_[coset][cidx];
    if (cur >= 0) {
      if (rep(cur) != target) queue_.push_back({cur, target});
      return;
    }
    table_[coset][cidx] = target;
    long back = table_[target][cidx ^ 1];
    if (back >= 0) {
      if (rep(back) != coset) queue_.push_back({back, coset});
    } else {
      table_[target][cidx ^ 1] = coset;
    }
  }

  int ngens_;
  long limit_;
  bool overflow_ = false;
  std::vector<std::vector<long>> table_;
  std::vector<long> parent_;
  std::vector<std::pair<long, long>> queue_;
};

}  // namespace

std::optional<long> todd_coxeter(const FlagComplex& c,
                                 const std::vector<RaagWord>& subgroup_generators,
                                 long coset_limit) {
  std::vector<RaagWord> relators;
  for (const auto& [u, v] : c.edges())
    relators.push_back({{u, 1}, {v, 1}, {u, -1}, {v, -1}});

  CosetTable table(c.vertex_count(), coset_limit);
  for (const auto& g : subgroup_generators) {
    table.scan_and_fill(0, g);
    table.process_coincidences();
    if (table.overflow()) return std::nullopt;
  }
  for (long current = 0; current < table.size(); ++current) {
    if (table.dead(current)) continue;
    for (const auto& r : relators) {
      table.scan_and_fill(current, r);
      table.process_coincidences();
      if (table.overflow()) return std::nullopt;
      if (table.dead(current)) break;
    }
    if (table.dead(current)) continue;
    table.fill_all_columns(current);
    table.process_coincidences();
    if (table.overflow()) return std::nullopt;
  }
  return table.live_count();
}

bool VerificationReport::pass(int n) const {
  for (const auto& r : relator_soundness)
    if (!r.sound) return false;
  for (const auto& g : image_in_subgroup)
    if (!g.in_subgroup) return false;
  if (!index || *index != n) return false;
  if (!abelianization_match) return false;
  if (counts_match && !*counts_match) return false;
  return true;
}

VerificationReport verify_presentation(const Presentation& p, const BuildContext& ctx,
                                       long coset_limit) {
  VerificationReport rep;
  const FlagComplex& amb = *ctx.ambient;
  for (const auto& r : p.relators()) {
    bool ok = trivial_in_group(expand(r.word, ctx), amb);
    rep.relator_soundness.push_back({r.tag.to_string(), ok});
  }
  std::vector<RaagWord> images;
  for (const auto& g : p.generators()) {
    RaagWord w = expand({{g.symbol, 1}}, ctx);
    long e = exponent_sum(w);
    bool ok = g.role == GeneratorRole::Lambda ? e == ctx.n : e % ctx.n == 0;
    rep.image_in_subgroup.push_back({g.symbol, ok});
    images.push_back(std::move(w));
  }
  rep.index = todd_coxeter(amb, images, coset_limit);
  rep.presentation_h1 = abelianize(p);
  rep.oracle_h1 = abelianize(reidemeister_schreier(amb, ctx.n));
  rep.abelianization_match = rep.presentation_h1 == rep.oracle_h1;

  bool raw_build = true;
  for (const auto& g : p.generators())
    if (g.role != GeneratorRole::Lambda && g.role != GeneratorRole::TreeStable)
      raw_build = false;
  if (raw_build && ctx.sigma1->triangle_count() == 0) {
    int expected = static_cast<int>(ctx.order.size()) - 1 +
                   ctx.n * (1 - euler_characteristic(*ctx.sigma1));
    rep.counts_match = static_cast<int>(p.relators().size()) == expected;
  }
  return rep;
}

}  // namespace raagpres
